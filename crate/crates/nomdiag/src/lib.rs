//! nomdiag: an executable engine for nominal string diagrams.
//!
//! Diagrams can be wired by position (ordered monoidal terms) or by name
//! (nominal monoidal terms with a partial tensor). The engine typechecks
//! both calculi, evaluates them into finite maps and relations between name
//! sets, normalizes by evaluation and readback, decides diagrammatic
//! alpha-equivalence, searches for equational derivations, and translates
//! between the ordered and nominal presentations.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --example substitutions
//! cargo run --example normal_forms
//! cargo run --example alpha_equivalence
//! cargo run --example derivation_search
//! cargo run --example nominal_vs_ordered
//! cargo run --example theory_soundness
//! cargo run --example diagram_dot
//! ```
//!
//! or with the thin CLI, `nomdiag <subcommand>`.

pub mod name;
pub mod perm;
pub mod theory;

pub mod nmt;
pub mod sem;
pub mod smt;

pub use name::{fresh_names, separated, Name, NameSet};
pub use perm::FinPerm;
pub use theory::{MapKind, TheoryId};
