//! Ordered monoidal terms: generators with numeric arities, wired by
//! position. The built-in signatures present bijections, injections,
//! surjections, functions, partial functions and relations between finite
//! ordinals.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::theory::{MapKind, TheoryId};

/// Labels of the built-in generators shared by all theory presentations:
/// `e : 0 -> 1` (create), `m : 2 -> 1` (merge), `w : 1 -> 0` (discard),
/// `c : 1 -> 2` (copy).
pub const GEN_CREATE: &str = "e";
pub const GEN_MERGE: &str = "m";
pub const GEN_DISCARD: &str = "w";
pub const GEN_COPY: &str = "c";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmtTypeError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("sequential mismatch: left side has coarity {left} but right side has arity {right}")]
    SeqMismatch { left: usize, right: usize },
}

/// An ordered term. `Unit` is the explicit empty tensor `id_0`, so the
/// monoid unit laws are honest rewrite rules rather than parser artifacts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SmtTerm {
    Gen(String),
    Id,
    Unit,
    Sym,
    Par(Box<SmtTerm>, Box<SmtTerm>),
    Seq(Box<SmtTerm>, Box<SmtTerm>),
}

impl SmtTerm {
    pub fn gen(label: &str) -> SmtTerm {
        SmtTerm::Gen(label.to_string())
    }

    pub fn par(left: SmtTerm, right: SmtTerm) -> SmtTerm {
        SmtTerm::Par(Box::new(left), Box::new(right))
    }

    pub fn seq(first: SmtTerm, second: SmtTerm) -> SmtTerm {
        SmtTerm::Seq(Box::new(first), Box::new(second))
    }

    /// Tensor a list of terms, right-nested; the empty tensor is `Unit`.
    pub fn par_all(terms: impl IntoIterator<Item = SmtTerm>) -> SmtTerm {
        let mut items: Vec<SmtTerm> = terms.into_iter().collect();
        match items.len() {
            0 => SmtTerm::Unit,
            1 => items.pop().unwrap(),
            _ => {
                let mut acc = items.pop().unwrap();
                while let Some(t) = items.pop() {
                    acc = SmtTerm::par(t, acc);
                }
                acc
            }
        }
    }

    /// Compose a nonempty list of terms sequentially, right-nested.
    pub fn seq_all(terms: impl IntoIterator<Item = SmtTerm>) -> SmtTerm {
        let mut items: Vec<SmtTerm> = terms.into_iter().collect();
        assert!(!items.is_empty(), "seq_all needs at least one term");
        let mut acc = items.pop().unwrap();
        while let Some(t) = items.pop() {
            acc = SmtTerm::seq(t, acc);
        }
        acc
    }

    pub fn size(&self) -> usize {
        match self {
            SmtTerm::Gen(_) | SmtTerm::Id | SmtTerm::Unit | SmtTerm::Sym => 1,
            SmtTerm::Par(l, r) | SmtTerm::Seq(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn contains_generator(&self) -> bool {
        match self {
            SmtTerm::Gen(_) => true,
            SmtTerm::Id | SmtTerm::Unit | SmtTerm::Sym => false,
            SmtTerm::Par(l, r) | SmtTerm::Seq(l, r) => {
                l.contains_generator() || r.contains_generator()
            }
        }
    }

    pub fn generator_labels(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            SmtTerm::Gen(l) => out.push(l),
            SmtTerm::Id | SmtTerm::Unit | SmtTerm::Sym => {}
            SmtTerm::Par(l, r) | SmtTerm::Seq(l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
        }
    }
}

/// Precedence-aware printer matching the parser: `;` binds loosest,
/// `+` binds tighter, atoms are `id`, `sym`, `nil` and generator labels.
impl fmt::Display for SmtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn par_child(t: &SmtTerm, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                SmtTerm::Seq(..) => write!(f, "({t})"),
                _ => write!(f, "{t}"),
            }
        }
        match self {
            SmtTerm::Gen(l) => write!(f, "{l}"),
            SmtTerm::Id => write!(f, "id"),
            SmtTerm::Unit => write!(f, "nil"),
            SmtTerm::Sym => write!(f, "sym"),
            SmtTerm::Par(l, r) => {
                par_child(l, f)?;
                write!(f, " + ")?;
                par_child(r, f)
            }
            SmtTerm::Seq(l, r) => write!(f, "{l} ; {r}"),
        }
    }
}

impl fmt::Debug for SmtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered signature: generator labels with arity and coarity, plus an
/// optional built-in theory the generators come from (`None` = free).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SmtSignature {
    pub generators: BTreeMap<String, (usize, usize)>,
    pub theory: Option<TheoryId>,
}

impl SmtSignature {
    pub fn free(generators: impl IntoIterator<Item = (String, (usize, usize))>) -> SmtSignature {
        SmtSignature { generators: generators.into_iter().collect(), theory: None }
    }

    pub fn arity(&self, label: &str) -> Option<(usize, usize)> {
        self.generators.get(label).copied()
    }

    /// Extend with generators from another signature (used when a free
    /// signature file is loaded on top of a theory).
    pub fn extended_with(&self, other: &SmtSignature) -> SmtSignature {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.clone());
        SmtSignature { generators, theory: self.theory }
    }
}

/// The built-in presentation of each ordered theory.
pub fn smt_theory_signature(theory: TheoryId) -> SmtSignature {
    let mut generators = BTreeMap::new();
    let kind = theory.kind;
    if matches!(kind, MapKind::Inj | MapKind::Fun | MapKind::PFun | MapKind::Rel) {
        generators.insert(GEN_CREATE.to_string(), (0, 1));
    }
    if matches!(kind, MapKind::Surj | MapKind::Fun | MapKind::PFun | MapKind::Rel) {
        generators.insert(GEN_MERGE.to_string(), (2, 1));
    }
    if matches!(kind, MapKind::PFun | MapKind::Rel) {
        generators.insert(GEN_DISCARD.to_string(), (1, 0));
    }
    if kind == MapKind::Rel {
        generators.insert(GEN_COPY.to_string(), (1, 2));
    }
    SmtSignature { generators, theory: Some(theory.ordered_twin()) }
}

/// Arity and coarity of a well-typed term.
pub fn smt_typecheck(term: &SmtTerm, sig: &SmtSignature) -> Result<(usize, usize), SmtTypeError> {
    match term {
        SmtTerm::Gen(label) => {
            sig.arity(label).ok_or_else(|| SmtTypeError::UnknownGenerator(label.clone()))
        }
        SmtTerm::Id => Ok((1, 1)),
        SmtTerm::Unit => Ok((0, 0)),
        SmtTerm::Sym => Ok((2, 2)),
        SmtTerm::Par(l, r) => {
            let (m, n) = smt_typecheck(l, sig)?;
            let (o, p) = smt_typecheck(r, sig)?;
            Ok((m + o, n + p))
        }
        SmtTerm::Seq(l, r) => {
            let (m, n) = smt_typecheck(l, sig)?;
            let (n2, o) = smt_typecheck(r, sig)?;
            if n != n2 {
                return Err(SmtTypeError::SeqMismatch { left: n, right: n2 });
            }
            Ok((m, o))
        }
    }
}

/// The n-fold tensor of `id`, right-nested; `id_0` is the unit term.
pub fn smt_id(n: usize) -> SmtTerm {
    SmtTerm::par_all(std::iter::repeat(SmtTerm::Id).take(n))
}

/// The block symmetry of type `m+n -> n+m`: positions `i <= m` go to `i+n`
/// and `m+j` goes to `j`. Built from `sym` by insertion.
pub fn smt_sym(m: usize, n: usize) -> SmtTerm {
    if m == 0 {
        return smt_id(n);
    }
    if n == 0 {
        return smt_id(m);
    }
    if m == 1 {
        // move one wire past n wires
        if n == 1 {
            return SmtTerm::Sym;
        }
        return SmtTerm::seq(
            SmtTerm::par(SmtTerm::Sym, smt_id(n - 1)),
            SmtTerm::par(SmtTerm::Id, smt_sym(1, n - 1)),
        );
    }
    SmtTerm::seq(
        SmtTerm::par(smt_id(m - 1), smt_sym(1, n)),
        SmtTerm::par(smt_sym(m - 1, n), SmtTerm::Id),
    )
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermTermError {
    #[error("term contains generator `{0}` and does not denote a permutation")]
    NotAPermutationTerm(String),
    #[error("ill-typed wiring term: {0}")]
    IllTyped(SmtTypeError),
}

/// The position bijection computed by a generator-free term: entry `i`
/// (0-based) is the output position of input `i`.
pub fn sym_as_permutation(term: &SmtTerm) -> Result<Vec<usize>, PermTermError> {
    match term {
        SmtTerm::Gen(l) => Err(PermTermError::NotAPermutationTerm(l.clone())),
        SmtTerm::Id => Ok(vec![0]),
        SmtTerm::Unit => Ok(vec![]),
        SmtTerm::Sym => Ok(vec![1, 0]),
        SmtTerm::Par(l, r) => {
            let left = sym_as_permutation(l)?;
            let right = sym_as_permutation(r)?;
            let shift = left.len();
            Ok(left.into_iter().chain(right.into_iter().map(|i| i + shift)).collect())
        }
        SmtTerm::Seq(l, r) => {
            let first = sym_as_permutation(l)?;
            let second = sym_as_permutation(r)?;
            if first.len() != second.len() {
                return Err(PermTermError::IllTyped(SmtTypeError::SeqMismatch {
                    left: first.len(),
                    right: second.len(),
                }));
            }
            Ok(first.into_iter().map(|i| second[i]).collect())
        }
    }
}

/// A wiring term realizing the given position bijection (entry `i` is the
/// output of input `i`, 0-based), as layers of adjacent transpositions.
/// Any construction with the same underlying permutation is equivalent;
/// this one sorts by bubbling, so it is deterministic.
pub fn perm_to_smt_term(perm: &[usize]) -> SmtTerm {
    let n = perm.len();
    debug_assert!({
        let mut seen = vec![false; n];
        perm.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
    });
    // Bubble wires into place; each adjacent swap of slots j, j+1 becomes a
    // layer id^j + sym + id^(n-j-2). `current[j]` is the input wire sitting
    // at slot j after the layers emitted so far.
    let mut layers: Vec<SmtTerm> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        let mut swapped = false;
        for j in 0..n.saturating_sub(1) {
            if perm[current[j]] > perm[current[j + 1]] {
                current.swap(j, j + 1);
                let layer = SmtTerm::par_all(
                    (0..n - 1).map(|k| if k == j { SmtTerm::Sym } else { SmtTerm::Id }),
                );
                layers.push(layer);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    if layers.is_empty() {
        smt_id(n)
    } else {
        SmtTerm::seq_all(layers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free1() -> SmtSignature {
        SmtSignature::free([("g".to_string(), (1, 1))])
    }

    #[test]
    fn typecheck_examples() {
        let sig = SmtSignature::default();
        assert_eq!(smt_typecheck(&SmtTerm::Sym, &sig), Ok((2, 2)));
        assert_eq!(smt_typecheck(&SmtTerm::seq(SmtTerm::Id, SmtTerm::Id), &sig), Ok((1, 1)));
        assert_eq!(
            smt_typecheck(&SmtTerm::seq(SmtTerm::Sym, SmtTerm::Id), &sig),
            Err(SmtTypeError::SeqMismatch { left: 2, right: 1 })
        );
        assert_eq!(
            smt_typecheck(&SmtTerm::gen("h"), &free1()),
            Err(SmtTypeError::UnknownGenerator("h".to_string()))
        );
    }

    #[test]
    fn id_construction() {
        assert_eq!(smt_id(1), SmtTerm::Id);
        assert_eq!(smt_id(0), SmtTerm::Unit);
        assert_eq!(
            smt_id(3),
            SmtTerm::par(SmtTerm::Id, SmtTerm::par(SmtTerm::Id, SmtTerm::Id))
        );
    }

    #[test]
    fn sym_block_positions() {
        assert_eq!(smt_sym(1, 1), SmtTerm::Sym);
        assert_eq!(smt_sym(2, 0), smt_id(2));
        // derived by simulating the wiring: i <= m goes to i+n, m+j goes to j
        assert_eq!(sym_as_permutation(&smt_sym(2, 1)).unwrap(), vec![1, 2, 0]);
        for m in 0..4 {
            for n in 0..4 {
                let perm = sym_as_permutation(&smt_sym(m, n)).unwrap();
                let expected: Vec<usize> =
                    (0..m).map(|i| i + n).chain((0..n).map(|j| j)).collect();
                assert_eq!(perm, expected, "block swap {m},{n}");
            }
        }
    }

    #[test]
    fn sym_as_permutation_examples() {
        assert_eq!(sym_as_permutation(&SmtTerm::Sym).unwrap(), vec![1, 0]);
        assert_eq!(
            sym_as_permutation(&SmtTerm::seq(SmtTerm::Sym, SmtTerm::Sym)).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            sym_as_permutation(&SmtTerm::par(SmtTerm::Id, SmtTerm::Sym)).unwrap(),
            vec![0, 2, 1]
        );
        assert!(matches!(
            sym_as_permutation(&SmtTerm::gen("g")),
            Err(PermTermError::NotAPermutationTerm(_))
        ));
    }

    #[test]
    fn perm_term_realizes_all_small_permutations() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for slot in 0..n {
                    let mut q: Vec<usize> =
                        p.iter().map(|&x| if x >= slot { x + 1 } else { x }).collect();
                    q.push(slot);
                    out.push(q);
                }
            }
            out
        }
        for n in 0..5 {
            for p in perms(n) {
                let t = perm_to_smt_term(&p);
                assert_eq!(sym_as_permutation(&t).unwrap(), p, "n={n}");
            }
        }
    }

    #[test]
    fn theory_signatures() {
        assert!(smt_theory_signature(TheoryId::B).generators.is_empty());
        let i = smt_theory_signature(TheoryId::I);
        assert_eq!(i.arity(GEN_CREATE), Some((0, 1)));
        assert_eq!(i.generators.len(), 1);
        let r = smt_theory_signature(TheoryId::R);
        assert_eq!(r.generators.len(), 4);
        assert_eq!(r.arity(GEN_COPY), Some((1, 2)));
        assert_eq!(r.arity(GEN_DISCARD), Some((1, 0)));
    }

    #[test]
    fn display_round_readable() {
        let t = SmtTerm::seq(SmtTerm::par(SmtTerm::gen("m"), SmtTerm::Id), SmtTerm::gen("m"));
        assert_eq!(t.to_string(), "m + id ; m");
        let t = SmtTerm::par(SmtTerm::seq(SmtTerm::Id, SmtTerm::Id), SmtTerm::Sym);
        assert_eq!(t.to_string(), "(id ; id) + sym");
    }
}
