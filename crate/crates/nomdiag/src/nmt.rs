//! Nominal monoidal terms: generators typed by finite sets of names, a
//! renaming generator `d(a>b)`, named identities, a partial tensor defined
//! only on separated interfaces, and an explicit permutation action.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::name::{fresh_names, separated, Name, NameSet};
use crate::perm::{complete_to_perm, FinPerm};
use crate::smt::{GEN_COPY, GEN_CREATE, GEN_DISCARD, GEN_MERGE};
use crate::theory::{MapKind, TheoryId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NmtTypeError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{label}` expects {expected_dom} input and {expected_cod} output names, got {got_dom} and {got_cod}")]
    ArityMismatch {
        label: String,
        expected_dom: usize,
        expected_cod: usize,
        got_dom: usize,
        got_cod: usize,
    },
    #[error("duplicate name in generator `{label}` interface")]
    DuplicateName { label: String },
    #[error("tensor interfaces overlap on {overlap}")]
    Overlap { overlap: NameSet },
    #[error("sequential mismatch: left side ends in {left} but right side starts from {right}")]
    SeqMismatch { left: NameSet, right: NameSet },
}

/// One occurrence of a signature generator, with its named interfaces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenInstance {
    pub label: String,
    pub dom_names: Vec<Name>,
    pub cod_names: Vec<Name>,
}

impl GenInstance {
    pub fn new(label: &str, dom: Vec<Name>, cod: Vec<Name>) -> GenInstance {
        GenInstance { label: label.to_string(), dom_names: dom, cod_names: cod }
    }

    pub fn dom_set(&self) -> NameSet {
        self.dom_names.iter().cloned().collect()
    }

    pub fn cod_set(&self) -> NameSet {
        self.cod_names.iter().cloned().collect()
    }

    /// The permutation action on a generator instance renames both lists.
    pub fn act(&self, p: &FinPerm) -> GenInstance {
        GenInstance {
            label: self.label.clone(),
            dom_names: self.dom_names.iter().map(|a| p.apply(a)).collect(),
            cod_names: self.cod_names.iter().map(|a| p.apply(a)).collect(),
        }
    }
}

impl fmt::Display for GenInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.label)?;
        for (i, a) in self.dom_names.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")?;
        for (i, b) in self.cod_names.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GenInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nominal term. `Nil` is the empty term `id_∅`, the unit of the tensor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NmtTerm {
    Nil,
    IdName(Name),
    Delta(Name, Name),
    Gen(GenInstance),
    Par(Box<NmtTerm>, Box<NmtTerm>),
    Seq(Box<NmtTerm>, Box<NmtTerm>),
    PermApp(FinPerm, Box<NmtTerm>),
}

impl NmtTerm {
    pub fn id(a: Name) -> NmtTerm {
        NmtTerm::IdName(a)
    }

    /// The renaming `d(a>b)`. A renaming of a wire to itself is that wire's
    /// identity, and the two are the same diagram, so this collapses.
    pub fn delta(a: Name, b: Name) -> NmtTerm {
        if a == b {
            NmtTerm::IdName(a)
        } else {
            NmtTerm::Delta(a, b)
        }
    }

    pub fn gen(label: &str, dom: Vec<Name>, cod: Vec<Name>) -> NmtTerm {
        NmtTerm::Gen(GenInstance::new(label, dom, cod))
    }

    pub fn par(left: NmtTerm, right: NmtTerm) -> NmtTerm {
        NmtTerm::Par(Box::new(left), Box::new(right))
    }

    pub fn seq(first: NmtTerm, second: NmtTerm) -> NmtTerm {
        NmtTerm::Seq(Box::new(first), Box::new(second))
    }

    pub fn perm_app(p: FinPerm, body: NmtTerm) -> NmtTerm {
        NmtTerm::PermApp(p, Box::new(body))
    }

    /// Tensor a list of terms, right-nested; empty list gives `Nil`.
    pub fn par_all(terms: impl IntoIterator<Item = NmtTerm>) -> NmtTerm {
        let mut items: Vec<NmtTerm> = terms.into_iter().collect();
        match items.len() {
            0 => NmtTerm::Nil,
            1 => items.pop().unwrap(),
            _ => {
                let mut acc = items.pop().unwrap();
                while let Some(t) = items.pop() {
                    acc = NmtTerm::par(t, acc);
                }
                acc
            }
        }
    }

    /// Compose a nonempty list sequentially, right-nested.
    pub fn seq_all(terms: impl IntoIterator<Item = NmtTerm>) -> NmtTerm {
        let mut items: Vec<NmtTerm> = terms.into_iter().collect();
        assert!(!items.is_empty(), "seq_all needs at least one term");
        let mut acc = items.pop().unwrap();
        while let Some(t) = items.pop() {
            acc = NmtTerm::seq(t, acc);
        }
        acc
    }

    pub fn size(&self) -> usize {
        match self {
            NmtTerm::Nil | NmtTerm::IdName(_) | NmtTerm::Delta(..) | NmtTerm::Gen(_) => 1,
            NmtTerm::Par(l, r) | NmtTerm::Seq(l, r) => 1 + l.size() + r.size(),
            NmtTerm::PermApp(_, t) => 1 + t.size(),
        }
    }

    /// Every name occurring anywhere in the term, including inside
    /// permutation supports.
    pub fn all_names(&self) -> NameSet {
        let mut out = NameSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut NameSet) {
        match self {
            NmtTerm::Nil => {}
            NmtTerm::IdName(a) => {
                out.insert(a.clone());
            }
            NmtTerm::Delta(a, b) => {
                out.insert(a.clone());
                out.insert(b.clone());
            }
            NmtTerm::Gen(g) => {
                for a in g.dom_names.iter().chain(&g.cod_names) {
                    out.insert(a.clone());
                }
            }
            NmtTerm::Par(l, r) | NmtTerm::Seq(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
            NmtTerm::PermApp(p, t) => {
                for a in p.support().iter() {
                    out.insert(a.clone());
                }
                t.collect_names(out);
            }
        }
    }

    /// Labels of generator occurrences, in traversal order.
    pub fn generator_labels(&self) -> Vec<&str> {
        fn walk<'a>(t: &'a NmtTerm, out: &mut Vec<&'a str>) {
            match t {
                NmtTerm::Gen(g) => out.push(&g.label),
                NmtTerm::Par(l, r) | NmtTerm::Seq(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                NmtTerm::PermApp(_, t) => walk(t, out),
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// True if the term is built from renaming and identity wires only.
    pub fn is_renaming(&self) -> bool {
        match self {
            NmtTerm::Nil | NmtTerm::IdName(_) | NmtTerm::Delta(..) => true,
            NmtTerm::Par(l, r) => l.is_renaming() && r.is_renaming(),
            _ => false,
        }
    }
}

/// Printer matching the parser grammar: `;` loosest, `|` tighter, atoms are
/// `nil`, `id(a)`, `d(a>b)`, generator instances and `(a b) t`.
impl fmt::Display for NmtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn par_child(t: &NmtTerm, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                NmtTerm::Seq(..) => write!(f, "({t})"),
                _ => write!(f, "{t}"),
            }
        }
        match self {
            NmtTerm::Nil => write!(f, "nil"),
            NmtTerm::IdName(a) => write!(f, "id({a})"),
            NmtTerm::Delta(a, b) => write!(f, "d({a}>{b})"),
            NmtTerm::Gen(g) => write!(f, "{g}"),
            NmtTerm::Par(l, r) => {
                par_child(l, f)?;
                write!(f, " | ")?;
                par_child(r, f)
            }
            NmtTerm::Seq(l, r) => write!(f, "{l} ; {r}"),
            NmtTerm::PermApp(p, t) => {
                // permutations print as a chain of transposition prefixes
                let pairs: Vec<_> = decompose_transpositions(p);
                for (a, b) in &pairs {
                    write!(f, "({a} {b}) ")?;
                }
                match **t {
                    NmtTerm::Par(..) | NmtTerm::Seq(..) => write!(f, "({t})"),
                    _ => write!(f, "{t}"),
                }
            }
        }
    }
}

impl fmt::Debug for NmtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Write a finite permutation as transpositions, applied right-to-left.
pub fn decompose_transpositions(p: &FinPerm) -> Vec<(Name, Name)> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    loop {
        let first = rest.moved_pairs().next().map(|(a, b)| (a.clone(), b.clone()));
        let Some((a, b)) = first else { break };
        // (a b) ∘ rest fixes a once rest maps a to b
        out.push((a.clone(), b.clone()));
        rest = FinPerm::transposition(a, b).compose(&rest);
    }
    out
}

/// A nominal signature: generator schemas keyed by label, each with an input
/// and output arity. Every instance with duplicate-free name lists of those
/// lengths is a generator; closure under permutations is implicit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NmtSignature {
    pub schemas: BTreeMap<String, (usize, usize)>,
    pub theory: Option<TheoryId>,
}

impl NmtSignature {
    pub fn free(schemas: impl IntoIterator<Item = (String, (usize, usize))>) -> NmtSignature {
        NmtSignature { schemas: schemas.into_iter().collect(), theory: None }
    }

    pub fn arity(&self, label: &str) -> Option<(usize, usize)> {
        self.schemas.get(label).copied()
    }

    pub fn extended_with(&self, other: &NmtSignature) -> NmtSignature {
        let mut schemas = self.schemas.clone();
        schemas.extend(other.schemas.clone());
        NmtSignature { schemas, theory: self.theory }
    }
}

/// The built-in nominal theory signatures; labels match the ordered ones so
/// the two presentations of each theory line up generator by generator.
pub fn nmt_theory_signature(theory: TheoryId) -> NmtSignature {
    let ordered = crate::smt::smt_theory_signature(theory);
    NmtSignature { schemas: ordered.generators, theory: Some(theory.nominal_twin()) }
}

/// Interface of a well-typed term: its domain and codomain name sets.
pub fn nmt_typecheck(
    term: &NmtTerm,
    sig: &NmtSignature,
) -> Result<(NameSet, NameSet), NmtTypeError> {
    match term {
        NmtTerm::Nil => Ok((NameSet::new(), NameSet::new())),
        NmtTerm::IdName(a) => Ok((NameSet::singleton(a.clone()), NameSet::singleton(a.clone()))),
        NmtTerm::Delta(a, b) => {
            Ok((NameSet::singleton(a.clone()), NameSet::singleton(b.clone())))
        }
        NmtTerm::Gen(g) => {
            let (dom_arity, cod_arity) = sig
                .arity(&g.label)
                .ok_or_else(|| NmtTypeError::UnknownGenerator(g.label.clone()))?;
            if g.dom_names.len() != dom_arity || g.cod_names.len() != cod_arity {
                return Err(NmtTypeError::ArityMismatch {
                    label: g.label.clone(),
                    expected_dom: dom_arity,
                    expected_cod: cod_arity,
                    got_dom: g.dom_names.len(),
                    got_cod: g.cod_names.len(),
                });
            }
            let dom = g.dom_set();
            let cod = g.cod_set();
            if dom.len() != g.dom_names.len() || cod.len() != g.cod_names.len() {
                return Err(NmtTypeError::DuplicateName { label: g.label.clone() });
            }
            Ok((dom, cod))
        }
        NmtTerm::Par(l, r) => {
            let (dl, cl) = nmt_typecheck(l, sig)?;
            let (dr, cr) = nmt_typecheck(r, sig)?;
            if !separated(&dl, &dr) {
                return Err(NmtTypeError::Overlap { overlap: dl.intersection(&dr) });
            }
            if !separated(&cl, &cr) {
                return Err(NmtTypeError::Overlap { overlap: cl.intersection(&cr) });
            }
            Ok((dl.union(&dr), cl.union(&cr)))
        }
        NmtTerm::Seq(l, r) => {
            let (dl, cl) = nmt_typecheck(l, sig)?;
            let (dr, cr) = nmt_typecheck(r, sig)?;
            if cl != dr {
                return Err(NmtTypeError::SeqMismatch { left: cl, right: dr });
            }
            Ok((dl, cr))
        }
        NmtTerm::PermApp(p, t) => {
            let (d, c) = nmt_typecheck(t, sig)?;
            Ok((p.apply_set(&d), p.apply_set(&c)))
        }
    }
}

/// Push a permutation action to the leaves, renaming every wire and
/// eliminating all `PermApp` nodes. The result has type `(π·A, π·B)`.
pub fn perm_act_term(p: &FinPerm, term: &NmtTerm) -> NmtTerm {
    if p.is_identity() {
        return eliminate_perm_apps(term);
    }
    match term {
        NmtTerm::Nil => NmtTerm::Nil,
        NmtTerm::IdName(a) => NmtTerm::IdName(p.apply(a)),
        NmtTerm::Delta(a, b) => NmtTerm::delta(p.apply(a), p.apply(b)),
        NmtTerm::Gen(g) => NmtTerm::Gen(g.act(p)),
        NmtTerm::Par(l, r) => NmtTerm::par(perm_act_term(p, l), perm_act_term(p, r)),
        NmtTerm::Seq(l, r) => NmtTerm::seq(perm_act_term(p, l), perm_act_term(p, r)),
        NmtTerm::PermApp(q, t) => perm_act_term(&p.compose(q), t),
    }
}

fn eliminate_perm_apps(term: &NmtTerm) -> NmtTerm {
    match term {
        NmtTerm::PermApp(q, t) => perm_act_term(q, t),
        NmtTerm::Par(l, r) => NmtTerm::par(eliminate_perm_apps(l), eliminate_perm_apps(r)),
        NmtTerm::Seq(l, r) => NmtTerm::seq(eliminate_perm_apps(l), eliminate_perm_apps(r)),
        other => other.clone(),
    }
}

/// The parallel renaming `π_A = ⊎_{a∈A} d(a>π(a))`, in name order, of type
/// `A -> π·A`.
pub fn renaming_bundle(p: &FinPerm, set: &NameSet) -> NmtTerm {
    NmtTerm::par_all(set.iter().map(|a| NmtTerm::delta(a.clone(), p.apply(a))))
}

/// The conjugation form `(π_A)⁻¹-bundle ; t ; π_B-bundle` of type
/// `π·A -> π·B`, equal in every theory to the direct action on `t`.
pub fn conjugation_form(
    p: &FinPerm,
    term: &NmtTerm,
    sig: &NmtSignature,
) -> Result<NmtTerm, NmtTypeError> {
    let (dom, cod) = nmt_typecheck(term, sig)?;
    let pre = renaming_bundle(&p.inverse(), &p.apply_set(&dom));
    let post = renaming_bundle(p, &cod);
    Ok(NmtTerm::seq(pre, NmtTerm::seq(term.clone(), post)))
}

/// The support of a term: its interface `A ∪ B`. Internal wire names are
/// bound by sequential composition and excluded.
pub fn term_support(term: &NmtTerm, sig: &NmtSignature) -> Result<NameSet, NmtTypeError> {
    let (dom, cod) = nmt_typecheck(term, sig)?;
    Ok(dom.union(&cod))
}

/// Names occurring in the term but not on its interface.
pub fn internal_names(term: &NmtTerm, sig: &NmtSignature) -> Result<Vec<Name>, NmtTypeError> {
    let support = term_support(term, sig)?;
    let mut seen = NameSet::new();
    let mut order = Vec::new();
    collect_occurrence_order(term, &mut seen, &mut order);
    Ok(order.into_iter().filter(|a| !support.contains(a)).collect())
}

fn collect_occurrence_order(term: &NmtTerm, seen: &mut NameSet, order: &mut Vec<Name>) {
    let push = |a: &Name, seen: &mut NameSet, order: &mut Vec<Name>| {
        if seen.insert(a.clone()) {
            order.push(a.clone());
        }
    };
    match term {
        NmtTerm::Nil => {}
        NmtTerm::IdName(a) => push(a, seen, order),
        NmtTerm::Delta(a, b) => {
            push(a, seen, order);
            push(b, seen, order);
        }
        NmtTerm::Gen(g) => {
            for a in g.dom_names.iter().chain(&g.cod_names) {
                push(a, seen, order);
            }
        }
        NmtTerm::Par(l, r) | NmtTerm::Seq(l, r) => {
            collect_occurrence_order(l, seen, order);
            collect_occurrence_order(r, seen, order);
        }
        NmtTerm::PermApp(p, t) => {
            for a in p.support().iter() {
                push(a, seen, order);
            }
            collect_occurrence_order(t, seen, order);
        }
    }
}

/// Rename every internal (sequentially bound) name to a deterministic
/// machine-fresh name, in first-occurrence order. The interface and the
/// semantics are unchanged; a term without internal names is returned as is.
pub fn freshen_internals(term: &NmtTerm, sig: &NmtSignature) -> Result<NmtTerm, NmtTypeError> {
    let internals = internal_names(term, sig)?;
    if internals.is_empty() {
        return Ok(term.clone());
    }
    let boundary = term_support(term, sig)?;
    let targets = fresh_names(&boundary, internals.len());
    let mapping: BTreeMap<Name, Name> = internals.into_iter().zip(targets).collect();
    if mapping.iter().all(|(k, v)| k == v) {
        return Ok(term.clone());
    }
    let perm = complete_to_perm(&mapping);
    Ok(perm_act_term(&perm, term))
}

/// Theory-specific nominal generator construction helpers.
pub fn gen_create(b: Name) -> NmtTerm {
    NmtTerm::gen(GEN_CREATE, vec![], vec![b])
}

pub fn gen_merge(a: Name, b: Name, c: Name) -> NmtTerm {
    NmtTerm::gen(GEN_MERGE, vec![a, b], vec![c])
}

pub fn gen_discard(a: Name) -> NmtTerm {
    NmtTerm::gen(GEN_DISCARD, vec![a], vec![])
}

pub fn gen_copy(a: Name, b: Name, c: Name) -> NmtTerm {
    NmtTerm::gen(GEN_COPY, vec![a], vec![b, c])
}

/// Whether the theory's signature can express fan-out, drops, fan-in and
/// creation; used by readback to stay inside the generator set.
pub fn kind_supports(kind: MapKind, label: &str) -> bool {
    match label {
        GEN_CREATE => matches!(kind, MapKind::Inj | MapKind::Fun | MapKind::PFun | MapKind::Rel),
        GEN_MERGE => matches!(kind, MapKind::Surj | MapKind::Fun | MapKind::PFun | MapKind::Rel),
        GEN_DISCARD => matches!(kind, MapKind::PFun | MapKind::Rel),
        GEN_COPY => kind == MapKind::Rel,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::parse(s).unwrap()
    }

    fn nset(names: &[&str]) -> NameSet {
        names.iter().map(|s| n(s)).collect()
    }

    fn free_sig() -> NmtSignature {
        NmtSignature::free([
            ("g".to_string(), (1, 1)),
            ("m".to_string(), (2, 1)),
        ])
    }

    #[test]
    fn typecheck_examples() {
        let sig = NmtSignature::default();
        assert_eq!(
            nmt_typecheck(&NmtTerm::delta(n("a"), n("b")), &sig),
            Ok((nset(&["a"]), nset(&["b"])))
        );
        // parallel substitutions on the same source are undefined
        let t = NmtTerm::par(NmtTerm::delta(n("a"), n("b")), NmtTerm::delta(n("a"), n("c")));
        assert_eq!(nmt_typecheck(&t, &sig), Err(NmtTypeError::Overlap { overlap: nset(&["a"]) }));
        let t = NmtTerm::seq(NmtTerm::delta(n("a"), n("b")), NmtTerm::delta(n("b"), n("c")));
        assert_eq!(nmt_typecheck(&t, &sig), Ok((nset(&["a"]), nset(&["c"]))));
    }

    #[test]
    fn typecheck_generator_arity_and_duplicates() {
        let sig = free_sig();
        let ok = NmtTerm::gen("m", vec![n("a"), n("b")], vec![n("c")]);
        assert_eq!(nmt_typecheck(&ok, &sig), Ok((nset(&["a", "b"]), nset(&["c"]))));
        let dup = NmtTerm::gen("m", vec![n("a"), n("a")], vec![n("c")]);
        assert!(matches!(nmt_typecheck(&dup, &sig), Err(NmtTypeError::DuplicateName { .. })));
        let bad = NmtTerm::gen("m", vec![n("a")], vec![n("c")]);
        assert!(matches!(nmt_typecheck(&bad, &sig), Err(NmtTypeError::ArityMismatch { .. })));
        let unknown = NmtTerm::gen("h", vec![n("a")], vec![n("c")]);
        assert!(matches!(nmt_typecheck(&unknown, &sig), Err(NmtTypeError::UnknownGenerator(_))));
    }

    #[test]
    fn perm_action_examples() {
        let swap = FinPerm::transposition(n("a"), n("b"));
        assert_eq!(
            perm_act_term(&swap, &NmtTerm::delta(n("a"), n("c"))),
            NmtTerm::delta(n("b"), n("c"))
        );
        let t = NmtTerm::seq(NmtTerm::delta(n("a"), n("x")), NmtTerm::delta(n("x"), n("b")));
        assert_eq!(perm_act_term(&FinPerm::identity(), &t), t);
        let g = NmtTerm::gen("m", vec![n("a"), n("b")], vec![n("c")]);
        assert_eq!(
            perm_act_term(&swap, &g),
            NmtTerm::gen("m", vec![n("b"), n("a")], vec![n("c")])
        );
    }

    #[test]
    fn perm_action_is_a_group_action() {
        let t = NmtTerm::seq(
            NmtTerm::gen("g", vec![n("a")], vec![n("x")]),
            NmtTerm::delta(n("x"), n("b")),
        );
        let p = FinPerm::transposition(n("a"), n("b"));
        let q = FinPerm::transposition(n("b"), n("c"));
        assert_eq!(
            perm_act_term(&p.compose(&q), &t),
            perm_act_term(&p, &perm_act_term(&q, &t))
        );
    }

    #[test]
    fn renaming_bundle_examples() {
        let swap = FinPerm::transposition(n("a"), n("b"));
        let bundle = renaming_bundle(&swap, &nset(&["a", "b"]));
        assert_eq!(
            bundle,
            NmtTerm::par(NmtTerm::delta(n("a"), n("b")), NmtTerm::delta(n("b"), n("a")))
        );
        // identity renaming of a single wire is that wire
        assert_eq!(
            renaming_bundle(&FinPerm::identity(), &nset(&["a"])),
            NmtTerm::IdName(n("a"))
        );
        assert_eq!(renaming_bundle(&swap, &NameSet::new()), NmtTerm::Nil);
    }

    #[test]
    fn support_excludes_internal_names() {
        let sig = NmtSignature::default();
        let t = NmtTerm::seq(NmtTerm::delta(n("a"), n("x")), NmtTerm::delta(n("x"), n("b")));
        assert_eq!(term_support(&t, &sig).unwrap(), nset(&["a", "b"]));
        assert_eq!(
            term_support(&NmtTerm::delta(n("a"), n("b")), &sig).unwrap(),
            nset(&["a", "b"])
        );
        assert_eq!(term_support(&NmtTerm::Nil, &sig).unwrap(), NameSet::new());
    }

    #[test]
    fn freshen_internals_examples() {
        let sig = NmtSignature::default();
        let t = NmtTerm::seq(NmtTerm::delta(n("a"), n("x")), NmtTerm::delta(n("x"), n("b")));
        let expected = NmtTerm::seq(
            NmtTerm::delta(n("a"), Name::machine(0)),
            NmtTerm::delta(Name::machine(0), n("b")),
        );
        assert_eq!(freshen_internals(&t, &sig).unwrap(), expected);
        let no_internals = NmtTerm::par(NmtTerm::delta(n("a"), n("b")), NmtTerm::IdName(n("c")));
        assert_eq!(freshen_internals(&no_internals, &sig).unwrap(), no_internals);
    }

    #[test]
    fn freshen_is_stable_on_already_fresh_terms() {
        let sig = NmtSignature::default();
        let t = NmtTerm::seq(
            NmtTerm::delta(n("a"), Name::machine(0)),
            NmtTerm::delta(Name::machine(0), n("b")),
        );
        assert_eq!(freshen_internals(&t, &sig).unwrap(), t);
        // two internals, one already machine-named: simultaneous renaming
        let t = NmtTerm::seq_all([
            NmtTerm::delta(n("a"), n("y")),
            NmtTerm::delta(n("y"), Name::machine(0)),
            NmtTerm::delta(Name::machine(0), n("b")),
        ]);
        let u = freshen_internals(&t, &sig).unwrap();
        let expected = NmtTerm::seq_all([
            NmtTerm::delta(n("a"), Name::machine(0)),
            NmtTerm::delta(Name::machine(0), Name::machine(1)),
            NmtTerm::delta(Name::machine(1), n("b")),
        ]);
        assert_eq!(u, expected);
    }

    #[test]
    fn conjugation_form_types() {
        let sig = free_sig();
        let swap = FinPerm::transposition(n("a"), n("b"));
        let g = NmtTerm::gen("g", vec![n("a")], vec![n("c")]);
        let conj = conjugation_form(&swap, &g, &sig).unwrap();
        let direct = perm_act_term(&swap, &g);
        assert_eq!(
            nmt_typecheck(&conj, &sig).unwrap(),
            nmt_typecheck(&direct, &sig).unwrap()
        );
    }

    #[test]
    fn nominal_theory_signatures() {
        let ni = nmt_theory_signature(TheoryId::NI);
        assert_eq!(ni.arity(GEN_CREATE), Some((0, 1)));
        assert_eq!(ni.schemas.len(), 1);
        let ns = nmt_theory_signature(TheoryId::NS);
        assert_eq!(ns.arity(GEN_MERGE), Some((2, 1)));
        let nr = nmt_theory_signature(TheoryId::NR);
        assert_eq!(nr.arity(GEN_COPY), Some((1, 2)));
        assert_eq!(nr.schemas.len(), 4);
    }

    #[test]
    fn delta_smart_constructor_collapses_identity() {
        assert_eq!(NmtTerm::delta(n("a"), n("a")), NmtTerm::IdName(n("a")));
        assert_eq!(NmtTerm::delta(n("a"), n("b")), NmtTerm::Delta(n("a"), n("b")));
    }

    #[test]
    fn display_round_readable() {
        let t = NmtTerm::seq(
            NmtTerm::par(NmtTerm::delta(n("a"), n("x")), NmtTerm::IdName(n("c"))),
            NmtTerm::par(NmtTerm::delta(n("x"), n("b")), NmtTerm::IdName(n("c"))),
        );
        assert_eq!(t.to_string(), "d(a>x) | id(c) ; d(x>b) | id(c)");
        let p = NmtTerm::perm_app(
            FinPerm::transposition(n("a"), n("b")),
            NmtTerm::delta(n("a"), n("c")),
        );
        assert_eq!(p.to_string(), "(a b) d(a>c)");
    }
}
