//! Semantic maps and normalization by evaluation.
//!
//! Terms evaluate into finite maps or relations between interfaces: name
//! sets for nominal terms, ordinals for ordered terms. The semantic map is
//! the canonical normal form; `readback_nmt` produces canonical syntax from
//! it on demand, and equality in every built-in theory is decided by
//! evaluating both sides.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::name::{separated, Name, NameSet};
use crate::nmt::{
    freshen_internals, gen_copy, gen_create, gen_discard, gen_merge, kind_supports,
    nmt_theory_signature, nmt_typecheck, perm_act_term, GenInstance, NmtTerm, NmtTypeError,
};
use crate::perm::FinPerm;
use crate::smt::{
    smt_theory_signature, smt_typecheck, SmtSignature, SmtTerm, SmtTypeError, GEN_COPY,
    GEN_CREATE, GEN_DISCARD, GEN_MERGE,
};
use crate::theory::{MapKind, TheoryId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemError {
    #[error("nominal type error: {0}")]
    NmtType(#[from] NmtTypeError),
    #[error("ordered type error: {0}")]
    SmtType(#[from] SmtTypeError),
    #[error("interface mismatch: cannot compose {left} with {right}")]
    InterfaceMismatch { left: String, right: String },
    #[error("tensor undefined: interfaces overlap on {0}")]
    Overlap(String),
    #[error("pairs violate the `{kind}` constraints: {reason}")]
    KindViolation { kind: MapKind, reason: String },
    #[error("generator `{label}` is not part of theory {theory}")]
    UnsupportedGenerator { label: String, theory: TheoryId },
    #[error("interfaces differ: {left} vs {right}")]
    TypeMismatch { left: String, right: String },
    #[error("map is not of kind `{expected}`: {reason}")]
    KindMismatch { expected: MapKind, reason: String },
    #[error("name `{0}` is not in the substitution's domain")]
    NameNotInDomain(Name),
}

/// A finite map/relation between interfaces drawn from an ordered element
/// type: `SemMap` over names, `OrdSem` over 1-based positions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mapping<T: Ord + Clone> {
    pub kind: MapKind,
    pub dom: BTreeSet<T>,
    pub cod: BTreeSet<T>,
    pub pairs: BTreeSet<(T, T)>,
}

pub type SemMap = Mapping<Name>;
pub type OrdSem = Mapping<usize>;

impl<T: Ord + Clone + fmt::Display> Mapping<T> {
    pub fn new(
        kind: MapKind,
        dom: impl IntoIterator<Item = T>,
        cod: impl IntoIterator<Item = T>,
        pairs: impl IntoIterator<Item = (T, T)>,
    ) -> Result<Mapping<T>, SemError> {
        let m = Mapping {
            kind,
            dom: dom.into_iter().collect(),
            cod: cod.into_iter().collect(),
            pairs: pairs.into_iter().collect(),
        };
        m.validate(kind)?;
        Ok(m)
    }

    /// Check the data against the constraints of `kind` (which may be
    /// stricter or looser than the stored kind).
    pub fn validate(&self, kind: MapKind) -> Result<(), SemError> {
        let fail = |reason: String| Err(SemError::KindViolation { kind, reason });
        for (a, b) in &self.pairs {
            if !self.dom.contains(a) || !self.cod.contains(b) {
                return fail(format!("pair ({a},{b}) leaves the interface"));
            }
        }
        let out_deg =
            |a: &T| self.pairs.iter().filter(|(x, _)| x == a).count();
        let in_deg = |b: &T| self.pairs.iter().filter(|(_, y)| y == b).count();
        let total = matches!(kind, MapKind::Bij | MapKind::Inj | MapKind::Surj | MapKind::Fun);
        let single_valued = kind != MapKind::Rel;
        let injective = matches!(kind, MapKind::Bij | MapKind::Inj);
        let surjective = matches!(kind, MapKind::Bij | MapKind::Surj);
        if single_valued {
            if let Some(a) = self.dom.iter().find(|a| out_deg(a) > 1) {
                return fail(format!("element {a} has two images"));
            }
        }
        if total {
            if let Some(a) = self.dom.iter().find(|a| out_deg(a) == 0) {
                return fail(format!("element {a} has no image"));
            }
        }
        if injective {
            if let Some(b) = self.cod.iter().find(|b| in_deg(b) > 1) {
                return fail(format!("element {b} is hit twice"));
            }
        }
        if surjective {
            if let Some(b) = self.cod.iter().find(|b| in_deg(b) == 0) {
                return fail(format!("element {b} is not hit"));
            }
        }
        Ok(())
    }

    pub fn identity(kind: MapKind, set: impl IntoIterator<Item = T> + Clone) -> Mapping<T> {
        let dom: BTreeSet<T> = set.clone().into_iter().collect();
        Mapping {
            kind,
            cod: dom.clone(),
            pairs: dom.iter().map(|a| (a.clone(), a.clone())).collect(),
            dom,
        }
    }

    pub fn empty(kind: MapKind) -> Mapping<T> {
        Mapping { kind, dom: BTreeSet::new(), cod: BTreeSet::new(), pairs: BTreeSet::new() }
    }

    fn interface_str(set: &BTreeSet<T>) -> String {
        let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn dom_str(&self) -> String {
        Self::interface_str(&self.dom)
    }

    pub fn cod_str(&self) -> String {
        Self::interface_str(&self.cod)
    }

    /// Image of one element.
    pub fn image(&self, a: &T) -> Vec<T> {
        self.pairs.iter().filter(|(x, _)| x == a).map(|(_, y)| y.clone()).collect()
    }
}

/// Relational composition `f ; g`. The interfaces must match exactly and the
/// result kind is the join of the argument kinds.
pub fn compose_sem<T: Ord + Clone + fmt::Display>(
    f: &Mapping<T>,
    g: &Mapping<T>,
) -> Result<Mapping<T>, SemError> {
    if f.cod != g.dom {
        return Err(SemError::InterfaceMismatch { left: f.cod_str(), right: g.dom_str() });
    }
    let kind = f.kind.join(g.kind);
    let pairs: BTreeSet<(T, T)> = f
        .pairs
        .iter()
        .flat_map(|(a, b)| {
            g.pairs
                .iter()
                .filter(move |(b2, _)| b2 == b)
                .map(move |(_, c)| (a.clone(), c.clone()))
        })
        .collect();
    let out = Mapping { kind, dom: f.dom.clone(), cod: g.cod.clone(), pairs };
    out.validate(kind)?;
    Ok(out)
}

/// Union of graphs on the disjoint union of interfaces. Undefined (an
/// `Overlap` error) exactly when either side's interfaces intersect.
pub fn tensor_sem<T: Ord + Clone + fmt::Display>(
    f: &Mapping<T>,
    g: &Mapping<T>,
) -> Result<Mapping<T>, SemError> {
    let dom_overlap: BTreeSet<T> = f.dom.intersection(&g.dom).cloned().collect();
    let cod_overlap: BTreeSet<T> = f.cod.intersection(&g.cod).cloned().collect();
    if !dom_overlap.is_empty() {
        return Err(SemError::Overlap(Mapping::<T>::interface_str(&dom_overlap)));
    }
    if !cod_overlap.is_empty() {
        return Err(SemError::Overlap(Mapping::<T>::interface_str(&cod_overlap)));
    }
    let kind = f.kind.join(g.kind);
    let out = Mapping {
        kind,
        dom: f.dom.union(&g.dom).cloned().collect(),
        cod: f.cod.union(&g.cod).cloned().collect(),
        pairs: f.pairs.union(&g.pairs).cloned().collect(),
    };
    out.validate(kind)?;
    Ok(out)
}

/// The naive full-support separation of two arrows: true iff
/// `(dom f ∪ cod f) ∩ (dom g ∪ cod g) = ∅`. This notion is not closed under
/// composition, which is why the tensor is instead guarded by
/// interface-disjointness; see the tests for the counterexample.
pub fn separated_arrows(f: &SemMap, g: &SemMap) -> bool {
    let support = |m: &SemMap| -> NameSet {
        m.dom.iter().chain(m.cod.iter()).cloned().collect()
    };
    separated(&support(f), &support(g))
}

/// Pointwise permutation action on a semantic map.
pub fn act_semmap(p: &FinPerm, s: &SemMap) -> SemMap {
    Mapping {
        kind: s.kind,
        dom: s.dom.iter().map(|a| p.apply(a)).collect(),
        cod: s.cod.iter().map(|a| p.apply(a)).collect(),
        pairs: s.pairs.iter().map(|(a, b)| (p.apply(a), p.apply(b))).collect(),
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Display for Mapping<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {} [", self.kind, self.dom_str(), self.cod_str())?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}>{b}")?;
        }
        write!(f, "]")
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Debug for Mapping<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The spec'd JSON form: keys `kind`, `dom`, `cod`, `pairs` in that order,
/// name lists sorted.
pub fn semmap_to_json(s: &SemMap) -> String {
    let names = |set: &BTreeSet<Name>| {
        let items: Vec<String> = set.iter().map(|n| format!("\"{n}\"")).collect();
        format!("[{}]", items.join(","))
    };
    let pairs: Vec<String> =
        s.pairs.iter().map(|(a, b)| format!("[\"{a}\",\"{b}\"]")).collect();
    format!(
        "{{\"kind\":\"{}\",\"dom\":{},\"cod\":{},\"pairs\":[{}]}}",
        s.kind,
        names(&s.dom),
        names(&s.cod),
        pairs.join(",")
    )
}

/// Positions of an ordered map rendered as the canonical names `_p<i>`.
pub fn ordsem_to_semmap(s: &OrdSem) -> SemMap {
    // dom and cod positions are distinguished so the name sets stay honest
    // even though both sides are numbered from 1
    let dn = |i: &usize| Name::position(*i);
    let cn = |j: &usize| Name::position(*j);
    Mapping {
        kind: s.kind,
        dom: s.dom.iter().map(dn).collect(),
        cod: s.cod.iter().map(cn).collect(),
        pairs: s.pairs.iter().map(|(i, j)| (dn(i), cn(j))).collect(),
    }
}

/// Transport a name-indexed map to positions along explicit interface lists.
/// Returns `None` if the lists do not enumerate the interfaces.
pub fn semmap_positions(s: &SemMap, dom: &[Name], cod: &[Name]) -> Option<OrdSem> {
    let dom_ix: BTreeMap<&Name, usize> = dom.iter().zip(1..).collect();
    let cod_ix: BTreeMap<&Name, usize> = cod.iter().zip(1..).collect();
    if dom.len() != s.dom.len() || cod.len() != s.cod.len() {
        return None;
    }
    if !s.dom.iter().all(|a| dom_ix.contains_key(a)) || !s.cod.iter().all(|b| cod_ix.contains_key(b))
    {
        return None;
    }
    Some(Mapping {
        kind: s.kind,
        dom: (1..=dom.len()).collect(),
        cod: (1..=cod.len()).collect(),
        pairs: s.pairs.iter().map(|(a, b)| (dom_ix[a], cod_ix[b])).collect(),
    })
}

fn leaf_generator_nmt(g: &GenInstance, theory: TheoryId) -> Result<SemMap, SemError> {
    let kind = theory.kind;
    let unsupported =
        || SemError::UnsupportedGenerator { label: g.label.clone(), theory: theory.nominal_twin() };
    if !kind_supports(kind, &g.label) {
        return Err(unsupported());
    }
    let pairs: Vec<(Name, Name)> = match g.label.as_str() {
        GEN_CREATE => vec![],
        GEN_MERGE => vec![
            (g.dom_names[0].clone(), g.cod_names[0].clone()),
            (g.dom_names[1].clone(), g.cod_names[0].clone()),
        ],
        GEN_DISCARD => vec![],
        GEN_COPY => vec![
            (g.dom_names[0].clone(), g.cod_names[0].clone()),
            (g.dom_names[0].clone(), g.cod_names[1].clone()),
        ],
        _ => return Err(unsupported()),
    };
    Mapping::new(kind, g.dom_names.iter().cloned(), g.cod_names.iter().cloned(), pairs)
}

/// Evaluate a nominal term in one of the built-in theories. The term must
/// be well-typed over the theory's signature; the result's interfaces are
/// exactly the term's.
pub fn eval_nmt(term: &NmtTerm, theory: TheoryId) -> Result<SemMap, SemError> {
    let sig = nmt_theory_signature(theory);
    nmt_typecheck(term, &sig).map_err(|e| match e {
        NmtTypeError::UnknownGenerator(label) => {
            SemError::UnsupportedGenerator { label, theory: theory.nominal_twin() }
        }
        other => SemError::NmtType(other),
    })?;
    let result = eval_nmt_rec(term, theory)?;
    result.validate(theory.kind)?;
    Ok(result)
}

fn eval_nmt_rec(term: &NmtTerm, theory: TheoryId) -> Result<SemMap, SemError> {
    let kind = theory.kind;
    match term {
        NmtTerm::Nil => Ok(Mapping::empty(kind)),
        NmtTerm::IdName(a) => Ok(Mapping::identity(kind, [a.clone()])),
        NmtTerm::Delta(a, b) => {
            Mapping::new(kind, [a.clone()], [b.clone()], [(a.clone(), b.clone())])
        }
        NmtTerm::Gen(g) => leaf_generator_nmt(g, theory),
        NmtTerm::Par(l, r) => {
            let fl = eval_nmt_rec(l, theory)?;
            let fr = eval_nmt_rec(r, theory)?;
            tensor_sem(&fl, &fr)
        }
        NmtTerm::Seq(l, r) => {
            let fl = eval_nmt_rec(l, theory)?;
            let fr = eval_nmt_rec(r, theory)?;
            compose_sem(&fl, &fr)
        }
        NmtTerm::PermApp(p, t) => eval_nmt_rec(&perm_act_term(p, t), theory),
    }
}

fn leaf_generator_smt(label: &str, theory: TheoryId) -> Result<OrdSem, SemError> {
    let kind = theory.kind;
    if !kind_supports(kind, label) {
        return Err(SemError::UnsupportedGenerator {
            label: label.to_string(),
            theory: theory.ordered_twin(),
        });
    }
    let (m, n, pairs): (usize, usize, Vec<(usize, usize)>) = match label {
        GEN_CREATE => (0, 1, vec![]),
        GEN_MERGE => (2, 1, vec![(1, 1), (2, 1)]),
        GEN_DISCARD => (1, 0, vec![]),
        GEN_COPY => (1, 2, vec![(1, 1), (1, 2)]),
        other => {
            return Err(SemError::UnsupportedGenerator {
                label: other.to_string(),
                theory: theory.ordered_twin(),
            })
        }
    };
    Mapping::new(kind, 1..=m, 1..=n, pairs)
}

/// Evaluate an ordered term in one of the built-in theories; the positions
/// version of `eval_nmt`.
pub fn eval_smt(term: &SmtTerm, theory: TheoryId) -> Result<OrdSem, SemError> {
    let sig = smt_theory_signature(theory);
    smt_typecheck(term, &sig).map_err(|e| match e {
        SmtTypeError::UnknownGenerator(label) => {
            SemError::UnsupportedGenerator { label, theory: theory.ordered_twin() }
        }
        other => SemError::SmtType(other),
    })?;
    let result = eval_smt_rec(term, theory)?;
    result.validate(theory.kind)?;
    Ok(result)
}

fn eval_smt_rec(term: &SmtTerm, theory: TheoryId) -> Result<OrdSem, SemError> {
    let kind = theory.kind;
    match term {
        SmtTerm::Unit => Ok(Mapping::empty(kind)),
        SmtTerm::Id => Ok(Mapping::identity(kind, [1usize])),
        SmtTerm::Sym => Mapping::new(kind, 1..=2, 1..=2, [(1, 2), (2, 1)]),
        SmtTerm::Gen(label) => leaf_generator_smt(label, theory),
        SmtTerm::Par(l, r) => {
            let fl = eval_smt_rec(l, theory)?;
            let fr = eval_smt_rec(r, theory)?;
            let (m, n) = (fl.dom.len(), fl.cod.len());
            let shifted = Mapping {
                kind: fr.kind,
                dom: fr.dom.iter().map(|i| i + m).collect(),
                cod: fr.cod.iter().map(|j| j + n).collect(),
                pairs: fr.pairs.iter().map(|(i, j)| (i + m, j + n)).collect(),
            };
            tensor_sem(&fl, &shifted)
        }
        SmtTerm::Seq(l, r) => {
            let fl = eval_smt_rec(l, theory)?;
            let fr = eval_smt_rec(r, theory)?;
            compose_sem(&fl, &fr)
        }
    }
}

/// Sound and complete equality for the built-in theories: two terms are
/// equal exactly when they evaluate to the same semantic map.
pub fn nmt_eq(t: &NmtTerm, u: &NmtTerm, theory: TheoryId) -> Result<bool, SemError> {
    let sig = nmt_theory_signature(theory);
    let ti = nmt_typecheck(t, &sig)?;
    let ui = nmt_typecheck(u, &sig)?;
    if ti != ui {
        return Err(SemError::TypeMismatch {
            left: format!("{} -> {}", ti.0, ti.1),
            right: format!("{} -> {}", ui.0, ui.1),
        });
    }
    Ok(eval_nmt(t, theory)? == eval_nmt(u, theory)?)
}

/// Apply a simultaneous substitution (a total function) to a list of names.
pub fn apply_subst(s: &SemMap, targets: &[Name]) -> Result<Vec<Name>, SemError> {
    s.validate(MapKind::Fun).map_err(|_| SemError::KindMismatch {
        expected: MapKind::Fun,
        reason: "substitutions must be total single-valued maps".to_string(),
    })?;
    targets
        .iter()
        .map(|a| {
            s.pairs
                .iter()
                .find(|(x, _)| x == a)
                .map(|(_, y)| y.clone())
                .ok_or_else(|| SemError::NameNotInDomain(a.clone()))
        })
        .collect()
}

/// Deterministic supply of machine-fresh names used by readback.
struct FreshSupply {
    taken: BTreeSet<u64>,
    next: u64,
}

impl FreshSupply {
    fn new(avoid: &NameSet) -> FreshSupply {
        let taken = avoid
            .iter()
            .filter(|n| n.base() == "_")
            .filter_map(|n| n.index())
            .collect();
        FreshSupply { taken, next: 0 }
    }

    fn next(&mut self) -> Name {
        while self.taken.contains(&self.next) {
            self.next += 1;
        }
        let name = Name::machine(self.next);
        self.next += 1;
        name
    }
}

/// Left-nested merge tree from `inputs` (in order) into `out`.
fn fan_in(inputs: &[Name], out: &Name, fresh: &mut FreshSupply) -> NmtTerm {
    debug_assert!(inputs.len() >= 2);
    let mut layers = Vec::new();
    let mut acc = inputs[0].clone();
    for (i, x) in inputs.iter().enumerate().skip(1) {
        let target = if i == inputs.len() - 1 { out.clone() } else { fresh.next() };
        let mut members = vec![gen_merge(acc, x.clone(), target.clone())];
        members.extend(inputs[i + 1..].iter().map(|y| NmtTerm::IdName(y.clone())));
        layers.push(NmtTerm::par_all(members));
        acc = target;
    }
    NmtTerm::seq_all(layers)
}

/// Left-nested copy tree from `input` onto `outputs` (in order).
fn fan_out(input: &Name, outputs: &[Name], fresh: &mut FreshSupply) -> NmtTerm {
    debug_assert!(outputs.len() >= 2);
    let mut layers = Vec::new();
    let mut acc = input.clone();
    let mut produced: Vec<Name> = Vec::new();
    for k in (2..=outputs.len()).rev() {
        let core = if k == 2 {
            gen_copy(acc.clone(), outputs[0].clone(), outputs[1].clone())
        } else {
            let t = fresh.next();
            let g = gen_copy(acc.clone(), t.clone(), outputs[k - 1].clone());
            acc = t;
            g
        };
        let mut members = vec![core];
        members.extend(produced.iter().map(|y| NmtTerm::IdName(y.clone())));
        layers.push(NmtTerm::par_all(members));
        produced.insert(0, outputs[k - 1].clone());
    }
    NmtTerm::seq_all(layers)
}

/// Canonical readback: produce the unique normal-form term denoting `s` in
/// the given theory. Deterministic; syntactic equality of readbacks decides
/// semantic equality.
///
/// Shape: an optional fan-out layer (copy trees, drops), an optional pure
/// renaming layer for wires that go straight to a singly-hit output, and an
/// optional fan-in layer (merge trees, creations). Intermediate wires get
/// machine-fresh names, numbered in traversal order; trees are left-nested.
pub fn readback_nmt(s: &SemMap, theory: TheoryId) -> Result<NmtTerm, SemError> {
    let kind = theory.kind;
    s.validate(kind).map_err(|e| SemError::KindMismatch {
        expected: kind,
        reason: e.to_string(),
    })?;

    let avoid: NameSet = s.dom.iter().chain(s.cod.iter()).cloned().collect();
    let mut fresh = FreshSupply::new(&avoid);

    let out_pairs = |a: &Name| -> Vec<Name> { s.image(a) };
    let in_pairs = |b: &Name| -> Vec<Name> {
        s.pairs.iter().filter(|(_, y)| y == b).map(|(x, _)| x.clone()).collect()
    };
    let out_deg = |a: &Name| out_pairs(a).len();
    let in_deg = |b: &Name| in_pairs(b).len();

    // Wire names carrying each pair between the layers: the source name
    // while the source is unshared, the target name once the target is
    // singly hit, and a machine-fresh middle name when both ends branch.
    // Fresh names are allocated cod-major in name order.
    let mut mid: BTreeMap<(Name, Name), Name> = BTreeMap::new();
    for b in s.cod.iter() {
        if in_deg(b) < 2 {
            continue;
        }
        for a in in_pairs(b) {
            if out_deg(&a) >= 2 {
                mid.insert((a.clone(), b.clone()), fresh.next());
            }
        }
    }
    let wire_after_fanout = |a: &Name, b: &Name| -> Name {
        if out_deg(a) < 2 {
            a.clone()
        } else if let Some(x) = mid.get(&(a.clone(), b.clone())) {
            x.clone()
        } else {
            // a branches but b is singly hit: the copy emits b directly
            b.clone()
        }
    };
    let wire_into_fanin = |a: &Name, b: &Name| -> Name {
        if in_deg(b) < 2 {
            b.clone()
        } else {
            wire_after_fanout(a, b)
        }
    };

    // Layer 1: fan-outs and drops.
    let mut l1_members = Vec::new();
    let mut l1_needed = false;
    for a in s.dom.iter() {
        let outs = out_pairs(a);
        match outs.len() {
            0 => {
                l1_members.push(gen_discard(a.clone()));
                l1_needed = true;
            }
            1 => l1_members.push(NmtTerm::IdName(a.clone())),
            _ => {
                let targets: Vec<Name> =
                    outs.iter().map(|b| wire_after_fanout(a, b)).collect();
                l1_members.push(fan_out(a, &targets, &mut fresh));
                l1_needed = true;
            }
        }
    }

    // Layer 2: direct renamings for pairs whose target is singly hit and
    // whose source does not branch.
    let mut l2_members = Vec::new();
    let mut l2_needed = false;
    for a in s.dom.iter() {
        for b in out_pairs(a) {
            if out_deg(a) == 1 {
                let target = wire_into_fanin(a, &b);
                let member = NmtTerm::delta(a.clone(), target.clone());
                if target != *a {
                    l2_needed = true;
                }
                l2_members.push(member);
            } else if in_deg(&b) >= 2 {
                // branching source into a merge: wire passes through by name
                l2_members.push(NmtTerm::IdName(wire_after_fanout(a, &b)));
            } else {
                l2_members.push(NmtTerm::IdName(b.clone()));
            }
        }
    }

    // Layer 3: fan-ins and creations.
    let mut l3_members = Vec::new();
    let mut l3_needed = false;
    for b in s.cod.iter() {
        let ins = in_pairs(b);
        match ins.len() {
            0 => {
                l3_members.push(gen_create(b.clone()));
                l3_needed = true;
            }
            1 => l3_members.push(NmtTerm::IdName(b.clone())),
            _ => {
                let sources: Vec<Name> =
                    ins.iter().map(|a| wire_into_fanin(a, b)).collect();
                l3_members.push(fan_in(&sources, b, &mut fresh));
                l3_needed = true;
            }
        }
    }

    let mut layers = Vec::new();
    if l1_needed {
        layers.push(NmtTerm::par_all(l1_members));
    }
    if l2_needed {
        layers.push(NmtTerm::par_all(l2_members));
    }
    if l3_needed {
        layers.push(NmtTerm::par_all(l3_members));
    }
    let term = if layers.is_empty() {
        NmtTerm::par_all(s.dom.iter().map(|a| NmtTerm::IdName(a.clone())))
    } else {
        NmtTerm::seq_all(layers)
    };
    // canonical bound names, independent of the supply history
    let sig = nmt_theory_signature(theory);
    Ok(freshen_internals(&term, &sig).expect("readback produces well-typed terms"))
}
