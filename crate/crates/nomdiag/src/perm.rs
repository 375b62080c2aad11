//! Finitely supported permutations of names.
//!
//! A [`FinPerm`] stores exactly its non-fixed points, so the support is read
//! off directly. All values are immutable; operations build new permutations.

use std::collections::BTreeMap;
use std::fmt;

use crate::name::{Name, NameSet};

/// A finite permutation of names, stored sparsely.
///
/// Invariants: the stored map is a bijection on its key set and no key maps
/// to itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinPerm {
    moved: BTreeMap<Name, Name>,
}

impl FinPerm {
    pub fn identity() -> FinPerm {
        FinPerm::default()
    }

    /// The transposition `(a b)`. Returns the identity when `a = b`.
    pub fn transposition(a: Name, b: Name) -> FinPerm {
        if a == b {
            return FinPerm::identity();
        }
        let mut moved = BTreeMap::new();
        moved.insert(a.clone(), b.clone());
        moved.insert(b, a);
        FinPerm { moved }
    }

    /// Build from an explicit mapping of the non-fixed points.
    /// Panics if the map is not a bijection on its key set.
    pub fn from_moved(pairs: impl IntoIterator<Item = (Name, Name)>) -> FinPerm {
        let mut moved = BTreeMap::new();
        for (k, v) in pairs {
            if k != v {
                moved.insert(k, v);
            }
        }
        let keys: NameSet = moved.keys().cloned().collect();
        let vals: NameSet = moved.values().cloned().collect();
        assert_eq!(keys, vals, "moved map must be a bijection on its key set");
        FinPerm { moved }
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    pub fn apply(&self, a: &Name) -> Name {
        self.moved.get(a).cloned().unwrap_or_else(|| a.clone())
    }

    /// `(p ∘ q)(x) = p(q(x))`; only non-fixed points are retained.
    pub fn compose(&self, q: &FinPerm) -> FinPerm {
        let mut moved = BTreeMap::new();
        for a in self.support().union(&q.support()).iter() {
            let img = self.apply(&q.apply(a));
            if img != *a {
                moved.insert(a.clone(), img);
            }
        }
        FinPerm { moved }
    }

    pub fn inverse(&self) -> FinPerm {
        let moved = self.moved.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        FinPerm { moved }
    }

    /// Exactly the non-fixed points.
    pub fn support(&self) -> NameSet {
        self.moved.keys().cloned().collect()
    }

    /// Elementwise image `π·A = {π(a) | a ∈ A}`.
    pub fn apply_set(&self, set: &NameSet) -> NameSet {
        set.iter().map(|a| self.apply(a)).collect()
    }

    /// The pairs `(a, π(a))` over the support, in name order.
    pub fn moved_pairs(&self) -> impl Iterator<Item = (&Name, &Name)> {
        self.moved.iter()
    }
}

/// Extend a partial injection to a finite permutation by closing up the
/// leftover sources and targets, matching them in name order. Used wherever
/// the engine needs "some permutation sending these names there".
pub fn complete_to_perm(partial: &BTreeMap<Name, Name>) -> FinPerm {
    let keys: NameSet = partial.keys().cloned().collect();
    let vals: NameSet = partial.values().cloned().collect();
    assert_eq!(vals.len(), partial.len(), "partial map must be injective");
    let spare_targets: Vec<Name> = keys.difference(&vals).into_iter().collect();
    let unmatched_sources: Vec<Name> = vals.difference(&keys).into_iter().collect();
    let mut moved = partial.clone();
    for (src, tgt) in unmatched_sources.into_iter().zip(spare_targets) {
        moved.insert(src, tgt);
    }
    FinPerm::from_moved(moved)
}

impl fmt::Display for FinPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moved.is_empty() {
            return write!(f, "id");
        }
        write!(f, "{{")?;
        for (i, (k, v)) in self.moved.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}>{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FinPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::name::fresh_names;
    use proptest::prelude::*;

    fn n(s: &str) -> Name {
        Name::parse(s).unwrap()
    }

    fn tr(a: &str, b: &str) -> FinPerm {
        FinPerm::transposition(n(a), n(b))
    }

    #[test]
    fn transposition_basics() {
        let p = tr("a", "b");
        assert_eq!(p.apply(&n("a")), n("b"));
        assert_eq!(p.apply(&n("b")), n("a"));
        assert_eq!(p.apply(&n("c")), n("c"));
        assert!(FinPerm::transposition(n("a"), n("a")).is_identity());
    }

    #[test]
    fn compose_examples() {
        assert!(tr("a", "b").compose(&tr("a", "b")).is_identity());
        // (a b) ∘ (b c), pointwise p(q(x)) over {a,b,c}:
        //   a ↦ q(a)=a ↦ b;  b ↦ q(b)=c ↦ c;  c ↦ q(c)=b ↦ a
        let pq = tr("a", "b").compose(&tr("b", "c"));
        let expected =
            FinPerm::from_moved([(n("a"), n("b")), (n("b"), n("c")), (n("c"), n("a"))]);
        assert_eq!(pq, expected);
        let p = tr("a", "b");
        assert_eq!(p.compose(&FinPerm::identity()), p);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(tr("a", "b").inverse(), tr("a", "b"));
        let cycle = FinPerm::from_moved([(n("a"), n("b")), (n("b"), n("c")), (n("c"), n("a"))]);
        let expected =
            FinPerm::from_moved([(n("b"), n("a")), (n("c"), n("b")), (n("a"), n("c"))]);
        assert_eq!(cycle.inverse(), expected);
        assert!(FinPerm::identity().inverse().is_identity());
    }

    #[test]
    fn support_examples() {
        assert_eq!(tr("a", "b").support(), [n("a"), n("b")].into_iter().collect());
        assert!(FinPerm::identity().support().is_empty());
        let cycle = FinPerm::from_moved([(n("a"), n("b")), (n("b"), n("c")), (n("c"), n("a"))]);
        assert_eq!(cycle.support(), [n("a"), n("b"), n("c")].into_iter().collect());
    }

    #[test]
    fn apply_set_examples() {
        let ac: NameSet = [n("a"), n("c")].into_iter().collect();
        assert_eq!(tr("a", "b").apply_set(&ac), [n("b"), n("c")].into_iter().collect());
        let ab: NameSet = [n("a"), n("b")].into_iter().collect();
        assert_eq!(FinPerm::identity().apply_set(&ab), ab);
        assert_eq!(tr("a", "b").apply_set(&ab), ab, "setwise fixed");
    }

    #[test]
    fn complete_to_perm_closes_cycles() {
        // a>b extends to the transposition (a b)
        let p = complete_to_perm(&BTreeMap::from([(n("a"), n("b"))]));
        assert_eq!(p, tr("a", "b"));
        // a>b, b>c closes with c>a
        let p = complete_to_perm(&BTreeMap::from([(n("a"), n("b")), (n("b"), n("c"))]));
        assert_eq!(p.apply(&n("c")), n("a"));
    }

    fn small_name() -> impl Strategy<Value = Name> {
        prop::sample::select(vec![n("a"), n("b"), n("c"), n("d"), n("e")])
    }

    fn small_perm() -> impl Strategy<Value = FinPerm> {
        prop::collection::vec((small_name(), small_name()), 0..4).prop_map(|swaps| {
            swaps
                .into_iter()
                .fold(FinPerm::identity(), |acc, (a, b)| FinPerm::transposition(a, b).compose(&acc))
        })
    }

    fn small_set() -> impl Strategy<Value = NameSet> {
        prop::collection::btree_set(small_name(), 0..5).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn group_laws(p in small_perm(), q in small_perm(), r in small_perm()) {
            prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert_eq!(FinPerm::identity().compose(&p), p);
        }

        #[test]
        fn action_laws(p in small_perm(), q in small_perm(), a in small_set()) {
            prop_assert_eq!(FinPerm::identity().apply_set(&a), a.clone());
            prop_assert_eq!(p.compose(&q).apply_set(&a), p.apply_set(&q.apply_set(&a)));
        }

        #[test]
        fn separated_is_equivariant(p in small_perm(), a in small_set(), b in small_set()) {
            prop_assert_eq!(
                crate::name::separated(&a, &b),
                crate::name::separated(&p.apply_set(&a), &p.apply_set(&b))
            );
        }

        #[test]
        fn fresh_names_avoids(avoid in small_set(), k in 0usize..6) {
            let out = fresh_names(&avoid, k);
            let set: NameSet = out.iter().cloned().collect();
            prop_assert_eq!(set.len(), out.len());
            prop_assert!(crate::name::separated(&set, &avoid));
        }
    }
}
