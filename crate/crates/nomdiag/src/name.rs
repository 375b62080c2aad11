//! Names, finite name sets and the deterministic fresh-name supply.
//!
//! A [`Name`] is a lowercase identifier with an optional numeric index.
//! Names are totally ordered (base first, then index), and that order fixes
//! every otherwise arbitrary choice in the engine: set enumeration, readback
//! of canonical forms, orbit representatives. Names whose base starts with
//! `_` are reserved for the machine (fresh internal wires, positional names);
//! the parser rejects them in user input.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NameError {
    #[error("invalid name literal `{0}`: expected [a-z][a-z0-9]*")]
    BadLiteral(String),
    #[error("name `{0}` uses the reserved machine prefix `_`")]
    ReservedPrefix(String),
}

/// An atom: `a`, `b1`, `x12`. Machine names look like `_0` or `_p3`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name {
    base: String,
    index: Option<u64>,
}

impl Name {
    /// A user-level name from an explicit base and index. The base must
    /// match `[a-z][a-z0-9]*`.
    pub fn new(base: &str, index: Option<u64>) -> Result<Name, NameError> {
        if base.starts_with('_') {
            return Err(NameError::ReservedPrefix(base.to_string()));
        }
        let mut chars = base.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
            && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit());
        if !ok {
            return Err(NameError::BadLiteral(base.to_string()));
        }
        Ok(Name { base: base.to_string(), index })
    }

    /// Parse a user name literal, splitting trailing digits into the index:
    /// `a1` is base `a` with index 1 and sorts numerically after `a`.
    /// Trailing digits with a leading zero are kept verbatim in the base so
    /// that printing round-trips.
    pub fn parse(literal: &str) -> Result<Name, NameError> {
        if literal.starts_with('_') {
            return Err(NameError::ReservedPrefix(literal.to_string()));
        }
        let split = literal.len() - literal.chars().rev().take_while(|c| c.is_ascii_digit()).count();
        let (base, digits) = literal.split_at(split);
        if base.is_empty() {
            return Err(NameError::BadLiteral(literal.to_string()));
        }
        if digits.is_empty() || digits.starts_with('0') {
            Name::new(literal, None)
        } else {
            Name::new(base, Some(digits.parse().expect("digits")))
        }
    }

    /// The k-th machine-fresh name `_k`.
    pub fn machine(k: u64) -> Name {
        Name { base: "_".to_string(), index: Some(k) }
    }

    /// The canonical name `_p<i>` for position `i` of an ordered interface.
    pub fn position(i: usize) -> Name {
        Name { base: "_p".to_string(), index: Some(i as u64) }
    }

    pub fn is_machine(&self) -> bool {
        self.base.starts_with('_')
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn index(&self) -> Option<u64> {
        self.index
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.base, i),
            None => write!(f, "{}", self.base),
        }
    }
}

// Debug defers to Display; interfaces read better in test output.
impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite set of names with sorted iteration order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NameSet(BTreeSet<Name>);

impl NameSet {
    pub fn new() -> NameSet {
        NameSet(BTreeSet::new())
    }

    pub fn singleton(a: Name) -> NameSet {
        NameSet(BTreeSet::from([a]))
    }

    pub fn insert(&mut self, a: Name) -> bool {
        self.0.insert(a)
    }

    pub fn contains(&self, a: &Name) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Name> {
        self.0.iter()
    }

    pub fn union(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn remove(&mut self, a: &Name) -> bool {
        self.0.remove(a)
    }

    /// The elements in name order; the engine's one canonical enumeration.
    pub fn enumerate(&self) -> Vec<Name> {
        self.0.iter().cloned().collect()
    }
}

/// True iff the two sets share no name. This is the definedness condition of
/// the partial tensor: interfaces may be juxtaposed only when separated.
pub fn separated(a: &NameSet, b: &NameSet) -> bool {
    a.intersection(b).is_empty()
}

impl FromIterator<Name> for NameSet {
    fn from_iter<T: IntoIterator<Item = Name>>(iter: T) -> NameSet {
        NameSet(iter.into_iter().collect())
    }
}

impl IntoIterator for NameSet {
    type Item = Name;
    type IntoIter = std::collections::btree_set::IntoIter<Name>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a NameSet {
    type Item = &'a Name;
    type IntoIter = std::collections::btree_set::Iter<'a, Name>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for NameSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for NameSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `k` pairwise-distinct machine names `_i` whose indices are the smallest
/// not colliding with `avoid`. Deterministic for fixed inputs.
pub fn fresh_names(avoid: &NameSet, k: usize) -> Vec<Name> {
    let taken: BTreeSet<u64> = avoid
        .iter()
        .filter(|n| n.base() == "_")
        .filter_map(|n| n.index())
        .collect();
    let mut out = Vec::with_capacity(k);
    let mut i = 0;
    while out.len() < k {
        if !taken.contains(&i) {
            out.push(Name::machine(i));
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::parse(s).unwrap()
    }

    #[test]
    fn literal_round_trip_and_order() {
        assert_eq!(n("a").to_string(), "a");
        assert_eq!(n("a1").to_string(), "a1");
        assert_eq!(n("ab12").base(), "ab");
        assert!(n("a") < n("a1"));
        assert!(n("a2") < n("a10"), "indices compare numerically");
        assert!(n("a9") < n("b"));
        // leading-zero suffixes stay in the base and still round-trip
        assert_eq!(n("a01").to_string(), "a01");
        assert_ne!(n("a01"), n("a1"));
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(Name::parse("_0").is_err());
        assert!(Name::parse("_x").is_err());
        assert!(Name::parse("A").is_err());
        assert!(Name::parse("1a").is_err());
        assert!(Name::parse("").is_err());
    }

    #[test]
    fn machine_names_sort_before_user_names() {
        assert!(Name::machine(0) < n("a"));
        assert!(Name::machine(3) < Name::position(1));
        assert!(Name::position(2) < n("a"));
    }

    #[test]
    fn enumerate_is_sorted() {
        let s: NameSet = [n("b"), n("a")].into_iter().collect();
        assert_eq!(s.enumerate(), vec![n("a"), n("b")]);
        assert_eq!(NameSet::new().enumerate(), Vec::<Name>::new());
        let s: NameSet = [n("a1"), n("a")].into_iter().collect();
        assert_eq!(s.enumerate(), vec![n("a"), n("a1")]);
    }

    #[test]
    fn separated_basics() {
        let a: NameSet = [n("a")].into_iter().collect();
        let b: NameSet = [n("b")].into_iter().collect();
        let ab: NameSet = [n("a"), n("b")].into_iter().collect();
        let bc: NameSet = [n("b"), n("c")].into_iter().collect();
        assert!(separated(&a, &b));
        assert!(!separated(&ab, &bc));
        assert!(separated(&NameSet::new(), &ab));
    }

    #[test]
    fn fresh_names_examples() {
        let ab: NameSet = [n("a"), n("b")].into_iter().collect();
        assert_eq!(fresh_names(&ab, 2), vec![Name::machine(0), Name::machine(1)]);
        let taken: NameSet = [Name::machine(0)].into_iter().collect();
        assert_eq!(fresh_names(&taken, 1), vec![Name::machine(1)]);
        assert_eq!(fresh_names(&NameSet::new(), 0), Vec::<Name>::new());
    }

    #[test]
    fn fresh_names_disjoint_and_duplicate_free() {
        let avoid: NameSet =
            [Name::machine(1), Name::machine(3), n("a")].into_iter().collect();
        let out = fresh_names(&avoid, 4);
        let set: NameSet = out.iter().cloned().collect();
        assert_eq!(set.len(), out.len());
        assert!(separated(&set, &avoid));
        assert_eq!(out, vec![Name::machine(0), Name::machine(2), Name::machine(4), Name::machine(5)]);
    }
}
