//! The twelve built-in theories: six classes of finite-set maps, each in an
//! ordered (positional) and a nominal (named-wire) flavor.

use std::fmt;
use std::str::FromStr;

/// The class of maps a theory's arrows denote.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MapKind {
    Bij,
    Inj,
    Surj,
    Fun,
    PFun,
    Rel,
}

impl MapKind {
    /// Least class containing both, in the inclusion order
    /// bij ⊆ inj,surj ⊆ fun ⊆ pfun ⊆ rel.
    pub fn join(self, other: MapKind) -> MapKind {
        use MapKind::*;
        if self == other {
            return self;
        }
        match (self, other) {
            (Bij, k) | (k, Bij) => k,
            (Inj, Surj) | (Surj, Inj) => Fun,
            (Rel, _) | (_, Rel) => Rel,
            (PFun, _) | (_, PFun) => PFun,
            (Fun, _) | (_, Fun) => Fun,
            _ => unreachable!(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MapKind::Bij => "bij",
            MapKind::Inj => "inj",
            MapKind::Surj => "surj",
            MapKind::Fun => "fun",
            MapKind::PFun => "pfun",
            MapKind::Rel => "rel",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapKind {
    type Err = String;
    fn from_str(s: &str) -> Result<MapKind, String> {
        Ok(match s {
            "bij" => MapKind::Bij,
            "inj" => MapKind::Inj,
            "surj" => MapKind::Surj,
            "fun" => MapKind::Fun,
            "pfun" => MapKind::PFun,
            "rel" => MapKind::Rel,
            other => return Err(format!("unknown map kind `{other}`")),
        })
    }
}

/// A built-in theory identifier: `B,I,S,F,P,R` for the ordered calculi and
/// `nB,...,nR` for their nominal counterparts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TheoryId {
    pub kind: MapKind,
    pub nominal: bool,
}

impl TheoryId {
    pub const B: TheoryId = TheoryId { kind: MapKind::Bij, nominal: false };
    pub const I: TheoryId = TheoryId { kind: MapKind::Inj, nominal: false };
    pub const S: TheoryId = TheoryId { kind: MapKind::Surj, nominal: false };
    pub const F: TheoryId = TheoryId { kind: MapKind::Fun, nominal: false };
    pub const P: TheoryId = TheoryId { kind: MapKind::PFun, nominal: false };
    pub const R: TheoryId = TheoryId { kind: MapKind::Rel, nominal: false };
    pub const NB: TheoryId = TheoryId { kind: MapKind::Bij, nominal: true };
    pub const NI: TheoryId = TheoryId { kind: MapKind::Inj, nominal: true };
    pub const NS: TheoryId = TheoryId { kind: MapKind::Surj, nominal: true };
    pub const NF: TheoryId = TheoryId { kind: MapKind::Fun, nominal: true };
    pub const NP: TheoryId = TheoryId { kind: MapKind::PFun, nominal: true };
    pub const NR: TheoryId = TheoryId { kind: MapKind::Rel, nominal: true };

    pub const ORDERED: [TheoryId; 6] =
        [TheoryId::B, TheoryId::I, TheoryId::S, TheoryId::F, TheoryId::P, TheoryId::R];
    pub const NOMINAL: [TheoryId; 6] =
        [TheoryId::NB, TheoryId::NI, TheoryId::NS, TheoryId::NF, TheoryId::NP, TheoryId::NR];

    pub fn ordered_twin(self) -> TheoryId {
        TheoryId { kind: self.kind, nominal: false }
    }

    pub fn nominal_twin(self) -> TheoryId {
        TheoryId { kind: self.kind, nominal: true }
    }

    fn letter(self) -> &'static str {
        match self.kind {
            MapKind::Bij => "B",
            MapKind::Inj => "I",
            MapKind::Surj => "S",
            MapKind::Fun => "F",
            MapKind::PFun => "P",
            MapKind::Rel => "R",
        }
    }
}

impl fmt::Display for TheoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nominal {
            write!(f, "n{}", self.letter())
        } else {
            f.write_str(self.letter())
        }
    }
}

impl FromStr for TheoryId {
    type Err = String;
    fn from_str(s: &str) -> Result<TheoryId, String> {
        let (nominal, rest) = match s.strip_prefix('n') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let kind = match rest {
            "B" => MapKind::Bij,
            "I" => MapKind::Inj,
            "S" => MapKind::Surj,
            "F" => MapKind::Fun,
            "P" => MapKind::PFun,
            "R" => MapKind::Rel,
            _ => return Err(format!("unknown theory `{s}` (expected B,I,S,F,P,R or nB,...,nR)")),
        };
        Ok(TheoryId { kind, nominal })
    }
}
