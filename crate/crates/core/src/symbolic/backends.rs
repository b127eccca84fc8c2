//! The three infinite example spaces, each over finite-or-cofinite
//! descriptions of its subsets.
//!
//! - `cofinite_nat`: ℕ with the cofinite topology (T1, Noetherian).
//! - `scott_nat_ab`: ℕ ∪ {a, b}, naturals pairwise incomparable, `a` and `b`
//!   incomparable and below every natural; Scott = Alexandroff topology.
//! - `alex_nat_omega`: ℕ ∪ {ω} with the usual order and `ω` on top, in its
//!   Alexandroff topology.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cofin::CofinSet;
use crate::error::{Error, Result};
use crate::spaces::{CompactnessMethod, CompactnessOracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymPoint {
    Nat(u64),
    A,
    B,
    Omega,
}

impl fmt::Display for SymPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymPoint::Nat(n) => write!(f, "{n}"),
            SymPoint::A => f.write_str("a"),
            SymPoint::B => f.write_str("b"),
            SymPoint::Omega => f.write_str("omega"),
        }
    }
}

impl Serialize for SymPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SymPoint::Nat(n) => s.serialize_u64(*n),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for SymPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Nat(u64),
            Name(String),
        }
        match Raw::deserialize(d)? {
            Raw::Nat(n) => Ok(SymPoint::Nat(n)),
            Raw::Name(s) => match s.as_str() {
                "a" => Ok(SymPoint::A),
                "b" => Ok(SymPoint::B),
                "omega" | "ω" => Ok(SymPoint::Omega),
                other => Err(serde::de::Error::custom(format!("unknown point `{other}`"))),
            },
        }
    }
}

/// A subset of one of the backends: a finite-or-cofinite set of naturals
/// plus flags for the extra points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymSet {
    pub nats: CofinSet,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub a: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub b: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub omega: bool,
}

impl SymSet {
    pub fn empty() -> Self {
        SymSet::nats(CofinSet::empty())
    }

    pub fn nats(nats: CofinSet) -> Self {
        SymSet {
            nats,
            a: false,
            b: false,
            omega: false,
        }
    }

    pub fn point(p: SymPoint) -> Self {
        let mut s = SymSet::empty();
        s.insert(p);
        s
    }

    pub fn insert(&mut self, p: SymPoint) {
        match p {
            SymPoint::Nat(n) => self.nats = self.nats.union(&CofinSet::finite([n])),
            SymPoint::A => self.a = true,
            SymPoint::B => self.b = true,
            SymPoint::Omega => self.omega = true,
        }
    }

    pub fn contains(&self, p: SymPoint) -> bool {
        match p {
            SymPoint::Nat(n) => self.nats.contains(n),
            SymPoint::A => self.a,
            SymPoint::B => self.b,
            SymPoint::Omega => self.omega,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nats.is_empty() && !self.a && !self.b && !self.omega
    }

    pub fn is_finite(&self) -> bool {
        self.nats.is_finite()
    }

    pub fn union(&self, o: &SymSet) -> SymSet {
        SymSet {
            nats: self.nats.union(&o.nats),
            a: self.a || o.a,
            b: self.b || o.b,
            omega: self.omega || o.omega,
        }
    }

    pub fn intersection(&self, o: &SymSet) -> SymSet {
        SymSet {
            nats: self.nats.intersection(&o.nats),
            a: self.a && o.a,
            b: self.b && o.b,
            omega: self.omega && o.omega,
        }
    }

    pub fn is_subset(&self, o: &SymSet) -> bool {
        self.nats.is_subset(&o.nats)
            && (!self.a || o.a)
            && (!self.b || o.b)
            && (!self.omega || o.omega)
    }

    pub fn intersects(&self, o: &SymSet) -> bool {
        !self.intersection(o).is_empty()
    }

    /// The extra points present.
    pub fn extras(&self) -> Vec<SymPoint> {
        [
            (self.a, SymPoint::A),
            (self.b, SymPoint::B),
            (self.omega, SymPoint::Omega),
        ]
        .into_iter()
        .filter_map(|(on, p)| on.then_some(p))
        .collect()
    }
}

impl fmt::Display for SymSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nats)?;
        for p in self.extras() {
            write!(f, " ∪ {{{p}}}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EffectiveSpace {
    CofiniteNat,
    ScottNatAb,
    AlexNatOmega,
}

/// What a backend can decide outright, as opposed to accepting certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub decides_compactness: bool,
    /// Global sobriety is certificate-only everywhere.
    pub decides_sobriety: bool,
    /// Existence of open neighbourhoods `U ∋ x`, `V ∋ y` with `U ∩ V ⊆ W`.
    pub decides_neighbourhood_pairs: bool,
    pub has_minimal_neighbourhoods: bool,
}

impl fmt::Display for EffectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EffectiveSpace::CofiniteNat => "cofinite_nat",
            EffectiveSpace::ScottNatAb => "scott_nat_ab",
            EffectiveSpace::AlexNatOmega => "alex_nat_omega",
        })
    }
}

impl EffectiveSpace {
    pub const ALL: [EffectiveSpace; 3] = [
        EffectiveSpace::CofiniteNat,
        EffectiveSpace::ScottNatAb,
        EffectiveSpace::AlexNatOmega,
    ];

    pub fn capabilities(self) -> Capabilities {
        Capabilities {
            decides_compactness: true,
            decides_sobriety: false,
            decides_neighbourhood_pairs: true,
            has_minimal_neighbourhoods: self != EffectiveSpace::CofiniteNat,
        }
    }

    pub fn carrier(self) -> SymSet {
        let mut s = SymSet::nats(CofinSet::nat());
        match self {
            EffectiveSpace::CofiniteNat => {}
            EffectiveSpace::ScottNatAb => {
                s.a = true;
                s.b = true;
            }
            EffectiveSpace::AlexNatOmega => s.omega = true,
        }
        s
    }

    pub fn has_point(self, p: SymPoint) -> bool {
        matches!(p, SymPoint::Nat(_)) || self.carrier().contains(p)
    }

    pub fn validate(self, s: &SymSet) -> Result<()> {
        if s.is_subset(&self.carrier()) {
            Ok(())
        } else {
            Err(Error::Input(format!("{s} is not a subset of {self}")))
        }
    }

    pub fn validate_point(self, p: SymPoint) -> Result<()> {
        if self.has_point(p) {
            Ok(())
        } else {
            Err(Error::Input(format!("{p} is not a point of {self}")))
        }
    }

    pub fn complement(self, s: &SymSet) -> SymSet {
        let c = self.carrier();
        SymSet {
            nats: s.nats.complement(),
            a: c.a && !s.a,
            b: c.b && !s.b,
            omega: c.omega && !s.omega,
        }
    }

    pub fn leq(self, p: SymPoint, q: SymPoint) -> bool {
        use SymPoint::*;
        if p == q {
            return true;
        }
        match self {
            EffectiveSpace::CofiniteNat => false,
            EffectiveSpace::ScottNatAb => matches!((p, q), (A | B, Nat(_))),
            EffectiveSpace::AlexNatOmega => match (p, q) {
                (Nat(m), Nat(n)) => m <= n,
                (Nat(_), Omega) => true,
                _ => false,
            },
        }
    }

    pub fn upset(self, s: &SymSet) -> SymSet {
        match self {
            EffectiveSpace::CofiniteNat => s.clone(),
            EffectiveSpace::ScottNatAb => {
                let mut u = s.clone();
                if s.a || s.b {
                    u.nats = CofinSet::nat();
                }
                u
            }
            EffectiveSpace::AlexNatOmega => match s.nats.least() {
                Some(k) => SymSet {
                    nats: CofinSet::cofinite(0..k),
                    omega: true,
                    ..SymSet::empty()
                },
                None => s.clone(),
            },
        }
    }

    pub fn downset(self, s: &SymSet) -> SymSet {
        match self {
            EffectiveSpace::CofiniteNat => s.clone(),
            EffectiveSpace::ScottNatAb => {
                let mut d = s.clone();
                if !s.nats.is_empty() {
                    d.a = true;
                    d.b = true;
                }
                d
            }
            EffectiveSpace::AlexNatOmega => {
                if s.omega {
                    self.carrier()
                } else {
                    match s.nats.greatest() {
                        Some(k) => SymSet::nats(CofinSet::finite(0..=k)),
                        None if s.nats.is_empty() => SymSet::empty(),
                        None => SymSet::nats(CofinSet::nat()),
                    }
                }
            }
        }
    }

    pub fn is_open(self, s: &SymSet) -> bool {
        if self.validate(s).is_err() {
            return false;
        }
        match self {
            EffectiveSpace::CofiniteNat => s.is_empty() || !s.nats.is_finite(),
            // Both other backends carry the Alexandroff topology.
            _ => self.upset(s) == *s,
        }
    }

    pub fn is_closed(self, s: &SymSet) -> bool {
        self.validate(s).is_ok() && self.is_open(&self.complement(s))
    }

    pub fn closure(self, s: &SymSet) -> SymSet {
        match self {
            EffectiveSpace::CofiniteNat => {
                if s.is_finite() {
                    s.clone()
                } else {
                    self.carrier()
                }
            }
            _ => self.downset(s),
        }
    }

    /// Least open set containing `p`, where one exists.
    pub fn minimal_neighbourhood(self, p: SymPoint) -> Option<SymSet> {
        match self {
            EffectiveSpace::CofiniteNat => None,
            _ => Some(self.upset(&SymSet::point(p))),
        }
    }

    /// Whether `{n}` is open for every natural `n` (uniform in `n`).
    pub fn nat_singletons_open(self) -> bool {
        match self {
            EffectiveSpace::CofiniteNat => false,
            EffectiveSpace::ScottNatAb => true,
            EffectiveSpace::AlexNatOmega => false,
        }
    }

    /// Whether every pair of points of `s` is comparable.
    pub fn is_chain(self, s: &SymSet) -> bool {
        let nat_count = if s.nats.is_finite() {
            s.nats.support().len()
        } else {
            usize::MAX
        };
        match self {
            EffectiveSpace::CofiniteNat => nat_count <= 1,
            EffectiveSpace::ScottNatAb => nat_count <= 1 && !(s.a && s.b),
            EffectiveSpace::AlexNatOmega => true,
        }
    }

    /// Least upper bound of `s`, if it exists.
    pub fn supremum(self, s: &SymSet) -> Option<SymPoint> {
        if s.is_empty() {
            return None;
        }
        match self {
            EffectiveSpace::CofiniteNat => match s.nats.support().len() {
                1 if s.nats.is_finite() => s.nats.least().map(SymPoint::Nat),
                _ => None,
            },
            EffectiveSpace::ScottNatAb => {
                let nats: Vec<u64> = match &s.nats {
                    CofinSet::Finite(f) => f.iter().copied().collect(),
                    CofinSet::Cofinite(_) => return None,
                };
                match (nats.as_slice(), s.a, s.b) {
                    ([n], _, _) => Some(SymPoint::Nat(*n)),
                    ([], true, false) => Some(SymPoint::A),
                    ([], false, true) => Some(SymPoint::B),
                    // a and b have every natural as an upper bound, no least one.
                    _ => None,
                }
            }
            EffectiveSpace::AlexNatOmega => {
                if s.omega || !s.nats.is_finite() {
                    Some(SymPoint::Omega)
                } else {
                    s.nats.greatest().map(SymPoint::Nat)
                }
            }
        }
    }
}

impl CompactnessOracle for EffectiveSpace {
    type Set = SymSet;

    /// - cofinite ℕ: every subset is compact. For open covers, one member
    ///   containing any point of `A` is cofinite and leaves finitely many
    ///   points to cover. For filtered closed families, closed sets are
    ///   finite or ℕ, so a family either is `{ℕ}` or has a finite member,
    ///   below which it is finite and has a least member.
    /// - ℕ ∪ {a, b} and ℕ ∪ {ω} are Alexandroff, where compact sets are
    ///   those covered by the up-closure of finitely many of their points.
    fn is_compact(&self, a: &SymSet, _method: CompactnessMethod) -> Result<bool> {
        self.validate(a)?;
        Ok(match self {
            EffectiveSpace::CofiniteNat => true,
            EffectiveSpace::ScottNatAb => a.a || a.b || a.nats.is_finite(),
            // Every non-empty subset has a least element whose up-closure covers it.
            EffectiveSpace::AlexNatOmega => true,
        })
    }
}
