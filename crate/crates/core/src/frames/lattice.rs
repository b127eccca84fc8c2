use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spaces::enumerate::random_poset;
use crate::spaces::{FinSpace, PointSet, MAX_POINTS};

/// Element subsets of a lattice reuse the point-set word.
pub type ElemSet = PointSet;

/// A finite lattice on elements `0..m`, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLattice {
    m: usize,
    up: Vec<ElemSet>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinLattice {
    /// Builds a lattice from the up-set of each element.
    ///
    /// Fails unless the relation is a partial order in which every pair has
    /// a greatest lower bound and a least upper bound.
    pub fn from_upsets(up: Vec<ElemSet>) -> Result<FinLattice> {
        let m = up.len();
        if m == 0 {
            return Err(Error::NotALattice(
                "a lattice needs at least one element".into(),
            ));
        }
        if m > MAX_POINTS {
            return Err(Error::TooManyPoints {
                size: m,
                limit: MAX_POINTS,
            });
        }
        let full = ElemSet::full(m);
        for (a, &u) in up.iter().enumerate() {
            if !u.is_subset(full) {
                return Err(Error::PointOutOfRange {
                    point: u.max().unwrap_or_default(),
                    n: m,
                });
            }
            if !u.contains(a) {
                return Err(Error::NotALattice(format!("{a} ≤ {a} is missing")));
            }
            for b in u.iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotALattice(format!(
                        "{a} ≤ {b} ≤ {a} with {a} ≠ {b}"
                    )));
                }
                if !up[b].is_subset(u) {
                    return Err(Error::NotALattice(format!(
                        "order is not transitive at {a} ≤ {b}"
                    )));
                }
            }
        }
        let down: Vec<ElemSet> = (0..m)
            .map(|a| (0..m).filter(|&b| up[b].contains(a)).collect())
            .collect();
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let lower = down[a] & down[b];
                let glb = lower
                    .iter()
                    .find(|&g| lower.is_subset(down[g]))
                    .ok_or_else(|| {
                        Error::NotALattice(format!("{a} and {b} have no greatest lower bound"))
                    })?;
                let upper = up[a] & up[b];
                let lub = upper
                    .iter()
                    .find(|&l| upper.is_subset(up[l]))
                    .ok_or_else(|| {
                        Error::NotALattice(format!("{a} and {b} have no least upper bound"))
                    })?;
                meet[a * m + b] = glb;
                join[a * m + b] = lub;
            }
        }
        let bottom = (0..m)
            .find(|&a| up[a] == full)
            .ok_or_else(|| Error::NotALattice("no least element".into()))?;
        let top = (0..m)
            .find(|&a| down[a] == full)
            .ok_or_else(|| Error::NotALattice("no greatest element".into()))?;
        Ok(FinLattice {
            m,
            up,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// `(a, b)` pairs mean `a ≤ b`; reflexive and transitive closure is
    /// applied before validation.
    pub fn from_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<FinLattice> {
        if m > MAX_POINTS {
            return Err(Error::TooManyPoints {
                size: m,
                limit: MAX_POINTS,
            });
        }
        let mut up: Vec<ElemSet> = (0..m).map(ElemSet::singleton).collect();
        for &(a, b) in pairs {
            for e in [a, b] {
                if e >= m {
                    return Err(Error::PointOutOfRange { point: e, n: m });
                }
            }
            up[a].insert(b);
        }
        for k in 0..m {
            let row = up[k];
            for r in up.iter_mut() {
                if r.contains(k) {
                    *r = *r | row;
                }
            }
        }
        FinLattice::from_upsets(up)
    }

    /// The chain `0 < 1 < .. < k-1`.
    pub fn chain(k: usize) -> FinLattice {
        let full = ElemSet::full(k);
        FinLattice::from_upsets((0..k).map(|a| full - ElemSet::full(a)).collect())
            .expect("chains are lattices")
    }

    /// The Boolean algebra of subsets of `atoms` atoms; element `i` is the
    /// subset with bit pattern `i`.
    pub fn boolean(atoms: usize) -> FinLattice {
        assert!(atoms <= 6, "Boolean lattices are capped at 6 atoms");
        let m = 1usize << atoms;
        FinLattice::from_upsets(
            (0..m)
                .map(|a| (0..m).filter(|&b| a & !b == 0).collect())
                .collect(),
        )
        .expect("powersets are lattices")
    }

    /// The diamond: `0` below three atoms `1, 2, 3`, all below `4`.
    pub fn m3() -> FinLattice {
        FinLattice::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("M3 is a lattice")
    }

    /// The pentagon: `0 < 1 < 2 < 4` and `0 < 3 < 4`.
    pub fn n5() -> FinLattice {
        FinLattice::from_pairs(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
            .expect("N5 is a lattice")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.m)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    pub fn down(&self, a: usize) -> ElemSet {
        (0..self.m).filter(|&b| self.up[b].contains(a)).collect()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.m + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.m + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a set of elements; `⊥` for the empty set.
    pub fn join_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, a| self.join(acc, a))
    }

    /// Meet of a set of elements; `⊤` for the empty set.
    pub fn meet_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, a| self.meet(acc, a))
    }

    pub fn is_upward_closed(&self, s: ElemSet) -> bool {
        s.iter().all(|a| self.up[a].is_subset(s))
    }

    /// The up-set table, one entry per element.
    pub fn upsets(&self) -> &[ElemSet] {
        &self.up
    }

    /// `(a, b)` with `a ≤ b`, reflexive pairs included.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.m)
            .flat_map(|a| self.up[a].iter().map(move |b| (a, b)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrameReport {
    pub is_frame: bool,
    pub is_boolean: bool,
    /// `(u, v, w)` with `u ∧ (v ∨ w) ≠ (u ∧ v) ∨ (u ∧ w)`.
    pub witness: Option<(usize, usize, usize)>,
}

/// Distributivity over binary joins, which on a finite lattice is the full
/// frame law (every join is a finite join, and the empty join is `⊥`).
pub fn frame_report(l: &FinLattice) -> FrameReport {
    let m = l.m;
    let witness = (0..m)
        .flat_map(|u| (0..m).flat_map(move |v| (0..m).map(move |w| (u, v, w))))
        .find(|&(u, v, w)| l.meet(u, l.join(v, w)) != l.join(l.meet(u, v), l.meet(u, w)));
    let is_frame = witness.is_none();
    let complemented =
        (0..m).all(|a| (0..m).any(|b| l.meet(a, b) == l.bottom && l.join(a, b) == l.top));
    FrameReport {
        is_frame,
        is_boolean: is_frame && complemented,
        witness,
    }
}

/// The open sets of a space as a lattice, with the opens kept alongside so
/// element indices can be read back as point sets.
#[derive(Debug, Clone)]
pub struct OpensLattice {
    /// `opens[i]` is element `i`; same order as [`FinSpace::opens`].
    pub opens: Vec<PointSet>,
    pub lattice: FinLattice,
}

impl OpensLattice {
    pub fn index_of(&self, u: PointSet) -> Option<usize> {
        self.opens.binary_search(&u).ok()
    }

    /// Element set for a family of opens.
    pub fn elements_of(&self, family: impl IntoIterator<Item = PointSet>) -> ElemSet {
        family
            .into_iter()
            .filter_map(|u| self.index_of(u))
            .collect()
    }
}

/// `O(X)` ordered by inclusion; meets are intersections, joins unions.
pub fn lattice_of_opens(space: &FinSpace) -> Result<OpensLattice> {
    let opens = space.opens().to_vec();
    if opens.len() > MAX_POINTS {
        return Err(Error::TooManyPoints {
            size: opens.len(),
            limit: MAX_POINTS,
        });
    }
    let up = opens
        .iter()
        .map(|&u| {
            opens
                .iter()
                .enumerate()
                .filter(|(_, v)| u.is_subset(**v))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let lattice = FinLattice::from_upsets(up)?;
    Ok(OpensLattice { opens, lattice })
}

/// Action of `O` on a map `f: X → Y`: entry `i` is `f⁻¹(V_i)` for the
/// `i`-th open `V_i` of `Y`. Fails if `f` is not continuous.
pub fn preimage_of_opens(f: &[usize], x: &FinSpace, y: &FinSpace) -> Result<Vec<PointSet>> {
    if f.len() != x.n() {
        return Err(Error::Input(format!(
            "map has {} entries for a domain of {} points",
            f.len(),
            x.n()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&fx| fx >= y.n()) {
        return Err(Error::PointOutOfRange {
            point: bad,
            n: y.n(),
        });
    }
    y.opens()
        .iter()
        .map(|&v| {
            let pre: PointSet = (0..x.n()).filter(|&p| v.contains(f[p])).collect();
            if x.is_open(pre) {
                Ok(pre)
            } else {
                Err(Error::Input(format!(
                    "preimage of open {v} is {pre}, not open"
                )))
            }
        })
        .collect()
}

/// A random finite distributive lattice with at most `max_m` elements: the
/// down-sets of a random poset under inclusion, relabelled at random.
pub fn random_distributive_lattice<R: Rng + ?Sized>(rng: &mut R, max_m: usize) -> FinLattice {
    assert!(max_m >= 1);
    loop {
        let k = rng.gen_range(0..=5);
        let p = random_poset(rng, k);
        let downsets: Vec<PointSet> = PointSet::full(k)
            .subsets()
            .filter(|&s| s.iter().all(|x| p.down(x).is_subset(s)))
            .collect();
        if downsets.len() > max_m {
            continue;
        }
        let m = downsets.len();
        let mut label: Vec<usize> = (0..m).collect();
        label.shuffle(rng);
        let mut up = vec![ElemSet::EMPTY; m];
        for (i, &a) in downsets.iter().enumerate() {
            up[label[i]] = downsets
                .iter()
                .enumerate()
                .filter(|(_, b)| a.is_subset(**b))
                .map(|(j, _)| label[j])
                .collect();
        }
        return FinLattice::from_upsets(up).expect("down-set lattices are lattices");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_lattices() {
        // Two incomparable maximal elements.
        assert!(FinLattice::from_pairs(3, &[(0, 1), (0, 2)]).is_err());
        // Cycle.
        assert!(FinLattice::from_pairs(2, &[(0, 1), (1, 0)]).is_err());
        assert!(FinLattice::from_pairs(0, &[]).is_err());
        assert!(FinLattice::from_pairs(2, &[(0, 5)]).is_err());
    }

    #[test]
    fn boolean_tables() {
        let b = FinLattice::boolean(2);
        assert_eq!((b.bottom(), b.top()), (0, 3));
        assert_eq!(b.meet(1, 2), 0);
        assert_eq!(b.join(1, 2), 3);
    }

    #[test]
    fn opens_lattices() {
        let s = lattice_of_opens(&FinSpace::sierpinski()).unwrap();
        assert_eq!(s.lattice, FinLattice::chain(3));
        let d = lattice_of_opens(&FinSpace::discrete(2)).unwrap();
        assert_eq!(d.lattice.m(), 4);
        assert!(frame_report(&d.lattice).is_boolean);
        for n in 1..5 {
            let i = lattice_of_opens(&FinSpace::indiscrete(n)).unwrap();
            assert_eq!(i.lattice, FinLattice::chain(2));
        }
    }

    #[test]
    fn frame_reports() {
        let m3 = frame_report(&FinLattice::m3());
        assert!(!m3.is_frame && !m3.is_boolean);
        let (u, v, w) = m3.witness.unwrap();
        let l = FinLattice::m3();
        assert_ne!(l.meet(u, l.join(v, w)), l.join(l.meet(u, v), l.meet(u, w)));
        assert!(!frame_report(&FinLattice::n5()).is_frame);
        let b = frame_report(&FinLattice::boolean(2));
        assert!(b.is_frame && b.is_boolean && b.witness.is_none());
        let c = frame_report(&FinLattice::chain(3));
        assert!(c.is_frame && !c.is_boolean);
    }

    #[test]
    fn preimages() {
        let s = FinSpace::sierpinski();
        let id = preimage_of_opens(&[0, 1], &s, &s).unwrap();
        assert_eq!(id, s.opens());
        // Swapping the two points is not continuous on Sierpiński space.
        assert!(preimage_of_opens(&[1, 0], &s, &s).is_err());
        // Constant maps are continuous.
        assert!(preimage_of_opens(&[1, 1], &s, &s).is_ok());
    }

    #[test]
    fn random_lattices_are_distributive() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let l = random_distributive_lattice(&mut rng, 12);
            assert!(l.m() <= 12);
            assert!(frame_report(&l).is_frame);
        }
    }
}
