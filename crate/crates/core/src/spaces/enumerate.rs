//! Exhaustive and seeded-random generation of finite spaces.
//!
//! Exhaustive sweeps go through preorders and the Alexandroff
//! construction, which is a bijection onto topologies on a finite carrier.

use rand::seq::SliceRandom;
use rand::Rng;

use super::bits::PointSet;
use super::space::{alexandroff_space, build_space, FinSpace, Preorder};

/// Every preorder on `n` labelled points, in a fixed order.
///
/// Enumerates the `2^(n(n-1))` reflexive relations and keeps the
/// transitive ones, so this is meant for `n <= 5`.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    assert!(
        n <= 5,
        "exhaustive preorder enumeration is capped at 5 points"
    );
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off_diag.len()) {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (i, &(x, y)) in off_diag.iter().enumerate() {
            if mask >> i & 1 == 1 {
                up[x].insert(y);
            }
        }
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if transitive {
            out.push(Preorder::from_upsets(up).expect("checked transitive"));
        }
    }
    out
}

pub fn all_partial_orders(n: usize) -> Vec<Preorder> {
    all_preorders(n)
        .into_iter()
        .filter(Preorder::is_antisymmetric)
        .collect()
}

/// Every topology on `n` points via its specialization preorder.
pub fn all_spaces(n: usize) -> Vec<FinSpace> {
    all_preorders(n).iter().map(alexandroff_space).collect()
}

/// A random topology generated by a random subbasis.
///
/// Each subbasic set includes each point with probability `density`; the
/// subbasis size is drawn from `0..=n+2`. Produces T0 and non-T0 spaces.
pub fn random_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> FinSpace {
    let density: f64 = rng.gen_range(0.2..0.8);
    let k = rng.gen_range(0..=n + 2);
    let subbasis: Vec<PointSet> = (0..k)
        .map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    build_space(n, &subbasis).expect("in range by construction")
}

/// A random partial order: a random DAG on a shuffled labelling, closed
/// transitively.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Preorder {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    Preorder::from_pairs(n, &pairs, true).expect("in range by construction")
}

/// A random T0 space (Alexandroff topology of a random partial order).
pub fn random_t0_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> FinSpace {
    alexandroff_space(&random_poset(rng, n))
}
