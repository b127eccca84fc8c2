//! Library decision procedures against the definitional oracles in
//! `common`, exhaustively over small spaces and lattices.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use soberlens::frames::{
    filter_join, filters_of, frame_report, hofmann_mislove_report, lattice_of_opens, points_space,
    random_distributive_lattice, temperance_report, waybelow, waybelow_and_stability, FilterKind,
    HmConvention,
};
use soberlens::powerdomain::{em_leq, iota, lenses, quasi_lenses, rho, tem_leq, QuasiLens};
use soberlens::spaces::enumerate::{all_partial_orders, all_preorders, random_space};
use soberlens::spaces::{
    build_space, compact_saturated_sets, irreducible_closed_sets, is_compact, property_report,
    ultrafilter_limits_by_closures, ultrafilter_limits_by_definition,
    weakly_hausdorff_compact_pairs, weakly_hausdorff_pointwise, CompactnessMethod,
    PrincipalUltrafilter,
};
use soberlens::{FinLattice, FinSpace, Lens, PointSet};

fn small_spaces() -> Vec<FinSpace> {
    common::exhaustive_spaces(4)
}

fn family_sized(s: &FinSpace) -> bool {
    s.opens().len() <= common::FAMILY_ORACLE_OPENS
}

fn sample_lattices() -> Vec<(String, FinLattice)> {
    let mut out: Vec<(String, FinLattice)> = Vec::new();
    for k in 1..=6 {
        out.push((format!("chain{k}"), FinLattice::chain(k)));
    }
    for a in 0..=3 {
        out.push((format!("boolean{a}"), FinLattice::boolean(a)));
    }
    out.push(("m3".into(), FinLattice::m3()));
    out.push(("n5".into(), FinLattice::n5()));
    for (i, s) in common::exhaustive_spaces(3).iter().enumerate() {
        out.push((format!("opens{i}"), lattice_of_opens(s).unwrap().lattice));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..30 {
        out.push((
            format!("random{i}"),
            random_distributive_lattice(&mut rng, 12),
        ));
    }
    out
}

#[test]
fn topology_counts() {
    // Labelled topologies and labelled partial orders on 0..=4 points.
    let spaces: Vec<usize> = (0..=4).map(|n| all_preorders(n).len()).collect();
    assert_eq!(spaces, [1, 1, 4, 29, 355]);
    let posets: Vec<usize> = (0..=4).map(|n| all_partial_orders(n).len()).collect();
    assert_eq!(posets, [1, 1, 3, 19, 219]);
    for n in 0..=4 {
        let mut opens: Vec<Vec<PointSet>> = soberlens::spaces::enumerate::all_spaces(n)
            .iter()
            .map(|s| s.opens().to_vec())
            .collect();
        opens.sort();
        opens.dedup();
        assert_eq!(opens.len(), spaces[n]);
    }
}

#[test]
fn build_space_matches_literal_generation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..=7 {
        for _ in 0..40 {
            let s = random_space(&mut rng, n);
            // Re-generate from the space's own opens as a subbasis, and from
            // a random subbasis.
            let sub: Vec<PointSet> = s.opens().iter().copied().step_by(2).collect();
            let built = build_space(n, &sub).unwrap();
            assert_eq!(built.opens(), common::generate_topology(n, &sub).as_slice());
        }
    }
}

#[test]
fn closure_saturation_and_specialization() {
    for s in small_spaces() {
        for a in common::subsets(s.n()) {
            assert_eq!(s.closure(a), common::closure(&s, a));
            assert_eq!(s.upset(a), common::saturation(&s, a));
            assert_eq!(s.downset(a), common::downset(&s, a));
        }
        for x in 0..s.n() {
            for y in 0..s.n() {
                assert_eq!(s.leq(x, y), common::spec_leq(&s, x, y));
            }
        }
    }
}

#[test]
fn weak_hausdorffness() {
    for s in small_spaces() {
        let want = common::weakly_hausdorff(&s);
        assert_eq!(weakly_hausdorff_pointwise(&s), want, "{:?}", s.opens());
        assert_eq!(weakly_hausdorff_compact_pairs(&s), want, "{:?}", s.opens());
        assert_eq!(property_report(&s).unwrap().weakly_hausdorff, want);
    }
}

#[test]
fn irreducible_closed_sets_and_sobriety() {
    for s in small_spaces() {
        let got: Vec<PointSet> = irreducible_closed_sets(&s).iter().map(|c| c.set).collect();
        let mut want: Vec<PointSet> = common::closed_sets(&s)
            .into_iter()
            .filter(|&c| common::is_irreducible(&s, c))
            .collect();
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
        let p = property_report(&s).unwrap();
        assert_eq!(p.sober, common::sober(&s));
        assert_eq!(p.t0, common::is_t0(&s));
    }
}

#[test]
fn compactness_and_coherence() {
    for s in small_spaces().iter().filter(|s| family_sized(s)) {
        let dir = common::directed_open_families(s);
        for a in common::subsets(s.n()) {
            let want = common::compact_in(&dir, a);
            assert_eq!(
                is_compact(s, a, CompactnessMethod::OpenCover).unwrap(),
                want
            );
            assert_eq!(
                is_compact(s, a, CompactnessMethod::FilteredClosed).unwrap(),
                want
            );
        }
        assert_eq!(compact_saturated_sets(s), common::compact_saturated(s));
        let p = property_report(s).unwrap();
        assert_eq!(p.coherent, common::coherent(s));
        assert_eq!(p.weakly_coherent, common::weakly_coherent(s));
        assert_eq!(p.monotone_convergence, common::monotone_convergence(s));
        assert_eq!(p.compact, common::compact_in(&dir, s.full()));
    }
}

#[test]
fn ultrafilter_limits_and_local_strong_sobriety() {
    for s in small_spaces() {
        for x in 0..s.n() {
            let u = PrincipalUltrafilter { base_point: x };
            let want = common::ultrafilter_limits(&s, x);
            assert_eq!(ultrafilter_limits_by_definition(&s, u).unwrap(), want);
            assert_eq!(ultrafilter_limits_by_closures(&s, u).unwrap(), want);
        }
        assert_eq!(
            property_report(&s).unwrap().locally_strongly_sober,
            common::locally_strongly_sober(&s)
        );
    }
}

#[test]
fn hofmann_mislove_against_oracle() {
    for s in small_spaces().iter().filter(|s| family_sized(s)) {
        for (conv, include) in [
            (HmConvention::IncludeEmpty, true),
            (HmConvention::ExcludeEmpty, false),
        ] {
            let want = common::hofmann_mislove(s, include).unwrap();
            let r = hofmann_mislove_report(s, conv).unwrap();
            assert_eq!(r.hm_pairs, Some(want), "{:?}", s.opens());
            assert_eq!(r.hm_bijection, Some(true));
            assert_eq!(r.hm_order_reversing, Some(true));
        }
    }
}

#[test]
fn waybelow_against_directed_families() {
    for (name, l) in sample_lattices() {
        let directed = common::directed_subsets(&l);
        for u in 0..l.m() {
            for v in 0..l.m() {
                assert_eq!(
                    waybelow(&l, u, v),
                    common::waybelow(&l, &directed, u, v),
                    "{name}: {u} ≪ {v}"
                );
            }
        }
        assert_eq!(
            waybelow_and_stability(&l).stable,
            common::stable(&l),
            "{name}"
        );
    }
}

#[test]
fn filters_against_oracle() {
    for (name, l) in sample_lattices() {
        let directed = common::directed_subsets(&l);
        let all = common::filters(&l);
        let got = |k| -> Vec<PointSet> { filters_of(&l, k).iter().map(|f| f.members).collect() };
        assert_eq!(got(FilterKind::All), all, "{name}");
        let so: Vec<PointSet> = all
            .iter()
            .copied()
            .filter(|&f| common::scott_open(&l, &directed, f))
            .collect();
        assert_eq!(got(FilterKind::ScottOpen), so, "{name}");
        let cp: Vec<PointSet> = all
            .iter()
            .copied()
            .filter(|&f| common::completely_prime(&l, f))
            .collect();
        assert_eq!(got(FilterKind::CompletelyPrime), cp, "{name}");
    }
}

#[test]
fn filter_joins_are_least_upper_bounds() {
    for (name, l) in sample_lattices() {
        let fs = filters_of(&l, FilterKind::All);
        let all = common::filters(&l);
        for f in &fs {
            for g in &fs {
                let want = common::filter_join(&l, f.members, g.members);
                match filter_join(&l, f, g) {
                    Ok(j) => {
                        assert_eq!(j.members, want, "{name}");
                        // Least among filters containing both.
                        let lub = all
                            .iter()
                            .filter(|h| f.members.is_subset(**h) && g.members.is_subset(**h))
                            .fold(common::elements(&l), |acc, &h| acc & h);
                        if frame_report(&l).is_frame {
                            assert_eq!(j.members, lub, "{name}");
                        }
                    }
                    Err(_) => assert!(!common::is_filter(&l, want), "{name}"),
                }
            }
        }
    }
}

#[test]
fn temperance_and_distributivity() {
    for (name, l) in sample_lattices() {
        let t = temperance_report(&l);
        assert_eq!(t.locally_temperate, common::locally_temperate(&l), "{name}");
        assert_eq!(t.temperate, common::temperate(&l), "{name}");
        assert_eq!(
            frame_report(&l).is_frame,
            common::distributive(&l),
            "{name}"
        );
    }
}

#[test]
fn points_of_opens_lattices() {
    for s in common::exhaustive_spaces(3) {
        let ol = lattice_of_opens(&s).unwrap();
        let pt = points_space(&ol.lattice).unwrap();
        // One completely prime filter per distinct point closure.
        let mut closures: Vec<PointSet> = (0..s.n())
            .map(|x| common::closure(&s, PointSet::singleton(x)))
            .collect();
        closures.sort();
        closures.dedup();
        assert_eq!(pt.space.n(), closures.len());
        for f in &pt.points {
            assert!(common::completely_prime(&ol.lattice, *f));
        }
    }
}

#[test]
fn lenses_and_quasi_lenses() {
    for s in small_spaces() {
        let ls: Vec<PointSet> = lenses(&s).iter().map(|l| l.0).collect();
        assert_eq!(ls, common::lenses(&s));
        let qs: Vec<(PointSet, PointSet)> = quasi_lenses(&s).iter().map(|q| (q.q, q.c)).collect();
        assert_eq!(qs, common::quasi_lenses(&s));
        for &l in &ls {
            let ql = iota(&s, Lens(l)).unwrap();
            assert_eq!(
                (ql.q, ql.c),
                (common::saturation(&s, l), common::closure(&s, l))
            );
            assert_eq!(rho(&s, ql).unwrap(), Lens(l));
            for &m in &ls {
                let want = common::tem_leq(&s, l, m);
                assert_eq!(tem_leq(&s, Lens(l), Lens(m)), want);
                assert_eq!(em_leq(&s, Lens(l), Lens(m)), common::em_leq(&s, l, m));
                assert_eq!(common::vietoris_leq(&s, l, m), want);
            }
        }
        for &(q, c) in &qs {
            let l = rho(&s, QuasiLens { q, c }).unwrap();
            assert_eq!(iota(&s, l).unwrap(), QuasiLens { q, c });
        }
    }
}

#[test]
fn sierpinski_quasi_lenses() {
    let s = FinSpace::sierpinski();
    let qs: Vec<(PointSet, PointSet)> = common::quasi_lenses(&s);
    let lib: Vec<(PointSet, PointSet)> = quasi_lenses(&s).iter().map(|q| (q.q, q.c)).collect();
    assert_eq!(lib, qs);
    assert_eq!(
        qs,
        vec![
            (PointSet::from([1]), PointSet::from([0, 1])),
            (PointSet::from([0, 1]), PointSet::from([0])),
            (PointSet::from([0, 1]), PointSet::from([0, 1])),
        ]
    );
}
