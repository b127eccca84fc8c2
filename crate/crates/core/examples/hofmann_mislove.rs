//! Scott-open filters of `O X` against compact saturated subsets of `X`.

use soberlens::frames::{
    filters_of, hofmann_mislove_report, lattice_of_opens, FilterKind, HmConvention,
};
use soberlens::spaces::compact_saturated_sets;
use soberlens::FinSpace;

fn main() -> soberlens::Result<()> {
    let s = FinSpace::sierpinski();
    let ol = lattice_of_opens(&s)?;
    for f in filters_of(&ol.lattice, FilterKind::ScottOpen) {
        let opens: Vec<String> = f.members.iter().map(|i| ol.opens[i].to_string()).collect();
        let meet = f.members.iter().fold(s.full(), |acc, i| acc & ol.opens[i]);
        println!("filter {opens:?} -> ⋂ = {meet}");
    }
    let compacts: Vec<String> = compact_saturated_sets(&s)
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("compact saturated: {compacts:?}");

    for n in 1..=3 {
        let s = FinSpace::discrete(n);
        for convention in [HmConvention::IncludeEmpty, HmConvention::ExcludeEmpty] {
            let r = hofmann_mislove_report(&s, convention)?;
            println!(
                "discrete({n}) {convention:?}: {} pairs, bijection {:?}, order-reversing {:?}",
                r.hm_pairs.unwrap_or(0),
                r.hm_bijection,
                r.hm_order_reversing
            );
        }
    }
    Ok(())
}
