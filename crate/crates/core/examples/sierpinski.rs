//! Property reports for the smallest interesting spaces.
//!
//! Run with `cargo run --example sierpinski`.

use soberlens::spaces::{alexandroff_space, property_report, specialization_preorder};
use soberlens::{FinSpace, Preorder};

fn main() -> soberlens::Result<()> {
    let spaces = [
        ("sierpinski", FinSpace::sierpinski()),
        ("discrete(3)", FinSpace::discrete(3)),
        ("indiscrete(2)", FinSpace::indiscrete(2)),
        ("chain(3)", alexandroff_space(&Preorder::chain(3))),
    ];
    for (name, s) in &spaces {
        let p = property_report(s)?;
        println!(
            "{name}: opens {:?}",
            s.opens()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
        println!(
            "  t0={} t1={} sober={} weakly_hausdorff={} coherent={} locally_strongly_sober={}",
            p.t0, p.t1, p.sober, p.weakly_hausdorff, p.coherent, p.locally_strongly_sober
        );
        // Finite topologies are determined by their specialization preorder.
        assert_eq!(alexandroff_space(&specialization_preorder(s)), *s);
    }
    Ok(())
}
