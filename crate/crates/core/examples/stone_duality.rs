//! Points of finite frames and the unit `X → pt(O X)`.

use soberlens::frames::{points_space, stone_round_trip};
use soberlens::{FinLattice, FinSpace};

fn main() -> soberlens::Result<()> {
    for (name, l) in [
        ("3-chain", FinLattice::chain(3)),
        ("Boolean 4", FinLattice::boolean(2)),
        ("Boolean 8", FinLattice::boolean(3)),
    ] {
        let pt = points_space(&l)?;
        let points: Vec<String> = pt.points.iter().map(ToString::to_string).collect();
        println!("pt({name}): {} points {points:?}", pt.space.n());
        println!(
            "  opens {:?}",
            pt.space
                .opens()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
    }
    assert_eq!(
        points_space(&FinLattice::chain(3))?.space,
        FinSpace::sierpinski()
    );

    for (name, s) in [
        ("sierpinski", FinSpace::sierpinski()),
        ("indiscrete(2)", FinSpace::indiscrete(2)),
    ] {
        let r = stone_round_trip(&s)?;
        println!(
            "{name}: unit homeomorphism {:?}, injective {:?}, spatial {:?}",
            r.unit_homeomorphism, r.unit_injective, r.spatial
        );
        for w in &r.witnesses {
            println!("  {w}");
        }
    }
    Ok(())
}
