//! Filters, temperance and the way-below relation on a few lattices.

use soberlens::frames::{
    filter_join, filters_of, frame_report, temperance_report, waybelow_and_stability, FilterKind,
};
use soberlens::FinLattice;

fn main() {
    for (name, l) in [
        ("Boolean 4", FinLattice::boolean(2)),
        ("4-chain", FinLattice::chain(4)),
        ("M3", FinLattice::m3()),
        ("N5", FinLattice::n5()),
    ] {
        let fr = frame_report(&l);
        let t = temperance_report(&l);
        let w = waybelow_and_stability(&l);
        println!(
            "{name}: frame {}, boolean {}, witness {:?}",
            fr.is_frame, fr.is_boolean, fr.witness
        );
        println!(
            "  locally temperate {}, temperate {}, stable {}, way-below = order {}",
            t.locally_temperate, t.temperate, w.stable, w.equals_order
        );
        let fs = filters_of(&l, FilterKind::All);
        let cp = filters_of(&l, FilterKind::CompletelyPrime);
        println!("  {} filters, {} completely prime", fs.len(), cp.len());
        if let [f, g, ..] = fs.as_slice() {
            match filter_join(&l, f, g) {
                Ok(j) => println!("  {} ∨ {} = {}", f.members, g.members, j.members),
                Err(e) => println!("  {} ∨ {}: {e}", f.members, g.members),
            }
        }
    }
}
