//! Lenses, quasi-lenses and the maps between them on a small poset.

use soberlens::powerdomain::{check_embedding, iota, lenses, order_report, quasi_lenses, rho};
use soberlens::spaces::alexandroff_space;
use soberlens::Preorder;

fn main() -> soberlens::Result<()> {
    // The "V" poset: 0 below both 1 and 2.
    let p = Preorder::from_pairs(3, &[(0, 1), (0, 2)], false)?;
    let s = alexandroff_space(&p);

    println!("lenses:");
    for l in lenses(&s) {
        let ql = iota(&s, l)?;
        assert_eq!(rho(&s, ql)?, l);
        println!("  {l} -> {ql}");
    }
    println!("quasi-lenses: {}", quasi_lenses(&s).len());

    let e = check_embedding(&s)?;
    println!(
        "iota: injective {:?}, surjective {:?}, homeomorphism {:?}",
        e.iota_injective, e.iota_surjective, e.iota_homeomorphism
    );
    let o = order_report(&s)?;
    println!(
        "TEM = EM {:?}, TEM = Vietoris specialization {:?}, down-sets closed {:?}",
        o.tem_equals_em, o.tem_equals_vietoris_specialization, o.all_downsets_closed
    );
    Ok(())
}
