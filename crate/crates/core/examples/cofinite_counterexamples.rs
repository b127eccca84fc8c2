//! ℕ with the cofinite topology: not sober, not weakly Hausdorff, and
//! lenses that do not exhaust the quasi-lenses.

use soberlens::symbolic::{
    cn_counterexample_suite, cn_em_leq, cn_image_of_iota, cn_iota, cn_quasi_lens, cn_tem_leq,
    cofinite_space_ops, CofinSet,
};

fn main() -> soberlens::Result<()> {
    let a = CofinSet::cofinite([0]);
    let ops = cofinite_space_ops(&a);
    println!(
        "{a}: open {}, closed {}, closure {}",
        ops.is_open, ops.is_closed, ops.closure
    );

    let (q, c) = cn_iota(&a)?;
    println!("ι({a}) = ({q}, {c})");

    for (q, c) in [
        (CofinSet::finite([0]), CofinSet::finite([0])),
        (CofinSet::finite([0]), CofinSet::nat()),
        (CofinSet::cofinite([0]), CofinSet::finite([1, 2])),
    ] {
        let v = cn_quasi_lens(&q, &c);
        println!(
            "({q}, {c}): quasi-lens {}, classification {}, in image of ι {}{}",
            v.is_quasi_lens,
            v.classification,
            cn_image_of_iota(&q, &c),
            v.reason.map(|r| format!(" [{r}]")).unwrap_or_default()
        );
    }

    let nat = CofinSet::nat();
    println!(
        "ℕ ⊑TEM {a}: {}, ℕ ⊑EM {a}: {}",
        cn_tem_leq(&nat, &a),
        cn_em_leq(&nat, &a)
    );

    let report = cn_counterexample_suite();
    for d in &report.details {
        println!("{d}");
    }
    assert!(report.all_confirmed());
    Ok(())
}
