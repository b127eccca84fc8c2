//! Graphviz Hasse diagrams of the lens and quasi-lens orders.
//!
//! `cargo run --example hasse_dot | dot -Tsvg > lenses.svg`

use soberlens::dot::{lens_tem_dot, quasi_lens_dot};
use soberlens::spaces::alexandroff_space;
use soberlens::Preorder;

fn main() -> soberlens::Result<()> {
    let s = alexandroff_space(&Preorder::chain(3));
    print!("{}", lens_tem_dot(&s)?);
    eprint!("{}", quasi_lens_dot(&s)?);
    Ok(())
}
