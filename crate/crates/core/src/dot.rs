//! Graphviz output for Hasse diagrams.
//!
//! Nodes and edges are emitted in index order, so output depends only on
//! the input.

use std::fmt::Write;

use crate::error::Result;
use crate::powerdomain::{hyperspace, lenses, tem_preorder, HyperspaceKind};
use crate::spaces::{specialization_preorder, FinSpace, Preorder};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of `p`, drawn bottom to top. Points equivalent under `p`
/// share a node whose label lists all of them.
pub fn hasse_dot(name: &str, labels: &[String], p: &Preorder) -> String {
    let n = p.n();
    assert_eq!(labels.len(), n, "one label per point");
    // Representative of each class: its least index.
    let rep: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| p.leq(x, y) && p.leq(y, x)).unwrap())
        .collect();
    let classes: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
    let strictly_below = |x: usize, y: usize| p.leq(x, y) && !p.leq(y, x);

    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for &c in &classes {
        let label = (0..n)
            .filter(|&x| rep[x] == c)
            .map(|x| labels[x].as_str())
            .collect::<Vec<_>>()
            .join(" ≡ ");
        writeln!(out, "  n{c} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for &x in &classes {
        for &y in &classes {
            let covers = strictly_below(x, y)
                && !classes
                    .iter()
                    .any(|&z| strictly_below(x, z) && strictly_below(z, y));
            if covers {
                writeln!(out, "  n{x} -> n{y};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Lenses ordered by `⊑TEM`.
pub fn lens_tem_dot(space: &FinSpace) -> Result<String> {
    let ls = lenses(space);
    let p = tem_preorder(space, &ls)?;
    let labels: Vec<String> = ls.iter().map(ToString::to_string).collect();
    Ok(hasse_dot("lenses_tem", &labels, &p))
}

/// Quasi-lenses ordered by the specialization preorder of their Vietoris
/// topology.
pub fn quasi_lens_dot(space: &FinSpace) -> Result<String> {
    let h = hyperspace(space, HyperspaceKind::QuasiVietoris)?;
    let p = specialization_preorder(&h.space);
    let labels: Vec<String> = h.quasi_lenses.iter().map(ToString::to_string).collect();
    Ok(hasse_dot("quasi_lenses", &labels, &p))
}

/// The specialization order of a space.
pub fn space_dot(space: &FinSpace) -> String {
    let labels: Vec<String> = (0..space.n()).map(|x| x.to_string()).collect();
    hasse_dot("space", &labels, &specialization_preorder(space))
}
