//! Rough per-group cost of chief-series work, for sizing test corpora.

use std::time::Instant;

use sgraph_core::{
    chief_series, fundamental_local_definition, lf_membership, parse_group_expr, realize, Caps,
};

fn main() {
    let caps = Caps::default();
    let exprs = [
        "Sym(4)",
        "Alt(5)",
        "Sym(5)",
        "Alt(6)",
        "Sym(6)",
        "PSL2(8)",
        "PSL2(11)",
        "PSL2(13)",
        "Alt(5) x Cyc(7)",
        "Cyc(210)",
        "Sym(4) x Sym(3)",
        "Sym(5) x Cyc(2)",
        "PSL2(5) x Cyc(7)",
        "Alt(5) x Alt(4)",
        "Cyc(12) x Cyc(10)",
    ];
    for expr in exprs {
        let g = realize(&parse_group_expr(expr).unwrap()).unwrap();
        let t = Instant::now();
        let cs = chief_series(&g, &caps).unwrap();
        println!(
            "{expr}: order {}, {} factors, chief series {:?}",
            g.order(),
            cs.factors().len(),
            t.elapsed()
        );
        let f = fundamental_local_definition(&[2, 3, 5, 7], 2).unwrap();
        let t = Instant::now();
        let m = lf_membership(&f, &g, &caps).unwrap().member;
        println!("  lf_membership {m} in {:?}", t.elapsed());
    }
}
