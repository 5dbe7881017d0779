//! Shared corpus of test groups for the integration suites: a broad list
//! of expressions spanning every constructor family, plus helpers to
//! realize them.

// Each integration-test binary compiles this module independently and
// uses a different subset of it.
#![allow(dead_code)]

use sgraph_core::{parse_group_expr, realize, PermGroup};

/// The full graph-invariant corpus (> 40 groups; every family).
pub const CORPUS: &[&str] = &[
    // cyclic
    "Cyc(1)",
    "Cyc(2)",
    "Cyc(3)",
    "Cyc(4)",
    "Cyc(6)",
    "Cyc(8)",
    "Cyc(12)",
    "Cyc(15)",
    "Cyc(16)",
    "Cyc(30)",
    "Cyc(36)",
    "Cyc(60)",
    "Cyc(210)",
    // dihedral
    "Dih(3)",
    "Dih(4)",
    "Dih(5)",
    "Dih(6)",
    "Dih(9)",
    "Dih(10)",
    "Dih(12)",
    "Dih(15)",
    // symmetric / alternating
    "Sym(3)",
    "Sym(4)",
    "Sym(5)",
    "Sym(6)",
    "Alt(3)",
    "Alt(4)",
    "Alt(5)",
    "Alt(6)",
    // projective
    "PSL2(4)",
    "PSL2(5)",
    "PSL2(7)",
    "PSL2(8)",
    "PSL2(9)",
    "PSL2(11)",
    "PSL2(13)",
    "PSL2(9):1",
    "PSL2(27)",
    "PSL2(27):1",
    // direct products
    "Cyc(2) x Cyc(3)",
    "Sym(3) x Cyc(5)",
    "Alt(4) x Cyc(5)",
    "Dih(4) x Cyc(3)",
    "Alt(5) x Cyc(7)",
    "Sym(4) x Sym(3)",
    "Cyc(12) x Cyc(10)",
    "Sym(5) x Cyc(2)",
    "PSL2(5) x Cyc(7)",
    "Dih(6) x Dih(4)",
    "Alt(5) x Alt(4)",
    "Cyc(4) x Cyc(25)",
    // sporadic
    "M11",
    "M12",
];

/// The formation-calculus corpus: all orders ≤ 2000, drawn from the
/// cyclic, dihedral, symmetric/alternating (n ≤ 6), PSL₂ (q ≤ 8), and
/// direct-product families. Chief-series work walks regular coset actions
/// whose cost grows with the largest simple chunk, so the heavyweight
/// corpus members above stay out of this list.
pub const FORMATION_CORPUS: &[&str] = &[
    "Cyc(1)",
    "Cyc(2)",
    "Cyc(3)",
    "Cyc(4)",
    "Cyc(6)",
    "Cyc(8)",
    "Cyc(12)",
    "Cyc(15)",
    "Cyc(16)",
    "Cyc(30)",
    "Cyc(60)",
    "Cyc(210)",
    "Dih(3)",
    "Dih(4)",
    "Dih(5)",
    "Dih(6)",
    "Dih(9)",
    "Dih(10)",
    "Dih(12)",
    "Dih(15)",
    "Sym(3)",
    "Sym(4)",
    "Sym(5)",
    "Sym(6)",
    "Alt(3)",
    "Alt(4)",
    "Alt(5)",
    "Alt(6)",
    "PSL2(4)",
    "PSL2(5)",
    "PSL2(7)",
    "PSL2(8)",
    "Cyc(2) x Cyc(3)",
    "Sym(3) x Cyc(5)",
    "Alt(4) x Cyc(5)",
    "Dih(4) x Cyc(3)",
    "Sym(4) x Sym(3)",
    "Cyc(12) x Cyc(10)",
    "Sym(5) x Cyc(2)",
    "Alt(5) x Cyc(7)",
];

/// Realize one corpus expression, panicking with its name on failure.
pub fn build(expr: &str) -> PermGroup {
    realize(&parse_group_expr(expr).unwrap_or_else(|e| panic!("{expr}: {e}")))
        .unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// Build the whole formation corpus.
pub fn formation_corpus() -> Vec<(&'static str, PermGroup)> {
    FORMATION_CORPUS
        .iter()
        .map(|expr| (*expr, build(expr)))
        .collect()
}
