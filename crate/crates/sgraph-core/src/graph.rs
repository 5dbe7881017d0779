//! Per-prime Sylow data, the prime graphs Γ(G) and Δ(G), connectivity, and
//! the per-prime divisibility hypothesis test.
//!
//! For each prime `p` dividing `|G|`, the engine computes the Sylow
//! subgroup `G_p`, its normalizer `N` and centralizer `C` in `G`, and the
//! center `Z(G_p)`; from these come `nc_index = |N:C|` and the automiser
//! order `|N|·|Z|/(|G_p|·|C|)` (the order of `N/(G_p·C)`, using
//! `G_p ∩ C = Z(G_p)`). Γ has a directed edge `p → q` when `q` divides the
//! automiser order at `p`; Δ joins `p` and `q` when either prime divides
//! the other's `nc_index`, with a loop at `p` when `p` divides its own.

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::prime_divisors;
use crate::subgroup::{center, centralizer, normalizer, sylow};

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The Sylow-local quantities at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowData {
    pub p: u64,
    pub sylow_order: u128,
    pub normalizer_order: u128,
    pub centralizer_order: u128,
    pub center_of_sylow_order: u128,
    /// `|N_G(G_p) : C_G(G_p)|`.
    pub nc_index: u128,
    /// `|N_G(G_p) / (G_p·C_G(G_p))|`.
    pub automiser_order: u128,
}

/// Compute the Sylow data at `p`, verifying the arithmetic identities that
/// tie the five subgroup orders together.
pub fn sylow_data(g: &PermGroup, p: u64, cap: u128) -> Result<SylowData> {
    let syl = sylow(g, p, cap)?;
    let n = normalizer(g, &syl, cap)?;
    let c = centralizer(g, &syl, cap)?;
    let z = center(syl.group(), cap)?;

    let (sylow_order, normalizer_order, centralizer_order, center_of_sylow_order) =
        (syl.order(), n.order(), c.order(), z.order());
    assert_eq!(
        normalizer_order % centralizer_order,
        0,
        "C_G(G_p) is a subgroup of N_G(G_p)"
    );
    let nc_index = normalizer_order / centralizer_order;
    let numerator = normalizer_order * center_of_sylow_order;
    let denominator = sylow_order * centralizer_order;
    assert_eq!(
        numerator % denominator,
        0,
        "|G_p·C| = |G_p|·|C|/|Z(G_p)| divides |N|"
    );
    let automiser_order = numerator / denominator;
    assert_eq!(
        gcd(automiser_order, p as u128),
        1,
        "the automiser at {p} is a {p}'-group"
    );
    assert_eq!(
        nc_index,
        automiser_order * (sylow_order / center_of_sylow_order),
        "|N:C| factors through the automiser"
    );
    Ok(SylowData {
        p,
        sylow_order,
        normalizer_order,
        centralizer_order,
        center_of_sylow_order,
        nc_index,
        automiser_order,
    })
}

/// Which edge family of a [`SylowGraph`] to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVariant {
    Gamma,
    Delta,
}

/// Union-find over vertex indices.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Both prime graphs of a group: vertices π(G), Γ's directed edges, Δ's
/// undirected edges (loops included), the per-prime [`SylowData`], and the
/// component decomposition of each variant.
#[derive(Debug, Clone)]
pub struct SylowGraph {
    order: u128,
    vertices: Vec<u64>,
    data: Vec<SylowData>,
    gamma_edges: Vec<(u64, u64)>,
    delta_edges: Vec<(u64, u64)>,
    gamma_components: Vec<Vec<u64>>,
    delta_components: Vec<Vec<u64>>,
}

/// Build the Sylow graph of `G`: Γ and Δ are two edge families over the
/// same vertices and Sylow data.
pub fn gamma_graph(g: &PermGroup, cap: u128) -> Result<SylowGraph> {
    let vertices = g.pi();
    let data: Vec<SylowData> = vertices
        .iter()
        .map(|&p| sylow_data(g, p, cap))
        .collect::<Result<_>>()?;

    let mut gamma_edges = Vec::new();
    for d in &data {
        for q in prime_divisors(d.automiser_order) {
            debug_assert_ne!(q, d.p, "automiser order is coprime to p");
            gamma_edges.push((d.p, q));
        }
    }
    gamma_edges.sort_unstable();

    let nc_of = |p: u64| -> u128 {
        data.iter()
            .find(|d| d.p == p)
            .expect("vertex has data")
            .nc_index
    };
    let mut delta_edges = Vec::new();
    for (i, &p) in vertices.iter().enumerate() {
        if nc_of(p) % p as u128 == 0 {
            delta_edges.push((p, p));
        }
        for &q in &vertices[i + 1..] {
            if nc_of(q) % p as u128 == 0 || nc_of(p) % q as u128 == 0 {
                delta_edges.push((p, q));
            }
        }
    }
    delta_edges.sort_unstable();

    let components = |edges: &[(u64, u64)]| -> Vec<Vec<u64>> {
        let idx = |p: u64| {
            vertices
                .binary_search(&p)
                .expect("edge endpoint is a vertex")
        };
        let mut dsu = Dsu::new(vertices.len());
        for &(p, q) in edges {
            if p != q {
                dsu.union(idx(p), idx(q));
            }
        }
        let mut comps: Vec<Vec<u64>> = Vec::new();
        let mut root_slot = vec![usize::MAX; vertices.len()];
        for (i, &p) in vertices.iter().enumerate() {
            let r = dsu.find(i);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_slot[r]].push(p);
        }
        comps
    };
    let gamma_components = components(&gamma_edges);
    let delta_components = components(&delta_edges);

    Ok(SylowGraph {
        order: g.order(),
        vertices,
        data,
        gamma_edges,
        delta_edges,
        gamma_components,
        delta_components,
    })
}

impl SylowGraph {
    /// Order of the group the graph was built from.
    pub fn group_order(&self) -> u128 {
        self.order
    }

    /// π(G), ascending.
    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    /// Per-prime data, parallel to [`SylowGraph::vertices`].
    pub fn data(&self) -> &[SylowData] {
        &self.data
    }

    pub fn data_at(&self, p: u64) -> Option<&SylowData> {
        self.data.iter().find(|d| d.p == p)
    }

    /// Γ's directed edges `(p, q)`, sorted.
    pub fn gamma_edges(&self) -> &[(u64, u64)] {
        &self.gamma_edges
    }

    /// Δ's undirected edges as sorted pairs `(p, q)` with `p ≤ q`; loops
    /// appear as `(p, p)`.
    pub fn delta_edges(&self) -> &[(u64, u64)] {
        &self.delta_edges
    }

    /// The primes carrying a Δ-loop (`p` divides its own `nc_index`).
    pub fn delta_loops(&self) -> Vec<u64> {
        self.delta_edges
            .iter()
            .filter(|(p, q)| p == q)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Connected components of a variant, each ascending, ordered by their
    /// smallest member; loops never join anything.
    pub fn components(&self, variant: GraphVariant) -> &[Vec<u64>] {
        match variant {
            GraphVariant::Gamma => &self.gamma_components,
            GraphVariant::Delta => &self.delta_components,
        }
    }

    /// Whether a variant is connected, reading Γ's directed edges as
    /// undirected; the empty and singleton vertex sets count as connected.
    pub fn is_connected(&self, variant: GraphVariant) -> bool {
        self.components(variant).len() <= 1
    }
}

/// One row of a hypothesis report: the divisibility test at a single prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisRow {
    pub p: u64,
    pub nc_index: u128,
    /// Prime factors of `nc_index` (empty for an index of 1).
    pub factors: Vec<u64>,
    /// True iff some prime factor of `nc_index` is strictly below `p`.
    pub satisfied: bool,
    /// False only for the smallest prime when that prime is 2, which the
    /// overall verdict skips.
    pub considered: bool,
}

/// Per-prime hypothesis rows plus the overall verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub rows: Vec<HypothesisRow>,
    pub overall: bool,
}

impl HypothesisReport {
    /// Primes counted by the verdict whose test failed.
    pub fn failing_primes(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| r.considered && !r.satisfied)
            .map(|r| r.p)
            .collect()
    }
}

/// For each `p ∈ π(G)` ascending, test whether some prime strictly below
/// `p` divides `|N_G(G_p):C_G(G_p)|`. The overall verdict skips the first
/// prime when it is 2 (nothing can divide below 2) and otherwise requires
/// every row to pass; the trivial group passes vacuously.
pub fn hypothesis_check(g: &PermGroup, cap: u128) -> Result<HypothesisReport> {
    let mut rows = Vec::new();
    for (i, p) in g.pi().into_iter().enumerate() {
        let nc_index = sylow_data(g, p, cap)?.nc_index;
        let factors = prime_divisors(nc_index);
        let satisfied = factors.iter().any(|&f| f < p);
        let considered = !(i == 0 && p == 2);
        rows.push(HypothesisRow {
            p,
            nc_index,
            factors,
            satisfied,
            considered,
        });
    }
    let overall = rows.iter().filter(|r| r.considered).all(|r| r.satisfied);
    Ok(HypothesisReport { rows, overall })
}

/// Render a graph variant as DOT: a `digraph` with `p -> q` lines for Γ, an
/// undirected `graph` with `p -- q` lines (loops as self-edges) for Δ.
/// Every vertex gets its own line, so isolated primes stay visible.
pub fn export_dot(graph: &SylowGraph, variant: GraphVariant) -> String {
    let mut out = String::new();
    match variant {
        GraphVariant::Gamma => {
            out.push_str("digraph gamma {\n");
            for p in graph.vertices() {
                out.push_str(&format!("  {p};\n"));
            }
            for (p, q) in graph.gamma_edges() {
                out.push_str(&format!("  {p} -> {q};\n"));
            }
        }
        GraphVariant::Delta => {
            out.push_str("graph delta {\n");
            for p in graph.vertices() {
                out.push_str(&format!("  {p};\n"));
            }
            for (p, q) in graph.delta_edges() {
                out.push_str(&format!("  {p} -- {q};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Render the whole graph as JSON with a fixed key order and two-space
/// indentation; prime-keyed maps ascend numerically, edge lists are sorted.
/// The output is byte-identical across runs.
pub fn export_json(graph: &SylowGraph) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"order\": {},\n", graph.group_order()));

    let int_list = |items: &[u64]| -> String {
        let body: Vec<String> = items.iter().map(u64::to_string).collect();
        format!("[{}]", body.join(", "))
    };
    out.push_str(&format!("  \"pi\": {},\n", int_list(graph.vertices())));

    let pairs: Vec<String> = graph
        .gamma_edges()
        .iter()
        .map(|(p, q)| format!("[{p}, {q}]"))
        .collect();
    out.push_str(&format!("  \"gamma_edges\": [{}],\n", pairs.join(", ")));
    out.push_str(&format!(
        "  \"delta_loops\": {},\n",
        int_list(&graph.delta_loops())
    ));

    let prime_map = |value: &dyn Fn(&SylowData) -> u128| -> String {
        if graph.data().is_empty() {
            return "{}".to_string();
        }
        let body: Vec<String> = graph
            .data()
            .iter()
            .map(|d| format!("    \"{}\": {}", d.p, value(d)))
            .collect();
        format!("{{\n{}\n  }}", body.join(",\n"))
    };
    out.push_str(&format!(
        "  \"nc_indices\": {},\n",
        prime_map(&|d| d.nc_index)
    ));
    out.push_str(&format!(
        "  \"automiser_orders\": {},\n",
        prime_map(&|d| d.automiser_order)
    ));
    out.push_str(&format!(
        "  \"connected\": {{\n    \"gamma\": {},\n    \"delta\": {}\n  }}\n",
        graph.is_connected(GraphVariant::Gamma),
        graph.is_connected(GraphVariant::Delta)
    ));
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, mathieu, symmetric};
    use crate::error::Error;
    use crate::group::DEFAULT_EXHAUSTIVE_CAP as CAP;

    #[test]
    fn sylow_data_small_groups() {
        let d = sylow_data(&symmetric(3).unwrap(), 3, CAP).unwrap();
        assert_eq!(d.nc_index, 2);
        assert_eq!(d.automiser_order, 2);
        assert_eq!(
            (d.sylow_order, d.normalizer_order, d.centralizer_order),
            (3, 6, 3)
        );

        let d = sylow_data(&alternating(5).unwrap(), 5, CAP).unwrap();
        assert_eq!(d.nc_index, 2);
        assert_eq!(d.automiser_order, 2);
        assert_eq!(d.normalizer_order, 10);

        assert!(matches!(
            sylow_data(&symmetric(3).unwrap(), 5, CAP),
            Err(Error::PrimeDoesNotDivide { .. })
        ));
    }

    #[test]
    fn cyclic_6_graph_is_edgeless_and_disconnected() {
        let g = gamma_graph(&cyclic(6).unwrap(), CAP).unwrap();
        assert_eq!(g.vertices(), &[2, 3]);
        assert!(g.gamma_edges().is_empty());
        assert!(g.delta_edges().is_empty());
        assert_eq!(g.components(GraphVariant::Gamma), &[vec![2], vec![3]]);
        assert!(!g.is_connected(GraphVariant::Gamma));
        assert!(!g.is_connected(GraphVariant::Delta));
    }

    #[test]
    fn sym_3_graph_has_one_edge() {
        let g = gamma_graph(&symmetric(3).unwrap(), CAP).unwrap();
        assert_eq!(g.gamma_edges(), &[(3, 2)]);
        assert_eq!(g.delta_edges(), &[(2, 3)]);
        assert!(g.is_connected(GraphVariant::Gamma));
        let dot = export_dot(&g, GraphVariant::Gamma);
        assert!(dot.contains("3 -> 2;"), "dot output:\n{dot}");
        assert!(dot.starts_with("digraph gamma {"));
        let dot_delta = export_dot(&g, GraphVariant::Delta);
        assert!(dot_delta.contains("2 -- 3;"));
        assert!(dot_delta.starts_with("graph delta {"));
    }

    #[test]
    fn trivial_and_prime_power_graphs_are_connected() {
        let trivial = gamma_graph(&PermGroup::trivial(3), CAP).unwrap();
        assert!(trivial.vertices().is_empty());
        assert!(trivial.is_connected(GraphVariant::Gamma));
        assert!(trivial.is_connected(GraphVariant::Delta));

        let c8 = gamma_graph(&cyclic(8).unwrap(), CAP).unwrap();
        assert_eq!(c8.vertices(), &[2]);
        assert!(c8.is_connected(GraphVariant::Gamma));
    }

    #[test]
    fn mathieu_11_graph_matches_computed_table() {
        let g = gamma_graph(&mathieu(11).unwrap(), CAP).unwrap();
        let nc: Vec<u128> = g.data().iter().map(|d| d.nc_index).collect();
        assert_eq!(g.vertices(), &[2, 3, 5, 11]);
        assert_eq!(nc, vec![8, 16, 4, 5]);
        let autos: Vec<u128> = g.data().iter().map(|d| d.automiser_order).collect();
        assert_eq!(autos, vec![1, 16, 4, 5]);
        assert_eq!(g.gamma_edges(), &[(3, 2), (5, 2), (11, 5)]);
        assert_eq!(g.delta_edges(), &[(2, 2), (2, 3), (2, 5), (5, 11)]);
        assert_eq!(g.delta_loops(), vec![2]);
        assert!(g.is_connected(GraphVariant::Gamma));
        assert!(g.is_connected(GraphVariant::Delta));
    }

    #[test]
    fn undirected_gamma_equals_delta_without_loops() {
        for g in [
            symmetric(4).unwrap(),
            alternating(5).unwrap(),
            cyclic(12).unwrap(),
            mathieu(11).unwrap(),
        ] {
            let graph = gamma_graph(&g, CAP).unwrap();
            let mut undirected: Vec<(u64, u64)> = graph
                .gamma_edges()
                .iter()
                .map(|&(p, q)| if p <= q { (p, q) } else { (q, p) })
                .collect();
            undirected.sort_unstable();
            undirected.dedup();
            let plain: Vec<(u64, u64)> = graph
                .delta_edges()
                .iter()
                .copied()
                .filter(|(p, q)| p != q)
                .collect();
            assert_eq!(undirected, plain, "group of order {}", g.order());
            assert_eq!(
                graph.is_connected(GraphVariant::Gamma),
                graph.is_connected(GraphVariant::Delta)
            );
        }
    }

    #[test]
    fn hypothesis_results() {
        assert!(
            hypothesis_check(&alternating(5).unwrap(), CAP)
                .unwrap()
                .overall
        );
        assert!(
            hypothesis_check(&symmetric(3).unwrap(), CAP)
                .unwrap()
                .overall
        );
        assert!(
            hypothesis_check(&PermGroup::trivial(2), CAP)
                .unwrap()
                .overall
        );
        // π = {2}: the single row is skipped.
        assert!(hypothesis_check(&cyclic(8).unwrap(), CAP).unwrap().overall);

        let c15 = hypothesis_check(&cyclic(15).unwrap(), CAP).unwrap();
        assert!(!c15.overall);
        assert_eq!(c15.failing_primes(), vec![3, 5]);
        assert!(c15.rows.iter().all(|r| r.considered));

        let c6 = hypothesis_check(&cyclic(6).unwrap(), CAP).unwrap();
        assert!(!c6.overall);
        assert_eq!(c6.failing_primes(), vec![3]);
        assert!(!c6.rows[0].considered, "first row for p = 2 is skipped");
    }

    #[test]
    fn json_export_shape() {
        let g = gamma_graph(&symmetric(3).unwrap(), CAP).unwrap();
        let json = export_json(&g);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["order"], 6);
        assert_eq!(parsed["pi"][1], 3);
        assert_eq!(parsed["gamma_edges"][0][0], 3);
        assert_eq!(parsed["nc_indices"]["3"], 2);
        assert_eq!(parsed["connected"]["gamma"], true);
        // Fixed key order.
        let positions: Vec<usize> = [
            "\"order\"",
            "\"pi\"",
            "\"gamma_edges\"",
            "\"delta_loops\"",
            "\"nc_indices\"",
            "\"automiser_orders\"",
            "\"connected\"",
        ]
        .iter()
        .map(|k| json.find(k).unwrap())
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));

        let empty = export_json(&gamma_graph(&PermGroup::trivial(1), CAP).unwrap());
        let parsed: serde_json::Value = serde_json::from_str(&empty).unwrap();
        assert_eq!(parsed["pi"].as_array().unwrap().len(), 0);
        assert_eq!(parsed["nc_indices"].as_object().unwrap().len(), 0);
    }
}
