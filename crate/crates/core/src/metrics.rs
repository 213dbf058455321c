//! Score, leaf and cyclic-face quantities of a realizer, and the identities
//! and inequalities relating them.

use serde::Serialize;

use crate::plane_graph::{NodeId, PlaneTriangulation};
use crate::realizer::{canonical_orderings, Realizer};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeMetrics {
    pub v: NodeId,
    pub deg: u32,
    /// Neighbors with a smaller label, per ordering.
    pub deg_minus: [u32; 3],
    /// Neighbors with a larger label, per ordering.
    pub deg_plus: [u32; 3],
    /// `min(deg_plus, deg_minus)` per ordering.
    pub f: [u32; 3],
    pub f_total: u32,
    /// Number of trees in which the node is not a leaf.
    pub lambda: u32,
    pub in_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizerMetrics {
    pub n: usize,
    /// Internal nodes only.
    pub nodes: Vec<NodeMetrics>,
    /// Leaves of each tree (internal nodes with no children there).
    pub leaves: [Vec<NodeId>; 3],
    /// Sum of `f_i` over internal nodes, per tree.
    pub score_sums: [u64; 3],
    pub lambda_sum: u64,
    pub cyclic_faces: Vec<[NodeId; 3]>,
    pub c: usize,
    pub b: Vec<NodeId>,
    /// Connected components of the subgraph induced by `b`.
    pub b_components: usize,
}

impl RealizerMetrics {
    pub fn leaf_total(&self) -> usize {
        self.leaves.iter().map(Vec::len).sum()
    }

    pub fn score_total(&self) -> u64 {
        self.score_sums.iter().sum()
    }
}

pub fn compute_metrics(g: &PlaneTriangulation, r: &Realizer) -> RealizerMetrics {
    let n = g.n();
    let orderings = canonical_orderings(g, r);

    let mut child_count = [vec![0u32; n], vec![0u32; n], vec![0u32; n]];
    for i in 0..3 {
        for p in r.parent[i].iter().flatten() {
            child_count[i][*p as usize] += 1;
        }
    }

    let mut nodes = Vec::with_capacity(n.saturating_sub(3));
    let mut leaves: [Vec<NodeId>; 3] = Default::default();
    let mut score_sums = [0u64; 3];
    let mut lambda_sum = 0u64;
    let mut in_b = vec![false; n];
    for v in 0..n as NodeId {
        if g.is_external(v) {
            continue;
        }
        let deg = g.degree(v) as u32;
        let mut deg_minus = [0u32; 3];
        for (i, ord) in orderings.iter().enumerate() {
            let lv = ord.label(v);
            deg_minus[i] = g
                .neighbors(v)
                .iter()
                .filter(|&&u| ord.label(u) < lv)
                .count() as u32;
        }
        let deg_plus = deg_minus.map(|d| deg - d);
        let f = [0, 1, 2].map(|i| deg_minus[i].min(deg_plus[i]));
        let mut lambda = 0;
        for i in 0..3 {
            if child_count[i][v as usize] == 0 {
                leaves[i].push(v);
            } else {
                lambda += 1;
            }
            score_sums[i] += f[i] as u64;
        }
        lambda_sum += lambda as u64;
        let b = lambda == 2 && deg == 5;
        in_b[v as usize] = b;
        nodes.push(NodeMetrics {
            v,
            deg,
            deg_minus,
            deg_plus,
            f,
            f_total: f.iter().sum(),
            lambda,
            in_b: b,
        });
    }

    let faces = g.faces();
    let cyclic_faces: Vec<[NodeId; 3]> = faces
        .internal()
        .filter(|(_, f)| is_cyclic(r, f.nodes))
        .map(|(_, f)| f.nodes)
        .collect();

    let b: Vec<NodeId> = (0..n as NodeId).filter(|&v| in_b[v as usize]).collect();
    let mut dsu = Dsu::new(n);
    for &v in &b {
        for &u in g.neighbors(v) {
            if in_b[u as usize] {
                dsu.union(v as usize, u as usize);
            }
        }
    }
    let b_components = b
        .iter()
        .filter(|&&v| dsu.find(v as usize) == v as usize)
        .count();

    RealizerMetrics {
        n,
        nodes,
        leaves,
        score_sums,
        lambda_sum,
        c: cyclic_faces.len(),
        cyclic_faces,
        b,
        b_components,
    }
}

/// A face is cyclic when its three edges lie in three different trees.
fn is_cyclic(r: &Realizer, [a, b, c]: [NodeId; 3]) -> bool {
    let trees = [r.edge_tree(a, b), r.edge_tree(b, c), r.edge_tree(c, a)];
    match trees {
        [Some(x), Some(y), Some(z)] => x != y && y != z && x != z,
        _ => false,
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// One identity or inequality, with both sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
    /// False when the degree-profile condition of the check does not hold.
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the leaf identity, the per-node score bound, the three score-sum
/// bounds and the two counting facts about the degree-5 set `B`. Inapplicable
/// checks pass vacuously. Graphs with fewer than four nodes have no internal
/// nodes, so every check is inapplicable there.
pub fn verify_identities(
    g: &PlaneTriangulation,
    _r: &Realizer,
    m: &RealizerMetrics,
) -> IdentityReport {
    let n = g.n() as f64;
    let big = g.n() >= 4;
    let c = m.c as f64;
    let profile = g.internal_degree_profile();
    let total = m.score_total() as f64;
    let b = m.b.len() as f64;
    let k = m.b_components as f64;

    let mut checks = Vec::new();
    let mut push = |name, lhs: f64, rhs: f64, holds: bool, applicable: bool| {
        checks.push(Check {
            name,
            lhs,
            rhs,
            pass: !applicable || holds,
            applicable,
        });
    };

    let lambda = m.lambda_sum as f64;
    push(
        "lambda_sum_eq_n_plus_c_minus_4",
        lambda,
        n + c - 4.0,
        lambda == n + c - 4.0,
        big,
    );
    let leaves = m.leaf_total() as f64;
    push(
        "leaf_total_eq_2n_minus_c_minus_5",
        leaves,
        2.0 * n - c - 5.0,
        leaves == 2.0 * n - c - 5.0,
        big,
    );

    // Per node: f(v) >= 3 + 2 lambda(v) - [v in B]; report the worst slack.
    let worst = m
        .nodes
        .iter()
        .map(|v| (v.f_total as i64, 3 + 2 * v.lambda as i64 - v.in_b as i64))
        .min_by_key(|&(lhs, rhs)| lhs - rhs);
    let (lhs, rhs) = worst.unwrap_or((0, 0));
    push(
        "node_score_ge_3_plus_2lambda_minus_b",
        lhs as f64,
        rhs as f64,
        lhs >= rhs,
        big,
    );

    push(
        "score_sum_ge_5n_minus_15",
        total,
        5.0 * n - 15.0,
        total >= 5.0 * n - 15.0,
        big && !profile.has_internal_deg3,
    );
    push(
        "score_sum_ge_5n_minus_17",
        total,
        5.0 * n - 17.0,
        total >= 5.0 * n - 17.0,
        big && !profile.has_internal_deg5,
    );
    // 5 * total >= 23n - 80, in integers.
    let exact = 5 * m.score_total() as i64 >= 23 * g.n() as i64 - 80;
    push(
        "score_sum_ge_23n_over_5_minus_16",
        total,
        23.0 * n / 5.0 - 16.0,
        exact,
        big,
    );

    push(
        "five_k_le_2n_minus_5",
        5.0 * k,
        2.0 * n - 5.0,
        5.0 * k <= 2.0 * n - 5.0,
        big,
    );
    push("b_minus_k_le_2c", b - k, 2.0 * c, b - k <= 2.0 * c, big);

    IdentityReport { checks }
}

/// One leaf occurrence and the face it determines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeafFace {
    pub tree: usize,
    pub v: NodeId,
    /// Index into [`PlaneTriangulation::faces`].
    pub face: usize,
}

/// For each tree `i` and each leaf `v` of it, the face spanned by `v` and its
/// parents in the other two trees. `None` if some such triple is not a face.
pub fn acyclic_face_map(g: &PlaneTriangulation, r: &Realizer) -> Option<Vec<LeafFace>> {
    let faces = g.faces();
    let mut is_parent = [vec![false; g.n()], vec![false; g.n()], vec![false; g.n()]];
    for i in 0..3 {
        for p in r.parent[i].iter().flatten() {
            is_parent[i][*p as usize] = true;
        }
    }
    let mut out = Vec::new();
    for i in 0..3 {
        for v in 0..g.n() as NodeId {
            if g.is_external(v) || is_parent[i][v as usize] {
                continue;
            }
            let pj = r.parent[(i + 1) % 3][v as usize]?;
            let pk = r.parent[(i + 2) % 3][v as usize]?;
            let d = g.dart_between(v, pj)?;
            let face = [d, g.twin(d)]
                .into_iter()
                .map(|d| faces.dart_face[d] as usize)
                .find(|&f| faces.faces[f].nodes.contains(&pk))?;
            out.push(LeafFace { tree: i, v, face });
        }
    }
    Some(out)
}
