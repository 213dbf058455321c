//! Schnyder realizers and the canonical orderings derived from them.
//!
//! Tree indices are 0-based in code (`0..3`); tree `i` is rooted at
//! `outer[i]`. Around every internal node the counterclockwise neighbor
//! order is `U0, D2, U1, D0, U2, D1`, where `Uj` is the parent in tree `j`
//! and `Dj` are the children in tree `j`.

mod four_connected;
mod ordering;

pub use four_connected::four_canonical_ordering;
pub use ordering::{
    canonical_ordering, canonical_orderings, enumerate_canonical_orderings,
    for_each_canonical_ordering, validate_canonical_ordering, CanonicalOrdering, Enumeration,
    OrderingViolation,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{NodeId, PlaneTriangulation};

/// Three parent maps partitioning the internal edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realizer {
    pub roots: [NodeId; 3],
    /// `parent[i][v]` is the parent of `v` in tree `i`; `None` for external nodes.
    pub parent: [Vec<Option<NodeId>>; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum RealizerViolation {
    #[error("realizer does not span the graph: {0}")]
    NotSpanning(String),
    #[error("edge ({0}, {1}) is used more than once")]
    NotDisjoint(NodeId, NodeId),
    #[error("tree {tree} has a cycle through node {node}")]
    CycleInTree { tree: usize, node: NodeId },
    #[error("block order violated around node {0}")]
    BlockOrderViolated(NodeId),
}

impl Realizer {
    pub fn n(&self) -> usize {
        self.parent[0].len()
    }

    /// Children of `v` in tree `i`, counterclockwise.
    pub fn children<'a>(
        &'a self,
        g: &'a PlaneTriangulation,
        tree: usize,
        v: NodeId,
    ) -> impl Iterator<Item = NodeId> + 'a {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.parent[tree][u as usize] == Some(v))
    }

    /// Tree index of edge `(u, v)`, or `None` for external edges.
    pub fn edge_tree(&self, u: NodeId, v: NodeId) -> Option<usize> {
        (0..3).find(|&i| {
            self.parent[i][u as usize] == Some(v) || self.parent[i][v as usize] == Some(u)
        })
    }
}

/// Computes a realizer by canonical peeling: outer nodes are removed from the
/// top root `outer[0]` downward, each removed node pointing to its leftmost
/// and rightmost lower contour neighbors and adopting the nodes it uncovers.
/// Runs in `O(n)`.
pub fn compute_realizer(g: &PlaneTriangulation) -> Realizer {
    let n = g.n();
    let roots = g.outer();
    let mut parent = [vec![None; n], vec![None; n], vec![None; n]];
    if n == 3 {
        return Realizer { roots, parent };
    }

    const NONE: NodeId = NodeId::MAX;
    let [top, left, right] = roots;
    let mut prev = vec![NONE; n];
    let mut next = vec![NONE; n];
    let mut on_contour = vec![false; n];
    let mut removed = vec![false; n];
    let mut chords = vec![0u32; n];
    let mut fresh = vec![false; n];

    for &v in &roots {
        on_contour[v as usize] = true;
    }
    next[left as usize] = top;
    prev[top as usize] = left;
    next[top as usize] = right;
    prev[right as usize] = top;

    let mut stack = vec![top];
    let mut uncovered: Vec<NodeId> = Vec::new();
    let mut removed_count = 0;
    while removed_count < n - 2 {
        let v = stack
            .pop()
            .expect("a plane triangulation always has a removable contour node");
        let vi = v as usize;
        if removed[vi] || !on_contour[vi] || chords[vi] > 0 || v == left || v == right {
            continue;
        }
        let p = prev[vi];
        let q = next[vi];

        // Lower neighbors run counterclockwise from p to q around v.
        uncovered.clear();
        let darts = g.darts(v);
        let start = darts
            .clone()
            .find(|&d| g.head(d) == p)
            .expect("contour neighbor is adjacent");
        let mut d = g.next_ccw(start);
        while g.head(d) != q {
            uncovered.push(g.head(d));
            d = g.next_ccw(d);
        }

        removed[vi] = true;
        on_contour[vi] = false;
        removed_count += 1;
        if v != top {
            parent[1][vi] = Some(p);
            parent[2][vi] = Some(q);
        }
        for &u in &uncovered {
            parent[0][u as usize] = Some(v);
        }

        if uncovered.is_empty() {
            next[p as usize] = q;
            prev[q as usize] = p;
            if !(p == left && q == right) {
                chords[p as usize] -= 1;
                chords[q as usize] -= 1;
                if chords[p as usize] == 0 {
                    stack.push(p);
                }
                if chords[q as usize] == 0 {
                    stack.push(q);
                }
            }
            continue;
        }

        let mut last = p;
        for &u in &uncovered {
            next[last as usize] = u;
            prev[u as usize] = last;
            on_contour[u as usize] = true;
            fresh[u as usize] = true;
            last = u;
        }
        next[last as usize] = q;
        prev[q as usize] = last;

        for &u in &uncovered {
            let ui = u as usize;
            for &x in g.neighbors(u) {
                let xi = x as usize;
                if !on_contour[xi] || x == prev[ui] || x == next[ui] {
                    continue;
                }
                chords[ui] += 1;
                if !fresh[xi] {
                    chords[xi] += 1;
                }
            }
        }
        for &u in &uncovered {
            fresh[u as usize] = false;
            if chords[u as usize] == 0 {
                stack.push(u);
            }
        }
    }

    Realizer { roots, parent }
}

/// Checks every realizer invariant, returning the first violation found.
/// Order of checks: parent presence, disjointness, roots, local block order,
/// acyclicity.
pub fn validate_realizer(g: &PlaneTriangulation, r: &Realizer) -> Result<(), RealizerViolation> {
    let n = g.n();
    if r.roots != g.outer() {
        return Err(RealizerViolation::NotSpanning(format!(
            "roots {:?} differ from outer face {:?}",
            r.roots,
            g.outer()
        )));
    }
    if r.parent.iter().any(|p| p.len() != n) {
        return Err(RealizerViolation::NotSpanning(
            "parent table length differs from node count".into(),
        ));
    }

    for v in 0..n as NodeId {
        for i in 0..3 {
            let p = r.parent[i][v as usize];
            match (g.is_external(v), p) {
                (true, Some(_)) => {
                    return Err(RealizerViolation::NotSpanning(format!(
                        "external node {v} has a parent in tree {i}"
                    )))
                }
                (false, None) => {
                    return Err(RealizerViolation::NotSpanning(format!(
                        "internal node {v} has no parent in tree {i}"
                    )))
                }
                (false, Some(p)) => {
                    if p as usize >= n || !g.has_edge(v, p) {
                        return Err(RealizerViolation::NotSpanning(format!(
                            "parent {p} of {v} in tree {i} is not a neighbor"
                        )));
                    }
                }
                (true, None) => {}
            }
        }
    }

    // Each internal edge exactly once; external edges never.
    let mut used = vec![false; g.dart_count()];
    for v in 0..n as NodeId {
        if g.is_external(v) {
            continue;
        }
        for i in 0..3 {
            let p = r.parent[i][v as usize].unwrap();
            let d = g.dart_between(v, p).unwrap();
            let t = g.twin(d);
            if used[d] || used[t] {
                return Err(RealizerViolation::NotDisjoint(v.min(p), v.max(p)));
            }
            used[d] = true;
            used[t] = true;
        }
    }

    for v in 0..n as NodeId {
        for i in 0..3 {
            match r.parent[i][v as usize] {
                Some(p) if g.is_external(p) && p != r.roots[i] => {
                    return Err(RealizerViolation::NotSpanning(format!(
                        "node {v} points to external node {p} in tree {i}"
                    )));
                }
                _ => {}
            }
        }
    }

    for v in 0..n as NodeId {
        if !g.is_external(v) && !block_order_holds(g, r, v) {
            return Err(RealizerViolation::BlockOrderViolated(v));
        }
    }

    // Every walk along parents must reach the root within n steps.
    for (i, parents) in r.parent.iter().enumerate() {
        let mut state = vec![0u8; n]; // 0 unknown, 1 on path, 2 reaches root
        state[r.roots[i] as usize] = 2;
        let mut path = Vec::new();
        for start in 0..n as NodeId {
            if g.is_external(start) {
                continue;
            }
            let mut v = start;
            while state[v as usize] == 0 {
                state[v as usize] = 1;
                path.push(v);
                v = parents[v as usize].unwrap();
            }
            if state[v as usize] == 1 {
                return Err(RealizerViolation::CycleInTree { tree: i, node: v });
            }
            for u in path.drain(..) {
                state[u as usize] = 2;
            }
        }
    }
    Ok(())
}

/// Around `v`: parent 0, children of tree 2, parent 1, children of tree 0,
/// parent 2, children of tree 1, counterclockwise.
fn block_order_holds(g: &PlaneTriangulation, r: &Realizer, v: NodeId) -> bool {
    let nbrs = g.neighbors(v);
    let parents = [0, 1, 2].map(|i| r.parent[i][v as usize].unwrap());
    let Some(start) = nbrs.iter().position(|&u| u == parents[0]) else {
        return false;
    };
    let deg = nbrs.len();
    // Expected child tree for the block after parent j.
    let between = [2usize, 0, 1];
    let mut block = 0;
    for step in 1..deg {
        let u = nbrs[(start + step) % deg];
        if block < 2 && u == parents[block + 1] {
            block += 1;
            continue;
        }
        if parents.contains(&u) {
            return false;
        }
        if r.parent[between[block]][u as usize] != Some(v) {
            return false;
        }
    }
    block == 2
}
