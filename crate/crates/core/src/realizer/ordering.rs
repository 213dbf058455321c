use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Realizer;
use crate::plane_graph::{NodeId, PlaneTriangulation};

/// A labeling of the nodes by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalOrdering {
    /// `labels[v]` is the 1-based label of node `v`.
    pub labels: Vec<u32>,
    /// `order[k]` is the node with label `k + 1`.
    pub order: Vec<NodeId>,
    /// 1-based realizer tree this ordering was derived from, 0 if none.
    pub tree_index: u8,
}

impl CanonicalOrdering {
    pub fn from_order(order: Vec<NodeId>, tree_index: u8) -> Self {
        let mut labels = vec![0; order.len()];
        for (k, &v) in order.iter().enumerate() {
            labels[v as usize] = k as u32 + 1;
        }
        CanonicalOrdering {
            labels,
            order,
            tree_index,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn label(&self, v: NodeId) -> u32 {
        self.labels[v as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum OrderingViolation {
    #[error("labels are not a bijection onto 1..=n")]
    NotABijection,
    #[error("labels 1, 2 and n must be the external nodes")]
    ExternalsMisplaced,
    #[error("G_{0} is not biconnected")]
    NotBiconnected(usize),
    #[error("v_{0} is not on the outer cycle of G_{0}")]
    NotOnOuterCycle(usize),
    #[error("neighbors of v_{0} in G_{{k-1}} do not form an interval of at least two nodes")]
    IntervalViolated(usize),
}

/// Labeling from the counterclockwise preorder of tree `tree` (0-based) plus
/// the two external edges at its root. The root gets label 1, the next
/// external node counterclockwise gets 2 and the remaining one gets `n`.
pub fn canonical_ordering(g: &PlaneTriangulation, r: &Realizer, tree: usize) -> CanonicalOrdering {
    assert!(tree < 3, "tree index must be 0, 1 or 2");
    let n = g.n();
    let root = r.roots[tree];
    let second = r.roots[(tree + 1) % 3];
    let last = r.roots[(tree + 2) % 3];
    let parent = &r.parent[tree];

    // Children of every node in counterclockwise order after its parent.
    let mut child_offsets = vec![0usize; n + 1];
    let mut children: Vec<NodeId> = Vec::with_capacity(n);
    for v in 0..n as NodeId {
        let darts = g.darts(v);
        let start = if v == root {
            darts
                .clone()
                .find(|&d| g.head(d) == second)
                .expect("outer nodes are adjacent")
        } else if let Some(p) = parent[v as usize] {
            darts
                .clone()
                .find(|&d| g.head(d) == p)
                .expect("parent is a neighbor")
        } else {
            child_offsets[v as usize + 1] = children.len();
            continue;
        };
        let mut d = start;
        for _ in 0..darts.len() {
            let u = g.head(d);
            if parent[u as usize] == Some(v) {
                children.push(u);
            }
            d = g.next_ccw(d);
        }
        child_offsets[v as usize + 1] = children.len();
    }

    let mut order = Vec::with_capacity(n);
    order.push(root);
    order.push(second);
    let mut stack: Vec<NodeId> = Vec::new();
    let kids = |v: NodeId| &children[child_offsets[v as usize]..child_offsets[v as usize + 1]];
    stack.extend(kids(root).iter().rev());
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(kids(v).iter().rev());
    }
    order.push(last);
    debug_assert_eq!(order.len(), n);
    CanonicalOrdering::from_order(order, tree as u8 + 1)
}

/// The three realizer-derived orderings.
pub fn canonical_orderings(g: &PlaneTriangulation, r: &Realizer) -> [CanonicalOrdering; 3] {
    [0, 1, 2].map(|i| canonical_ordering(g, r, i))
}

/// Brute-force check of the canonical ordering properties for every prefix:
/// `G_k` biconnected, `v_k` on its outer cycle, and the earlier neighbors of
/// `v_k` a contiguous run of at least two nodes on `C_{k-1}` minus the base
/// edge. Quadratic; meant as an oracle.
pub fn validate_canonical_ordering(
    g: &PlaneTriangulation,
    ord: &CanonicalOrdering,
) -> Result<(), OrderingViolation> {
    let n = g.n();
    if ord.labels.len() != n || ord.order.len() != n {
        return Err(OrderingViolation::NotABijection);
    }
    let mut seen = vec![false; n];
    for (k, &v) in ord.order.iter().enumerate() {
        if v as usize >= n || seen[v as usize] || ord.labels[v as usize] != k as u32 + 1 {
            return Err(OrderingViolation::NotABijection);
        }
        seen[v as usize] = true;
    }
    let (u1, u2, vn) = (ord.order[0], ord.order[1], ord.order[n - 1]);
    if !(g.is_external(u1) && g.is_external(u2) && g.is_external(vn)) {
        return Err(OrderingViolation::ExternalsMisplaced);
    }

    // The unbounded face lies to the left of this dart along the base edge.
    let [a, b, c] = g.outer();
    let base_dart = {
        let pairs = [(b, a), (c, b), (a, c)];
        let (x, y) = pairs
            .into_iter()
            .find(|&(x, y)| (x == u1 && y == u2) || (x == u2 && y == u1))
            .expect("u1 and u2 are distinct outer nodes");
        g.dart_between(x, y).unwrap()
    };

    let v3 = ord.order[2];
    if !(g.has_edge(v3, u1) && g.has_edge(v3, u2)) {
        return Err(OrderingViolation::IntervalViolated(3));
    }

    let mut prev_path: Vec<NodeId> = vec![u1, u2];
    for k in 3..=n {
        let within = |v: NodeId| ord.labels[v as usize] as usize <= k;
        if !is_biconnected(g, &within, k) {
            return Err(OrderingViolation::NotBiconnected(k));
        }
        let cycle = match outer_cycle(g, base_dart, &within, k) {
            Some(c) => c,
            None => return Err(OrderingViolation::NotBiconnected(k)),
        };
        let vk = ord.order[k - 1];
        if !cycle.contains(&vk) {
            return Err(OrderingViolation::NotOnOuterCycle(k));
        }
        if k >= 4 {
            let is_lower = |u: NodeId| ord.labels[u as usize] < k as u32 && g.has_edge(u, vk);
            let lower_count = g
                .neighbors(vk)
                .iter()
                .filter(|&&u| ord.labels[u as usize] < k as u32)
                .count();
            let flags: Vec<bool> = prev_path.iter().map(|&u| is_lower(u)).collect();
            let on_path = flags.iter().filter(|&&f| f).count();
            let first = flags.iter().position(|&f| f);
            let last = flags.iter().rposition(|&f| f);
            let contiguous = match (first, last) {
                (Some(f), Some(l)) => l + 1 - f == on_path,
                _ => false,
            };
            if on_path != lower_count || lower_count < 2 || !contiguous {
                return Err(OrderingViolation::IntervalViolated(k));
            }
        }
        prev_path = path_without_base(&cycle, u1, u2);
    }
    Ok(())
}

/// Outer boundary walk of the subgraph induced by `within`, starting on the
/// base edge. `None` if the walk repeats a node.
fn outer_cycle(
    g: &PlaneTriangulation,
    base_dart: usize,
    within: &dyn Fn(NodeId) -> bool,
    k: usize,
) -> Option<Vec<NodeId>> {
    let mut cycle = Vec::new();
    let mut d = base_dart;
    loop {
        cycle.push(g.tail(d));
        if cycle.len() > k {
            return None;
        }
        // Clockwise from the reverse dart, skipping nodes outside the subgraph.
        let mut e = g.next_cw(g.twin(d));
        while !within(g.head(e)) {
            e = g.next_cw(e);
        }
        d = e;
        if d == base_dart {
            break;
        }
    }
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cycle.len() {
        return None;
    }
    Some(cycle)
}

/// The cycle as a path from `u1` to `u2` that avoids the edge `(u1, u2)`.
fn path_without_base(cycle: &[NodeId], u1: NodeId, u2: NodeId) -> Vec<NodeId> {
    let len = cycle.len();
    let i = cycle.iter().position(|&v| v == u1).unwrap();
    let forward_is_base = cycle[(i + 1) % len] == u2;
    (0..len)
        .map(|s| {
            if forward_is_base {
                cycle[(i + len - s) % len]
            } else {
                cycle[(i + s) % len]
            }
        })
        .collect()
}

fn is_biconnected(g: &PlaneTriangulation, within: &dyn Fn(NodeId) -> bool, k: usize) -> bool {
    let n = g.n();
    let start = match (0..n as NodeId).find(|&v| within(v)) {
        Some(s) => s,
        None => return false,
    };
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    // (node, parent, next neighbor index)
    let mut stack: Vec<(NodeId, NodeId, usize)> = vec![(start, NodeId::MAX, 0)];
    disc[start as usize] = 0;
    low[start as usize] = 0;
    let mut root_children = 0;
    let mut visited = 1;
    while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
        let nbrs = g.neighbors(v);
        if *idx < nbrs.len() {
            let u = nbrs[*idx];
            *idx += 1;
            if !within(u) || u == p {
                continue;
            }
            if disc[u as usize] == u32::MAX {
                time += 1;
                disc[u as usize] = time;
                low[u as usize] = time;
                visited += 1;
                if v == start {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v as usize] = low[v as usize].min(disc[u as usize]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
                if parent != start && low[v as usize] >= disc[parent as usize] {
                    return false;
                }
            }
        }
    }
    visited == k && root_children <= 1
}

/// Result of enumerating canonical orderings up to a cap.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub orderings: Vec<CanonicalOrdering>,
    /// True when the cap cut the enumeration short.
    pub truncated: bool,
}

/// Collects every canonical ordering, at most `cap` of them.
pub fn enumerate_canonical_orderings(g: &PlaneTriangulation, cap: usize) -> Enumeration {
    let mut orderings = Vec::new();
    let complete = for_each_canonical_ordering(g, |ord| {
        if orderings.len() == cap {
            return false;
        }
        orderings.push(ord.clone());
        true
    });
    Enumeration {
        orderings,
        truncated: !complete,
    }
}

/// Visits every canonical ordering by reverse peeling: for each choice of
/// `(v1, v2, vn)` among the outer nodes, recursively remove a chord-free
/// contour node. The visitor returns `false` to stop; the function returns
/// `false` if it was stopped early.
pub fn for_each_canonical_ordering<F>(g: &PlaneTriangulation, mut visit: F) -> bool
where
    F: FnMut(&CanonicalOrdering) -> bool,
{
    let outer = g.outer();
    for top_idx in 0..3 {
        for flip in [false, true] {
            let vn = outer[top_idx];
            // With (vn, v1, v2) counterclockwise on the outer face, lower
            // neighbors run counterclockwise from left to right.
            let (v1, v2) = if flip {
                (outer[(top_idx + 2) % 3], outer[(top_idx + 1) % 3])
            } else {
                (outer[(top_idx + 1) % 3], outer[(top_idx + 2) % 3])
            };
            let mut state = Peel {
                g,
                v1,
                v2,
                ccw: !flip,
                removed: vec![false; g.n()],
                path: vec![v1, vn, v2],
                sequence: Vec::with_capacity(g.n()),
            };
            if !state.recurse(&mut visit) {
                return false;
            }
        }
    }
    true
}

struct Peel<'a> {
    g: &'a PlaneTriangulation,
    v1: NodeId,
    v2: NodeId,
    ccw: bool,
    removed: Vec<bool>,
    /// Contour from v1 to v2.
    path: Vec<NodeId>,
    /// Nodes in removal order (labels n, n-1, ...).
    sequence: Vec<NodeId>,
}

impl Peel<'_> {
    fn recurse<F: FnMut(&CanonicalOrdering) -> bool>(&mut self, visit: &mut F) -> bool {
        let g = self.g;
        if self.path.len() == 2 {
            let mut order: Vec<NodeId> = vec![self.v1, self.v2];
            order.extend(self.sequence.iter().rev());
            return visit(&CanonicalOrdering::from_order(order, 0));
        }
        for pos in 1..self.path.len() - 1 {
            let v = self.path[pos];
            let (p, q) = (self.path[pos - 1], self.path[pos + 1]);
            let has_chord = self
                .path
                .iter()
                .enumerate()
                .any(|(i, &x)| i + 1 != pos && i != pos && i != pos + 1 && g.has_edge(v, x));
            if has_chord {
                continue;
            }

            let between = self.lower_between(v, p, q);
            let saved = self.path.clone();
            self.path.splice(pos..pos + 1, between);
            self.removed[v as usize] = true;
            self.sequence.push(v);
            let keep_going = self.recurse(visit);
            self.sequence.pop();
            self.removed[v as usize] = false;
            self.path = saved;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn lower_between(&self, v: NodeId, p: NodeId, q: NodeId) -> Vec<NodeId> {
        let g = self.g;
        let start = g.dart_between(v, p).unwrap();
        let mut d = if self.ccw {
            g.next_ccw(start)
        } else {
            g.next_cw(start)
        };
        let mut out = Vec::new();
        while g.head(d) != q {
            out.push(g.head(d));
            d = if self.ccw {
                g.next_ccw(d)
            } else {
                g.next_cw(d)
            };
        }
        debug_assert!(out.iter().all(|&u| !self.removed[u as usize]));
        out
    }
}
