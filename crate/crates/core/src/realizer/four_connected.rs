//! Canonical ordering for four-connected triangulations in which every
//! internal node except `v_{n-1}` has at least two higher neighbors.

use super::CanonicalOrdering;
use crate::plane_graph::{NodeId, PlaneTriangulation};

/// Peels the graph from `outer[0]` downward, only removing chord-free contour
/// nodes that already have two removed neighbors (one for the very first
/// internal node). Returns `None` when no such node exists, which happens only
/// if the graph has a separating triangle. Linear time.
pub fn four_canonical_ordering(g: &PlaneTriangulation) -> Option<CanonicalOrdering> {
    let n = g.n();
    let [top, left, right] = g.outer();
    if n < 6 {
        return None;
    }

    const NONE: NodeId = NodeId::MAX;
    let mut prev = vec![NONE; n];
    let mut next = vec![NONE; n];
    let mut on_contour = vec![false; n];
    let mut removed = vec![false; n];
    let mut chords = vec![0u32; n];
    let mut fresh = vec![false; n];
    let mut higher = vec![0u32; n];

    for v in [top, left, right] {
        on_contour[v as usize] = true;
    }
    next[left as usize] = top;
    prev[top as usize] = left;
    next[top as usize] = right;
    prev[right as usize] = top;

    let mut sequence = Vec::with_capacity(n);
    let mut stack = vec![top];
    let mut uncovered: Vec<NodeId> = Vec::new();
    while sequence.len() < n - 2 {
        let need = match sequence.len() {
            0 => 0,
            1 => 1,
            _ => 2,
        };
        let v = stack.pop()?;
        let vi = v as usize;
        if removed[vi]
            || !on_contour[vi]
            || chords[vi] > 0
            || higher[vi] < need
            || v == left
            || v == right
        {
            continue;
        }
        let p = prev[vi];
        let q = next[vi];

        uncovered.clear();
        let start = g.darts(v).find(|&d| g.head(d) == p)?;
        let mut d = g.next_ccw(start);
        while g.head(d) != q {
            uncovered.push(g.head(d));
            d = g.next_ccw(d);
        }

        removed[vi] = true;
        on_contour[vi] = false;
        sequence.push(v);
        for &u in g.neighbors(v) {
            higher[u as usize] += 1;
        }

        if uncovered.is_empty() {
            next[p as usize] = q;
            prev[q as usize] = p;
            if !(p == left && q == right) {
                chords[p as usize] -= 1;
                chords[q as usize] -= 1;
            }
        } else {
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
            }
        }
        // Anything next to v may have become removable.
        for &u in g.neighbors(v) {
            if on_contour[u as usize] && chords[u as usize] == 0 {
                stack.push(u);
            }
        }
        for x in [p, q] {
            if chords[x as usize] == 0 {
                stack.push(x);
            }
        }
    }

    let mut order = vec![left, right];
    order.extend(sequence.iter().rev());
    Some(CanonicalOrdering::from_order(order, 0))
}
