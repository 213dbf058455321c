//! Independent drawing checker: a row-by-row sweep over a skyline of the
//! topmost segment at every column.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Segment, VisibilityDrawing};
use crate::plane_graph::{NodeId, PlaneTriangulation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code")]
pub enum DrawingViolation {
    Overlap {
        u: NodeId,
        v: NodeId,
    },
    EdgeNotVisible {
        u: NodeId,
        v: NodeId,
    },
    TooTall {
        height: u32,
        limit: u32,
    },
    DuplicateSegment {
        v: NodeId,
    },
    UnknownNode {
        v: NodeId,
    },
    InvertedSegment {
        v: NodeId,
    },
    DimensionMismatch {
        field: &'static str,
        declared: u32,
        actual: u32,
    },
}

/// A column through which `lower` and `upper` see each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lower: NodeId,
    pub upper: NodeId,
    pub x: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DrawingReport {
    pub violations: Vec<DrawingViolation>,
    #[serde(skip)]
    pub witnesses: Vec<Witness>,
}

impl DrawingReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks same-row disjointness, visibility of every edge, `height <= n - 1`
/// and the declared dimensions. A missing segment surfaces as invisible edges.
pub fn validate_drawing(g: &PlaneTriangulation, d: &VisibilityDrawing) -> DrawingReport {
    let n = g.n();
    let mut report = DrawingReport::default();
    let mut by_node: Vec<Option<Segment>> = vec![None; n];
    for s in &d.segments {
        if s.v as usize >= n {
            report
                .violations
                .push(DrawingViolation::UnknownNode { v: s.v });
        } else if by_node[s.v as usize].is_some() {
            report
                .violations
                .push(DrawingViolation::DuplicateSegment { v: s.v });
        } else if s.x1 > s.x2 {
            report
                .violations
                .push(DrawingViolation::InvertedSegment { v: s.v });
        } else {
            by_node[s.v as usize] = Some(*s);
        }
    }
    for (u, v) in g.edges() {
        if by_node[u as usize].is_none() || by_node[v as usize].is_none() {
            report
                .violations
                .push(DrawingViolation::EdgeNotVisible { u, v });
        }
    }
    sweep(g, &by_node, &mut report);

    let present = by_node.iter().flatten();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (u32::MAX, 0, u32::MAX, 0);
    for s in present {
        min_x = min_x.min(s.x1);
        max_x = max_x.max(s.x2);
        min_y = min_y.min(s.y);
        max_y = max_y.max(s.y);
    }
    if min_x != u32::MAX {
        let (width, height) = (max_x - min_x, max_y - min_y);
        let limit = n as u32 - 1;
        if height > limit {
            report
                .violations
                .push(DrawingViolation::TooTall { height, limit });
        }
        for (field, declared, actual) in [("width", d.width, width), ("height", d.height, height)] {
            if declared != actual {
                report.violations.push(DrawingViolation::DimensionMismatch {
                    field,
                    declared,
                    actual,
                });
            }
        }
    }
    report
}

/// Sweep over the present segments, ignoring edges to nodes without one.
pub(super) fn sweep(
    g: &PlaneTriangulation,
    by_node: &[Option<Segment>],
    report: &mut DrawingReport,
) {
    let n = g.n();
    let mut segs: Vec<Segment> = by_node.iter().flatten().copied().collect();
    segs.sort_unstable_by_key(|s| (s.y, s.x1, s.v));

    // Skyline: start -> (end, owner), disjoint closed intervals.
    let mut sky: BTreeMap<u32, (u32, NodeId)> = BTreeMap::new();
    let mut seen_at = vec![u32::MAX; n];
    let mut seen_x = vec![0u32; n];
    let mut stamp = 0u32;

    let mut i = 0;
    while i < segs.len() {
        let y = segs[i].y;
        let mut j = i;
        while j < segs.len() && segs[j].y == y {
            j += 1;
        }
        let row = &segs[i..j];
        for w in row.windows(2) {
            if w[1].x1 <= w[0].x2 {
                report.violations.push(DrawingViolation::Overlap {
                    u: w[0].v.min(w[1].v),
                    v: w[0].v.max(w[1].v),
                });
            }
        }
        for s in row {
            stamp += 1;
            for (start, _, owner) in overlapping(&sky, s.x1, s.x2) {
                seen_at[owner as usize] = stamp;
                seen_x[owner as usize] = start.max(s.x1);
            }
            for &u in g.neighbors(s.v) {
                let Some(t) = by_node[u as usize] else {
                    continue;
                };
                if t.y > s.y || (t.y == s.y && u > s.v) {
                    continue;
                }
                if t.y < s.y && seen_at[u as usize] == stamp {
                    report.witnesses.push(Witness {
                        lower: u,
                        upper: s.v,
                        x: seen_x[u as usize],
                    });
                } else {
                    report.violations.push(DrawingViolation::EdgeNotVisible {
                        u: u.min(s.v),
                        v: u.max(s.v),
                    });
                }
            }
        }
        for s in row {
            assign(&mut sky, s.x1, s.x2, s.v);
        }
        i = j;
    }
}

fn overlapping(sky: &BTreeMap<u32, (u32, NodeId)>, x1: u32, x2: u32) -> Vec<(u32, u32, NodeId)> {
    let mut out = Vec::new();
    if let Some((&start, &(end, owner))) = sky.range(..x1).next_back() {
        if end >= x1 {
            out.push((start, end, owner));
        }
    }
    for (&start, &(end, owner)) in sky.range(x1..=x2) {
        out.push((start, end, owner));
    }
    out
}

fn assign(sky: &mut BTreeMap<u32, (u32, NodeId)>, x1: u32, x2: u32, v: NodeId) {
    for (start, end, owner) in overlapping(sky, x1, x2) {
        sky.remove(&start);
        if start < x1 {
            sky.insert(start, (x1 - 1, owner));
        }
        if end > x2 {
            sky.insert(x2 + 1, (end, owner));
        }
    }
    sky.insert(x1, (x2, v));
}
