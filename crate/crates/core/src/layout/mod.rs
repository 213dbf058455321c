//! Greedy incremental visibility drawing along a canonical ordering.
//!
//! Node `v_k` goes on row `k - 1`. Its segment runs from the rightmost
//! visible column of its leftmost earlier neighbor to the leftmost visible
//! column of its rightmost one, covering everything in between. A neighbor
//! with no visible column left gets a fresh column inserted at the free gap
//! between its last coverers.

mod columns;
mod svg;
mod validate;

pub use svg::{render_svg, to_svg};
pub use validate::{validate_drawing, DrawingReport, DrawingViolation, Witness};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{DegreeProfile, NodeId, PlaneTriangulation};
use crate::realizer::{
    canonical_orderings, compute_realizer, four_canonical_ordering, validate_canonical_ordering,
    CanonicalOrdering, OrderingViolation,
};
use columns::{Col, Columns};

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub v: NodeId,
    pub y: u32,
    pub x1: u32,
    pub x2: u32,
}

/// On-disk drawing format: `{"width", "height", "segments": [{"v","y","x1","x2"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VisibilityDrawing {
    pub width: u32,
    pub height: u32,
    pub segments: Vec<Segment>,
}

impl VisibilityDrawing {
    /// Builds a drawing with dimensions measured from the segments.
    pub fn from_segments(segments: Vec<Segment>) -> Self {
        let span = |lo: fn(&Segment) -> u32, hi: fn(&Segment) -> u32| {
            let min = segments.iter().map(lo).min().unwrap_or(0);
            let max = segments.iter().map(hi).max().unwrap_or(0);
            max - min
        };
        VisibilityDrawing {
            width: span(|s| s.x1, |s| s.x2),
            height: span(|s| s.y, |s| s.y),
            segments,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("internal invariant broken at step {k}: {detail}")]
    InternalInvariantBroken { k: usize, detail: String },
    #[error("ordering is not canonical at step {0}")]
    NotCanonical(usize),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DrawOptions {
    /// Check the ordering up front and the partial drawing after every step.
    pub debug_validate: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DrawStats {
    /// Columns added beyond the initial three.
    pub inserted_columns: usize,
}

pub fn draw(
    g: &PlaneTriangulation,
    ord: &CanonicalOrdering,
) -> Result<VisibilityDrawing, LayoutError> {
    draw_with(g, ord, DrawOptions::default()).map(|(d, _)| d)
}

pub fn draw_with(
    g: &PlaneTriangulation,
    ord: &CanonicalOrdering,
    opts: DrawOptions,
) -> Result<(VisibilityDrawing, DrawStats), LayoutError> {
    if ord.len() != g.n() {
        return Err(LayoutError::NotCanonical(0));
    }
    if opts.debug_validate {
        validate_canonical_ordering(g, ord).map_err(|e| {
            LayoutError::NotCanonical(match e {
                OrderingViolation::NotBiconnected(k)
                | OrderingViolation::NotOnOuterCycle(k)
                | OrderingViolation::IntervalViolated(k) => k,
                _ => 0,
            })
        })?;
    }
    let mut engine = Engine::new(g, ord)?;
    for k in 4..=g.n() {
        engine.place(k)?;
        if opts.debug_validate {
            engine.check(k)?;
        }
    }
    let inserted_columns = engine.cols.len() - 3;
    Ok((engine.finish(), DrawStats { inserted_columns }))
}

/// Drawing state of one node; handles are column ids, `NIL` when absent.
/// Kept together so that touching a node costs one cache line.
#[derive(Debug, Clone, Copy)]
struct Slot {
    left: Col,
    right: Col,
    /// Visible interval; `lo == NIL` when empty.
    lo: Col,
    hi: Col,
    /// Right end of the latest coverer attached from the left.
    lcov: Col,
    /// Left end of the latest coverer attached from the right.
    rcov: Col,
    cprev: NodeId,
    cnext: NodeId,
    mark: u32,
    on_contour: bool,
}

const EMPTY: Slot = Slot {
    left: NIL,
    right: NIL,
    lo: NIL,
    hi: NIL,
    lcov: NIL,
    rcov: NIL,
    cprev: NIL,
    cnext: NIL,
    mark: 0,
    on_contour: false,
};

struct Engine<'a> {
    g: &'a PlaneTriangulation,
    ord: &'a CanonicalOrdering,
    cols: Columns,
    s: Vec<Slot>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a PlaneTriangulation, ord: &'a CanonicalOrdering) -> Result<Self, LayoutError> {
        let [v1, v2, v3] = [0, 1, 2].map(|i| ord.order[i]);
        if !g.has_edge(v1, v2) || !g.has_edge(v3, v1) || !g.has_edge(v3, v2) {
            return Err(LayoutError::NotCanonical(3));
        }
        let mut s = vec![EMPTY; g.n()];
        // v1 on row 0 over all three columns, fully covered; v2 on row 1 over
        // the right two; v3 on row 2 over the left two.
        s[v1 as usize] = Slot {
            left: 0,
            right: 2,
            rcov: 0,
            cnext: v3,
            on_contour: true,
            ..EMPTY
        };
        s[v2 as usize] = Slot {
            left: 1,
            right: 2,
            lo: 2,
            hi: 2,
            lcov: 1,
            cprev: v3,
            on_contour: true,
            ..EMPTY
        };
        s[v3 as usize] = Slot {
            left: 0,
            right: 1,
            lo: 0,
            hi: 1,
            cprev: v1,
            cnext: v2,
            on_contour: true,
            ..EMPTY
        };
        Ok(Engine {
            g,
            ord,
            cols: Columns::new(3),
            s,
        })
    }

    /// Adds `v_k`.
    fn place(&mut self, k: usize) -> Result<(), LayoutError> {
        let g = self.g;
        let v = self.ord.order[k - 1];
        let label = k as u32;
        let mut lower = 0usize;
        let mut any = NIL;
        for &u in g.neighbors(v) {
            if self.ord.label(u) < label {
                self.s[u as usize].mark = label;
                lower += 1;
                any = u;
            }
        }
        if lower < 2 || !self.s[any as usize].on_contour {
            return Err(LayoutError::NotCanonical(k));
        }
        let marked = |s: &[Slot], x: NodeId| x != NIL && s[x as usize].mark == label;
        let mut wp = any;
        let mut run = 1;
        while marked(&self.s, self.s[wp as usize].cprev) {
            wp = self.s[wp as usize].cprev;
            run += 1;
        }
        let mut wq = any;
        while marked(&self.s, self.s[wq as usize].cnext) {
            wq = self.s[wq as usize].cnext;
            run += 1;
        }
        if run != lower {
            return Err(LayoutError::NotCanonical(k));
        }

        let mut w = wp;
        loop {
            if self.s[w as usize].lo == NIL {
                self.expose(w, k)?;
            }
            if w == wq {
                break;
            }
            w = self.s[w as usize].cnext;
        }

        let a = self.s[wp as usize].hi;
        let b = self.s[wq as usize].lo;
        self.s[v as usize] = Slot {
            left: a,
            right: b,
            lo: a,
            hi: b,
            cprev: wp,
            cnext: wq,
            on_contour: true,
            ..EMPTY
        };

        let p = &mut self.s[wp as usize];
        p.rcov = a;
        if p.lo == a {
            p.lo = NIL;
            p.hi = NIL;
        } else {
            p.hi = self.cols.prev(a).expect("visible interval is contiguous");
        }
        let interior = p.cnext;
        p.cnext = v;
        let q = &mut self.s[wq as usize];
        q.lcov = b;
        if q.hi == b {
            q.lo = NIL;
            q.hi = NIL;
        } else {
            q.lo = self.cols.next(b).expect("visible interval is contiguous");
        }
        q.cprev = v;

        let mut w = interior;
        while w != wq {
            let slot = &mut self.s[w as usize];
            slot.on_contour = false;
            w = slot.cnext;
        }
        Ok(())
    }

    /// Gives contour node `w` one visible column at the gap between its last
    /// left and right coverers. Without a left coverer the gap lies at or
    /// before the segment's left end, so the segment grows to the new column;
    /// symmetrically on the right. Hidden neighbors sharing the same gap move
    /// their handle to the new column so they stay on their own side of it.
    fn expose(&mut self, w: NodeId, k: usize) -> Result<(), LayoutError> {
        let wi = w as usize;
        let (l, r) = (self.s[wi].lcov, self.s[wi].rcov);
        let c = match (l, r) {
            (NIL, NIL) => {
                return Err(LayoutError::InternalInvariantBroken {
                    k,
                    detail: format!("node {w} is hidden and has no coverers"),
                })
            }
            (NIL, r) => {
                let c = self.cols.insert_before(r);
                self.s[wi].left = c;
                c
            }
            (l, r) => {
                let c = self.cols.insert_after(l);
                if r == NIL {
                    self.s[wi].right = c;
                }
                c
            }
        };
        self.s[wi].lo = c;
        self.s[wi].hi = c;
        if r != NIL {
            let mut x = self.s[wi].cprev;
            while x != NIL && self.s[x as usize].lo == NIL && self.s[x as usize].rcov == r {
                self.s[x as usize].rcov = c;
                x = self.s[x as usize].cprev;
            }
        }
        if l != NIL {
            let mut x = self.s[wi].cnext;
            while x != NIL && self.s[x as usize].lo == NIL && self.s[x as usize].lcov == l {
                self.s[x as usize].lcov = c;
                x = self.s[x as usize].cnext;
            }
        }
        Ok(())
    }

    /// Segments of `v_1..v_upto`, indexed by node.
    fn segments(&self, upto: usize) -> Vec<Option<Segment>> {
        let x = self.cols.positions();
        let mut out = vec![None; self.g.n()];
        for (i, &v) in self.ord.order[..upto].iter().enumerate() {
            let slot = &self.s[v as usize];
            out[v as usize] = Some(Segment {
                v,
                y: i as u32,
                x1: x[slot.left as usize],
                x2: x[slot.right as usize],
            });
        }
        out
    }

    /// Validates the partial drawing of `G_k` and the exposure invariant.
    fn check(&self, k: usize) -> Result<(), LayoutError> {
        let segs = self.segments(k);
        let mut report = DrawingReport::default();
        validate::sweep(self.g, &segs, &mut report);
        if let Some(v) = report.violations.first() {
            return Err(LayoutError::InternalInvariantBroken {
                k,
                detail: format!("{v:?}"),
            });
        }
        let mut w = self.ord.order[0];
        while w != NIL {
            let slot = &self.s[w as usize];
            if slot.lo == NIL && slot.lcov == NIL && slot.rcov == NIL {
                return Err(LayoutError::InternalInvariantBroken {
                    k,
                    detail: format!("contour node {w} cannot be exposed"),
                });
            }
            w = slot.cnext;
        }
        Ok(())
    }

    fn finish(self) -> VisibilityDrawing {
        let x = self.cols.positions();
        let segments = self
            .s
            .iter()
            .enumerate()
            .map(|(v, slot)| Segment {
                v: v as NodeId,
                y: self.ord.labels[v] - 1,
                x1: x[slot.left as usize],
                x2: x[slot.right as usize],
            })
            .collect();
        VisibilityDrawing::from_segments(segments)
    }
}

/// Narrowest of the three realizer-ordering drawings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestOfThree {
    pub drawing: VisibilityDrawing,
    /// 0-based tree index of the chosen ordering.
    pub chosen: usize,
    pub widths: [u32; 3],
}

/// Draws along all three realizer orderings and keeps the narrowest; ties go
/// to the lowest tree index.
pub fn best_of_three(g: &PlaneTriangulation) -> Result<BestOfThree, LayoutError> {
    best_of_three_with(g, DrawOptions::default())
}

pub fn best_of_three_with(
    g: &PlaneTriangulation,
    opts: DrawOptions,
) -> Result<BestOfThree, LayoutError> {
    let r = compute_realizer(g);
    let orderings = canonical_orderings(g, &r);
    let mut best: Option<BestOfThree> = None;
    let mut widths = [0u32; 3];
    for (i, ord) in orderings.iter().enumerate() {
        let (d, _) = draw_with(g, ord, opts)?;
        widths[i] = d.width;
        if best.as_ref().is_none_or(|b| d.width < b.drawing.width) {
            best = Some(BestOfThree {
                drawing: d,
                chosen: i,
                widths,
            });
        }
    }
    let mut best = best.expect("three orderings");
    best.widths = widths;
    Ok(best)
}

/// Which ordering produced a drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingChoice {
    /// Preorder of realizer tree `i` (0-based).
    Tree(usize),
    /// The four-connected ordering with two higher neighbors almost everywhere.
    FourConnected,
}

impl OrderingChoice {
    /// 1, 2, 3 for the realizer orderings, 4 for the four-connected one.
    pub fn code(self) -> u8 {
        match self {
            OrderingChoice::Tree(i) => i as u8 + 1,
            OrderingChoice::FourConnected => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestDrawing {
    pub drawing: VisibilityDrawing,
    pub chosen: OrderingChoice,
    pub realizer_widths: [u32; 3],
    /// Width along the four-connected ordering, when the graph is four-connected.
    pub four_connected_width: Option<u32>,
}

/// [`best_of_three`], plus the four-connected ordering when it applies. The
/// realizer orderings alone can exceed `n - 1` on four-connected inputs.
pub fn best_drawing(g: &PlaneTriangulation) -> Result<BestDrawing, LayoutError> {
    best_drawing_with(g, DrawOptions::default())
}

pub fn best_drawing_with(
    g: &PlaneTriangulation,
    opts: DrawOptions,
) -> Result<BestDrawing, LayoutError> {
    let three = best_of_three_with(g, opts)?;
    let mut best = BestDrawing {
        drawing: three.drawing,
        chosen: OrderingChoice::Tree(three.chosen),
        realizer_widths: three.widths,
        four_connected_width: None,
    };
    if g.n() >= 6 && g.is_four_connected().unwrap_or(false) {
        let ord = four_canonical_ordering(g).ok_or(LayoutError::InternalInvariantBroken {
            k: 0,
            detail: "four-connected peeling stalled".into(),
        })?;
        let (d, _) = draw_with(g, &ord, opts)?;
        best.four_connected_width = Some(d.width);
        if d.width < best.drawing.width {
            best.drawing = d;
            best.chosen = OrderingChoice::FourConnected;
        }
    }
    Ok(best)
}

/// Smallest proven width bound that applies: `n - 1` for 4-connected graphs,
/// `(4n-9)/3` without internal degree-3 nodes, `(4n-7)/3` without internal
/// degree-5 nodes, `(22n-40)/15` always (all floored). The triangle gets 2.
pub fn theoretical_width_bound(n: usize, profile: DegreeProfile, four_connected: bool) -> u32 {
    if n <= 3 {
        return 2;
    }
    let n = n as i64;
    let mut bound = (22 * n - 40) / 15;
    if !profile.has_internal_deg3 {
        bound = bound.min((4 * n - 9) / 3);
    }
    if !profile.has_internal_deg5 {
        bound = bound.min((4 * n - 7) / 3);
    }
    if four_connected {
        bound = bound.min(n - 1);
    }
    bound as u32
}

/// [`theoretical_width_bound`] with the profile and connectivity read off `g`.
pub fn width_bound_for(g: &PlaneTriangulation) -> u32 {
    let four = g.n() >= 5 && g.is_four_connected().unwrap_or(false);
    theoretical_width_bound(g.n(), g.internal_degree_profile(), four)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::realizer::canonical_ordering;

    fn debug() -> DrawOptions {
        DrawOptions {
            debug_validate: true,
        }
    }

    #[test]
    fn triangle_has_width_two() {
        let g = generators::triangle();
        let r = compute_realizer(&g);
        let d = draw(&g, &canonical_ordering(&g, &r, 0)).unwrap();
        assert_eq!((d.width, d.height), (2, 2));
        assert!(validate_drawing(&g, &d).ok());
    }

    #[test]
    fn k4_every_ordering_has_width_three() {
        let g = generators::k4();
        let all = crate::realizer::enumerate_canonical_orderings(&g, 100);
        assert!(!all.orderings.is_empty());
        for ord in &all.orderings {
            let (d, _) = draw_with(&g, ord, debug()).unwrap();
            assert_eq!(d.width, 3);
            assert!(validate_drawing(&g, &d).ok());
        }
    }

    #[test]
    fn bounds_table() {
        let none = DegreeProfile {
            has_internal_deg3: true,
            has_internal_deg5: true,
        };
        let no3 = DegreeProfile {
            has_internal_deg3: false,
            has_internal_deg5: true,
        };
        assert_eq!(theoretical_width_bound(10, none, false), 12);
        assert_eq!(theoretical_width_bound(10, no3, false), 10);
        assert_eq!(theoretical_width_bound(12, none, true), 11);
        assert_eq!(theoretical_width_bound(4, none, false), 3);
        assert_eq!(theoretical_width_bound(1000, none, false), 1464);
    }

    #[test]
    fn debug_mode_on_random_instances() {
        for seed in 0..20 {
            let g = generators::random(60, seed, 120).unwrap();
            let r = compute_realizer(&g);
            for i in 0..3 {
                let ord = canonical_ordering(&g, &r, i);
                let (d, _) = draw_with(&g, &ord, debug()).unwrap();
                let report = validate_drawing(&g, &d);
                assert!(report.ok(), "{:?}", report.violations);
                assert!(d.height <= 59);
            }
        }
    }

    #[test]
    fn rejects_non_canonical_order() {
        let g = generators::octahedron();
        let r = compute_realizer(&g);
        let mut ord = canonical_ordering(&g, &r, 0);
        ord.order.swap(2, 5);
        let ord = CanonicalOrdering::from_order(ord.order, 0);
        assert!(draw_with(&g, &ord, debug()).is_err());
    }

    #[test]
    fn icosahedron_needs_the_four_connected_ordering() {
        let g = generators::icosahedron();
        let b = best_of_three(&g).unwrap();
        assert_eq!(b.drawing.width, *b.widths.iter().min().unwrap());
        // Each realizer ordering scores 15 here, so 36 - 8 - 15 = 13 columns.
        assert_eq!(b.widths, [13, 13, 13]);
        let best = best_drawing(&g).unwrap();
        assert_eq!(best.chosen, OrderingChoice::FourConnected);
        assert!(best.drawing.width <= 11);
        assert!(validate_drawing(&g, &best.drawing).ok());
    }

    #[test]
    fn best_drawing_matches_best_of_three_without_four_connectivity() {
        let g = generators::stacked(40, 2).unwrap();
        let three = best_of_three(&g).unwrap();
        let best = best_drawing(&g).unwrap();
        assert_eq!(best.drawing, three.drawing);
        assert_eq!(best.four_connected_width, None);
    }
}
