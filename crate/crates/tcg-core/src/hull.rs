//! Static circular hulls: the intersection of all radius-`r` disks
//! containing a point set, maintained under insertions that arrive in
//! x-sorted or radially sorted order.
//!
//! The hull is stored as a clockwise doubly-linked cycle of vertices in an
//! arena (vertex ids stay stable across splices, which the dynamic layer
//! relies on). The boundary between consecutive vertices `u -> cw(u)` is
//! always a minor arc bulging away from the interior.
//!
//! Insertion works by two boundary scans that walk away from the *anchor*
//! (the most recent non-redundant vertex) and locate the two vertices where
//! the new point's tangent arcs attach; everything strictly between them on
//! the anchor side is discarded. Because insertions arrive in order, a
//! single arc incident to the anchor decides redundancy in O(1), and each
//! scan's work is charged to vertices it deletes — the classic amortized
//! O(1) update.
//!
//! The scans are generic over [`HullNav`] so the same code drives both this
//! structure and the deletion-side structure in [`crate::dynamic`], with
//! optional neighbor overrides used when a scan has to look across a
//! tangent arc onto another hull.

use alloc::vec::Vec;

use crate::geom::{lens_contains, tolerance, MinorArc, Point};

/// Stable handle to a hull vertex.
pub type VertexId = usize;

/// Clockwise navigation over a hull boundary.
pub trait HullNav {
    fn cw_of(&self, v: VertexId) -> VertexId;
    fn ccw_of(&self, v: VertexId) -> VertexId;
    fn pt(&self, v: VertexId) -> Point;
}

/// Neighbor substitutions for scans that run on a hull spliced into a
/// larger boundary: at vertex `at`, the stated neighbor is replaced by a
/// point on the other hull (the far endpoint of a tangent arc).
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub cw: Option<(VertexId, Point)>,
    pub ccw: Option<(VertexId, Point)>,
}

impl Overrides {
    pub const NONE: Overrides = Overrides { cw: None, ccw: None };

    fn cw_pt<H: HullNav>(&self, h: &H, v: VertexId) -> Point {
        match self.cw {
            Some((at, p)) if at == v => p,
            _ => h.pt(h.cw_of(v)),
        }
    }

    fn ccw_pt<H: HullNav>(&self, h: &H, v: VertexId) -> Point {
        match self.ccw {
            Some((at, p)) if at == v => p,
            _ => h.pt(h.ccw_of(v)),
        }
    }
}

/// Outcome of a tangent-finding boundary scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// The vertex where the new point's arc attaches; the boundary turns
    /// here. For a counterclockwise scan this is the start `a` of the new
    /// arc `a -> p`; for a clockwise scan the end `b` of `p -> b`.
    Tangent(VertexId),
    /// Every remaining vertex lies inside the two-point hull of `(v, p)`;
    /// the whole boundary collapses to those two vertices.
    Collapse(VertexId),
    /// The step budget ran out without a tangent: the merged hull does not
    /// exist (or a precondition was violated).
    Exhausted,
}

/// A completed scan: outcome plus the number of vertices visited.
#[derive(Clone, Copy, Debug)]
pub struct Scan {
    pub outcome: ScanOutcome,
    pub steps: u64,
}

/// Walks counterclockwise from `start` looking for the vertex `a` such
/// that `a -> p` is a boundary arc of the merged hull. At each vertex the
/// collapse test runs first, then the turn test against the *incoming*
/// (counterclockwise-side) arc.
pub fn scan_ccw<H: HullNav>(
    h: &H,
    p: Point,
    r: f64,
    start: VertexId,
    max_steps: usize,
    ov: Overrides,
) -> Scan {
    let mut v = start;
    for steps in 1..=max_steps as u64 {
        let vp = h.pt(v);
        let cw_pt = ov.cw_pt(h, v);
        let ccw_pt = ov.ccw_pt(h, v);
        if lens_contains(vp, p, r, cw_pt) && lens_contains(vp, p, r, ccw_pt) {
            return Scan {
                outcome: ScanOutcome::Collapse(v),
                steps,
            };
        }
        if let Some(w) = MinorArc::cw(ccw_pt, vp, r) {
            if w.supporting_disk().contains(p) {
                return Scan {
                    outcome: ScanOutcome::Tangent(v),
                    steps,
                };
            }
        }
        v = h.ccw_of(v);
    }
    Scan {
        outcome: ScanOutcome::Exhausted,
        steps: max_steps as u64,
    }
}

/// Mirror of [`scan_ccw`]: walks clockwise looking for the vertex `b` such
/// that `p -> b` is a boundary arc, testing the *outgoing*
/// (clockwise-side) arc at each vertex.
pub fn scan_cw<H: HullNav>(
    h: &H,
    p: Point,
    r: f64,
    start: VertexId,
    max_steps: usize,
    ov: Overrides,
) -> Scan {
    let mut v = start;
    for steps in 1..=max_steps as u64 {
        let vp = h.pt(v);
        let cw_pt = ov.cw_pt(h, v);
        let ccw_pt = ov.ccw_pt(h, v);
        if lens_contains(vp, p, r, cw_pt) && lens_contains(vp, p, r, ccw_pt) {
            return Scan {
                outcome: ScanOutcome::Collapse(v),
                steps,
            };
        }
        if let Some(w) = MinorArc::cw(vp, cw_pt, r) {
            if w.supporting_disk().contains(p) {
                return Scan {
                    outcome: ScanOutcome::Tangent(v),
                    steps,
                };
            }
        }
        v = h.cw_of(v);
    }
    Scan {
        outcome: ScanOutcome::Exhausted,
        steps: max_steps as u64,
    }
}

/// Result of a checked insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The point became a hull vertex (possibly deleting others).
    Inserted,
    /// The point already lies in the hull; nothing changed.
    Redundant,
    /// No radius-`r` disk covers the hull and the new point together;
    /// nothing changed.
    NotCoverable,
}

/// Why a batch build stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullError {
    /// Input violated the required insertion order at this index.
    UnsortedInput { index: usize },
    /// The prefix before `index` is coverable but adding `points[index]`
    /// exceeds every radius-`r` disk.
    Uncoverable { index: usize },
}

impl core::fmt::Display for HullError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HullError::UnsortedInput { index } => {
                write!(f, "input not in required order at index {index}")
            }
            HullError::Uncoverable { index } => {
                write!(f, "point at index {index} makes the set uncoverable")
            }
        }
    }
}

/// Insertion order the hull was built under; determines the separation
/// line used by the O(1) redundancy test.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InsertionMode {
    /// Points arrive by nondecreasing x; the anchor is the rightmost vertex.
    XSorted,
    /// Points arrive clockwise by angle around the origin point.
    Radial(Point),
}

#[derive(Clone, Copy, Debug)]
struct Node {
    p: Point,
    cw: VertexId,
    ccw: VertexId,
    live: bool,
}

/// A circular hull under ordered insertions.
#[derive(Clone, Debug)]
pub struct CircularHull {
    radius: f64,
    mode: InsertionMode,
    nodes: Vec<Node>,
    anchor: Option<VertexId>,
    len: usize,
    scan_steps: u64,
}

impl HullNav for CircularHull {
    #[inline]
    fn cw_of(&self, v: VertexId) -> VertexId {
        self.nodes[v].cw
    }
    #[inline]
    fn ccw_of(&self, v: VertexId) -> VertexId {
        self.nodes[v].ccw
    }
    #[inline]
    fn pt(&self, v: VertexId) -> Point {
        self.nodes[v].p
    }
}

impl CircularHull {
    pub fn new(radius: f64) -> Self {
        Self::with_mode(radius, InsertionMode::XSorted)
    }

    pub fn new_radial(radius: f64, origin: Point) -> Self {
        Self::with_mode(radius, InsertionMode::Radial(origin))
    }

    pub fn with_mode(radius: f64, mode: InsertionMode) -> Self {
        CircularHull {
            radius,
            mode,
            nodes: Vec::new(),
            anchor: None,
            len: 0,
            scan_steps: 0,
        }
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The most recent non-redundant vertex.
    #[inline]
    pub fn anchor(&self) -> Option<VertexId> {
        self.anchor
    }

    /// Total vertices visited by insertion scans so far.
    #[inline]
    pub fn scan_steps(&self) -> u64 {
        self.scan_steps
    }

    #[inline]
    pub fn is_live(&self, v: VertexId) -> bool {
        self.nodes[v].live
    }

    /// The boundary arc from `u` to its clockwise neighbor.
    pub fn arc_cw(&self, u: VertexId) -> MinorArc {
        MinorArc::cw(self.pt(u), self.pt(self.cw_of(u)), self.radius)
            .expect("adjacent hull vertices are within 2r")
    }

    /// Live vertex ids clockwise starting at `from`.
    pub fn ids_cw_from(&self, from: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.len);
        let mut v = from;
        loop {
            out.push(v);
            v = self.cw_of(v);
            if v == from {
                break;
            }
            debug_assert!(out.len() <= self.len);
        }
        out
    }

    /// Vertex positions clockwise from the lexicographically smallest; the
    /// canonical form the brute-force oracle also produces.
    pub fn vertices(&self) -> Vec<Point> {
        let Some(anchor) = self.anchor else {
            return Vec::new();
        };
        let ids = self.ids_cw_from(anchor);
        let min_pos = ids
            .iter()
            .enumerate()
            .min_by(|(_, &a), (_, &b)| {
                self.pt(a).lex_key().partial_cmp(&self.pt(b).lex_key()).unwrap()
            })
            .map(|(i, _)| i)
            .unwrap();
        ids[min_pos..]
            .iter()
            .chain(ids[..min_pos].iter())
            .map(|&v| self.pt(v))
            .collect()
    }

    /// Hull membership, closed within tolerance: inside every boundary
    /// arc's supporting disk. O(len).
    pub fn contains(&self, t: Point) -> bool {
        match self.anchor {
            None => false,
            Some(a) if self.len == 1 => self.pt(a).approx_eq(t),
            Some(a) => self
                .ids_cw_from(a)
                .iter()
                .all(|&v| self.arc_cw(v).supporting_disk().contains(t)),
        }
    }

    /// The live vertex extreme in direction `dir` (ties broken by walk
    /// order). O(len).
    pub fn extreme_vertex(&self, dir: Point) -> Option<VertexId> {
        let anchor = self.anchor?;
        let mut best = anchor;
        let mut best_val = self.pt(anchor).dot(dir);
        for v in self.ids_cw_from(anchor) {
            let val = self.pt(v).dot(dir);
            if val > best_val {
                best = v;
                best_val = val;
            }
        }
        Some(best)
    }

    /// The boundary arc attaining the hull's extreme point in direction
    /// `dir`, assuming that extreme point lies on an arc incident to the
    /// anchor (which ordered insertion guarantees for the direction facing
    /// the incoming point). Returns the arc as (owner vertex, arc).
    fn anchor_extreme_arc(&self, dir: Point) -> Option<(VertexId, MinorArc)> {
        let anchor = self.anchor?;
        if self.len < 2 {
            return None;
        }
        let incoming = (self.ccw_of(anchor), self.arc_cw(self.ccw_of(anchor)));
        let outgoing = (anchor, self.arc_cw(anchor));
        let vi = incoming.1.extremum_along(dir).1;
        let vo = outgoing.1.extremum_along(dir).1;
        Some(if vi >= vo { incoming } else { outgoing })
    }

    /// Direction from the separation line through the anchor toward the
    /// half-plane new points arrive from.
    fn advance_dir(&self) -> Point {
        match (self.mode, self.anchor) {
            (InsertionMode::XSorted, _) => Point::new(1.0, 0.0),
            (InsertionMode::Radial(o), Some(a)) => {
                let radial = self.pt(a) - o;
                if radial.norm() <= tolerance() {
                    Point::new(1.0, 0.0)
                } else {
                    radial.rot90_cw().unit()
                }
            }
            (InsertionMode::Radial(_), None) => Point::new(1.0, 0.0),
        }
    }

    /// O(1) redundancy test for a point `p` arriving in insertion order:
    /// `p` lies in the hull iff it lies in the cap region of the extreme
    /// arc facing it.
    pub fn is_redundant(&self, p: Point) -> bool {
        match self.len {
            0 => false,
            1 => self.pt(self.anchor.unwrap()).approx_eq(p),
            _ => {
                let dir = self.advance_dir();
                let (_, arc) = self.anchor_extreme_arc(dir).unwrap();
                crate::geom::in_d1_region(&arc, p)
            }
        }
    }

    fn push_node(&mut self, p: Point) -> VertexId {
        let id = self.nodes.len();
        self.nodes.push(Node {
            p,
            cw: id,
            ccw: id,
            live: true,
        });
        self.len += 1;
        id
    }

    /// Splices `p` into the cycle between `a` and `b`: kills everything
    /// strictly between `a` and `b` clockwise, then links `a -> p -> b`.
    /// `a == b` removes all other vertices. Returns the new vertex id.
    pub fn splice(&mut self, a: VertexId, b: VertexId, p: Point) -> VertexId {
        debug_assert!(self.nodes[a].live && self.nodes[b].live);
        let mut v = self.cw_of(a);
        while v != b {
            debug_assert!(v != a, "splice walked past its own start");
            let next = self.cw_of(v);
            self.nodes[v].live = false;
            self.len -= 1;
            v = next;
        }
        let id = self.push_node(p);
        self.nodes[a].cw = id;
        self.nodes[id].ccw = a;
        self.nodes[id].cw = b;
        self.nodes[b].ccw = id;
        self.anchor = Some(id);
        id
    }

    /// Collapses the hull to the two vertices `{v, p}`.
    pub fn collapse_to(&mut self, v: VertexId, p: Point) -> VertexId {
        debug_assert!(self.nodes[v].live);
        let mut u = self.cw_of(v);
        while u != v {
            let next = self.cw_of(u);
            self.nodes[u].live = false;
            self.len -= 1;
            u = next;
        }
        let id = self.push_node(p);
        self.nodes[v].cw = id;
        self.nodes[v].ccw = id;
        self.nodes[id].cw = v;
        self.nodes[id].ccw = v;
        self.anchor = Some(id);
        id
    }

    /// Checked insertion of the next point in insertion order. Validates
    /// the scan outcome against every current vertex (O(len)) so that an
    /// uncoverable point is reported rather than spliced; the amortized
    /// O(1) path without this validation is [`CircularHull::splice`]
    /// driven by an external existence argument.
    pub fn insert(&mut self, p: Point) -> Insert {
        match self.len {
            0 => {
                let id = self.push_node(p);
                self.anchor = Some(id);
                Insert::Inserted
            }
            1 => {
                let a = self.anchor.unwrap();
                let q = self.pt(a);
                if q.approx_eq(p) {
                    return Insert::Redundant;
                }
                if !crate::geom::pair_coverable(q, p, self.radius) {
                    return Insert::NotCoverable;
                }
                let id = self.push_node(p);
                self.nodes[a].cw = id;
                self.nodes[a].ccw = id;
                self.nodes[id].cw = a;
                self.nodes[id].ccw = a;
                self.anchor = Some(id);
                Insert::Inserted
            }
            _ => {
                if self.is_redundant(p) {
                    return Insert::Redundant;
                }
                let start = self.anchor.unwrap();
                let budget = self.len + 1;
                let up = scan_ccw(self, p, self.radius, start, budget, Overrides::NONE);
                self.scan_steps += up.steps;
                match up.outcome {
                    ScanOutcome::Collapse(v) => {
                        if !self.all_in_lens(v, p) {
                            return Insert::NotCoverable;
                        }
                        self.collapse_to(v, p);
                        Insert::Inserted
                    }
                    ScanOutcome::Tangent(a) => {
                        let down = scan_cw(self, p, self.radius, start, budget, Overrides::NONE);
                        self.scan_steps += down.steps;
                        match down.outcome {
                            ScanOutcome::Collapse(v) => {
                                if !self.all_in_lens(v, p) {
                                    return Insert::NotCoverable;
                                }
                                self.collapse_to(v, p);
                                Insert::Inserted
                            }
                            ScanOutcome::Tangent(b) => {
                                if !self.validate_tangents(a, b, p) {
                                    return Insert::NotCoverable;
                                }
                                self.splice(a, b, p);
                                Insert::Inserted
                            }
                            ScanOutcome::Exhausted => Insert::NotCoverable,
                        }
                    }
                    ScanOutcome::Exhausted => Insert::NotCoverable,
                }
            }
        }
    }

    fn all_in_lens(&self, v: VertexId, p: Point) -> bool {
        let vp = self.pt(v);
        self.ids_cw_from(v)
            .iter()
            .all(|&u| lens_contains(vp, p, self.radius, self.pt(u)))
    }

    /// True when the arcs `a -> p` and `p -> b` support the whole vertex
    /// set, i.e. the merged hull exists and the splice is correct.
    fn validate_tangents(&self, a: VertexId, b: VertexId, p: Point) -> bool {
        let (Some(w1), Some(w2)) = (
            MinorArc::cw(self.pt(a), p, self.radius),
            MinorArc::cw(p, self.pt(b), self.radius),
        ) else {
            return false;
        };
        let d1 = w1.supporting_disk();
        let d2 = w2.supporting_disk();
        self.ids_cw_from(a)
            .iter()
            .all(|&u| d1.contains(self.pt(u)) && d2.contains(self.pt(u)))
    }

    /// Structural invariants, for tests and debugging: a single clockwise
    /// cycle of `len` live vertices whose arcs all support every vertex.
    pub fn check_invariants(&self) {
        let Some(anchor) = self.anchor else {
            assert_eq!(self.len, 0);
            return;
        };
        assert!(self.nodes[anchor].live, "anchor must be live");
        let ids = self.ids_cw_from(anchor);
        assert_eq!(ids.len(), self.len, "cycle length mismatch");
        for &v in &ids {
            assert!(self.nodes[v].live);
            assert_eq!(self.ccw_of(self.cw_of(v)), v, "cw/ccw links disagree");
        }
        if self.len >= 2 && self.len <= 256 {
            for &v in &ids {
                let d = self.arc_cw(v).supporting_disk();
                for &u in &ids {
                    assert!(
                        d.contains(self.pt(u)),
                        "vertex {:?} escapes supporting disk of arc at {:?}",
                        self.pt(u),
                        self.pt(v)
                    );
                }
            }
        }
    }
}

/// Builds the radius-`r` hull of points sorted by nondecreasing x.
/// Reports the first index whose point makes the running set uncoverable.
pub fn build_x_sorted(points: &[Point], r: f64) -> Result<CircularHull, HullError> {
    for i in 1..points.len() {
        if points[i].x < points[i - 1].x - tolerance() {
            return Err(HullError::UnsortedInput { index: i });
        }
    }
    let mut hull = CircularHull::new(r);
    for (index, &p) in points.iter().enumerate() {
        if hull.insert(p) == Insert::NotCoverable {
            return Err(HullError::Uncoverable { index });
        }
    }
    Ok(hull)
}

/// Builds the radius-`r` hull of points sorted clockwise by angle around
/// `origin` (each consecutive step under half a turn, less than one full
/// turn in total).
pub fn build_radial(points: &[Point], origin: Point, r: f64) -> Result<CircularHull, HullError> {
    let mut total = 0.0;
    for i in 1..points.len() {
        let prev = (points[i - 1] - origin).angle();
        let cur = (points[i] - origin).angle();
        let mut step = prev - cur; // clockwise = decreasing angle
        if step < 0.0 {
            step += 2.0 * core::f64::consts::PI;
        }
        if step > core::f64::consts::PI + 1e-9 {
            return Err(HullError::UnsortedInput { index: i });
        }
        total += step;
        if total >= 2.0 * core::f64::consts::PI - 1e-12 {
            return Err(HullError::UnsortedInput { index: i });
        }
    }
    let mut hull = CircularHull::new_radial(r, origin);
    for (index, &p) in points.iter().enumerate() {
        if hull.insert(p) == Insert::NotCoverable {
            return Err(HullError::Uncoverable { index });
        }
    }
    Ok(hull)
}
