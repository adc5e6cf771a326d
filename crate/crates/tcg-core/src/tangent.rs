//! Logarithmic tangent and dominance queries on frozen hull snapshots.
//!
//! A [`FrozenHull`] is an immutable, rank-indexed copy of a circular hull's
//! vertex cycle, stored in the order the binary searches walk it: a *left*
//! hull lists its vertices counterclockwise from the rightmost one, a
//! *right* hull clockwise from the leftmost one. Either way, tangent
//! candidates for the facing hull appear early in the list, and rank
//! arithmetic gives O(1) access to any vertex and its cycle neighbors.
//!
//! Three queries run on these snapshots, all in O(log n) probes:
//!
//! * [`point_tangents`] — the two tangent arcs from a point across the
//!   separator to a hull, by bisecting the before/at/past partition the
//!   tangent vertex induces on the list.
//! * [`dominating_check`] — whether every hull vertex lies in a given disk
//!   of the same radius. The disk qualifies exactly when its center lies in
//!   the dual hull of valid covering-disk centers, whose vertex cycle is
//!   the cycle of the hull's own boundary-arc centers; locating the center
//!   in the dual's angular fan pins the one binding vertex to probe.
//! * [`common_tangents_log`] — the two common tangent arcs of two hulls
//!   separated by a vertical line, by a coupled bisection that classifies a
//!   probed vertex pair into nine cases and discards half of one hull per
//!   round; dominance of either side is detected first, and a per-probe
//!   coverability guard turns the search into an existence test.
//!
//! A *probe* is the examination of one vertex (dominance walk) or one
//! vertex pair (tangent searches); each probe performs O(1) geometric
//! tests. [`SearchStats`] counts probes so callers can assert the
//! logarithmic bound.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::fmath;
use crate::geom::{
    in_d1_region, minor_arc_centers, pair_coverable, tangent_disk_covers_neighbors, tolerance,
    Disk, MinorArc, Point,
};
use crate::hull::{CircularHull, HullNav};

/// Which side of the separating line a hull lives on. The side fixes the
/// vertex storage order and the orientation of tangent arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Immutable rank-indexed snapshot of a hull's vertex cycle. Rank 0 is the
/// extreme vertex facing the other side (rightmost for a left hull,
/// leftmost for a right hull); successive ranks walk the boundary so that
/// ranks `k - 1` and `k + 1` (cyclically) are the cycle neighbors of rank
/// `k`.
#[derive(Clone, Debug)]
pub struct FrozenHull {
    verts: Vec<Point>,
    side: Side,
    radius: f64,
    /// Dual vertex between ranks 0 and 1, cached as the fan apex for the
    /// dominance search (`None` for single-vertex hulls).
    apex: Option<Point>,
}

/// Snapshots a hull for the logarithmic searches. O(n); the snapshot is
/// unaffected by later mutation of `hull`.
pub fn freeze(hull: &CircularHull, side: Side) -> FrozenHull {
    assert!(!hull.is_empty(), "cannot freeze an empty hull");
    let dir = match side {
        Side::Left => Point::new(1.0, 0.0),
        Side::Right => Point::new(-1.0, 0.0),
    };
    let start = hull.extreme_vertex(dir).expect("nonempty hull has an extreme");
    let cw_pts: Vec<Point> = hull.ids_cw_from(start).iter().map(|&v| hull.pt(v)).collect();
    let mut verts = Vec::with_capacity(cw_pts.len());
    match side {
        // Counterclockwise from the rightmost vertex: reverse the clockwise
        // walk, keeping the extreme in front.
        Side::Left => {
            verts.push(cw_pts[0]);
            verts.extend(cw_pts[1..].iter().rev().copied());
        }
        Side::Right => verts.extend_from_slice(&cw_pts),
    }
    let mut snap = FrozenHull {
        verts,
        side,
        radius: hull.radius(),
        apex: None,
    };
    if snap.verts.len() >= 2 {
        snap.apex = Some(snap.dual_vertex(0));
    }
    snap
}

impl FrozenHull {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Vertex at `rank` in the storage order.
    pub fn vertex(&self, rank: usize) -> Point {
        self.verts[rank]
    }

    /// All vertices in storage order.
    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    /// The boundary arc spanning the hull's facing extreme direction (+x
    /// for a left hull, -x for a right hull), or `None` when that extreme
    /// is attained at a vertex. The spanning arc, when it exists, is always
    /// incident to the rank-0 vertex: the boundary crosses any vertical
    /// line at most twice, so no other arc can reach past the extreme
    /// vertex.
    pub fn extreme_arc(&self) -> Option<MinorArc> {
        let n = self.verts.len();
        if n < 2 {
            return None;
        }
        let dir = match self.side {
            Side::Left => Point::new(1.0, 0.0),
            Side::Right => Point::new(-1.0, 0.0),
        };
        // The two clockwise boundary arcs incident to rank 0.
        let candidates = match self.side {
            Side::Left => [
                (self.verts[1], self.verts[0]),
                (self.verts[0], self.verts[n - 1]),
            ],
            Side::Right => [
                (self.verts[n - 1], self.verts[0]),
                (self.verts[0], self.verts[1]),
            ],
        };
        for (a, b) in candidates {
            if let Some(arc) = MinorArc::cw(a, b, self.radius) {
                if arc.spans_direction(dir) {
                    return Some(arc);
                }
            }
        }
        None
    }

    /// Center of the boundary arc between ranks `j` and `j + 1` — a vertex
    /// of the dual hull of valid covering-disk centers. Consecutive hull
    /// vertices are never farther than a diameter apart, so the fallback
    /// midpoint only absorbs the diametral rounding edge.
    fn dual_vertex(&self, j: usize) -> Point {
        let n = self.verts.len();
        let a = self.verts[j];
        let b = self.verts[(j + 1) % n];
        match minor_arc_centers(a, b, self.radius) {
            // Ranks walk counterclockwise on a left hull and clockwise on a
            // right one; pick the center of the physical clockwise boundary
            // arc accordingly.
            Some((cw_c, ccw_c)) => match self.side {
                Side::Left => ccw_c,
                Side::Right => cw_c,
            },
            None => a.mid(b),
        }
    }
}

/// Probe counter for the logarithmic searches. One probe examines one
/// vertex (dominance) or one vertex pair (tangent bisection) with O(1)
/// geometric tests.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub probes: usize,
}

/// Result of the tangents-from-a-point query.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointTangents {
    /// Touch vertices of the two tangent arcs: `upper` starts the arc that
    /// bounds the merged hull above, `lower` ends the one below.
    UpperLower { upper: Point, lower: Point },
    /// The query point lies inside the hull (within the extreme arc's cap
    /// region): the hull dominates and no tangents exist.
    LDominating,
    /// No radius-`r` disk covers the hull together with the query point.
    NotCoverable,
}

/// Both tangents from `q` to the frozen hull, `q` lying strictly across
/// the separator from `h`. O(log n) probes.
pub fn point_tangents(h: &FrozenHull, q: Point) -> PointTangents {
    let mut stats = SearchStats::default();
    point_tangents_with_stats(h, q, &mut stats)
}

/// [`point_tangents`] with probe accounting.
pub fn point_tangents_with_stats(
    h: &FrozenHull,
    q: Point,
    stats: &mut SearchStats,
) -> PointTangents {
    // Dominance short-circuit: a far-side point inside the supporting disk
    // of the facing extreme arc is inside the hull (the disk's far-side cap
    // is entirely hull); outside that disk it cannot be, and when the
    // extreme is a vertex the far side is out of reach altogether.
    if let Some(w) = h.extreme_arc() {
        if in_d1_region(&w, q) {
            return PointTangents::LDominating;
        }
    }
    let upper = match bisect_point(View { h, flip: false }, q, stats) {
        Some(a) => a,
        None => return PointTangents::NotCoverable,
    };
    let lower = match bisect_point(View { h, flip: true }, reflect(q), stats) {
        Some(b) => reflect(b),
        None => return PointTangents::NotCoverable,
    };
    PointTangents::UpperLower { upper, lower }
}

/// True when every vertex of `h` lies in `d` (closed, with tolerance).
/// `d` must have the hull's radius; the caller passes the supporting disk
/// of the *opposite* hull's extreme arc when testing dominance.
pub fn dominating_check(h: &FrozenHull, d: &Disk) -> bool {
    let mut stats = SearchStats::default();
    dominating_check_with_stats(h, d, &mut stats)
}

/// [`dominating_check`] with probe accounting; at most ceil(log2 n) + 2
/// probes.
///
/// A radius-r disk contains all vertices exactly when its center lies in
/// the dual hull `K`, the intersection of the radius-r disks *centered at*
/// the vertices. `K`'s vertex cycle is the cycle of the hull's boundary-arc
/// centers (each such center is at distance r from every vertex it
/// supports, and supports the whole hull), each dual boundary arc lies on
/// the circle around one hull vertex, and from the cached apex the other
/// dual vertices appear in sorted angular order. Binary-searching the
/// center's direction in that fan pins the one dual arc the ray exits
/// through, hence the single binding vertex; outside the fan only the two
/// arcs incident to the apex can bind.
pub fn dominating_check_with_stats(h: &FrozenHull, d: &Disk, stats: &mut SearchStats) -> bool {
    let n = h.verts.len();
    if n == 0 {
        return true;
    }
    debug_assert!(
        fmath::fabs(d.radius - h.radius) <= tolerance(),
        "dominance probes assume the disk matches the hull radius"
    );
    let probe = |k: usize, stats: &mut SearchStats| -> bool {
        stats.probes += 1;
        d.contains(h.verts[k])
    };
    if n == 1 {
        return probe(0, stats);
    }
    if n == 2 {
        return probe(0, stats) && probe(1, stats);
    }
    let apex = h.apex.expect("multi-vertex snapshot caches its apex");
    let w = d.center - apex;
    // The fan rotates with the rank order: counterclockwise on a left
    // hull, clockwise on a right one.
    let orient = match h.side {
        Side::Left => 1.0,
        Side::Right => -1.0,
    };
    let (mut lo, mut hi) = (1usize, n - 1);
    let mut last_before = 0usize;
    while lo <= hi {
        let mid = (lo + hi) / 2;
        stats.probes += 1;
        let u = h.dual_vertex(mid) - apex;
        if orient * u.cross(w) >= 0.0 {
            last_before = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    if last_before == 0 {
        probe(0, stats) && probe(1, stats)
    } else if last_before == n - 1 {
        probe(n - 1, stats) && probe(0, stats)
    } else {
        probe(last_before + 1, stats)
    }
}

/// The two common tangent arcs of a separated hull pair: `upper` runs
/// clockwise from its left-hull vertex to its right-hull vertex over the
/// top, `lower` counterclockwise underneath (stored as (left, right)
/// vertices as well). Each tangent's supporting disk covers both hulls.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentPair {
    pub upper: (Point, Point),
    pub lower: (Point, Point),
}

/// Outcome of the common-tangent search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CommonTangents {
    Tangents(TangentPair),
    /// One hull contains the other side's points entirely; the merged hull
    /// is that hull and no common tangents exist.
    Dominating(Side),
    /// No radius-`r` disk covers both point sets.
    NonExistent,
}

/// Common tangents of a left and a right frozen hull separated by a
/// vertical line. O(log |HL| + log |HR|) probes.
pub fn common_tangents_log(hl: &FrozenHull, hr: &FrozenHull) -> CommonTangents {
    let mut stats = SearchStats::default();
    common_tangents_log_with_stats(hl, hr, &mut stats)
}

/// [`common_tangents_log`] with probe accounting.
pub fn common_tangents_log_with_stats(
    hl: &FrozenHull,
    hr: &FrozenHull,
    stats: &mut SearchStats,
) -> CommonTangents {
    assert_eq!(hl.side, Side::Left, "first hull must be frozen as Left");
    assert_eq!(hr.side, Side::Right, "second hull must be frozen as Right");
    assert!(!hl.is_empty() && !hr.is_empty());
    assert!(
        hl.verts[0].x < hr.verts[0].x + tolerance(),
        "hulls must be separated by a vertical line, left first"
    );

    // Dominance first: a dominated side contributes no tangent vertex, so
    // the bisections below presume both checks failed. Each check tests the
    // dominated candidate's vertices against the supporting disk of the
    // facing extreme arc; if that extreme is a vertex, the bulge needed to
    // swallow the other side is missing and the case cannot happen.
    if let Some(w) = hr.extreme_arc() {
        if dominating_check_with_stats(hl, &w.supporting_disk(), stats) {
            return CommonTangents::Dominating(Side::Right);
        }
    }
    if let Some(w) = hl.extreme_arc() {
        if dominating_check_with_stats(hr, &w.supporting_disk(), stats) {
            return CommonTangents::Dominating(Side::Left);
        }
    }

    // Any vertical line strictly between the extreme vertices separates
    // the point sets.
    let sep_x = (hl.verts[0].x + hr.verts[0].x) / 2.0;

    let upper = match bisect_pair(
        View { h: hl, flip: false },
        View { h: hr, flip: false },
        sep_x,
        stats,
    ) {
        Some(t) => t,
        None => return CommonTangents::NonExistent,
    };
    // The lower tangent is the upper tangent of the mirrored pair.
    let lower = match bisect_pair(
        View { h: hl, flip: true },
        View { h: hr, flip: true },
        sep_x,
        stats,
    ) {
        Some((b1, b2)) => (reflect(b1), reflect(b2)),
        None => return CommonTangents::NonExistent,
    };
    CommonTangents::Tangents(TangentPair { upper, lower })
}

fn reflect(p: Point) -> Point {
    Point::new(p.x, -p.y)
}

/// One oriented traversal of a frozen hull. `flip` mirrors the geometry
/// across the x-axis (reversing the storage order), which turns the
/// lower-tangent search into the upper-tangent search on the mirror image —
/// the one search routine serves both.
#[derive(Clone, Copy)]
struct View<'a> {
    h: &'a FrozenHull,
    flip: bool,
}

impl View<'_> {
    fn len(&self) -> usize {
        self.h.verts.len()
    }

    fn radius(&self) -> f64 {
        self.h.radius
    }

    /// Vertex at `rank`, cyclic, in view coordinates.
    fn pt(&self, rank: isize) -> Point {
        let n = self.h.verts.len() as isize;
        let k = rank.rem_euclid(n) as usize;
        if self.flip {
            let m = self.h.verts.len();
            reflect(self.h.verts[(m - k) % m])
        } else {
            self.h.verts[k]
        }
    }

    /// The directed tangent arc at hull vertex `v` toward or from the
    /// opposite-side point `x`: a left hull emits `cw(v, x)`, a right hull
    /// receives `cw(x, v)`. `None` when the pair exceeds the diameter.
    fn tangent_arc(&self, v: Point, x: Point) -> Option<MinorArc> {
        match self.h.side {
            Side::Left => MinorArc::cw(v, x, self.radius()),
            Side::Right => MinorArc::cw(x, v, self.radius()),
        }
    }

    /// The hull's boundary arc between ranks `k` and `k + 1` (cyclic), in
    /// view coordinates. Ranks walk counterclockwise on a left view and
    /// clockwise on a right one, so the physical clockwise arc runs from
    /// the higher rank on the left and from the lower on the right.
    fn hull_arc(&self, k: isize) -> Option<MinorArc> {
        if self.h.verts.len() < 2 {
            return None;
        }
        let a = self.pt(k);
        let b = self.pt(k + 1);
        match self.h.side {
            Side::Left => MinorArc::cw(b, a, self.radius()),
            Side::Right => MinorArc::cw(a, b, self.radius()),
        }
    }
}

/// Position of a probed vertex relative to the tangent vertex the search
/// is after, in the view's storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Chain {
    Before,
    At,
    Past,
}

/// Classifies the rank-`k` vertex against opposite point `x`. `None` when
/// no radius-bounded arc joins the probed vertex to `x` (that pair is not
/// coverable, so neither is the union). The at-tangent test comes first;
/// the list head is otherwise before-tangent by construction. For any
/// other vertex the head must be ruled out next: when the tangent from
/// `x` is the head itself, its disk covers the whole hull and the
/// membership test below would accept vacuously, so every non-head vertex
/// is reported past the tangent instead. Otherwise the vertex is before
/// the tangent exactly when the four-point prefix `{cw(v), v, head,
/// ccw(head)}` fits in one of the two candidate tangent disks.
///
/// The second return is a realness certificate for `x`: both tangency
/// verdicts exhibit a disk through `x` that covers this hull, so `x`
/// cannot be interior to it and the tangent from `x` genuinely exists.
/// The before/past verdicts carry no such proof — classified against an
/// interior `x` they are meaningless, and callers must not prune on them
/// without their own certificate.
fn classify(view: View<'_>, k: isize, x: Point) -> Option<(Chain, bool)> {
    let v = view.pt(k);
    let d = view.tangent_arc(v, x)?.supporting_disk();
    if tangent_disk_covers_neighbors(v, view.pt(k - 1), view.pt(k + 1), &d) {
        return Some((Chain::At, true));
    }
    if k == 0 {
        return Some((Chain::Before, false));
    }
    // The head may sit beyond the diameter from `x` even when the probed
    // vertex does not; it then simply cannot be the tangent and its disk
    // drops out of the membership test.
    let head = view.pt(0);
    let d_head = view.tangent_arc(head, x).map(|a| a.supporting_disk());
    if let Some(dh) = &d_head {
        if tangent_disk_covers_neighbors(head, view.pt(-1), view.pt(1), dh) {
            return Some((Chain::Past, true));
        }
    }
    let four = [view.pt(k - 1), v, head, view.pt(1)];
    let before = four.iter().all(|&t| d.contains(t))
        || d_head.as_ref().is_some_and(|dh| four.iter().all(|&t| dh.contains(t)));
    Some(if before {
        (Chain::Before, false)
    } else {
        (Chain::Past, false)
    })
}

/// Bisection for the tangent vertex from point `x` in view order, halving
/// on the before/past verdicts. `None` when some probed pair is
/// uncoverable or the candidates run out — either way no tangent exists.
fn bisect_point(view: View<'_>, x: Point, stats: &mut SearchStats) -> Option<Point> {
    bisect_point_range(view, x, 0, view.len() as isize - 1, stats)
}

/// `bisect_point` over a sub-range of ranks, for resuming a search whose
/// candidates have already been narrowed.
fn bisect_point_range(
    view: View<'_>,
    x: Point,
    mut lo: isize,
    mut hi: isize,
    stats: &mut SearchStats,
) -> Option<Point> {
    let r = view.radius();
    while lo <= hi {
        let mid = (lo + hi) / 2;
        stats.probes += 1;
        if !pair_coverable(view.pt(mid), x, r) {
            return None;
        }
        match classify(view, mid, x)?.0 {
            Chain::At => return Some(view.pt(mid)),
            Chain::Before => lo = mid + 1,
            Chain::Past => hi = mid - 1,
        }
    }
    None
}

/// Coupled bisection for one common tangent: classify the midpoint pair of
/// the two live rank intervals and prune one or both hulls each round.
/// Both full vertex cycles stay in play — a tangent endpoint can sit past
/// its hull's far extreme when the tangent arc bulges around it, so no
/// rank is off limits a priori.
///
/// Separated point sets can still have *overlapping* hulls — a boundary
/// arc may bulge across the separator past its own vertices — and a probed
/// vertex interior to the opposite hull sits off the merged boundary,
/// voiding the positional reasoning behind every table move. A round
/// therefore moves only with both probes proven real — not interior to
/// the opposite hull — via a verdict's own covering disk, a
/// supporting-disk miss, or, when a round would otherwise make no move,
/// an exact fan search. Intervals down to two ranks stop shrinking under
/// kept probes; a stalled round then anchors each surviving candidate on
/// a small side and settles the pair by a single-point search of the
/// other hull. A stall that survives the exact realness upgrade with
/// both sides wide only happens between deeply overlapping hulls and
/// falls back to the exhaustive anchor sweep, which is correct
/// unconditionally. Every other dead end — an emptied interval or a
/// missed stall anchor — first settles the head vertices, the one attach
/// point the verdict table can legitimately talk itself out of, and a
/// miss there concludes nonexistence. Returns the tangent's
/// (left vertex, right vertex) in view coordinates.
fn bisect_pair(
    v1: View<'_>,
    v2: View<'_>,
    sep_x: f64,
    stats: &mut SearchStats,
) -> Option<(Point, Point)> {
    let r = v1.radius();
    // With two candidate ranks or fewer on a side, anchoring each of them
    // outright is complete and cheaper than any round of coupled moves.
    if v1.len().min(v2.len()) <= 2 {
        return exhaustive_pair(v1, v2, stats);
    }
    let (mut lo1, mut hi1) = (0isize, v1.len() as isize - 1);
    let (mut lo2, mut hi2) = (0isize, v2.len() as isize - 1);
    while lo1 <= hi1 && lo2 <= hi2 {
        let m1 = (lo1 + hi1) / 2;
        let m2 = (lo2 + hi2) / 2;
        let p = v1.pt(m1);
        let q = v2.pt(m2);
        stats.probes += 1;
        if !pair_coverable(p, q, r) {
            return None;
        }
        let (c1, cert_q) = classify(v1, m1, q)?;
        let (c2, cert_p) = classify(v2, m2, p)?;
        if c1 == Chain::At && c2 == Chain::At {
            return Some((p, q));
        }
        let held = (lo1, hi1, lo2, hi2);
        let real_q = cert_q || outside_cert(v1, m1, q);
        let real_p = cert_p || outside_cert(v2, m2, p);
        (lo1, hi1, lo2, hi2) = pair_moves(
            v1,
            v2,
            (c1, c2),
            (m1, m2),
            (p, q),
            (real_q, real_p),
            held,
            sep_x,
        );
        if (lo1, hi1, lo2, hi2) != held {
            continue;
        }
        if hi1 - lo1 <= 1 || hi2 - lo2 <= 1 {
            // Stalled with a small side: anchor its surviving candidates
            // over the partner's full rank range — a genuine pair
            // verifies from either endpoint, so this settles the small
            // side for good regardless of why the table stopped moving.
            // The heads are then the one attach point the table can have
            // talked itself out of; settle any not just anchored.
            let full1 = (0, v1.len() as isize - 1);
            let full2 = (0, v2.len() as isize - 1);
            if hi1 - lo1 <= 1 {
                for rank in lo1..=hi1 {
                    if let Some(pair) = anchored_pair(v1, v2, rank, full2, stats) {
                        return Some(pair);
                    }
                }
            }
            if hi2 - lo2 <= 1 {
                for rank in lo2..=hi2 {
                    if let Some((q, p)) = anchored_pair(v2, v1, rank, full1, stats) {
                        return Some((p, q));
                    }
                }
            }
            if !(hi1 - lo1 <= 1 && lo1 == 0) {
                if let Some(pair) = anchored_pair(v1, v2, 0, full2, stats) {
                    return Some(pair);
                }
            }
            if !(hi2 - lo2 <= 1 && lo2 == 0) {
                if let Some((q, p)) = anchored_pair(v2, v1, 0, full1, stats) {
                    return Some((p, q));
                }
            }
            return None;
        }
        // Stalled wide. Settle interiority exactly where the cheap
        // certificates came up empty; a partner proven exterior unlocks
        // the verdict-table moves.
        let real_q = real_q || !inside_hull(v1, q, stats);
        let real_p = real_p || !inside_hull(v2, p, stats);
        (lo1, hi1, lo2, hi2) = pair_moves(
            v1,
            v2,
            (c1, c2),
            (m1, m2),
            (p, q),
            (real_q, real_p),
            held,
            sep_x,
        );
        if (lo1, hi1, lo2, hi2) != held {
            continue;
        }
        // Both sides wide, both partners' realness settled exactly, and
        // still no move: some probe is interior to the opposite hull and
        // pinned mid-interval, which no certified move can pass. Only
        // deeply overlapping hulls reach here.
        return exhaustive_pair(v1, v2, stats);
    }
    // A kill emptied an interval: no candidate survives the verdicts
    // except possibly a head, so settle the heads and conclude.
    head_insurance(v1, v2, stats)
}

/// A tangent that attaches at a hull's head — the extreme vertex facing
/// the other hull — can slip past the verdict table: the connecting arc
/// bulges around the facing sides, and every probe's local signal then
/// points away from the head, so a keep may discard it. Before concluding
/// nonexistence, anchor each head over the other hull's full range; a
/// genuine pair verifies from either endpoint, so a head-attached pair
/// cannot hide from both anchors.
fn head_insurance(v1: View<'_>, v2: View<'_>, stats: &mut SearchStats) -> Option<(Point, Point)> {
    if let Some(pair) = anchored_pair(v1, v2, 0, (0, v2.len() as isize - 1), stats) {
        return Some(pair);
    }
    if let Some((q, p)) = anchored_pair(v2, v1, 0, (0, v1.len() as isize - 1), stats) {
        return Some((p, q));
    }
    None
}

/// Last-resort resolution: anchor every rank of the smaller hull in turn
/// and settle each by a full point search of the other. A genuine tangent
/// pair verifies from either endpoint, so a sweep that anchors every
/// candidate endpoint cannot miss one, and a clean miss certifies the
/// merged hull does not exist. Linear in the smaller hull — only reached
/// on stalls the certificates cannot break.
fn exhaustive_pair(v1: View<'_>, v2: View<'_>, stats: &mut SearchStats) -> Option<(Point, Point)> {
    if v1.len() <= v2.len() {
        for rank in 0..v1.len() as isize {
            if let Some(pair) = anchored_pair(v1, v2, rank, (0, v2.len() as isize - 1), stats) {
                return Some(pair);
            }
        }
    } else {
        for rank in 0..v2.len() as isize {
            if let Some((q, p)) = anchored_pair(v2, v1, rank, (0, v1.len() as isize - 1), stats) {
                return Some((p, q));
            }
        }
    }
    None
}

/// One round of interval moves for [`bisect_pair`], returning the updated
/// bounds. A before verdict keeps its probe and drops the prefix; a past
/// verdict prunes the suffix, but only against a partner verdict that
/// pins the touch — at-tangent, or the crossing split when both probes
/// lie past their touches. A probe with no hull-covering tangent disk
/// reaching its partner is off the merged boundary, sharpening its own
/// side's keep or kill by one rank. Every row of the table reasons about
/// where the tangent endpoints sit relative to a probed pair straddling
/// the merged boundary; a probe interior to the opposite hull voids that
/// reasoning for both sides — even the keeps — so nothing moves until
/// both probes are proven real. Moves are clamped to only ever shrink
/// the intervals.
#[allow(clippy::too_many_arguments)]
fn pair_moves(
    v1: View<'_>,
    v2: View<'_>,
    (c1, c2): (Chain, Chain),
    (m1, m2): (isize, isize),
    (p, q): (Point, Point),
    (real_q, real_p): (bool, bool),
    bounds: (isize, isize, isize, isize),
    sep_x: f64,
) -> (isize, isize, isize, isize) {
    if !(real_q && real_p) {
        return bounds;
    }
    let (mut lo1, mut hi1, mut lo2, mut hi2) = bounds;
    use Chain::*;
    let near1 = c1 == At || covering_tangent_disk_exists(v1, m1, q);
    let near2 = c2 == At || covering_tangent_disk_exists(v2, m2, p);
    match c1 {
        At => lo1 = lo1.max(m1),
        Before => lo1 = lo1.max(if near1 { m1 } else { m1 + 1 }),
        Past if c2 == At => {
            hi1 = hi1.min(if near1 { m1 } else { m1 - 1 });
        }
        _ => {}
    }
    match c2 {
        At => lo2 = lo2.max(m2),
        Before => lo2 = lo2.max(if near2 { m2 } else { m2 + 1 }),
        Past if c1 == At => {
            hi2 = hi2.min(if near2 { m2 } else { m2 - 1 });
        }
        _ => {}
    }
    // Both probes past their touches. A probe off the merged boundary
    // dies with its suffix. When both probes stay near, the candidate
    // tangent disks through the opposite probes decide which suffix is
    // dead: coincident disks mean the probed pair spans the other common
    // tangent, so neither endpoint lies after its probe; otherwise the
    // side of the separator holding the disks' first crossing (clockwise
    // from p around the first disk) is the pruned one.
    if c1 == Past && c2 == Past {
        match (near1, near2) {
            (false, false) => {
                hi1 = hi1.min(m1 - 1);
                hi2 = hi2.min(m2 - 1);
            }
            (false, true) => hi1 = hi1.min(m1 - 1),
            (true, false) => hi2 = hi2.min(m2 - 1),
            (true, true) => {
                let d1 = tangent_disk_through(v1, m1, q);
                let d2 = tangent_disk_through(v2, m2, p);
                match (d1, d2) {
                    (Some(d1), Some(d2)) if !d1.center.approx_eq(d2.center) => {
                        match first_cw_intersection(&d1, &d2, p) {
                            Some(s) if s.x < sep_x => hi1 = hi1.min(m1),
                            Some(_) => hi2 = hi2.min(m2),
                            None => {
                                hi1 = hi1.min(m1);
                                hi2 = hi2.min(m2);
                            }
                        }
                    }
                    _ => {
                        hi1 = hi1.min(m1);
                        hi2 = hi2.min(m2);
                    }
                }
            }
        }
    }
    (lo1, hi1, lo2, hi2)
}

/// Fixes one hull's candidate vertex and settles the pair by a point
/// search over the other hull's live ranks, accepting only if the anchor
/// is in turn tangent with respect to the vertex found. Returns the pair
/// in (anchor side, searched side) order.
fn anchored_pair(
    va: View<'_>,
    vb: View<'_>,
    rank: isize,
    live: (isize, isize),
    stats: &mut SearchStats,
) -> Option<(Point, Point)> {
    let anchor = va.pt(rank);
    let found = bisect_point_range(vb, anchor, live.0, live.1, stats)?;
    stats.probes += 1;
    if classify(va, rank, found)?.0 == Chain::At {
        Some((anchor, found))
    } else {
        None
    }
}

/// Cheap non-interiority certificate: `x` outside any supporting disk of a
/// boundary arc adjacent to the head or to rank `k` cannot be interior to
/// the hull, so the tangent from `x` exists and verdicts classified
/// against `x` are meaningful. Interior points lie inside every supporting
/// disk, so the certificate never misfires; it may miss for an exterior
/// `x` (the four disks bulge far beyond the hull), which costs progress,
/// not correctness.
fn outside_cert(view: View<'_>, k: isize, x: Point) -> bool {
    if view.len() == 1 {
        // A single-vertex hull has no interior.
        return true;
    }
    for j in [0, -1, k, k - 1] {
        if let Some(arc) = view.hull_arc(j) {
            if !arc.supporting_disk().contains(x) {
                return true;
            }
        }
    }
    false
}

/// Exact point-in-hull test in logarithmically many probes. From the head
/// vertex the other vertices fan out in sorted angular order (convex
/// position), so a binary search pins the wedge holding `x`; within a
/// wedge the hull is cut off by the single boundary arc joining the
/// wedge's ranks, and membership reduces to that arc's supporting disk.
/// Outside the fan, only the two arcs incident to the head can shelter
/// `x`: their disks' intersection is exactly the hull corner there.
fn inside_hull(view: View<'_>, x: Point, stats: &mut SearchStats) -> bool {
    let n = view.len() as isize;
    if n == 1 {
        return false;
    }
    let v0 = view.pt(0);
    let u = x - v0;
    let orient = match view.h.side {
        Side::Left => 1.0,
        Side::Right => -1.0,
    };
    // Last rank whose direction from the head has not rotated past `x`'s.
    let (mut lo, mut hi) = (1isize, n - 1);
    let mut last = 0isize;
    while lo <= hi {
        let mid = (lo + hi) / 2;
        stats.probes += 1;
        if orient * (view.pt(mid) - v0).cross(u) >= 0.0 {
            last = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    stats.probes += 1;
    let in_arc_disk = |j: isize| -> bool {
        view.hull_arc(j)
            .is_some_and(|arc| arc.supporting_disk().contains(x))
    };
    if last == 0 || last == n - 1 {
        in_arc_disk(0) && in_arc_disk(-1)
    } else {
        in_arc_disk(last)
    }
}

/// A closed angular interval of unit directions, as midpoint and
/// half-width. Directions are angles in radians; widths never exceed pi in
/// the uses below, so intersections stay single intervals.
#[derive(Clone, Copy, Debug)]
struct AngInterval {
    mid: f64,
    half: f64,
}

fn ang_diff(a: f64, b: f64) -> f64 {
    let mut d = a - b;
    while d > PI {
        d -= TAU;
    }
    while d < -PI {
        d += TAU;
    }
    d
}

impl AngInterval {
    fn intersect(self, other: AngInterval) -> Option<AngInterval> {
        let d = ang_diff(other.mid, self.mid);
        let lo = fmath::fmax(-self.half, d - other.half);
        let hi = fmath::fmin(self.half, d + other.half);
        if hi < lo - tolerance() {
            return None;
        }
        let hi = fmath::fmax(hi, lo);
        Some(AngInterval {
            mid: self.mid + (lo + hi) / 2.0,
            half: (hi - lo) / 2.0,
        })
    }

    fn contains(self, theta: f64) -> bool {
        fmath::fabs(ang_diff(theta, self.mid)) <= self.half + tolerance()
    }
}

/// Directions (on the circle of radius-`r` centers around `v`) whose disk
/// covers `y`: half-width arccos(|vy| / 2r) around the direction of `y`,
/// the full circle when the points coincide, `None` past the diameter.
fn cover_interval(v: Point, y: Point, r: f64) -> Option<AngInterval> {
    let d = y - v;
    let len = d.norm();
    if len > 2.0 * r + tolerance() {
        return None;
    }
    if len <= tolerance() {
        return Some(AngInterval { mid: 0.0, half: PI });
    }
    let cos = fmath::fmin(len / (2.0 * r), 1.0);
    Some(AngInterval {
        mid: d.angle(),
        half: fmath::acos(cos),
    })
}

/// The feasible center directions of disks tangent to the hull at the
/// rank-`k` vertex: those covering both cycle neighbors.
fn tangency_interval(view: View<'_>, k: isize) -> Option<AngInterval> {
    let v = view.pt(k);
    let r = view.radius();
    let i1 = cover_interval(v, view.pt(k - 1), r)?;
    let i2 = cover_interval(v, view.pt(k + 1), r)?;
    i1.intersect(i2)
}

/// Whether some disk tangent to the hull at the rank-`k` vertex covers the
/// opposite point `x` — the O(1) test separating the two sub-chains past
/// the tangent vertices.
fn covering_tangent_disk_exists(view: View<'_>, k: isize, x: Point) -> bool {
    let v = view.pt(k);
    let tang = match tangency_interval(view, k) {
        Some(i) => i,
        None => return false,
    };
    match cover_interval(v, x, view.radius()) {
        Some(ix) => tang.intersect(ix).is_some(),
        None => false,
    }
}

/// A concrete disk tangent to the hull at the rank-`k` vertex and covering
/// the opposite point `x`. Prefers the disk whose boundary passes through
/// both points and bulges toward the underside — when the probed pair
/// spans the other common tangent, both hulls' calls then pick the *same*
/// disk, which is how that coincidence is detected.
fn tangent_disk_through(view: View<'_>, k: isize, x: Point) -> Option<Disk> {
    let v = view.pt(k);
    let r = view.radius();
    let tang = tangency_interval(view, k)?;
    let (left_pt, right_pt) = match view.h.side {
        Side::Left => (v, x),
        Side::Right => (x, v),
    };
    if let Some((cw_c, ccw_c)) = minor_arc_centers(left_pt, right_pt, r) {
        for cand in [ccw_c, cw_c] {
            if tang.contains((cand - v).angle()) {
                return Some(Disk::new(cand, r));
            }
        }
    }
    // Neither boundary member is tangent: take the middle of the covering
    // tangent family instead.
    let ix = cover_interval(v, x, r)?;
    let i = tang.intersect(ix)?;
    let (s, c) = fmath::sin_cos(i.mid);
    Some(Disk::new(v + Point::new(c, s) * r, r))
}

/// First intersection of the two equal-radius circle boundaries met when
/// walking clockwise from `from` around the first. The walk moves away
/// from its start, so a crossing at `from` itself — the second circle may
/// pass right through it — counts as a full revolution, not zero. `None`
/// when the circles are concentric or do not cross.
fn first_cw_intersection(d1: &Disk, d2: &Disk, from: Point) -> Option<Point> {
    let d = d2.center - d1.center;
    let len = d.norm();
    if len <= tolerance() || len > d1.radius + d2.radius {
        return None;
    }
    let h_sq = d1.radius * d1.radius - 0.25 * len * len;
    let h = fmath::sqrt_nn(h_sq);
    let mid = d1.center.mid(d2.center);
    let n = d.rot90_ccw() * (1.0 / len);
    let s1 = mid + n * h;
    let s2 = mid - n * h;
    let base = (from - d1.center).angle();
    let cw_dist = |s: Point| -> f64 {
        let mut t = base - (s - d1.center).angle();
        if t < 1e-7 {
            t += TAU;
        }
        t
    };
    Some(if cw_dist(s1) <= cw_dist(s2) { s1 } else { s2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::build_x_sorted;
    use crate::oracle;
    use crate::sed;
    use alloc::vec;
    use alloc::vec::Vec;

    fn hull_of(pts: &[Point], r: f64) -> CircularHull {
        let mut sorted = pts.to_vec();
        sorted.sort_by(|a, b| a.lex_key().partial_cmp(&b.lex_key()).unwrap());
        build_x_sorted(&sorted, r).expect("test hull must exist")
    }

    fn log2_len(h: &FrozenHull) -> f64 {
        fmath::fmax((h.len() as f64).log2(), 0.0)
    }

    /// Probe allowance for one `common_tangents_log` call, and whether it
    /// was relaxed. Logarithmic when every hull vertex is exterior to the
    /// opposite hull; hulls poking into each other poison probes, and the
    /// searches may then pay for exact interiority tests and in the worst
    /// case one exhaustive anchor sweep per tangent.
    fn probe_bound(
        hl: &FrozenHull,
        hr: &FrozenHull,
        hl_raw: &CircularHull,
        hr_raw: &CircularHull,
    ) -> (f64, bool) {
        let logs = log2_len(hl) + log2_len(hr);
        let strict = 4.0 * logs + 8.0;
        let poisoned = hl.vertices().iter().any(|&v| hr_raw.contains(v))
            || hr.vertices().iter().any(|&v| hl_raw.contains(v));
        if poisoned {
            let sweep = hl.len().min(hr.len()) as f64 * (logs + 3.0);
            (strict + 2.0 * sweep + 4.0 * logs + 16.0, true)
        } else {
            (strict, false)
        }
    }

    #[test]
    fn freeze_orders_ranks_from_the_facing_extreme() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
        ];
        let hull = hull_of(&pts, 1.2);
        let left = freeze(&hull, Side::Left);
        // Counterclockwise from a rightmost vertex: x never increases
        // along the first half of the walk.
        assert_eq!(left.len(), 4);
        assert!((left.vertex(0).x - 1.0).abs() < 1e-12);
        assert!(left.vertex(1).x >= left.vertex(2).x);
        let right = freeze(&hull, Side::Right);
        assert!((right.vertex(0).x - 0.0).abs() < 1e-12);
        // Same cycle, opposite traversal, different anchors.
        let mut relisted: Vec<Point> = right.vertices().to_vec();
        relisted[1..].reverse();
        let witness: Vec<Point> = left.vertices().to_vec();
        let offset = relisted
            .iter()
            .position(|p| p.approx_eq(witness[0]))
            .unwrap();
        for (i, w) in witness.iter().enumerate() {
            assert!(relisted[(offset + i) % relisted.len()].approx_eq(*w));
        }
    }

    #[test]
    fn extreme_arc_detects_vertex_extremes() {
        // Two stacked points: both lens arcs span +x and -x partway, so a
        // left freeze finds a rightmost arc.
        let lens = hull_of(&[Point::new(0.0, 1.0), Point::new(0.0, -1.0)], 1.2);
        assert!(freeze(&lens, Side::Left).extreme_arc().is_some());
        // A single vertex has no arcs at all.
        let dot = hull_of(&[Point::new(0.0, 0.0)], 1.0);
        assert!(freeze(&dot, Side::Left).extreme_arc().is_none());
    }

    #[test]
    fn point_tangents_on_single_vertex_hull() {
        let dot = freeze(&hull_of(&[Point::new(0.0, 0.0)], 1.0), Side::Left);
        match point_tangents(&dot, Point::new(1.5, 0.0)) {
            PointTangents::UpperLower { upper, lower } => {
                assert!(upper.approx_eq(Point::new(0.0, 0.0)));
                assert!(lower.approx_eq(Point::new(0.0, 0.0)));
            }
            other => panic!("expected tangents at the vertex, got {:?}", other),
        }
        assert_eq!(
            point_tangents(&dot, Point::new(2.5, 0.0)),
            PointTangents::NotCoverable
        );
    }

    #[test]
    fn point_tangents_detects_domination() {
        // Query inside the lens bulge: x = 1.2 - sqrt(0.44) ~ 0.5367 is the
        // bulge tip at r = 1.2, so (0.5, 0) is interior.
        let lens = freeze(
            &hull_of(&[Point::new(0.0, 1.0), Point::new(0.0, -1.0)], 1.2),
            Side::Left,
        );
        assert_eq!(
            point_tangents(&lens, Point::new(0.5, 0.0)),
            PointTangents::LDominating
        );
        // Just past the bulge: genuine tangents, touching both lens tips.
        match point_tangents(&lens, Point::new(0.55, 0.0)) {
            PointTangents::UpperLower { upper, lower } => {
                assert!(upper.approx_eq(Point::new(0.0, 1.0)));
                assert!(lower.approx_eq(Point::new(0.0, -1.0)));
            }
            other => panic!("expected tangents, got {:?}", other),
        }
    }

    #[test]
    fn point_tangents_matches_brute_on_random_hulls() {
        let mut state = 0x51ed_2701_9db2_194fu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for n in [2usize, 3, 5, 9, 17, 33, 64] {
            for rep in 0..6 {
                let pts: Vec<Point> = (0..n)
                    .map(|_| Point::new(next() * 2.0 - 1.0, next() * 2.0 - 1.0))
                    .collect();
                let r = 1.6 + next();
                let hull = hull_of(&pts, r);
                let frozen = freeze(&hull, Side::Left);
                // Place the query to the right; vary how far.
                let q = Point::new(1.0 + 3.0 * next(), next() * 4.0 - 2.0);
                let mut stats = SearchStats::default();
                let got = point_tangents_with_stats(&frozen, q, &mut stats);
                assert!(
                    stats.probes as f64 <= 2.0 * (log2_len(&frozen) + 2.0),
                    "clock {} probes for n {} rep {}",
                    stats.probes,
                    n,
                    rep
                );
                let verts = hull.vertices();
                if oracle::brute_dominates(&verts, &[q], r) == Some(true) {
                    assert_eq!(got, PointTangents::LDominating, "n {} rep {}", n, rep);
                    continue;
                }
                match oracle::brute_common_tangents(&verts, &[q], r) {
                    Some(((a, _), (_, b))) => match got {
                        PointTangents::UpperLower { upper, lower } => {
                            assert!(
                                upper.approx_eq(a) && lower.approx_eq(b),
                                "n {} rep {}: got ({:?},{:?}) want ({:?},{:?})",
                                n,
                                rep,
                                upper,
                                lower,
                                a,
                                b
                            );
                        }
                        other => panic!("n {} rep {}: expected tangents, got {:?}", n, rep, other),
                    },
                    None => {
                        assert_eq!(got, PointTangents::NotCoverable, "n {} rep {}", n, rep);
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_walk_matches_exhaustive_membership() {
        let mut state = 0xdead_beef_0bad_cafeu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for n in [1usize, 2, 3, 7, 16, 33, 64] {
            for _ in 0..10 {
                let pts: Vec<Point> = (0..n)
                    .map(|_| Point::new(next() * 2.0 - 1.0, next() * 2.0 - 1.0))
                    .collect();
                let r = 1.6 + next();
                let frozen = freeze(&hull_of(&pts, r), Side::Left);
                // Same-radius probe disks in the facing half-plane, some
                // covering, some clipping the hull.
                let center = Point::new(0.4 + 1.4 * next(), next() * 2.0 - 1.0);
                let d = Disk::new(center, r);
                let want = frozen.vertices().iter().all(|&v| d.contains(v));
                let mut stats = SearchStats::default();
                let got = dominating_check_with_stats(&frozen, &d, &mut stats);
                assert_eq!(got, want, "n {} center {:?}", n, center);
                assert!(
                    stats.probes as f64 <= log2_len(&frozen).ceil() + 2.0,
                    "{} probes at n {}",
                    stats.probes,
                    n
                );
            }
        }
    }

    #[test]
    fn common_tangents_of_parallel_pairs() {
        let left = freeze(
            &hull_of(&[Point::new(-2.0, 0.5), Point::new(-2.0, -0.5)], 3.0),
            Side::Left,
        );
        let right = freeze(
            &hull_of(&[Point::new(2.0, 0.5), Point::new(2.0, -0.5)], 3.0),
            Side::Right,
        );
        match common_tangents_log(&left, &right) {
            CommonTangents::Tangents(t) => {
                assert!(t.upper.0.approx_eq(Point::new(-2.0, 0.5)));
                assert!(t.upper.1.approx_eq(Point::new(2.0, 0.5)));
                assert!(t.lower.0.approx_eq(Point::new(-2.0, -0.5)));
                assert!(t.lower.1.approx_eq(Point::new(2.0, -0.5)));
            }
            other => panic!("expected tangents, got {:?}", other),
        }
    }

    #[test]
    fn common_tangents_of_two_points_is_their_lens() {
        let left = freeze(&hull_of(&[Point::new(-1.0, 0.0)], 1.5), Side::Left);
        let right = freeze(&hull_of(&[Point::new(1.0, 0.0)], 1.5), Side::Right);
        match common_tangents_log(&left, &right) {
            CommonTangents::Tangents(t) => {
                assert!(t.upper.0.approx_eq(Point::new(-1.0, 0.0)));
                assert!(t.upper.1.approx_eq(Point::new(1.0, 0.0)));
                assert_eq!(t.upper, t.lower);
            }
            other => panic!("expected degenerate tangents, got {:?}", other),
        }
        // Too far apart for any common disk.
        let far = freeze(&hull_of(&[Point::new(4.0, 0.0)], 1.5), Side::Right);
        assert_eq!(common_tangents_log(&left, &far), CommonTangents::NonExistent);
    }

    #[test]
    fn common_tangents_detects_dominance() {
        // A tiny left pair sitting inside the right hull's leftward bulge.
        let right_pts = [Point::new(0.5, 1.0), Point::new(0.5, -1.0)];
        let r = 1.8;
        // Bulge tip at x = 0.5 + sqrt(1.8^2 - 1) - 1.8 ~ 0.197.
        let left_pts = [Point::new(0.25, 0.1), Point::new(0.3, -0.1)];
        let left = freeze(&hull_of(&left_pts, r), Side::Left);
        let right = freeze(&hull_of(&right_pts, r), Side::Right);
        assert_eq!(
            oracle::brute_dominates(&right_pts, &left_pts, r),
            Some(true)
        );
        assert_eq!(
            common_tangents_log(&left, &right),
            CommonTangents::Dominating(Side::Right)
        );
    }

    #[test]
    fn common_tangents_match_brute_on_random_pairs() {
        let mut state = 0x0123_4567_89ab_cdefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut outcomes = [0usize; 3];
        for trial in 0..240 {
            let n1 = 1 + (next() * 12.0) as usize;
            let n2 = 1 + (next() * 12.0) as usize;
            let r = 1.2 + 1.5 * next();
            // Vary the layout so all three outcomes appear: wide gaps go
            // uncoverable, and every fourth trial tucks one side's points
            // inside the other hull's facing bulge to force dominance.
            let (lefts, rights): (Vec<Point>, Vec<Point>) = if trial % 4 == 3 {
                let g = 0.3;
                let w = (0.4 + 0.45 * next()) * r;
                let depth = r - (r * r - w * w).sqrt();
                let big = vec![Point::new(g, w), Point::new(g, -w)];
                let small: Vec<Point> = (0..1 + (next() * 2.0) as usize)
                    .map(|_| {
                        Point::new(
                            g - depth * (0.2 + 0.6 * next()),
                            (next() - 0.5) * 0.3 * w,
                        )
                    })
                    .collect();
                // Alternate which side swallows the other.
                if (trial / 4) % 2 == 0 {
                    (small, big)
                } else {
                    let mirror = |pts: &[Point]| -> Vec<Point> {
                        pts.iter().map(|p| Point::new(-p.x, p.y)).collect()
                    };
                    (mirror(&big), mirror(&small))
                }
            } else {
                let gap = match trial % 4 {
                    0 => 2.5 * r,
                    1 => 0.9 * r,
                    _ => 0.35,
                };
                let lefts = (0..n1)
                    .map(|_| {
                        Point::new(-gap / 2.0 - next() * 0.45 * r, (next() - 0.5) * 1.6 * r)
                    })
                    .collect();
                let rights = (0..n2)
                    .map(|_| {
                        Point::new(gap / 2.0 + next() * 0.45 * r, (next() - 0.5) * 1.6 * r)
                    })
                    .collect();
                (lefts, rights)
            };
            if sed::sed_radius(&lefts) > r || sed::sed_radius(&rights) > r {
                continue;
            }
            let hl_raw = hull_of(&lefts, r);
            let hr_raw = hull_of(&rights, r);
            let hl = freeze(&hl_raw, Side::Left);
            let hr = freeze(&hr_raw, Side::Right);
            let mut stats = SearchStats::default();
            let got = common_tangents_log_with_stats(&hl, &hr, &mut stats);
            let bound = probe_bound(&hl, &hr, &hl_raw, &hr_raw);
            assert!(
                stats.probes as f64 <= bound.0,
                "trial {}: {} probes over bound {} (overlap {})",
                trial,
                stats.probes,
                bound.0,
                bound.1
            );

            if oracle::brute_dominates(&rights, &lefts, r) == Some(true) {
                assert_eq!(
                    got,
                    CommonTangents::Dominating(Side::Right),
                    "trial {}",
                    trial
                );
                outcomes[1] += 1;
                continue;
            }
            if oracle::brute_dominates(&lefts, &rights, r) == Some(true) {
                assert_eq!(
                    got,
                    CommonTangents::Dominating(Side::Left),
                    "trial {}",
                    trial
                );
                outcomes[1] += 1;
                continue;
            }
            match oracle::brute_common_tangents(&lefts, &rights, r) {
                Some((up, low)) => {
                    outcomes[0] += 1;
                    match got {
                        CommonTangents::Tangents(t) => {
                            assert!(
                                t.upper.0.approx_eq(up.0) && t.upper.1.approx_eq(up.1),
                                "trial {}: upper {:?} want {:?}",
                                trial,
                                t.upper,
                                up
                            );
                            assert!(
                                t.lower.0.approx_eq(low.1) && t.lower.1.approx_eq(low.0),
                                "trial {}: lower {:?} want {:?}",
                                trial,
                                t.lower,
                                (low.1, low.0)
                            );
                        }
                        other => panic!("trial {}: expected tangents, got {:?}", trial, other),
                    }
                }
                None => {
                    outcomes[2] += 1;
                    assert_eq!(got, CommonTangents::NonExistent, "trial {}", trial);
                }
            }
        }
        // The generator must actually exercise every outcome.
        assert!(outcomes.iter().all(|&c| c > 0), "outcomes {:?}", outcomes);
    }

    // Regression: separated point sets whose hulls overlap. The two-point
    // right set sits partly inside the 17-point left hull (its near vertex
    // is interior), so an uncertified search would prune on meaningless
    // verdicts and miss the pair entirely.
    #[test]
    fn overlapping_hulls_pair_found() {
        let r = 2.13125629995857;
        let lefts = vec![
            Point::new(-0.4963247663882855, 1.5870554628564488),
            Point::new(-0.5783399695523935, -1.497173833855011),
            Point::new(-0.7902297632226214, 1.2747455837779864),
            Point::new(-0.8104364876356126, 1.681082071055837),
            Point::new(-0.902711869583748, -1.2155373093130746),
            Point::new(-0.7404722547428931, -0.3420913414449469),
            Point::new(-0.07224651917223848, -1.177060318329184),
            Point::new(-0.3278441170463732, -0.6554101373336448),
            Point::new(-0.7918017610197033, -0.8371768228149646),
            Point::new(-0.8921591130252114, -0.7136739865066392),
            Point::new(-0.873253407691234, -1.0476745346948653),
            Point::new(-0.6594816191970055, -1.4250914032836381),
            Point::new(-0.06745738954266323, -0.2249636874242203),
            Point::new(-0.9724503078374132, 1.6065669291737965),
            Point::new(-0.2936264986555038, 0.44425544466304207),
            Point::new(-0.9082092341630151, -0.39812857958589987),
            Point::new(-0.2151749649510492, 1.0826193816924414),
        ];
        let rights = vec![
            Point::new(0.10653662825132196, 0.0967659506410691),
            Point::new(0.8507655130270158, -0.9410508614782027),
        ];
        let hl = freeze(&hull_of(&lefts, r), Side::Left);
        let hr = freeze(&hull_of(&rights, r), Side::Right);
        let got = common_tangents_log(&hl, &hr);
        let want = oracle::brute_common_tangents(&lefts, &rights, r)
            .expect("instance is coverable");
        match got {
            CommonTangents::Tangents(t) => {
                assert!(t.upper.0.approx_eq(want.0 .0) && t.upper.1.approx_eq(want.0 .1));
                assert!(t.lower.0.approx_eq(want.1 .1) && t.lower.1.approx_eq(want.1 .0));
            }
            other => panic!("expected tangents, got {:?}", other),
        }
    }

    // Regression: the common tangent can attach at a hull's head — here
    // both lower-tangent endpoints are the facing extreme vertices, with
    // the connecting arc bulging under both hulls. Each probe's verdict
    // honestly points away from the heads, so the prefix keeps discard
    // the true endpoints and only the terminal head anchoring finds them.
    #[test]
    fn head_attached_tangent_found() {
        let r = 2.299372341879309;
        let lefts = vec![
            Point::new(-0.8717899751246783, 1.0437923011004746),
            Point::new(-1.1578619138121629, -1.431976064277896),
            Point::new(-0.6877105135371671, -1.8389799802206903),
            Point::new(-0.5489908221530118, 0.091423973841051),
            Point::new(-1.0173294490265379, -1.4669481688833632),
        ];
        let rights = vec![
            Point::new(0.7797581231811472, 0.7859587105386429),
            Point::new(0.7716037625335677, -0.06598332816694766),
            Point::new(0.2769416397811643, 1.8360811465833016),
        ];
        let hl = freeze(&hull_of(&lefts, r), Side::Left);
        let hr = freeze(&hull_of(&rights, r), Side::Right);
        let want = oracle::brute_common_tangents(&lefts, &rights, r)
            .expect("instance is coverable");
        // Both tangents share the right hull's topmost vertex; the lower
        // one starts at the left hull's bottom vertex.
        assert!(want.0 .1.approx_eq(want.1 .0), "instance lost its shape");
        match common_tangents_log(&hl, &hr) {
            CommonTangents::Tangents(t) => {
                assert!(t.upper.0.approx_eq(want.0 .0) && t.upper.1.approx_eq(want.0 .1));
                assert!(t.lower.0.approx_eq(want.1 .1) && t.lower.1.approx_eq(want.1 .0));
            }
            other => panic!("expected tangents, got {:?}", other),
        }
    }

    // Regression: a nonexistence verdict must also stay within the probe
    // budget. Here every probed pair is coverable in isolation — only a
    // three-point constraint pushes the union's enclosing radius over r —
    // so the search cannot bail out early and has to run the intervals
    // dry before concluding.
    #[test]
    fn nonexistent_verdict_stays_in_probe_budget() {
        let r = 1.613192898291788;
        let lefts = vec![
            Point::new(-0.8843407284202393, 1.0103667468441295),
            Point::new(-0.915636132142127, 0.7835919468229927),
            Point::new(-0.7944195376051302, 0.3087880110725226),
            Point::new(-0.7463786758976058, 0.13403464239154866),
            Point::new(-1.1704408297897588, 0.5899385233591132),
            Point::new(-1.0930765904432032, 0.9157120285437038),
            Point::new(-1.1876928419932924, -0.43773053662862943),
            Point::new(-1.36391838467105, -0.05765972031297688),
            Point::new(-1.3666413816375305, -0.379144433363453),
        ];
        let rights = vec![
            Point::new(0.8932808997672868, -1.126361539508438),
            Point::new(0.8221898462397587, -0.5547134775084305),
            Point::new(1.3543274504070968, -0.5835028143083411),
            Point::new(0.7722541785744965, -0.7777422729857711),
            Point::new(1.3637628759886684, -1.1325373639908518),
            Point::new(1.3205527507506667, 1.2856976768486874),
            Point::new(0.7847008819212083, -0.3638574048398377),
            Point::new(0.7795400521306958, 0.6202056417493171),
            Point::new(0.8153630689409537, 0.74354284323657),
            Point::new(1.4210929255317912, -0.289996614030628),
            Point::new(0.9441403718168165, -0.7168486965972176),
            Point::new(0.9811167252585462, -1.0862299546621703),
            Point::new(1.0568013843421757, -1.223422991296503),
            Point::new(1.324011565552186, -1.115571137919885),
            Point::new(1.1803763947520454, 0.342033006343658),
            Point::new(1.145336344010062, -0.14424230421914291),
            Point::new(1.250044206237879, 1.0389375867705484),
            Point::new(0.7943080348090755, -1.1442272362745365),
            Point::new(1.133885037140991, 0.17586017468613907),
            Point::new(0.9694682990012011, -0.8529440565136472),
            Point::new(0.7542554010637269, 1.0423456735648422),
            Point::new(1.0233762711086607, 0.04484930578730671),
        ];
        assert_eq!(oracle::brute_common_tangents(&lefts, &rights, r), None);
        let hl = freeze(&hull_of(&lefts, r), Side::Left);
        let hr = freeze(&hull_of(&rights, r), Side::Right);
        let mut stats = SearchStats::default();
        assert_eq!(
            common_tangents_log_with_stats(&hl, &hr, &mut stats),
            CommonTangents::NonExistent
        );
        let budget = 4.0 * (log2_len(&hl) + log2_len(&hr)) + 8.0;
        assert!(
            stats.probes as f64 <= budget,
            "{} probes over {}",
            stats.probes,
            budget
        );
    }

    #[test]
    fn random_pair_regimes_meet_probe_budget() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut worst_ratio = 0.0f64;
        let mut counts = [0usize; 4];
        for trial in 0..1500 {
            let cap = if trial % 3 == 0 { 100.0 } else { 20.0 };
            let n1 = 1 + (next() * cap) as usize;
            let n2 = 1 + (next() * cap) as usize;
            let r = 1.2 + 1.5 * next();
            let (lefts, rights): (Vec<Point>, Vec<Point>) = if trial % 5 == 4 {
                let g = 0.3;
                let w = (0.4 + 0.45 * next()) * r;
                let depth = r - (r * r - w * w).sqrt();
                let big = vec![Point::new(g, w), Point::new(g, -w)];
                let small: Vec<Point> = (0..1 + (next() * 2.0) as usize)
                    .map(|_| {
                        Point::new(
                            g - depth * (0.2 + 0.6 * next()),
                            (next() - 0.5) * 0.3 * w,
                        )
                    })
                    .collect();
                if (trial / 5) % 2 == 0 {
                    (small, big)
                } else {
                    let mirror = |pts: &[Point]| -> Vec<Point> {
                        pts.iter().map(|p| Point::new(-p.x, p.y)).collect()
                    };
                    (mirror(&big), mirror(&small))
                }
            } else {
                let gap = match trial % 5 {
                    0 => 2.5 * r,
                    1 => 0.9 * r,
                    2 => 0.1,
                    _ => 0.35,
                };
                let lefts = (0..n1)
                    .map(|_| {
                        Point::new(-gap / 2.0 - next() * 0.45 * r, (next() - 0.5) * 1.6 * r)
                    })
                    .collect();
                let rights = (0..n2)
                    .map(|_| {
                        Point::new(gap / 2.0 + next() * 0.45 * r, (next() - 0.5) * 1.6 * r)
                    })
                    .collect();
                (lefts, rights)
            };
            if sed::sed_radius(&lefts) > r || sed::sed_radius(&rights) > r {
                counts[3] += 1;
                continue;
            }
            let hl_raw = hull_of(&lefts, r);
            let hr_raw = hull_of(&rights, r);
            let hl = freeze(&hl_raw, Side::Left);
            let hr = freeze(&hr_raw, Side::Right);
            let mut stats = SearchStats::default();
            let got = common_tangents_log_with_stats(&hl, &hr, &mut stats);
            let bound = probe_bound(&hl, &hr, &hl_raw, &hr_raw);
            if !bound.1 {
                worst_ratio = fmath::fmax(worst_ratio, stats.probes as f64 / bound.0);
            }
            assert!(
                stats.probes as f64 <= bound.0,
                "trial {}: {} probes over bound {} (overlap {})",
                trial,
                stats.probes,
                bound.0,
                bound.1
            );
            let mut union_pts = lefts.clone();
            union_pts.extend_from_slice(&rights);
            let tau = sed::sed_radius(&union_pts);
            if (tau - r).abs() < 1e-7 {
                counts[3] += 1;
                continue;
            }
            let merged_exists = tau <= r;
            match got {
                CommonTangents::NonExistent => {
                    assert!(!merged_exists, "trial {}: merged hull exists", trial);
                    counts[2] += 1;
                }
                CommonTangents::Dominating(side) => {
                    assert!(merged_exists, "trial {}", trial);
                    let (winner, losers) = match side {
                        Side::Left => (&hl_raw, &rights),
                        Side::Right => (&hr_raw, &lefts),
                    };
                    for &t in losers.iter() {
                        assert!(winner.contains(t), "trial {}: not dominated: {:?}", trial, t);
                    }
                    counts[1] += 1;
                }
                CommonTangents::Tangents(t) => {
                    assert!(merged_exists, "trial {}", trial);
                    let ud = MinorArc::cw(t.upper.0, t.upper.1, r)
                        .expect("upper arc")
                        .supporting_disk();
                    let ld = MinorArc::cw(t.lower.1, t.lower.0, r)
                        .expect("lower arc")
                        .supporting_disk();
                    for &pt in union_pts.iter() {
                        assert!(ud.contains(pt), "trial {}: upper misses {:?}", trial, pt);
                        assert!(ld.contains(pt), "trial {}: lower misses {:?}", trial, pt);
                    }
                    counts[0] += 1;
                }
            }
            if n1 <= 16 && n2 <= 16 {
                if oracle::brute_dominates(&rights, &lefts, r) == Some(true) {
                    assert_eq!(got, CommonTangents::Dominating(Side::Right), "trial {}", trial);
                    continue;
                }
                if oracle::brute_dominates(&lefts, &rights, r) == Some(true) {
                    assert_eq!(got, CommonTangents::Dominating(Side::Left), "trial {}", trial);
                    continue;
                }
                match oracle::brute_common_tangents(&lefts, &rights, r) {
                    Some((up, low)) => match got {
                        CommonTangents::Tangents(t) => {
                            assert!(
                                t.upper.0.approx_eq(up.0) && t.upper.1.approx_eq(up.1),
                                "trial {}: upper {:?} want {:?}",
                                trial,
                                t.upper,
                                up
                            );
                            assert!(
                                t.lower.0.approx_eq(low.1) && t.lower.1.approx_eq(low.0),
                                "trial {}: lower {:?} want {:?}",
                                trial,
                                t.lower,
                                (low.1, low.0)
                            );
                        }
                        other => panic!("trial {}: expected tangents, got {:?}", trial, other),
                    },
                    None => {
                        assert_eq!(got, CommonTangents::NonExistent, "trial {}", trial);
                    }
                }
            }
        }
        // The generator's regimes must all have fired, and the budget must
        // hold with real slack rather than by a rounding hair.
        assert!(counts.iter().take(3).all(|&c| c > 0), "counts {:?}", counts);
        assert!(worst_ratio <= 1.0, "worst probe ratio {:.3}", worst_ratio);
    }
}
