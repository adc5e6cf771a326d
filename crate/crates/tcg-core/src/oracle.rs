//! Small brute-force reference implementations.
//!
//! Everything here trades speed for obviousness: hulls by testing all
//! supporting arcs, two-center by enumerating bipartitions, feasibility
//! matrices by running the enclosing-disk routine on every prefix/suffix
//! pair. The fast structures in [`crate::hull`], [`crate::dynamic`],
//! [`crate::tangent`], and [`crate::decision`] are validated against these
//! on small inputs.
//!
//! Degenerate inputs (many points exactly cocircular at radius `r`) make
//! "vertex of the hull" ill-defined for any implementation; callers keep a
//! margin between `r` and the coverability threshold.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{MinorArc, Point};
use crate::sed;

/// Membership in the radius-`r` hull given its clockwise vertex cycle: the
/// hull is the intersection of the supporting disks of its boundary arcs.
pub fn hull_contains(vertices: &[Point], r: f64, t: Point) -> bool {
    match vertices.len() {
        0 => false,
        1 => vertices[0].approx_eq(t),
        n => (0..n).all(|i| {
            let w = MinorArc::cw(vertices[i], vertices[(i + 1) % n], r)
                .expect("consecutive hull vertices are within 2r");
            w.supporting_disk().contains(t)
        }),
    }
}

/// Radius-`r` circular hull by exhaustive search: vertices in clockwise
/// order starting from the lexicographically smallest, or `None` when no
/// radius-`r` disk covers the input.
pub fn brute_hull(points: &[Point], r: f64) -> Option<Vec<Point>> {
    let mut pts: Vec<Point> = Vec::new();
    for &p in points {
        if !pts.iter().any(|q| q.approx_eq(p)) {
            pts.push(p);
        }
    }
    if pts.is_empty() || !sed::coverable_within(&pts, r) {
        return None;
    }
    if pts.len() == 1 {
        return Some(pts);
    }

    // A directed arc u -> v supports the hull when its disk holds every
    // point; its endpoints are then boundary points.
    let n = pts.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if let Some(w) = MinorArc::cw(pts[i], pts[j], r) {
                if pts.iter().all(|&t| w.supporting_disk().contains(t)) {
                    edges.push((i, j));
                }
            }
        }
    }

    // Boundary points sitting on the *interior* of another supporting arc
    // are smooth pass-throughs, not turning vertices; drop them.
    let mut is_vertex = vec![false; n];
    for &(i, j) in &edges {
        is_vertex[i] = true;
        is_vertex[j] = true;
    }
    for &(i, j) in &edges {
        let w = MinorArc::cw(pts[i], pts[j], r).unwrap();
        for (k, flag) in is_vertex.iter_mut().enumerate() {
            if k != i && k != j && *flag && w.contains_boundary(pts[k]) {
                *flag = false;
            }
        }
    }

    let survivors: Vec<usize> = (0..n).filter(|&i| is_vertex[i]).collect();
    assert!(
        !survivors.is_empty(),
        "coverable multi-point input must expose at least one vertex"
    );
    if survivors.len() == 1 {
        return Some(vec![pts[survivors[0]]]);
    }

    // Clockwise successor: the supporting arc with the smallest sweep leads
    // to the adjacent vertex (larger sweeps skip over dropped points).
    let mut next = vec![usize::MAX; n];
    for &i in &survivors {
        let mut best: Option<(f64, usize)> = None;
        for &(a, b) in &edges {
            if a == i && is_vertex[b] {
                let sweep = MinorArc::cw(pts[a], pts[b], r).unwrap().sweep();
                if best.is_none_or(|(s, _)| sweep < s) {
                    best = Some((sweep, b));
                }
            }
        }
        next[i] = best.expect("every hull vertex has a clockwise successor").1;
    }

    let start = *survivors
        .iter()
        .min_by(|&&a, &&b| pts[a].lex_key().partial_cmp(&pts[b].lex_key()).unwrap())
        .unwrap();
    let mut cycle = Vec::with_capacity(survivors.len());
    let mut cur = start;
    loop {
        cycle.push(pts[cur]);
        cur = next[cur];
        if cur == start {
            break;
        }
        assert!(
            cycle.len() <= survivors.len(),
            "hull successor walk failed to close into a single cycle"
        );
    }
    assert_eq!(
        cycle.len(),
        survivors.len(),
        "hull boundary must visit every vertex exactly once"
    );
    Some(cycle)
}

/// True when every radius-`r` disk containing `a` also contains `b`, i.e.
/// `b` lies inside the radius-`r` hull of `a`. `None` when `a` has no hull.
pub fn brute_dominates(a: &[Point], b: &[Point], r: f64) -> Option<bool> {
    let hull = brute_hull(a, r)?;
    Some(b.iter().all(|&t| hull_contains(&hull, r, t)))
}

/// The two directed tangent arcs joining the radius-`r` hulls of `a` and
/// `b` in the merged hull: `(from_a_to_b, from_b_to_a)`, each as the arc's
/// (start, end) vertices in clockwise order.
///
/// `None` when the merged hull does not exist or when either side
/// contributes no boundary arc crossing to the other (a dominated side).
pub fn brute_common_tangents(
    a: &[Point],
    b: &[Point],
    r: f64,
) -> Option<((Point, Point), (Point, Point))> {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    if !sed::coverable_within(&all, r) {
        return None;
    }

    let supports = |u: Point, v: Point| -> Option<f64> {
        let w = MinorArc::cw(u, v, r)?;
        if all.iter().all(|&t| w.supporting_disk().contains(t)) {
            Some(w.sweep())
        } else {
            None
        }
    };

    // Among concyclic candidates the maximal sweep joins the two true
    // turning vertices (shorter ones start or end at pass-through points).
    let mut ab: Option<(f64, (Point, Point))> = None;
    let mut ba: Option<(f64, (Point, Point))> = None;
    for &u in a {
        for &v in b {
            if let Some(s) = supports(u, v) {
                if ab.is_none_or(|(best, _)| s > best) {
                    ab = Some((s, (u, v)));
                }
            }
            if let Some(s) = supports(v, u) {
                if ba.is_none_or(|(best, _)| s > best) {
                    ba = Some((s, (v, u)));
                }
            }
        }
    }
    match (ab, ba) {
        (Some((_, t1)), Some((_, t2))) => Some((t1, t2)),
        _ => None,
    }
}

/// Optimal two-disk cover by exhaustive bipartition. Returns the optimal
/// radius and one optimal assignment (bit `i` set places `points[i]` in the
/// second disk). Intended for small `n` (exponential in `n`).
pub fn brute_two_center(points: &[Point]) -> (f64, u32) {
    let n = points.len();
    assert!(n <= 20, "bipartition enumeration is exponential; keep n small");
    if n == 0 {
        return (0.0, 0);
    }
    let mut best = (f64::INFINITY, 0u32);
    let mut first: Vec<Point> = Vec::with_capacity(n);
    let mut second: Vec<Point> = Vec::with_capacity(n);
    // Point 0 stays in the first disk: halves the enumeration and skips
    // mirror-image assignments.
    for mask in 0..(1u32 << (n - 1)) {
        let mask = mask << 1;
        first.clear();
        second.clear();
        for (i, &p) in points.iter().enumerate() {
            if mask & (1 << i) == 0 {
                first.push(p);
            } else {
                second.push(p);
            }
        }
        let r1 = sed::sed_radius(&first);
        if r1 >= best.0 {
            continue;
        }
        let r = crate::fmath::fmax(r1, sed::sed_radius(&second));
        if r < best.0 {
            best = (r, mask);
        }
    }
    best
}

/// Prefix/suffix feasibility matrices for a split input: `A[i][j]` is the
/// enclosing radius of the first `i` points of `p` together with the first
/// `j` points of `q`, and `B[i][j]` the same for the complementary
/// suffixes. `A` is nondecreasing and `B` nonincreasing along both axes.
#[allow(clippy::type_complexity)]
pub fn brute_matrices(p: &[Point], q: &[Point]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let n = p.len();
    let m = q.len();
    let mut a = vec![vec![0.0; m + 1]; n + 1];
    let mut b = vec![vec![0.0; m + 1]; n + 1];
    let mut buf: Vec<Point> = Vec::with_capacity(n + m);
    for i in 0..=n {
        for j in 0..=m {
            buf.clear();
            buf.extend_from_slice(&p[..i]);
            buf.extend_from_slice(&q[..j]);
            a[i][j] = sed::sed_radius(&buf);
            buf.clear();
            buf.extend_from_slice(&p[i..]);
            buf.extend_from_slice(&q[j..]);
            b[i][j] = sed::sed_radius(&buf);
        }
    }
    (a, b)
}
