//! Planar primitives: points, disks, minor arcs of a fixed radius, and the
//! small predicate family the hull algorithms are written in terms of.
//!
//! Every arc handled by this crate is a *minor* arc — a piece of a radius-r
//! circle spanning at most half of it. Circular hulls (intersections of
//! radius-r disks) are bounded exclusively by such arcs, and the algorithms
//! lean on that: a minor arc is uniquely named by its two endpoints plus the
//! traversal direction, and membership tests reduce to a pair of cross
//! products.
//!
//! Comparisons go through a process-wide absolute tolerance (default 1e-9)
//! so that the solver, the test oracles, and the CLI agree on what "on the
//! boundary" means. Coordinates are assumed to be of moderate magnitude
//! (the tolerance is absolute, not relative).

use core::ops::{Add, Mul, Neg, Sub};
use core::sync::atomic::{AtomicU64, Ordering};

use crate::fmath;

/// Default absolute tolerance for geometric comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0);

/// Returns the current absolute tolerance.
#[inline]
pub fn tolerance() -> f64 {
    let bits = TOLERANCE_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_TOLERANCE
    } else {
        f64::from_bits(bits)
    }
}

/// Sets the process-wide absolute tolerance. Non-positive or non-finite
/// values reset to [`DEFAULT_TOLERANCE`].
pub fn set_tolerance(tol: f64) {
    let bits = if tol.is_finite() && tol > 0.0 {
        tol.to_bits()
    } else {
        0
    };
    TOLERANCE_BITS.store(bits, Ordering::Relaxed);
}

/// A point in the plane; also used as a 2-vector where convenient.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product `self × other`.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        fmath::sqrt(self.norm_sq())
    }

    #[inline]
    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn dist_sq(self, other: Point) -> f64 {
        (self - other).norm_sq()
    }

    #[inline]
    pub fn mid(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Rotates the vector by +90° (counterclockwise).
    #[inline]
    pub fn rot90_ccw(self) -> Point {
        Point::new(-self.y, self.x)
    }

    /// Rotates the vector by -90° (clockwise).
    #[inline]
    pub fn rot90_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    /// Rotates the vector by `angle` radians (counterclockwise positive).
    #[inline]
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = fmath::sin_cos(angle);
        Point::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }

    /// Polar angle of the vector, in `(-pi, pi]`.
    #[inline]
    pub fn angle(self) -> f64 {
        fmath::atan2(self.y, self.x)
    }

    /// The vector scaled to unit length. Callers must ensure it is nonzero.
    #[inline]
    pub fn unit(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    /// Lexicographic comparison key `(x, y)`; used for canonical ordering.
    #[inline]
    pub fn lex_key(self) -> (f64, f64) {
        (self.x, self.y)
    }

    /// True if the two points coincide within the current tolerance.
    #[inline]
    pub fn approx_eq(self, other: Point) -> bool {
        self.dist(other) <= tolerance()
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Twice the signed area of the triangle `(a, b, t)`: positive when `t`
/// lies to the left of the directed line `a -> b`.
#[inline]
pub fn side_of(a: Point, b: Point, t: Point) -> f64 {
    (b - a).cross(t - a)
}

/// A closed disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    #[inline]
    pub const fn new(center: Point, radius: f64) -> Self {
        Disk { center, radius }
    }

    /// Closed containment within the current tolerance.
    #[inline]
    pub fn contains(&self, t: Point) -> bool {
        self.center.dist(t) <= self.radius + tolerance()
    }

    /// Containment with strict clearance from the boundary.
    #[inline]
    pub fn contains_strictly(&self, t: Point) -> bool {
        self.center.dist(t) < self.radius - tolerance()
    }

    /// The smallest disk through two points (diametral disk).
    pub fn through_two(p: Point, q: Point) -> Disk {
        Disk::new(p.mid(q), 0.5 * p.dist(q))
    }
}

/// Circumcircle of three points, or `None` if they are (nearly) collinear.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Option<Disk> {
    let d = 2.0 * ((b - a).cross(c - a));
    // Degenerate triangles have no finite circumcenter; the cutoff is scaled
    // by the edge lengths so that thin-but-large triangles still resolve.
    let scale = fmath::fmax(a.dist_sq(b), fmath::fmax(b.dist_sq(c), a.dist_sq(c)));
    if fmath::fabs(d) <= 1e-14 * fmath::fmax(scale, 1.0) {
        return None;
    }
    let a2 = a.norm_sq();
    let b2 = b.norm_sq();
    let c2 = c.norm_sq();
    let ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    let uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    let center = Point::new(ux, uy);
    Some(Disk::new(center, center.dist(a)))
}

/// True if a single radius-`r` disk can cover both points, i.e.
/// `|pq| <= 2r` within tolerance.
#[inline]
pub fn pair_coverable(p: Point, q: Point, r: f64) -> bool {
    p.dist(q) <= 2.0 * r + tolerance()
}

/// Centers of the two radius-`r` circles through `p` and `q`, as
/// `(cw_center, ccw_center)`:
///
/// - `cw_center` is the center of the circle whose *minor* arc from `p` to
///   `q` is traversed clockwise (the arc bulges to the left of `p -> q`);
/// - `ccw_center` is the mirror image across the chord.
///
/// Returns `None` when the points are farther than `2r` apart. For
/// near-diametral pairs the two centers coincide at the midpoint.
pub fn minor_arc_centers(p: Point, q: Point, r: f64) -> Option<(Point, Point)> {
    let d = q - p;
    let len = d.norm();
    if len > 2.0 * r + tolerance() {
        return None;
    }
    let mid = p.mid(q);
    if len <= tolerance() {
        // Coincident endpoints: any center at distance r works; pick the one
        // straight below so the choice is deterministic.
        return Some((mid - Point::new(0.0, r), mid - Point::new(0.0, r)));
    }
    let h = fmath::sqrt_nn(r * r - 0.25 * len * len);
    let n = d.rot90_ccw() * (1.0 / len); // unit left normal of p -> q
    Some((mid - n * h, mid + n * h))
}

/// A minor arc of a radius-`r` circle, traversed *clockwise* from `a` to
/// `b`; the central angle never exceeds pi.
///
/// Hull boundaries in this crate are clockwise sequences of such arcs, so
/// "the arc from `u` to its clockwise neighbor" is always a `MinorArc` in
/// this orientation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinorArc {
    pub a: Point,
    pub b: Point,
    pub center: Point,
    pub radius: f64,
}

impl MinorArc {
    /// The minor arc from `a` to `b` traversed clockwise, or `None` when the
    /// endpoints are farther than `2r` apart.
    pub fn cw(a: Point, b: Point, r: f64) -> Option<MinorArc> {
        let (cw_center, _) = minor_arc_centers(a, b, r)?;
        Some(MinorArc {
            a,
            b,
            center: cw_center,
            radius: r,
        })
    }

    /// The supporting disk: the radius-`r` disk whose boundary carries the
    /// arc. A circular hull is contained in the supporting disk of each of
    /// its boundary arcs.
    #[inline]
    pub fn supporting_disk(&self) -> Disk {
        Disk::new(self.center, self.radius)
    }

    /// True when the chord is (nearly) a diameter, i.e. the central angle
    /// is pi within tolerance.
    pub fn is_diametral(&self) -> bool {
        fmath::fabs(self.a.dist(self.b) - 2.0 * self.radius) <= 2.0 * tolerance()
    }

    /// Central angle in `[0, pi]`.
    pub fn sweep(&self) -> f64 {
        let u = self.a - self.center;
        let v = self.b - self.center;
        // Clockwise sweep: v = u rotated by -sweep, so cross(u, v) = -r^2 sin.
        let ang = fmath::atan2(-u.cross(v), u.dot(v));
        if ang < 0.0 {
            0.0
        } else {
            ang
        }
    }

    /// Point at parameter `f` in `[0, 1]` along the clockwise traversal.
    pub fn point_at(&self, f: f64) -> Point {
        self.center + (self.a - self.center).rotate(-self.sweep() * f)
    }

    /// The arc's midpoint (parameter 1/2).
    #[inline]
    pub fn arc_midpoint(&self) -> Point {
        self.point_at(0.5)
    }

    /// True if the unit direction `u` (from the center) points into the
    /// arc's angular window. This is the direction test only; it ignores
    /// distance from the center.
    pub fn spans_direction(&self, u: Point) -> bool {
        let tol = tolerance();
        let ua = (self.a - self.center) * (1.0 / self.radius);
        let ub = (self.b - self.center) * (1.0 / self.radius);
        // Clockwise from `a` to `b` with sweep <= pi: the window is exactly
        // the set of directions not left of `a` and not right of `b`.
        u.cross(ua) >= -tol && ub.cross(u) >= -tol
    }

    /// True if `t` lies on the arc itself (on the circle, within the
    /// angular window), within tolerance.
    pub fn contains_boundary(&self, t: Point) -> bool {
        let d = t - self.center;
        let len = d.norm();
        if fmath::fabs(len - self.radius) > tolerance() {
            return false;
        }
        if len <= tolerance() {
            return false;
        }
        self.spans_direction(d * (1.0 / len))
    }

    /// The point of the arc extreme in direction `dir` (unit vector), with
    /// its signed extent `dot(point, dir)`.
    ///
    /// If the outward direction `dir` falls inside the arc's angular window
    /// the extreme point is interior (`center + r * dir`); otherwise it is
    /// whichever endpoint reaches farther.
    pub fn extremum_along(&self, dir: Point) -> (Point, f64) {
        if self.spans_direction(dir) {
            let p = self.center + dir * self.radius;
            (p, p.dot(dir))
        } else {
            let va = self.a.dot(dir);
            let vb = self.b.dot(dir);
            if va >= vb {
                (self.a, va)
            } else {
                (self.b, vb)
            }
        }
    }

    /// The same arc traversed in the opposite direction is the *other*
    /// circle's minor arc; this returns the present arc with endpoints
    /// swapped, still clockwise, which is the boundary arc of the mirror
    /// hull. (Center is unchanged: cw from `b` to `a` on this circle would
    /// be the major arc, so the mirror uses the reflected center.)
    pub fn reversed(&self) -> MinorArc {
        let mid = self.a.mid(self.b);
        MinorArc {
            a: self.b,
            b: self.a,
            center: mid + (mid - self.center),
            radius: self.radius,
        }
    }
}

/// Closed membership in the supporting disk `D(w)` of an arc.
#[inline]
pub fn in_supporting_disk(w: &MinorArc, t: Point) -> bool {
    w.supporting_disk().contains(t)
}

/// Membership in the region bounded by the arc and its chord (the "cap"
/// cut off the supporting disk by the chord, on the arc's side). Closed on
/// both boundaries.
///
/// For a hull boundary arc `w`, a point in this region sees `w` as the
/// nearest piece of boundary; the dynamic structure uses it as the O(1)
/// redundancy test against a single arc.
pub fn in_d1_region(w: &MinorArc, t: Point) -> bool {
    if !in_supporting_disk(w, t) {
        return false;
    }
    let chord = w.b - w.a;
    let chord_len = chord.norm();
    if chord_len <= tolerance() {
        // Degenerate chord: the cap collapses to the single endpoint.
        return t.dist(w.a) <= tolerance();
    }
    // Signed distance from the chord line, positive on the arc's side. The
    // clockwise arc bulges to the left of a -> b.
    let signed = side_of(w.a, w.b, t) / chord_len;
    signed >= -tolerance()
}

/// Tangency test at a hull vertex: a radius-matching disk through `v` is
/// tangent to the hull (and therefore contains it entirely) exactly when it
/// contains both neighbors of `v`. `v` itself is expected on the boundary
/// of `d`; only the neighbor memberships are decisive.
pub fn tangent_disk_covers_neighbors(v: Point, cw_v: Point, ccw_v: Point, d: &Disk) -> bool {
    debug_assert!(d.contains(v), "tangency test at a vertex off the disk");
    d.contains(cw_v) && d.contains(ccw_v)
}

/// Membership in the "lens" of `p`, `q` at radius `r`: the intersection of
/// *all* radius-`r` disks containing both points, which equals the
/// intersection of the two extreme disks. This is the two-point circular
/// hull, tested without constructing it. Returns `false` when no radius-`r`
/// disk holds both points.
pub fn lens_contains(p: Point, q: Point, r: f64, t: Point) -> bool {
    match minor_arc_centers(p, q, r) {
        Some((c1, c2)) => {
            Disk::new(c1, r).contains(t) && Disk::new(c2, r).contains(t)
        }
        None => false,
    }
}
