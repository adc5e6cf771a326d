//! Smallest enclosing disks via randomized incremental construction
//! (expected linear time).
//!
//! The radius of the smallest enclosing disk is the threshold for circular
//! hull existence: the radius-r hull of a point set is nonempty exactly
//! when the set fits in some radius-r disk. The solver and the decision
//! procedure both lean on this as their feasibility oracle, so the
//! construction is deterministic: the insertion order comes from a fixed
//! splitmix64 shuffle, making every run (and every test) reproducible.

use alloc::vec::Vec;

use crate::geom::{circumcircle, tolerance, Disk, Point};

/// Smallest disk containing all of `pts`; `None` for an empty slice.
pub fn smallest_enclosing_disk(pts: &[Point]) -> Option<Disk> {
    if pts.is_empty() {
        return None;
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    shuffle(&mut order);

    let mut disk = Disk::new(pts[order[0]], 0.0);
    for i in 1..order.len() {
        let p = pts[order[i]];
        if disk.contains(p) {
            continue;
        }
        disk = Disk::new(p, 0.0);
        for j in 0..i {
            let q = pts[order[j]];
            if disk.contains(q) {
                continue;
            }
            disk = Disk::through_two(p, q);
            for k in 0..j {
                let s = pts[order[k]];
                if !disk.contains(s) {
                    disk = disk_from_boundary_three(p, q, s);
                }
            }
        }
    }
    Some(disk)
}

/// Radius of the smallest enclosing disk; `0.0` for an empty slice.
pub fn sed_radius(pts: &[Point]) -> f64 {
    smallest_enclosing_disk(pts).map_or(0.0, |d| d.radius)
}

/// True when some radius-`r` disk covers all of `pts` (closed within the
/// global tolerance). Empty sets are trivially coverable.
pub fn coverable_within(pts: &[Point], r: f64) -> bool {
    sed_radius(pts) <= r + tolerance()
}

/// Disk through three prescribed boundary points. Collinear triples have
/// no circumcircle; the smallest disk with all three on or inside is then
/// the diametral disk of the farthest pair.
fn disk_from_boundary_three(a: Point, b: Point, c: Point) -> Disk {
    if let Some(d) = circumcircle(a, b, c) {
        return d;
    }
    let (mut p, mut q, mut best) = (a, b, a.dist_sq(b));
    if b.dist_sq(c) > best {
        p = b;
        q = c;
        best = b.dist_sq(c);
    }
    if a.dist_sq(c) > best {
        p = a;
        q = c;
    }
    Disk::through_two(p, q)
}

/// Fisher–Yates with a fixed splitmix64 stream, so construction order (and
/// thus floating-point rounding) is identical across runs and platforms.
fn shuffle(order: &mut [usize]) {
    let mut state: u64 = 0x9db2_194f_ab6a_7d6c ^ (order.len() as u64);
    for i in (1..order.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
