//! Minimum enclosing circle: a randomized incremental solver plus the cubic
//! brute-force enumeration used as its testing oracle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{circle_from_two, circumcircle, contains, Circle, Point2, Tolerance};

/// Seed for the shuffle driving the randomized solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// The smallest enclosing circle together with the (at most three) input
/// indices that determine it on its boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MecResult {
    pub circle: Circle,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("minimum enclosing circle of zero points is undefined")]
pub struct EmptyInputError;

/// Randomized incremental minimum enclosing circle.
///
/// Move-to-front scheme over a seeded pre-shuffle; deterministic for a fixed
/// (input order, seed) pair. Duplicates are legal.
pub fn mec_welzl(points: &[Point2], seed: Seed, tol: &Tolerance) -> Result<MecResult, EmptyInputError> {
    if points.is_empty() {
        return Err(EmptyInputError);
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.shuffle(&mut seed.rng());

    let mut best = MecResult {
        circle: Circle::new(points[order[0]], 0.0),
        support: vec![order[0]],
    };
    for i in 1..order.len() {
        let idx = order[i];
        if !contains(&best.circle, &points[idx], tol) {
            best = circle_one_known(points, &order[..i], idx, tol);
        }
    }

    // A set of coincident points converges with a single support index; the
    // result contract wants at least two when two or more inputs exist.
    if points.len() >= 2 && best.support.len() == 1 {
        let have = best.support[0];
        if let Some(extra) = (0..points.len()).find(|&j| j != have && contains(&best.circle, &points[j], tol)) {
            best.support.push(extra);
        }
    }
    Ok(best)
}

// Smallest circle over `scanned` with `p_idx` known to be on the boundary.
fn circle_one_known(points: &[Point2], scanned: &[usize], p_idx: usize, tol: &Tolerance) -> MecResult {
    let p = points[p_idx];
    let mut best = MecResult {
        circle: Circle::new(p, 0.0),
        support: vec![p_idx],
    };
    for (i, &q_idx) in scanned.iter().enumerate() {
        if contains(&best.circle, &points[q_idx], tol) {
            continue;
        }
        if best.circle.radius == 0.0 {
            best = MecResult {
                circle: circle_from_two(p, points[q_idx]),
                support: vec![p_idx, q_idx],
            };
        } else {
            best = circle_two_known(points, &scanned[..=i], p_idx, q_idx, tol);
        }
    }
    best
}

// Smallest circle over `scanned` with `p_idx` and `q_idx` on the boundary.
fn circle_two_known(points: &[Point2], scanned: &[usize], p_idx: usize, q_idx: usize, tol: &Tolerance) -> MecResult {
    let p = points[p_idx];
    let q = points[q_idx];
    let diameter = circle_from_two(p, q);
    let mut left: Option<MecResult> = None;
    let mut right: Option<MecResult> = None;

    let px = q.x - p.x;
    let py = q.y - p.y;
    for &r_idx in scanned {
        let r = points[r_idx];
        if contains(&diameter, &r, tol) {
            continue;
        }
        let cross = px * (r.y - p.y) - py * (r.x - p.x);
        let Ok(c) = circumcircle(p, q, r, tol) else {
            continue;
        };
        let c_cross = px * (c.center.y - p.y) - py * (c.center.x - p.x);
        if cross > 0.0 {
            let better = match &left {
                None => true,
                Some(cur) => c_cross > px * (cur.circle.center.y - p.y) - py * (cur.circle.center.x - p.x),
            };
            if better {
                left = Some(MecResult {
                    circle: c,
                    support: vec![p_idx, q_idx, r_idx],
                });
            }
        } else if cross < 0.0 {
            let better = match &right {
                None => true,
                Some(cur) => c_cross < px * (cur.circle.center.y - p.y) - py * (cur.circle.center.x - p.x),
            };
            if better {
                right = Some(MecResult {
                    circle: c,
                    support: vec![p_idx, q_idx, r_idx],
                });
            }
        }
    }

    match (left, right) {
        (None, None) => MecResult {
            circle: diameter,
            support: vec![p_idx, q_idx],
        },
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.circle.radius <= r.circle.radius {
                l
            } else {
                r
            }
        }
    }
}

/// Exhaustive O(k³) reference: every pair circle and every non-collinear
/// triple circle, keeping the smallest one covering all points. Equal-radius
/// ties break to the lexicographically smallest (center.x, center.y).
pub fn mec_bruteforce(points: &[Point2], tol: &Tolerance) -> Result<MecResult, EmptyInputError> {
    if points.is_empty() {
        return Err(EmptyInputError);
    }
    if points.len() == 1 {
        return Ok(MecResult {
            circle: Circle::new(points[0], 0.0),
            support: vec![0],
        });
    }

    let covers = |c: &Circle| points.iter().all(|p| contains(c, p, tol));
    let mut best: Option<MecResult> = None;
    let mut consider = |cand: MecResult| {
        let better = match &best {
            None => true,
            Some(cur) => {
                let rel = 1e-12 * cur.circle.radius.max(1.0);
                if cand.circle.radius < cur.circle.radius - rel {
                    true
                } else if cand.circle.radius <= cur.circle.radius + rel {
                    (cand.circle.center.x, cand.circle.center.y)
                        < (cur.circle.center.x, cur.circle.center.y)
                } else {
                    false
                }
            }
        };
        if better {
            best = Some(cand);
        }
    };

    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let c = circle_from_two(points[i], points[j]);
            if covers(&c) {
                consider(MecResult {
                    circle: c,
                    support: vec![i, j],
                });
            }
            for h in (j + 1)..points.len() {
                if let Ok(c) = circumcircle(points[i], points[j], points[h], tol) {
                    if covers(&c) {
                        consider(MecResult {
                            circle: c,
                            support: vec![i, j, h],
                        });
                    }
                }
            }
        }
    }

    Ok(best.expect("a covering pair circle always exists for k >= 2"))
}

/// Runtime probe for the incremental boundary rule: if `extra` falls outside
/// the MEC of `points`, it must sit on the boundary of the MEC of
/// `points` plus `extra`.
pub fn incremental_check(points: &[Point2], extra: Point2, seed: Seed, tol: &Tolerance) -> bool {
    let Ok(base) = mec_welzl(points, seed, tol) else {
        return false;
    };
    if contains(&base.circle, &extra, tol) {
        return true;
    }
    let mut all = points.to_vec();
    all.push(extra);
    let Ok(grown) = mec_welzl(&all, seed, tol) else {
        return false;
    };
    crate::geom::on_boundary(&grown.circle, &extra, tol)
}
