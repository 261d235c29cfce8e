//! Greedy search for the constrained smallest enclosing circle: cover at most
//! `n` points of a weight-sorted set while maximizing the covered weight.
//! A small-instance exhaustive oracle serves as the quality reference.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{circle_from_two, circumcircle, contains, Circle, Point2, Tolerance};
use crate::mec::{mec_bruteforce, mec_welzl, Seed};

/// A sensor node: planar position plus nonnegative service weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedPoint {
    pub point: Point2,
    pub weight: f64,
}

impl WeightedPoint {
    pub fn new(x: f64, y: f64, weight: f64) -> Self {
        WeightedPoint {
            point: Point2::new(x, y),
            weight,
        }
    }
}

/// Output of the constrained search: the covering circle, the chosen input
/// indices, and their total weight (summed in selection order).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstrainedResult {
    pub circle: Circle,
    pub selected: Vec<usize>,
    pub weight_sum: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CmecError {
    #[error("constrained search needs at least 2 points")]
    TooFewPoints,
    #[error("capacity must be at least 2")]
    InvalidCapacity,
}

/// Indices ordering weights non-increasingly; ties keep original order.
pub fn sort_by_weight(points: &[WeightedPoint]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[b]
            .weight
            .partial_cmp(&points[a].weight)
            .expect("weights are finite")
            .then(a.cmp(&b))
    });
    order
}

/// Single-pass greedy over the weight order. The circle starts as the
/// diameter circle of the two heaviest points and only ever grows; every
/// processed point is admitted (growing the circle when it falls outside)
/// until the capacity is reached.
pub fn constrained_mec(
    points: &[WeightedPoint],
    capacity: usize,
    seed: Seed,
    tol: &Tolerance,
) -> Result<ConstrainedResult, CmecError> {
    if capacity < 2 {
        return Err(CmecError::InvalidCapacity);
    }
    if points.len() < 2 {
        return Err(CmecError::TooFewPoints);
    }
    let cap = capacity.min(points.len());
    let order = sort_by_weight(points);

    let mut selected: Vec<usize> = vec![order[0], order[1]];
    let mut circle = circle_from_two(points[order[0]].point, points[order[1]].point);
    let mut queue: Vec<usize> = order[2..].to_vec();

    // Absorb every not-yet-selected point already inside the circle, in
    // weight order, until the capacity is hit.
    fn absorb(
        queue: &mut Vec<usize>,
        selected: &mut Vec<usize>,
        circle: &Circle,
        points: &[WeightedPoint],
        cap: usize,
        tol: &Tolerance,
    ) {
        queue.retain(|&idx| {
            if selected.len() < cap && contains(circle, &points[idx].point, tol) {
                selected.push(idx);
                false
            } else {
                true
            }
        });
    }

    absorb(&mut queue, &mut selected, &circle, points, cap, tol);

    while selected.len() < cap && !queue.is_empty() {
        let next = queue.remove(0);
        let p = points[next].point;
        if !contains(&circle, &p, tol) {
            circle = grow_circle(points, &selected, p, seed, tol);
        }
        selected.push(next);
        absorb(&mut queue, &mut selected, &circle, points, cap, tol);
    }

    // Selection never exceeds the capacity, so retaining the heaviest `cap`
    // members is a sort, not a cut.
    selected.sort_by(|&a, &b| {
        points[b]
            .weight
            .partial_cmp(&points[a].weight)
            .expect("weights are finite")
            .then(a.cmp(&b))
    });
    selected.truncate(cap);

    let weight_sum = selected.iter().map(|&i| points[i].weight).sum();
    Ok(ConstrainedResult {
        circle,
        selected,
        weight_sum,
    })
}

// Grow the circle so it covers the selected set plus the newcomer `p`.
// First try the diameter circle from `p` to the farthest selected point;
// failing that, the smallest admissible circumcircle of `p` with a selected
// pair; failing that, the exact MEC of the union.
fn grow_circle(
    points: &[WeightedPoint],
    selected: &[usize],
    p: Point2,
    seed: Seed,
    tol: &Tolerance,
) -> Circle {
    let covers = |c: &Circle| {
        contains(c, &p, tol) && selected.iter().all(|&i| contains(c, &points[i].point, tol))
    };

    let farthest = selected
        .iter()
        .map(|&i| points[i].point)
        .max_by(|a, b| {
            a.distance(&p)
                .partial_cmp(&b.distance(&p))
                .expect("coordinates are finite")
        })
        .expect("selected set is never empty");
    let diameter = circle_from_two(p, farthest);
    if covers(&diameter) {
        return diameter;
    }

    let mut best: Option<Circle> = None;
    for (i, &a) in selected.iter().enumerate() {
        for &b in &selected[i + 1..] {
            let Ok(c) = circumcircle(points[a].point, points[b].point, p, tol) else {
                continue;
            };
            if covers(&c) && best.is_none_or(|cur| c.radius < cur.radius) {
                best = Some(c);
            }
        }
    }
    if let Some(c) = best {
        return c;
    }

    // No admissible two-plus-one circle; fall back to the exact MEC of the
    // union so the containment invariant always holds.
    let mut union: Vec<Point2> = selected.iter().map(|&i| points[i].point).collect();
    union.push(p);
    mec_welzl(&union, seed, tol)
        .expect("union is nonempty")
        .circle
}

/// Exhaustive reference: over every nonempty subset of size at most `n`,
/// maximize the weight sum; ties break to the smaller brute-force MEC radius,
/// then to lexicographic index order. Intended for k <= ~12.
pub fn exhaustive_oracle(points: &[WeightedPoint], capacity: usize, tol: &Tolerance) -> ConstrainedResult {
    assert!(!points.is_empty(), "oracle requires at least one point");
    assert!(points.len() <= 20, "oracle is combinatorial; keep k small");

    let k = points.len();
    let cap = capacity.min(k);
    let mut best: Option<(Vec<usize>, f64, Circle)> = None;

    for mask in 1u32..(1 << k) {
        if mask.count_ones() as usize > cap {
            continue;
        }
        let subset: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        let weight: f64 = subset.iter().map(|&i| points[i].weight).sum();
        let need_circle = match &best {
            None => true,
            Some((_, bw, _)) => weight >= bw - 1e-15 * bw.abs().max(1.0),
        };
        if !need_circle {
            continue;
        }
        let pts: Vec<Point2> = subset.iter().map(|&i| points[i].point).collect();
        let circle = mec_bruteforce(&pts, tol).expect("subset is nonempty").circle;
        let better = match &best {
            None => true,
            Some((bsel, bw, bc)) => {
                let rel = 1e-12 * bw.abs().max(1.0);
                if weight > bw + rel {
                    true
                } else if weight >= bw - rel {
                    let rrel = 1e-12 * bc.radius.max(1.0);
                    if circle.radius < bc.radius - rrel {
                        true
                    } else if circle.radius <= bc.radius + rrel {
                        subset < *bsel
                    } else {
                        false
                    }
                } else {
                    false
                }
            }
        };
        if better {
            best = Some((subset, weight, circle));
        }
    }

    let (selected, weight_sum, circle) = best.expect("at least one singleton subset exists");
    ConstrainedResult {
        circle,
        selected,
        weight_sum,
    }
}
