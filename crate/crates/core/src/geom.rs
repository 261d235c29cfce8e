//! Exact planar primitives: points, circles, the two-point and three-point
//! circle constructions, and the containment/boundary predicates every other
//! module routes through.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A sensor-node ground position in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Center plus radius; the universal output of all enclosing-circle operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        Circle { center, radius }
    }
}

/// Tolerance policy shared by every containment and degeneracy test.
///
/// `eps_contain` is absolute slack in meters for boundary/containment checks.
/// `eps_degenerate` is the absolute threshold on the circumcircle denominator
/// below which three points are treated as collinear.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_contain: f64,
    pub eps_degenerate: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_contain: 1e-9,
            eps_degenerate: 1e-12,
        }
    }
}

impl Tolerance {
    /// Tolerance scaled to the working coordinate range: the degeneracy
    /// threshold grows quadratically with the largest absolute coordinate.
    pub fn for_scale(scale: f64) -> Self {
        Tolerance {
            eps_contain: 1e-9,
            eps_degenerate: (1e-12 * scale * scale).max(1e-30),
        }
    }

    /// Scale-aware tolerance derived from a point set.
    pub fn for_points<'a>(points: impl IntoIterator<Item = &'a Point2>) -> Self {
        let scale = points
            .into_iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(0.0_f64, f64::max);
        Self::for_scale(scale.max(1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the three points are collinear; no finite circumcircle exists")]
pub struct CollinearError;

/// Circle whose diameter is the segment from `p` to `q`.
///
/// Coincident inputs are legal and yield a radius-0 circle at that point.
pub fn circle_from_two(p: Point2, q: Point2) -> Circle {
    let center = Point2::new((p.x + q.x) / 2.0, (p.y + q.y) / 2.0);
    Circle::new(center, p.distance(&q) / 2.0)
}

/// The unique circle through three non-collinear points.
///
/// The center solves the pair of perpendicular-bisector equations
/// a·x + b·y = e, c·x + d·y = f with
/// a = xi−xj, b = yi−yj, c = xi−xh, d = yi−yh,
/// e = ((xi²−xj²)−(yj²−yi²))/2, f = ((xi²−xh²)−(yh²−yi²))/2,
/// and the radius is the distance from the center to any defining point.
pub fn circumcircle(p: Point2, q: Point2, h: Point2, tol: &Tolerance) -> Result<Circle, CollinearError> {
    let a = p.x - q.x;
    let b = p.y - q.y;
    let c = p.x - h.x;
    let d = p.y - h.y;
    let e = ((p.x * p.x - q.x * q.x) - (q.y * q.y - p.y * p.y)) / 2.0;
    let f = ((p.x * p.x - h.x * h.x) - (h.y * h.y - p.y * p.y)) / 2.0;

    // b·c − a·d is (twice) the signed triangle area, the exact quantity the
    // center division would blow up on.
    let denom = a * d - b * c;
    if denom.abs() <= tol.eps_degenerate {
        return Err(CollinearError);
    }

    let x0 = (d * e - b * f) / denom;
    let y0 = (a * f - c * e) / denom;
    let center = Point2::new(x0, y0);
    Ok(Circle::new(center, center.distance(&p)))
}

/// True iff `p` lies in the closed disk, with `eps_contain` slack.
pub fn contains(c: &Circle, p: &Point2, tol: &Tolerance) -> bool {
    p.distance(&c.center) <= c.radius + tol.eps_contain
}

/// True iff `p` lies on the circle boundary, with `eps_contain` slack.
pub fn on_boundary(c: &Circle, p: &Point2, tol: &Tolerance) -> bool {
    (p.distance(&c.center) - c.radius).abs() <= tol.eps_contain
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn two_point_circle_basic() {
        let c = circle_from_two(Point2::new(0.0, 0.0), Point2::new(2.0, 0.0));
        assert_eq!(c.center, Point2::new(1.0, 0.0));
        assert_eq!(c.radius, 1.0);
    }

    #[test]
    fn two_point_circle_coincident() {
        let c = circle_from_two(Point2::new(3.0, 4.0), Point2::new(3.0, 4.0));
        assert_eq!(c.center, Point2::new(3.0, 4.0));
        assert_eq!(c.radius, 0.0);
    }

    #[test]
    fn two_point_circle_diagonal() {
        let c = circle_from_two(Point2::new(1.0, 1.0), Point2::new(4.0, 5.0));
        assert_eq!(c.center, Point2::new(2.5, 3.0));
        assert_eq!(c.radius, 2.5);
    }

    #[test]
    fn two_point_circle_symmetric() {
        let p = Point2::new(-3.25, 7.5);
        let q = Point2::new(11.0, -0.125);
        assert_eq!(circle_from_two(p, q), circle_from_two(q, p));
    }

    #[test]
    fn circumcircle_right_triangle() {
        let c = circumcircle(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
            &tol(),
        )
        .unwrap();
        assert!((c.center.x - 1.0).abs() < 1e-12);
        assert!((c.center.y - 1.0).abs() < 1e-12);
        assert!((c.radius - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn circumcircle_unit_circle() {
        let c = circumcircle(
            Point2::new(1.0, 0.0),
            Point2::new(-1.0, 0.0),
            Point2::new(0.0, 1.0),
            &tol(),
        )
        .unwrap();
        assert!(c.center.x.abs() < 1e-12);
        assert!(c.center.y.abs() < 1e-12);
        assert!((c.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn circumcircle_collinear() {
        let r = circumcircle(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(2.0, 2.0),
            &tol(),
        );
        assert_eq!(r, Err(CollinearError));
    }

    #[test]
    fn circumcircle_points_on_boundary() {
        let p = Point2::new(0.3, -1.7);
        let q = Point2::new(4.1, 2.2);
        let h = Point2::new(-2.0, 3.5);
        let c = circumcircle(p, q, h, &tol()).unwrap();
        for pt in [p, q, h] {
            assert!(on_boundary(&c, &pt, &tol()));
        }
    }

    #[test]
    fn contains_and_boundary() {
        let c = Circle::new(Point2::new(0.0, 0.0), 1.0);
        let t = tol();
        assert!(contains(&c, &Point2::new(0.0, 0.0), &t));
        assert!(contains(&c, &Point2::new(1.0, 0.0), &t));
        assert!(!contains(&c, &Point2::new(2.0, 0.0), &t));
        assert!(on_boundary(&c, &Point2::new(1.0, 0.0), &t));
        assert!(!on_boundary(&c, &Point2::new(0.0, 0.0), &t));
        let shifted = Circle::new(Point2::new(1.0, 0.0), 1.0);
        assert!(on_boundary(&shifted, &Point2::new(2.0, 0.0), &t));
    }
}
