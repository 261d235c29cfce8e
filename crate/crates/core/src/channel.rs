//! Probabilistic LoS air-to-ground channel: elevation angle, sigmoid LoS
//! probability, LoS/NLoS power-law gains, Bernoulli-mixed sampling, and the
//! closed-form expected gain.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::geom::Point2;

/// UAV position [x, y, z] in meters, z > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Waypoint3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Waypoint3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Waypoint3 { x, y, z }
    }
}

/// Sigmoid LoS-probability constants: coefficient/offset `a` and per-degree
/// slope `b`, both positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LosParams {
    pub a: f64,
    pub b: f64,
}

impl Default for LosParams {
    fn default() -> Self {
        LosParams { a: 9.61, b: 0.16 }
    }
}

/// Path-loss constants: reference gain at 1 m, LoS/NLoS exponents, and the
/// extra NLoS attenuation factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub beta0: f64,
    pub alpha_los: f64,
    pub alpha_nlos: f64,
    pub mu: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        ChannelParams {
            beta0: 1e-3,
            alpha_los: 2.0,
            alpha_nlos: 3.0,
            mu: 0.2,
        }
    }
}

/// Per-link quantities for one UAV-to-node geometry. All gains linear scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkStats {
    pub distance: f64,
    pub elevation_deg: f64,
    pub p_los: f64,
    pub h_los: f64,
    pub h_nlos: f64,
    pub h_expected: f64,
}

/// 3-D UAV-to-node distance, with the node on the ground plane.
pub fn distance(u: &Waypoint3, s: &Point2) -> f64 {
    let dx = s.x - u.x;
    let dy = s.y - u.y;
    (dx * dx + dy * dy + u.z * u.z).sqrt()
}

/// Elevation angle in degrees, (0, 90]; exactly 90 directly overhead.
pub fn elevation_angle(u: &Waypoint3, s: &Point2) -> f64 {
    let horizontal = (s.x - u.x).hypot(s.y - u.y);
    if horizontal == 0.0 {
        return 90.0;
    }
    (u.z / horizontal).atan().to_degrees()
}

/// LoS probability 1 / (1 + a·exp(−b·(θ − a))); strictly increasing in θ.
pub fn los_probability(theta_deg: f64, p: &LosParams) -> f64 {
    1.0 / (1.0 + p.a * (-p.b * (theta_deg - p.a)).exp())
}

pub fn nlos_probability(theta_deg: f64, p: &LosParams) -> f64 {
    1.0 - los_probability(theta_deg, p)
}

/// LoS and NLoS power-law gains at distance `d`.
pub fn gains(d: f64, p: &ChannelParams) -> (f64, f64) {
    let h_los = p.beta0 * d.powf(-p.alpha_los);
    let h_nlos = p.mu * p.beta0 * d.powf(-p.alpha_nlos);
    (h_los, h_nlos)
}

/// One Bernoulli-mixed gain draw: the LoS gain with probability `p_los`,
/// otherwise the NLoS gain. The caller owns the RNG stream.
pub fn sample_gain(
    u: &Waypoint3,
    s: &Point2,
    lp: &LosParams,
    cp: &ChannelParams,
    rng: &mut impl Rng,
) -> f64 {
    let theta = elevation_angle(u, s);
    let p_los = los_probability(theta, lp);
    let (h_los, h_nlos) = gains(distance(u, s), cp);
    if rng.random::<f64>() < p_los {
        h_los
    } else {
        h_nlos
    }
}

/// Expectation of the mixed gain over the LoS Bernoulli state.
pub fn expected_gain(u: &Waypoint3, s: &Point2, lp: &LosParams, cp: &ChannelParams) -> f64 {
    let theta = elevation_angle(u, s);
    let p_los = los_probability(theta, lp);
    let (h_los, h_nlos) = gains(distance(u, s), cp);
    p_los * h_los + (1.0 - p_los) * h_nlos
}

/// All per-link quantities for one geometry in one pass.
pub fn link_stats(u: &Waypoint3, s: &Point2, lp: &LosParams, cp: &ChannelParams) -> LinkStats {
    let d = distance(u, s);
    let theta = elevation_angle(u, s);
    let p_los = los_probability(theta, lp);
    let (h_los, h_nlos) = gains(d, cp);
    LinkStats {
        distance: d,
        elevation_deg: theta,
        p_los,
        h_los,
        h_nlos,
        h_expected: p_los * h_los + (1.0 - p_los) * h_nlos,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&Waypoint3::new(0.0, 0.0, 100.0), &Point2::new(0.0, 0.0)), 100.0);
        assert_eq!(distance(&Waypoint3::new(0.0, 0.0, 3.0), &Point2::new(4.0, 0.0)), 5.0);
        let d = distance(&Waypoint3::new(10.0, 10.0, 50.0), &Point2::new(-20.0, 30.0));
        assert!((d - 3800.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn elevation_examples() {
        assert_eq!(elevation_angle(&Waypoint3::new(0.0, 0.0, 100.0), &Point2::new(0.0, 0.0)), 90.0);
        let th = elevation_angle(&Waypoint3::new(0.0, 0.0, 1.0), &Point2::new(1.0, 0.0));
        assert!((th - 45.0).abs() < 1e-12);
        let th = elevation_angle(&Waypoint3::new(0.0, 0.0, 3.0_f64.sqrt()), &Point2::new(1.0, 0.0));
        assert!((th - 60.0).abs() < 1e-12);
    }

    #[test]
    fn los_probability_at_offset() {
        let p = LosParams { a: 9.61, b: 0.16 };
        let at_a = los_probability(p.a, &p);
        assert!((at_a - 1.0 / (1.0 + p.a)).abs() < 1e-12);
        let high = los_probability(90.0, &p);
        assert!((high - 0.99997).abs() < 1e-4);
        let steep = LosParams { a: 9.61, b: 50.0 };
        assert!(los_probability(45.0, &steep) > 1.0 - 1e-12);
    }

    #[test]
    fn complement_is_exact() {
        let p = LosParams::default();
        for theta in [1.0, 9.61, 30.0, 60.0, 90.0] {
            assert_eq!(los_probability(theta, &p) + nlos_probability(theta, &p), 1.0);
        }
        assert!((nlos_probability(p.a, &p) - p.a / (1.0 + p.a)).abs() < 1e-12);
    }

    #[test]
    fn los_probability_monotone() {
        let p = LosParams::default();
        let mut prev = los_probability(0.001, &p);
        for i in 1..=900 {
            let theta = i as f64 * 0.1;
            let cur = los_probability(theta, &p);
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn gain_examples() {
        let p = ChannelParams::default();
        let (hl, hn) = gains(1.0, &p);
        assert_eq!(hl, p.beta0);
        assert_eq!(hn, p.mu * p.beta0);

        let inv_sq = ChannelParams { beta0: 1.0, alpha_los: 2.0, alpha_nlos: 3.0, mu: 0.1 };
        assert!((gains(10.0, &inv_sq).0 - 0.01).abs() < 1e-15);

        let p = ChannelParams { beta0: 1e-3, alpha_los: 2.0, alpha_nlos: 3.0, mu: 0.1 };
        let (hl, hn) = gains(100.0, &p);
        assert!((hl - 1e-7).abs() < 1e-18);
        assert!((hn - 1e-10).abs() < 1e-21);
    }

    #[test]
    fn sample_is_always_one_of_the_two_gains() {
        let u = Waypoint3::new(0.0, 0.0, 120.0);
        let s = Point2::new(80.0, -60.0);
        let lp = LosParams::default();
        let cp = ChannelParams::default();
        let (hl, hn) = gains(distance(&u, &s), &cp);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let g = sample_gain(&u, &s, &lp, &cp, &mut rng);
            assert!(g == hl || g == hn);
        }
    }

    #[test]
    fn monte_carlo_mean_matches_expectation() {
        let u = Waypoint3::new(0.0, 0.0, 100.0);
        let s = Point2::new(150.0, 50.0);
        let lp = LosParams::default();
        let cp = ChannelParams::default();
        let n = 100_000;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mean: f64 = (0..n).map(|_| sample_gain(&u, &s, &lp, &cp, &mut rng)).sum::<f64>() / n as f64;
        let expected = expected_gain(&u, &s, &lp, &cp);
        let theta = elevation_angle(&u, &s);
        let p = los_probability(theta, &lp);
        let (hl, hn) = gains(distance(&u, &s), &cp);
        let se = (p * (1.0 - p) / n as f64).sqrt() * (hl - hn).abs();
        assert!((mean - expected).abs() <= 3.0 * se, "mean {mean} expected {expected} se {se}");
    }

    #[test]
    fn expected_gain_within_bracket() {
        let u = Waypoint3::new(0.0, 0.0, 90.0);
        let s = Point2::new(200.0, 0.0);
        let lp = LosParams::default();
        let cp = ChannelParams::default();
        let (hl, hn) = gains(distance(&u, &s), &cp);
        let e = expected_gain(&u, &s, &lp, &cp);
        assert!(e >= hn.min(hl) && e <= hn.max(hl));
        assert!(hn <= hl);
    }
}
