//! Python bindings: thin wrappers over the uavcov geometry, coverage, and
//! channel primitives plus the JSON pipeline.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use uavcov::channel;
use uavcov::cmec;
use uavcov::geom;
use uavcov::mec;
use uavcov::scenario;
use uavcov::svg;

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct Circle {
    #[pyo3(get)]
    cx: f64,
    #[pyo3(get)]
    cy: f64,
    #[pyo3(get)]
    r: f64,
}

#[pymethods]
impl Circle {
    fn __repr__(&self) -> String {
        format!("Circle(cx={}, cy={}, r={})", self.cx, self.cy, self.r)
    }
}

impl From<geom::Circle> for Circle {
    fn from(c: geom::Circle) -> Self {
        Circle {
            cx: c.center.x,
            cy: c.center.y,
            r: c.radius,
        }
    }
}

#[pyclass(frozen, skip_from_py_object)]
struct MecResult {
    #[pyo3(get)]
    circle: Circle,
    #[pyo3(get)]
    support: Vec<usize>,
}

#[pyclass(frozen, skip_from_py_object)]
struct ConstrainedResult {
    #[pyo3(get)]
    circle: Circle,
    #[pyo3(get)]
    selected: Vec<usize>,
    #[pyo3(get)]
    weight_sum: f64,
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct LosParams {
    #[pyo3(get)]
    a: f64,
    #[pyo3(get)]
    b: f64,
}

#[pymethods]
impl LosParams {
    #[new]
    #[pyo3(signature = (a=9.61, b=0.16))]
    fn new(a: f64, b: f64) -> Self {
        LosParams { a, b }
    }
}

impl From<&LosParams> for channel::LosParams {
    fn from(p: &LosParams) -> Self {
        channel::LosParams { a: p.a, b: p.b }
    }
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct ChannelParams {
    #[pyo3(get)]
    beta0: f64,
    #[pyo3(get)]
    alpha_los: f64,
    #[pyo3(get)]
    alpha_nlos: f64,
    #[pyo3(get)]
    mu: f64,
}

#[pymethods]
impl ChannelParams {
    #[new]
    #[pyo3(signature = (beta0=1e-3, alpha_los=2.0, alpha_nlos=3.0, mu=0.2))]
    fn new(beta0: f64, alpha_los: f64, alpha_nlos: f64, mu: f64) -> Self {
        ChannelParams {
            beta0,
            alpha_los,
            alpha_nlos,
            mu,
        }
    }
}

impl From<&ChannelParams> for channel::ChannelParams {
    fn from(p: &ChannelParams) -> Self {
        channel::ChannelParams {
            beta0: p.beta0,
            alpha_los: p.alpha_los,
            alpha_nlos: p.alpha_nlos,
            mu: p.mu,
        }
    }
}

fn to_points(points: &[(f64, f64)]) -> Vec<geom::Point2> {
    points.iter().map(|&(x, y)| geom::Point2::new(x, y)).collect()
}

fn tol_for(points: &[geom::Point2]) -> geom::Tolerance {
    geom::Tolerance::for_points(points.iter())
}

#[pyfunction]
fn circle_from_two(p: (f64, f64), q: (f64, f64)) -> Circle {
    geom::circle_from_two(geom::Point2::new(p.0, p.1), geom::Point2::new(q.0, q.1)).into()
}

#[pyfunction]
fn circumcircle(p: (f64, f64), q: (f64, f64), h: (f64, f64)) -> PyResult<Circle> {
    let pts = to_points(&[p, q, h]);
    let tol = tol_for(&pts);
    geom::circumcircle(pts[0], pts[1], pts[2], &tol)
        .map(Circle::from)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (points, seed=0))]
fn mec_welzl(points: Vec<(f64, f64)>, seed: u64) -> PyResult<MecResult> {
    let pts = to_points(&points);
    let tol = tol_for(&pts);
    mec::mec_welzl(&pts, mec::Seed(seed), &tol)
        .map(|r| MecResult {
            circle: r.circle.into(),
            support: r.support,
        })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn mec_bruteforce(points: Vec<(f64, f64)>) -> PyResult<MecResult> {
    let pts = to_points(&points);
    let tol = tol_for(&pts);
    mec::mec_bruteforce(&pts, &tol)
        .map(|r| MecResult {
            circle: r.circle.into(),
            support: r.support,
        })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

fn to_weighted(points: &[(f64, f64, f64)]) -> Vec<cmec::WeightedPoint> {
    points
        .iter()
        .map(|&(x, y, w)| cmec::WeightedPoint::new(x, y, w))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (points, capacity, seed=0))]
fn constrained_mec(points: Vec<(f64, f64, f64)>, capacity: usize, seed: u64) -> PyResult<ConstrainedResult> {
    let wpts = to_weighted(&points);
    let raw: Vec<geom::Point2> = wpts.iter().map(|w| w.point).collect();
    let tol = tol_for(&raw);
    cmec::constrained_mec(&wpts, capacity, mec::Seed(seed), &tol)
        .map(|r| ConstrainedResult {
            circle: r.circle.into(),
            selected: r.selected,
            weight_sum: r.weight_sum,
        })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn exhaustive_oracle(points: Vec<(f64, f64, f64)>, capacity: usize) -> ConstrainedResult {
    let wpts = to_weighted(&points);
    let raw: Vec<geom::Point2> = wpts.iter().map(|w| w.point).collect();
    let tol = tol_for(&raw);
    let r = cmec::exhaustive_oracle(&wpts, capacity, &tol);
    ConstrainedResult {
        circle: r.circle.into(),
        selected: r.selected,
        weight_sum: r.weight_sum,
    }
}

#[pyfunction]
fn distance(u: (f64, f64, f64), s: (f64, f64)) -> f64 {
    channel::distance(
        &channel::Waypoint3::new(u.0, u.1, u.2),
        &geom::Point2::new(s.0, s.1),
    )
}

#[pyfunction]
fn elevation_angle(u: (f64, f64, f64), s: (f64, f64)) -> f64 {
    channel::elevation_angle(
        &channel::Waypoint3::new(u.0, u.1, u.2),
        &geom::Point2::new(s.0, s.1),
    )
}

#[pyfunction]
fn los_probability(theta_deg: f64, params: &LosParams) -> f64 {
    channel::los_probability(theta_deg, &params.into())
}

#[pyfunction]
fn nlos_probability(theta_deg: f64, params: &LosParams) -> f64 {
    channel::nlos_probability(theta_deg, &params.into())
}

#[pyfunction]
fn gains(d: f64, params: &ChannelParams) -> (f64, f64) {
    channel::gains(d, &params.into())
}

#[pyfunction]
fn expected_gain(u: (f64, f64, f64), s: (f64, f64), lp: &LosParams, cp: &ChannelParams) -> f64 {
    channel::expected_gain(
        &channel::Waypoint3::new(u.0, u.1, u.2),
        &geom::Point2::new(s.0, s.1),
        &lp.into(),
        &cp.into(),
    )
}

/// Draw `count` Bernoulli-mixed gains from a seeded stream.
#[pyfunction]
#[pyo3(signature = (u, s, lp, cp, seed=0, count=1))]
fn sample_gains(
    u: (f64, f64, f64),
    s: (f64, f64),
    lp: &LosParams,
    cp: &ChannelParams,
    seed: u64,
    count: usize,
) -> Vec<f64> {
    let uav = channel::Waypoint3::new(u.0, u.1, u.2);
    let node = geom::Point2::new(s.0, s.1);
    let lpr: channel::LosParams = lp.into();
    let cpr: channel::ChannelParams = cp.into();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| channel::sample_gain(&uav, &node, &lpr, &cpr, &mut rng))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (count, capacity, extent=1000.0, seed=0))]
fn generate_scenario(count: usize, capacity: usize, extent: f64, seed: u64) -> PyResult<String> {
    if count < 2 {
        return Err(PyValueError::new_err("count must be at least 2"));
    }
    Ok(scenario::scenario_to_json(&scenario::generate_scenario(
        count,
        capacity,
        extent,
        mec::Seed(seed),
    )))
}

#[pyfunction]
fn run_pipeline(scenario_json: &str) -> PyResult<String> {
    let s = scenario::parse_scenario(scenario_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report = scenario::run_pipeline(&s).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(scenario::report_to_json(&report))
}

#[pyfunction]
fn render_svg(scenario_json: &str) -> PyResult<String> {
    let s = scenario::parse_scenario(scenario_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report = scenario::run_pipeline(&s).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(svg::render_svg_string(&s, &report))
}

#[pymodule]
fn uavcov_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Circle>()?;
    m.add_class::<MecResult>()?;
    m.add_class::<ConstrainedResult>()?;
    m.add_class::<LosParams>()?;
    m.add_class::<ChannelParams>()?;
    m.add_function(wrap_pyfunction!(circle_from_two, m)?)?;
    m.add_function(wrap_pyfunction!(circumcircle, m)?)?;
    m.add_function(wrap_pyfunction!(mec_welzl, m)?)?;
    m.add_function(wrap_pyfunction!(mec_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(constrained_mec, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(elevation_angle, m)?)?;
    m.add_function(wrap_pyfunction!(los_probability, m)?)?;
    m.add_function(wrap_pyfunction!(nlos_probability, m)?)?;
    m.add_function(wrap_pyfunction!(gains, m)?)?;
    m.add_function(wrap_pyfunction!(expected_gain, m)?)?;
    m.add_function(wrap_pyfunction!(sample_gains, m)?)?;
    m.add_function(wrap_pyfunction!(generate_scenario, m)?)?;
    m.add_function(wrap_pyfunction!(run_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    Ok(())
}
