//! Integration over `CP^n` against the invariant measure `dμ`.
//!
//! Deterministic rules come from substitutions that flatten the measure:
//!
//! - `CP^1`: `u = |z|²/(1 + |z|²)` turns `dμ` into `(2j+1)/(2π) du dθ` on
//!   `[0, 1] × [0, 2π)`. Gauss–Legendre in `u` times the uniform grid in `θ`
//!   is exact for polynomials of degree `≤ 2·radial_nodes − 1` in `u` times
//!   trigonometric polynomials of degree `< angular_nodes`.
//! - `CP^n`: `t_i = |z_i|²/(1 + Σ|z|²)` gives `dμ = (n+1)·n!/(2π)^n dt dθ`
//!   uniformly on simplex × torus. The simplex is collapsed onto the unit
//!   cube (`t_1 = x_1`, `t_2 = (1 − x_1) x_2`, …) with a tensor
//!   Gauss–Legendre rule.
//!
//! Monte Carlo draws i.i.d. standard complex Gaussian vectors in
//! `C^{n+1}`; their rays are Fubini–Study distributed. The stream is split
//! into fixed-size blocks, block `b` using ChaCha8 seeded from the user seed
//! on stream `b`. Block sums are combined by a fixed pairwise tree, so
//! results are bit-identical for any thread count.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherent::{binomial, cpn_measure_constant, Space, SpinLabel};
use crate::error::{Error, Result};
use crate::projective::HomogeneousPoint;
use crate::C64;

/// Samples drawn from each RNG stream.
pub const MC_BLOCK: usize = 4096;

/// Number of quadrature nodes (or samples) summed serially before the tree
/// reduction.
const REDUCE_BLOCK: usize = 1024;

/// Gauss–Legendre nodes and weights on `[−1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss–Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    (x.iter().map(|x| 0.5 * (x + 1.0)).collect(), w.iter().map(|w| 0.5 * w).collect())
}

/// Values that can be summed with real weights.
pub trait Accumulate: Clone + Send {
    fn scale(&mut self, w: f64);
    fn accumulate(&mut self, other: &Self);
}

impl Accumulate for f64 {
    fn scale(&mut self, w: f64) {
        *self *= w;
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Accumulate for C64 {
    fn scale(&mut self, w: f64) {
        *self *= w;
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Accumulate for Vec<C64> {
    fn scale(&mut self, w: f64) {
        self.iter_mut().for_each(|x| *x *= w);
    }
    fn accumulate(&mut self, other: &Self) {
        assert_eq!(self.len(), other.len(), "integrand changed its output length");
        self.iter_mut().zip(other).for_each(|(a, b)| *a += b);
    }
}

fn tree_sum<V: Accumulate>(mut parts: Vec<V>) -> V {
    while parts.len() > 1 {
        parts = parts
            .chunks(2)
            .map(|pair| {
                let mut acc = pair[0].clone();
                if let Some(rhs) = pair.get(1) {
                    acc.accumulate(rhs);
                }
                acc
            })
            .collect();
    }
    parts.pop().expect("at least one term")
}

/// `Σ_{i < count} term(i)` in fixed blocks evaluated in parallel.
fn reduce_terms<V, F>(count: usize, term: F) -> V
where
    V: Accumulate,
    F: Fn(usize) -> V + Sync,
{
    let blocks = count.div_ceil(REDUCE_BLOCK);
    let parts: Vec<V> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let start = b * REDUCE_BLOCK;
            let end = (start + REDUCE_BLOCK).min(count);
            let mut acc = term(start);
            for i in start + 1..end {
                acc.accumulate(&term(i));
            }
            acc
        })
        .collect();
    tree_sum(parts)
}

/// Node counts for the `CP^1` rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureSpecCp1 {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
}

impl QuadratureSpecCp1 {
    pub fn new(radial_nodes: usize, angular_nodes: usize) -> Result<Self> {
        if radial_nodes == 0 || angular_nodes == 0 {
            return Err(Error::domain("quadrature node counts must be at least 1"));
        }
        Ok(Self { radial_nodes, angular_nodes })
    }

    /// `2j + 2` radial and `4j + 3` angular nodes: exact for every
    /// bilinear expression in spin-`j` coherent states.
    pub fn for_spin(s: SpinLabel) -> Self {
        let two_j = s.two_j() as usize;
        Self { radial_nodes: two_j + 2, angular_nodes: 2 * two_j + 3 }
    }
}

/// Node counts for the simplex × torus rule on `CP^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureSpecCpn {
    pub simplex_nodes: usize,
    pub angular_nodes: usize,
}

pub type QuadratureSpecCp2 = QuadratureSpecCpn;

impl QuadratureSpecCpn {
    pub fn new(simplex_nodes: usize, angular_nodes: usize) -> Result<Self> {
        if simplex_nodes == 0 || angular_nodes == 0 {
            return Err(Error::domain("quadrature node counts must be at least 1"));
        }
        Ok(Self { simplex_nodes, angular_nodes })
    }
}

impl Default for QuadratureSpecCpn {
    /// 4 nodes per simplex axis and 7 per angle.
    fn default() -> Self {
        Self { simplex_nodes: 4, angular_nodes: 7 }
    }
}

/// Monte Carlo sample count and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct McSpec {
    pub samples: usize,
    pub seed: u64,
}

impl McSpec {
    pub fn new(samples: usize, seed: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::domain("Monte Carlo needs at least one sample"));
        }
        Ok(Self { samples, seed })
    }
}

/// `∫_C f(z) dμ(z)` for the spin-`j` measure.
pub fn integrate_cp1<V, F>(s: SpinLabel, spec: &QuadratureSpecCp1, f: F) -> V
where
    V: Accumulate,
    F: Fn(C64) -> V + Sync,
{
    let (u, wu) = gauss_legendre_unit(spec.radial_nodes.max(1));
    let m = spec.angular_nodes.max(1);
    let mass = s.dim() as f64;
    let angles: Vec<C64> = (0..m).map(|a| C64::from_polar(1.0, 2.0 * PI * a as f64 / m as f64)).collect();
    reduce_terms(u.len() * m, |i| {
        let (r, a) = (i / m, i % m);
        let radius = (u[r] / (1.0 - u[r])).sqrt();
        let mut v = f(angles[a] * radius);
        v.scale(mass * wu[r] / m as f64);
        v
    })
}

/// `∫_{C^n} f(z_1, …, z_n) dμ` in the standard chart, total mass `n + 1`.
pub fn integrate_cpn<V, F>(n: usize, spec: &QuadratureSpecCpn, f: F) -> V
where
    V: Accumulate,
    F: Fn(&[C64]) -> V + Sync,
{
    assert!(n >= 1, "CP^n requires n ≥ 1");
    let k = spec.simplex_nodes.max(1);
    let m = spec.angular_nodes.max(1);
    let (x, wx) = gauss_legendre_unit(k);
    let angles: Vec<C64> = (0..m).map(|a| C64::from_polar(1.0, 2.0 * PI * a as f64 / m as f64)).collect();
    let simplex_count = k.pow(n as u32);
    let total = simplex_count * m.pow(n as u32);
    let factorial: f64 = (1..=n).map(|i| i as f64).product();
    let prefactor = (n + 1) as f64 * factorial / (m as f64).powi(n as i32);
    reduce_terms(total, |i| {
        let (mut s_idx, mut a_idx) = (i % simplex_count, i / simplex_count);
        let mut t = Vec::with_capacity(n);
        let mut remaining = 1.0;
        let mut weight = prefactor;
        for _ in 0..n {
            let node = s_idx % k;
            s_idx /= k;
            weight *= wx[node] * remaining;
            t.push(remaining * x[node]);
            remaining *= 1.0 - x[node];
        }
        let z: Vec<C64> = t
            .iter()
            .map(|ti| {
                let phase = angles[a_idx % m];
                a_idx /= m;
                phase * (ti / remaining).sqrt()
            })
            .collect();
        let mut v = f(&z);
        v.scale(weight);
        v
    })
}

/// `∫_{C^2} f(z_1, z_2) dμ` with total mass 3.
pub fn integrate_cp2<V, F>(spec: &QuadratureSpecCp2, f: F) -> V
where
    V: Accumulate,
    F: Fn(&[C64]) -> V + Sync,
{
    integrate_cpn(2, spec, f)
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> C64 {
    // Box–Muller; each component has variance 1/2 so that E|g|² = 1.
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random::<f64>();
    let r = (-u1.ln()).sqrt();
    C64::from_polar(r, 2.0 * PI * u2)
}

fn block_rng(seed: u64, block: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block as u64);
    rng
}

fn gaussian_point(rng: &mut ChaCha8Rng, n: usize) -> HomogeneousPoint {
    loop {
        let coords: Vec<C64> = (0..=n).map(|_| complex_gaussian(rng)).collect();
        if let Ok(p) = HomogeneousPoint::new(coords) {
            return p;
        }
    }
}

fn block_points(n: usize, spec: &McSpec, block: usize) -> Vec<HomogeneousPoint> {
    let start = block * MC_BLOCK;
    let len = MC_BLOCK.min(spec.samples - start);
    let mut rng = block_rng(spec.seed, block);
    (0..len).map(|_| gaussian_point(&mut rng, n)).collect()
}

/// Fubini–Study distributed points of `CP^n` as unnormalized Gaussian
/// homogeneous coordinates. The seed fixes the stream.
pub fn sample_fubini_study(n: usize, spec: &McSpec) -> Vec<HomogeneousPoint> {
    (0..spec.samples.div_ceil(MC_BLOCK))
        .into_par_iter()
        .flat_map_iter(|b| block_points(n, spec, b))
        .collect()
}

/// `(mass / samples) · Σ f(point)` over the stream of [`sample_fubini_study`].
pub fn mc_integrate<V, F>(n: usize, mass: f64, spec: &McSpec, f: F) -> V
where
    V: Accumulate,
    F: Fn(&HomogeneousPoint) -> V + Sync,
{
    let parts: Vec<V> = (0..spec.samples.div_ceil(MC_BLOCK))
        .into_par_iter()
        .map(|b| {
            let points = block_points(n, spec, b);
            let mut acc = f(&points[0]);
            for p in &points[1..] {
                acc.accumulate(&f(p));
            }
            acc
        })
        .collect();
    let mut total = tree_sum(parts);
    total.scale(mass / spec.samples as f64);
    total
}

/// Monte Carlo estimate of `∫ f dμ` together with its standard error.
pub fn mc_estimate<F>(n: usize, mass: f64, spec: &McSpec, f: F) -> (C64, f64)
where
    F: Fn(&HomogeneousPoint) -> C64 + Sync,
{
    let sums: Vec<C64> = mc_integrate(n, 1.0, spec, |p| {
        let v = f(p);
        vec![v, C64::new(v.norm_sqr(), 0.0)]
    });
    let mean = sums[0];
    let variance = (sums[1].re - mean.norm_sqr()).max(0.0);
    let samples = spec.samples as f64;
    (mean * mass, mass * (variance / samples).sqrt())
}

/// Choice of integration engine for the space-generic routines.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrator {
    /// Deterministic rule; `None` selects the default node counts.
    Quadrature { cp1: Option<QuadratureSpecCp1>, cpn: Option<QuadratureSpecCpn> },
    MonteCarlo(McSpec),
    /// Default deterministic rules.
    #[default]
    Exact,
}

impl Integrator {
    pub fn is_monte_carlo(&self) -> bool {
        matches!(self, Integrator::MonteCarlo(_))
    }
}

/// `∫ f dμ` over the parameter manifold of `space`. Quadrature nodes are
/// passed to `f` as `[1 : z_1 : … : z_n]`.
pub fn integrate_over<V, F>(space: &Space, integrator: &Integrator, f: F) -> V
where
    V: Accumulate,
    F: Fn(&HomogeneousPoint) -> V + Sync,
{
    let lift = |z: &[C64]| {
        let mut coords = Vec::with_capacity(z.len() + 1);
        coords.push(C64::new(1.0, 0.0));
        coords.extend_from_slice(z);
        HomogeneousPoint::new(coords).expect("leading coordinate is 1")
    };
    let (cp1_spec, cpn_spec) = match integrator {
        Integrator::MonteCarlo(spec) => {
            return mc_integrate(space.manifold_dim(), space.dim() as f64, spec, f);
        }
        Integrator::Quadrature { cp1, cpn } => (*cp1, *cpn),
        Integrator::Exact => (None, None),
    };
    match *space {
        Space::Cp1(s) => {
            let spec = cp1_spec.unwrap_or_else(|| QuadratureSpecCp1::for_spin(s));
            integrate_cp1(s, &spec, |z| f(&lift(&[z])))
        }
        Space::Cpn(n) => {
            let spec = cpn_spec.unwrap_or_default();
            integrate_cpn(n, &spec, |z| f(&lift(z)))
        }
    }
}

/// `∫ dμ |z|^{2k} / (1 + |z|²)^{2j}`, which equals `1 / C(2j, k)`.
pub fn moment_cp1(s: SpinLabel, k: u32) -> Result<f64> {
    if k > s.two_j() {
        return Err(Error::domain(format!("moment index {k} exceeds 2j = {}", s.two_j())));
    }
    let two_j = s.two_j() as i32;
    let spec = QuadratureSpecCp1::for_spin(s);
    Ok(integrate_cp1(s, &spec, |z| {
        let r2 = z.norm_sqr();
        r2.powi(k as i32) / (1.0 + r2).powi(two_j)
    }))
}

/// Closed form `1 / C(2j, k)` of [`moment_cp1`].
pub fn moment_cp1_exact(s: SpinLabel, k: u32) -> f64 {
    1.0 / binomial(s.two_j(), k)
}

/// Density constant of [`integrate_cpn`]: `(n+1)·n!/π^n`.
pub fn cpn_density_constant(n: usize) -> f64 {
    cpn_measure_constant(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn gauss_legendre_small_rules() {
        let (x, w) = gauss_legendre(1);
        assert_eq!(x, vec![0.0]);
        assert_abs_diff_eq!(w[0], 2.0, epsilon = 1e-15);
        let (x, w) = gauss_legendre(2);
        assert_abs_diff_eq!(x[1], 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(w[0], 1.0, epsilon = 1e-15);
        let (x, w) = gauss_legendre(3);
        assert_abs_diff_eq!(x[2], (0.6f64).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(w[1], 8.0 / 9.0, epsilon = 1e-15);
    }

    #[test]
    fn gauss_legendre_is_exact_to_degree_2n_minus_1() {
        for n in 1..=30 {
            let (x, w) = gauss_legendre_unit(n);
            for deg in 0..2 * n {
                let approx: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                assert_abs_diff_eq!(approx, 1.0 / (deg as f64 + 1.0), epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn cp1_examples() {
        let s = SpinLabel::new(1);
        let spec = QuadratureSpecCp1::for_spin(s);
        assert_abs_diff_eq!(integrate_cp1(s, &spec, |_| 1.0), 2.0, epsilon = 1e-12);
        // t = |z|²/(1+|z|²) has mean 1/2 under the normalized measure
        assert_abs_diff_eq!(integrate_cp1(s, &spec, |z| z.norm_sqr() / (1.0 + z.norm_sqr())), 1.0, epsilon = 1e-12);
        let first = integrate_cp1(s, &spec, |z| z / (1.0 + z.norm_sqr()));
        assert!(first.norm() <= 1e-15);
        // ∫ u(1−u) over [0,1] is 1/6; the spin-1/2 measure has mass 2
        let f = |z: C64| z.norm_sqr() / (1.0 + z.norm_sqr()).powi(2);
        assert_abs_diff_eq!(integrate_cp1(s, &spec, f), 1.0 / 3.0, epsilon = 1e-12);
        let s2 = SpinLabel::new(2);
        assert_abs_diff_eq!(integrate_cp1(s2, &QuadratureSpecCp1::for_spin(s2), f), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn cp1_rule_exactness_on_monomials() {
        for two_j in 0..=10u32 {
            let s = SpinLabel::new(two_j);
            let spec = QuadratureSpecCp1::for_spin(s);
            let mass = s.dim() as f64;
            for a in 0..2 * spec.radial_nodes {
                for m in -(spec.angular_nodes as i32 - 1)..spec.angular_nodes as i32 {
                    let got = integrate_cp1(s, &spec, |z| {
                        let u = z.norm_sqr() / (1.0 + z.norm_sqr());
                        let phase = if z.norm() > 0.0 { (z / z.norm()).powi(m) } else { c(1.0, 0.0) };
                        phase * u.powi(a as i32)
                    });
                    let want = if m == 0 { mass / (a as f64 + 1.0) } else { 0.0 };
                    assert!((got - c(want, 0.0)).norm() <= 1e-12, "2j={two_j} a={a} m={m}: {got}");
                }
            }
        }
    }

    #[test]
    fn cp1_inversion_invariance() {
        let s = SpinLabel::new(3);
        let spec = QuadratureSpecCp1::for_spin(s);
        let poly = |t: f64| 1.0 + 2.0 * t - 3.0 * t.powi(2) + 0.5 * t.powi(5);
        let t_of = |z: C64| z.norm_sqr() / (1.0 + z.norm_sqr());
        let direct = integrate_cp1(s, &spec, |z| poly(t_of(z)));
        let inverted = integrate_cp1(s, &spec, |z| poly(t_of(C64::new(1.0, 0.0) / z)));
        assert_abs_diff_eq!(direct, inverted, epsilon = 1e-10);
    }

    #[test]
    fn cp2_examples() {
        let spec = QuadratureSpecCpn::default();
        assert_abs_diff_eq!(integrate_cp2(&spec, |_| 1.0), 3.0, epsilon = 1e-12);
        let s = |z: &[C64]| 1.0 + z[0].norm_sqr() + z[1].norm_sqr();
        assert_abs_diff_eq!(integrate_cp2(&spec, |z| 1.0 / s(z)), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(integrate_cp2(&spec, |z| z[0].norm_sqr() / s(z)), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(integrate_cp2(&spec, |z| z[1].norm_sqr() / s(z)), 1.0, epsilon = 1e-12);
        let off: C64 = integrate_cp2(&spec, |z| z[0] * z[1].conj() / s(z));
        assert!(off.norm() <= 1e-14);
    }

    #[test]
    fn cpn_total_mass_and_moments() {
        let spec = QuadratureSpecCpn::default();
        for n in 1..=4 {
            assert_abs_diff_eq!(integrate_cpn(n, &spec, |_| 1.0), (n + 1) as f64, epsilon = 1e-11);
            // each t_i has mean 1/(n+1) under the normalized measure
            let t0 = integrate_cpn(n, &spec, |z| 1.0 / (1.0 + z.iter().map(|w| w.norm_sqr()).sum::<f64>()));
            assert_abs_diff_eq!(t0, 1.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn moment_examples() {
        assert_abs_diff_eq!(moment_cp1(SpinLabel::new(2), 1).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(moment_cp1(SpinLabel::new(4), 2).unwrap(), 1.0 / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(moment_cp1(SpinLabel::new(0), 0).unwrap(), 1.0, epsilon = 1e-12);
        assert!(moment_cp1(SpinLabel::new(2), 3).is_err());
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let spec = McSpec::new(10_000, 42).unwrap();
        let a = sample_fubini_study(2, &spec);
        let b = sample_fubini_study(2, &spec);
        assert_eq!(a.len(), 10_000);
        assert!(a.iter().zip(&b).all(|(x, y)| x.coords() == y.coords()));
        let c = sample_fubini_study(2, &McSpec::new(10_000, 43).unwrap());
        assert!(a[0].coords() != c[0].coords());
        // a shorter run is a prefix of a longer one
        let short = sample_fubini_study(2, &McSpec::new(5000, 42).unwrap());
        assert!(short.iter().zip(&a).all(|(x, y)| x.coords() == y.coords()));
    }

    #[test]
    fn mc_examples() {
        let spec = McSpec::new(1_000_000, 5).unwrap();
        assert_abs_diff_eq!(mc_integrate(1, 2.0, &spec, |_| 1.0), 2.0, epsilon = 1e-12);
        let diag = mc_integrate(2, 3.0, &spec, |p| p.unit_vector().amplitudes()[0].norm_sqr());
        assert_abs_diff_eq!(diag, 1.0, epsilon = 5e-3);
    }

    #[test]
    fn mc_is_bit_stable_across_thread_counts() {
        let spec = McSpec::new(20_000, 3).unwrap();
        let f = |p: &HomogeneousPoint| p.unit_vector().amplitudes()[1] * 3.0;
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a: C64 = one.install(|| mc_integrate(2, 3.0, &spec, f));
        let b: C64 = four.install(|| mc_integrate(2, 3.0, &spec, f));
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }

    #[test]
    fn rejects_empty_specs() {
        assert!(QuadratureSpecCp1::new(0, 3).is_err());
        assert!(QuadratureSpecCpn::new(2, 0).is_err());
        assert!(McSpec::new(0, 1).is_err());
    }
}
