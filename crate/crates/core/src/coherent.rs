//! Spin-`j` coherent states on `CP^1`, level-1 coherent states on `CP^n`,
//! their invariant measures, and the su(2) ladder matrices.
//!
//! Basis vectors are labelled `|k⟩ = |j, −j + k⟩` for `k = 0..=2j`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::projective::{chart_vector, ChartPoint, HomogeneousPoint};
use crate::state::StateVector;
use crate::{CMatrix, C64};

/// Largest `2j` for which binomial coefficients are exact in `f64`.
pub const MAX_EXACT_TWO_J: u32 = 60;

/// Spin label stored as `2j` so half-integer spins stay integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinLabel {
    two_j: u32,
}

impl SpinLabel {
    pub const fn new(two_j: u32) -> Self {
        Self { two_j }
    }

    pub const fn two_j(self) -> u32 {
        self.two_j
    }

    pub fn j(self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    /// `dim V = 2j + 1`.
    pub const fn dim(self) -> usize {
        self.two_j as usize + 1
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_j % 2 == 0 {
            write!(f, "{}", self.two_j / 2)
        } else {
            write!(f, "{}/2", self.two_j)
        }
    }
}

/// Parameter manifold together with the representation carried over it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// `CP^1` with the spin-`j` representation (`dim V = 2j + 1`).
    Cp1(SpinLabel),
    /// `CP^n` with the level-1 representation of u(n+1) (`dim V = n + 1`).
    Cpn(usize),
}

impl Space {
    pub fn cp1(two_j: u32) -> Self {
        Space::Cp1(SpinLabel::new(two_j))
    }

    pub fn cpn(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("CP^n requires n ≥ 1"));
        }
        Ok(Space::Cpn(n))
    }

    /// Dimension of the representation space `V`.
    pub fn dim(&self) -> usize {
        match *self {
            Space::Cp1(s) => s.dim(),
            Space::Cpn(n) => n + 1,
        }
    }

    /// Complex dimension of the parameter manifold.
    pub fn manifold_dim(&self) -> usize {
        match *self {
            Space::Cp1(_) => 1,
            Space::Cpn(n) => n,
        }
    }

    /// The coherent state attached to a point of the parameter manifold.
    pub fn coherent_state(&self, h: &HomogeneousPoint) -> Result<StateVector> {
        Error::check_dim(self.manifold_dim(), h.n())?;
        match *self {
            Space::Cp1(s) => Ok(coherent_cp1_homogeneous(s, h)),
            Space::Cpn(_) => Ok(h.unit_vector()),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Cp1(s) => write!(f, "CP^1 (spin {s})"),
            Space::Cpn(n) => write!(f, "CP^{n}"),
        }
    }
}

/// `C(n, k)` by the multiplicative recurrence; exact for `n ≤ 60`.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as f64
}

/// Ladder and weight matrices in the basis `|k⟩`.
#[derive(Debug, Clone)]
pub struct Su2Generators {
    pub plus: CMatrix,
    pub minus: CMatrix,
    pub j3: CMatrix,
}

pub fn su2_generators(s: SpinLabel) -> Su2Generators {
    let dim = s.dim();
    let two_j = f64::from(s.two_j);
    let mut plus = CMatrix::zeros(dim, dim);
    let mut minus = CMatrix::zeros(dim, dim);
    let mut j3 = CMatrix::zeros(dim, dim);
    for k in 0..dim {
        let kf = k as f64;
        j3[(k, k)] = C64::new(kf - s.j(), 0.0);
        if k + 1 < dim {
            plus[(k + 1, k)] = C64::new(((two_j - kf) * (kf + 1.0)).sqrt(), 0.0);
        }
        if k > 0 {
            minus[(k - 1, k)] = C64::new((kf * (two_j - kf + 1.0)).sqrt(), 0.0);
        }
    }
    Su2Generators { plus, minus, j3 }
}

/// `|z⟩ = (1 + |z|²)^{−j} Σ_k √C(2j,k) z^k |k⟩`.
pub fn coherent_cp1(s: SpinLabel, z: C64) -> StateVector {
    let norm = (1.0 + z.norm_sqr()).powf(s.j());
    let mut power = C64::new(1.0, 0.0);
    let amplitudes = (0..=s.two_j)
        .map(|k| {
            let a = power * binomial(s.two_j, k).sqrt() / norm;
            power *= z;
            a
        })
        .collect();
    StateVector::from_raw(amplitudes)
}

/// Spin-`j` coherent state of a homogeneous point `[ζ_0 : ζ_1]`, with
/// amplitudes `√C(2j,k) ζ_0^{2j−k} ζ_1^k / ‖ζ‖^{2j}`. Agrees with
/// [`coherent_cp1`] at `[1 : z]` and also covers the point at infinity.
pub fn coherent_cp1_homogeneous(s: SpinLabel, h: &HomogeneousPoint) -> StateVector {
    let u = h.unit_vector();
    let (a, b) = (u.amplitudes()[0], u.amplitudes()[1]);
    let two_j = s.two_j;
    let amplitudes = (0..=two_j)
        .map(|k| binomial(two_j, k).sqrt() * a.powu(two_j - k) * b.powu(k))
        .collect();
    StateVector::from_raw(amplitudes)
}

/// Level-1 coherent state on `CP^n`; identical to the chart vector.
pub fn coherent_cpn(n: usize, c: &ChartPoint) -> Result<StateVector> {
    Error::check_dim(n, c.n())?;
    Ok(chart_vector(c))
}

/// Density of `dμ` against `[d²z]`: `(2j+1)/π · (1 + |z|²)^{−2}`.
pub fn measure_density_cp1(s: SpinLabel, z: C64) -> f64 {
    s.dim() as f64 / PI / (1.0 + z.norm_sqr()).powi(2)
}

/// Density of `dμ` against `Π[d²z_i]` in the standard chart:
/// `(n+1)·n!/π^n · (1 + Σ|z_i|²)^{−(n+1)}`, normalized to total mass `n + 1`.
pub fn measure_density_cpn(n: usize, c: &ChartPoint) -> Result<f64> {
    Error::check_dim(n, c.n())?;
    if c.chart() != 0 {
        return Err(Error::domain("measure density is expressed in the standard chart (chart 0)"));
    }
    let s: f64 = c.local().iter().map(|z| z.norm_sqr()).sum();
    Ok(cpn_measure_constant(n) / (1.0 + s).powi(n as i32 + 1))
}

/// `(n+1)·n!/π^n`.
pub(crate) fn cpn_measure_constant(n: usize) -> f64 {
    let factorial: f64 = (1..=n).map(|i| i as f64).product();
    (n + 1) as f64 * factorial / PI.powi(n as i32)
}
