//! Points of `CP^N`: homogeneous coordinates, the `N + 1` affine charts and
//! the rank-one projector model `P = |ζ⟩⟨ζ| / ⟨ζ|ζ⟩`.
//!
//! Chart `j` is the open set `ζ_j ≠ 0` with local coordinates `ζ_i / ζ_j`,
//! `i ≠ j`, listed in increasing `i`.

use crate::error::{Error, Result};
use crate::state::StateVector;
use crate::{CMatrix, C64};

/// A unit vector in `C^{N+1}` representing a point of `CP^N`.
pub type UnitVector = StateVector;

/// Relative threshold below which a homogeneous coordinate counts as zero
/// when entering a chart.
pub const CHART_TOLERANCE: f64 = 1e-14;

/// Projector distance below which two points are treated as equal.
pub const POINT_TOLERANCE: f64 = 1e-12;

/// A point of `CP^N` stored as unnormalized homogeneous coordinates.
///
/// Equality is projective: points compare equal when their projectors agree
/// to [`POINT_TOLERANCE`] in Frobenius norm.
#[derive(Debug, Clone)]
pub struct HomogeneousPoint {
    coords: Vec<C64>,
}

impl HomogeneousPoint {
    pub fn new(coords: Vec<C64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::domain("a point of CP^N needs at least two homogeneous coordinates"));
        }
        if !coords.iter().any(|c| c.norm() > 0.0) || coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("homogeneous coordinates must be finite and not all zero"));
        }
        Ok(Self { coords })
    }

    /// Projective dimension `N`.
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[C64] {
        &self.coords
    }

    /// The normalized representative `ζ / ‖ζ‖`.
    pub fn unit_vector(&self) -> UnitVector {
        let scale = self.max_modulus();
        let scaled: Vec<C64> = self.coords.iter().map(|c| c / scale).collect();
        StateVector::normalized(scaled).expect("nonzero by construction")
    }

    pub fn projector(&self) -> Projector {
        projector_of(&self.unit_vector())
    }

    /// Frobenius distance between the projectors of two points.
    pub fn distance(&self, other: &HomogeneousPoint) -> Result<f64> {
        Error::check_dim(self.coords.len(), other.coords.len())?;
        Ok(self.projector().distance(&other.projector()))
    }

    pub(crate) fn max_modulus(&self) -> f64 {
        self.coords.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl PartialEq for HomogeneousPoint {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.distance(other), Ok(d) if d <= POINT_TOLERANCE)
    }
}

/// A point of `CP^N` in the local coordinates of chart `chart`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    chart: usize,
    local: Vec<C64>,
}

impl ChartPoint {
    pub fn new(chart: usize, local: Vec<C64>) -> Result<Self> {
        if local.is_empty() {
            return Err(Error::domain("chart coordinates need N ≥ 1 entries"));
        }
        if chart > local.len() {
            return Err(Error::domain(format!("chart index {chart} out of range for CP^{}", local.len())));
        }
        Ok(Self { chart, local })
    }

    /// Shorthand for the standard chart `ζ_0 ≠ 0`.
    pub fn standard(local: Vec<C64>) -> Result<Self> {
        Self::new(0, local)
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn local(&self) -> &[C64] {
        &self.local
    }

    pub fn n(&self) -> usize {
        self.local.len()
    }

    /// Homogeneous coordinates with `1` inserted at the chart index.
    pub fn lift(&self) -> HomogeneousPoint {
        HomogeneousPoint { coords: self.lifted_coords() }
    }

    fn lifted_coords(&self) -> Vec<C64> {
        let mut coords = Vec::with_capacity(self.local.len() + 1);
        coords.extend_from_slice(&self.local[..self.chart]);
        coords.push(C64::new(1.0, 0.0));
        coords.extend_from_slice(&self.local[self.chart..]);
        coords
    }
}

/// Expresses `h` in chart `chart`.
pub fn to_chart(h: &HomogeneousPoint, chart: usize) -> Result<ChartPoint> {
    let n = h.n();
    if chart > n {
        return Err(Error::domain(format!("chart index {chart} out of range for CP^{n}")));
    }
    let pivot = h.coords[chart];
    if pivot.norm() <= CHART_TOLERANCE * h.max_modulus() {
        return Err(Error::ChartSingular { chart, modulus: pivot.norm() });
    }
    let local = h
        .coords
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chart)
        .map(|(_, c)| c / pivot)
        .collect();
    Ok(ChartPoint { chart, local })
}

/// The normalized vector of a chart point; the chart-index amplitude is
/// real and positive.
pub fn chart_vector(c: &ChartPoint) -> UnitVector {
    let coords = c.lifted_coords();
    let norm = (1.0 + c.local.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
    StateVector::from_raw(coords.into_iter().map(|z| z / norm).collect())
}

/// Re-expresses a chart point in another chart.
pub fn chart_transition(c: &ChartPoint, target: usize) -> Result<ChartPoint> {
    to_chart(&c.lift(), target)
}

/// A rank-one orthogonal projector `|v⟩⟨v|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    matrix: CMatrix,
}

impl Projector {
    /// Wraps a matrix after checking Hermiticity, idempotence and unit trace.
    pub fn from_matrix(matrix: CMatrix, tol: f64) -> Result<Self> {
        let p = Self { matrix };
        if !p.matrix.is_square() {
            return Err(Error::domain("projector must be square"));
        }
        let defects = [p.hermiticity_defect(), p.idempotence_defect(), (p.trace() - 1.0).abs()];
        if defects.iter().any(|&d| d.is_nan() || d > tol) {
            return Err(Error::domain(format!("not a rank-one projector (defects {defects:?})")));
        }
        Ok(p)
    }

    pub(crate) fn from_raw(matrix: CMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `‖P − P†‖_F`.
    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint()).norm()
    }

    /// `‖P² − P‖_F`.
    pub fn idempotence_defect(&self) -> f64 {
        (&self.matrix * &self.matrix - &self.matrix).norm()
    }

    /// Real part of the trace.
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Frobenius distance `‖P − Q‖_F` (infinite on a dimension mismatch).
    pub fn distance(&self, other: &Projector) -> f64 {
        if self.matrix.shape() != other.matrix.shape() {
            return f64::INFINITY;
        }
        (&self.matrix - &other.matrix).norm()
    }
}

/// The outer product `|v⟩⟨v|`.
pub fn projector_of(v: &UnitVector) -> Projector {
    let a = v.amplitudes();
    let dim = a.len();
    Projector { matrix: CMatrix::from_fn(dim, dim, |r, c| a[r] * a[c].conj()) }
}
