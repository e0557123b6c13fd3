//! Checks on the integrals and the resulting states: resolution of unity,
//! total measure, Schmidt data, numerical rank and distances.

use crate::bell::BipartiteState;
use crate::coherent::Space;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_over, Integrator};
use crate::{CMatrix, C64};

/// Relative singular-value cutoff used by [`rank_of_family`] by default.
pub const DEFAULT_RANK_TOLERANCE: f64 = 1e-8;

/// `‖∫ dμ |Z⟩⟨Z| − I‖_F`.
pub fn resolution_of_unity(space: &Space, integrator: &Integrator) -> f64 {
    let dim = space.dim();
    let integral: Vec<C64> = integrate_over(space, integrator, |h| {
        let z = space.coherent_state(h).expect("point dimension matches the space");
        let a = z.amplitudes();
        let mut outer = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            outer.extend(a.iter().map(|c| a[r] * c.conj()));
        }
        outer
    });
    let frame = CMatrix::from_row_slice(dim, dim, &integral);
    (frame - CMatrix::identity(dim, dim)).norm()
}

/// `∫ dμ`, which should equal `dim V`.
pub fn total_measure(space: &Space, integrator: &Integrator) -> f64 {
    integrate_over(space, integrator, |_| 1.0)
}

/// Schmidt coefficients (descending) and entanglement entropy in nats.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData {
    pub singular_values: Vec<f64>,
    pub entropy: f64,
}

pub fn schmidt(b: &BipartiteState) -> SchmidtData {
    let mut singular_values: Vec<f64> = b.amplitude_matrix().singular_values().iter().copied().collect();
    singular_values.sort_by(|x, y| y.total_cmp(x));
    let entropy = singular_values
        .iter()
        .map(|s| s * s)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum();
    SchmidtData { singular_values, entropy }
}

/// Numerical rank of the amplitude vectors: singular values above
/// `tol · σ_max`.
pub fn rank_of_family(states: &[BipartiteState], tol: f64) -> Result<usize> {
    let first = states.first().ok_or(Error::EmptyFamily)?;
    let len = first.amplitudes().len();
    for s in states {
        Error::check_dim(len, s.amplitudes().len())?;
    }
    let stacked = CMatrix::from_fn(states.len(), len, |r, c| states[r].amplitudes()[c]);
    let sv = stacked.singular_values();
    let largest = sv.iter().copied().fold(0.0, f64::max);
    if largest == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > tol * largest).count())
}

/// Euclidean norm of the amplitude difference. No phase is quotiented out.
pub fn state_distance(a: &BipartiteState, b: &BipartiteState) -> Result<f64> {
    Error::check_dim(a.dim_a(), b.dim_a())?;
    Error::check_dim(a.dim_b(), b.dim_b())?;
    Ok(a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}
