//! Clock and shift matrices and the (generalized) Walsh–Hadamard transform.
//!
//! With `ω = exp(2πi/n)`:
//!
//! - `clock(n) = diag(1, ω, …, ω^{n−1})`
//! - `shift(n)`: `e_k ↦ e_{(k+1) mod n}`
//! - `walsh_hadamard(n)[j][k] = ω^{−jk} / √n`
//!
//! and `shift = W · clock · W⁻¹`. For `n = 2` these are `σ_3`, `σ_1` and the
//! Hadamard gate.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::{CMatrix, C64};

/// `exp(2πi·k/n)`, with exact values at quarter turns.
pub fn root_of_unity(n: usize, k: i64) -> C64 {
    let n_i = n as i64;
    let k = k.rem_euclid(n_i);
    if (4 * k) % n_i == 0 {
        return match 4 * k / n_i {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

/// A square matrix that is unitary to within roundoff.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    matrix: CMatrix,
}

impl UnitaryMatrix {
    pub fn new(matrix: CMatrix, tol: f64) -> Result<Self> {
        let u = Self { matrix };
        let defect = u.unitarity_defect();
        if !u.matrix.is_square() || defect.is_nan() || defect > tol {
            return Err(Error::domain(format!("matrix is not unitary (‖UU† − I‖ = {defect:e})")));
        }
        Ok(u)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// `‖U·U† − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.matrix.nrows();
        (&self.matrix * self.matrix.adjoint() - CMatrix::identity(n, self.matrix.ncols())).norm()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("transform order must be at least 2, got {n}")));
    }
    Ok(())
}

pub fn walsh_hadamard(n: usize) -> Result<UnitaryMatrix> {
    check_order(n)?;
    let scale = 1.0 / (n as f64).sqrt();
    let matrix = CMatrix::from_fn(n, n, |j, k| root_of_unity(n, -((j * k) as i64)) * scale);
    Ok(UnitaryMatrix { matrix })
}

pub fn clock(n: usize) -> Result<UnitaryMatrix> {
    check_order(n)?;
    Ok(UnitaryMatrix { matrix: clock_power(n, 1) })
}

pub fn shift(n: usize) -> Result<UnitaryMatrix> {
    check_order(n)?;
    Ok(UnitaryMatrix { matrix: shift_power(n, 1) })
}

/// `clock(n)^p` for any `n ≥ 1`.
pub(crate) fn clock_power(n: usize, p: usize) -> CMatrix {
    let diag: Vec<C64> = (0..n).map(|k| root_of_unity(n, (p * k) as i64)).collect();
    CMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag))
}

/// `shift(n)^q` for any `n ≥ 1`.
pub(crate) fn shift_power(n: usize, q: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for k in 0..n {
        m[((k + q) % n, k)] = C64::new(1.0, 0.0);
    }
    m
}

/// `‖shift(n) − W·clock(n)·W⁻¹‖_F`.
pub fn verify_shift_diagonalization(n: usize) -> Result<f64> {
    let w = walsh_hadamard(n)?;
    let inverse = w
        .matrix
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::domain("Walsh–Hadamard matrix is singular"))?;
    let conjugated = w.matrix() * clock(n)?.matrix() * inverse;
    Ok((shift(n)?.matrix() - conjugated).norm())
}
