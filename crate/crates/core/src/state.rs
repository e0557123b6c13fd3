use crate::error::{Error, Result};
use crate::C64;

/// Norm tolerance accepted by [`StateVector::new`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// A unit vector of complex amplitudes in `C^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalized to within [`UNIT_TOLERANCE`].
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::domain("state vector must have at least one amplitude"));
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::domain(format!("state vector has norm {norm}, expected 1")));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if amplitudes.is_empty() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("cannot normalize a zero or non-finite vector"));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(Self { amplitudes })
    }

    pub(crate) fn from_raw(amplitudes: Vec<C64>) -> Self {
        Self { amplitudes }
    }

    /// The computational basis vector `|k⟩` of `C^dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::domain(format!("basis index {k} out of range for dimension {dim}")));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[k] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        Error::check_dim(self.dim(), other.dim())?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> StateVector {
        Self::from_raw(self.amplitudes.iter().map(|a| a.conj()).collect())
    }

    /// Row-major Kronecker product: index `ka * other.dim() + kb`.
    pub fn tensor(&self, other: &StateVector) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            out.extend(other.amplitudes.iter().map(|b| a * b));
        }
        out
    }
}

pub(crate) fn norm(v: &[C64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}
