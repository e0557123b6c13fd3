//! Fivel's integral `|B⟫ = (1/√dim V) ∫ dμ |Z⟩ ⊗ |Z♭⟩` and the closed-form
//! Bell families it reproduces.
//!
//! Because `|Z♭⟩ = U·conj|Z⟩` and the coherent states resolve the identity,
//! the integral collapses to `(1/√dim V) (I ⊗ U) Σ_k |k⟩ ⊗ |k⟩`; that
//! identity is the analytic oracle behind [`unitary_transport_identity`].

use serde::{Deserialize, Serialize};

use crate::coherent::{Space, SpinLabel};
use crate::error::{Error, Result};
use crate::flatmaps::{global_unitary, FlatMapId};
use crate::fourier::root_of_unity;
use crate::quadrature::{integrate_over, Integrator};
use crate::state::norm;
use crate::{CMatrix, C64};

/// A pure state of `C^{dim_a} ⊗ C^{dim_b}`, amplitudes indexed row-major
/// (`k_a · dim_b + k_b`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteState {
    dim_a: usize,
    dim_b: usize,
    amplitudes: Vec<C64>,
}

impl BipartiteState {
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::domain("bipartite factors must have positive dimension"));
        }
        Error::check_dim(dim_a * dim_b, amplitudes.len())?;
        Ok(Self { dim_a, dim_b, amplitudes })
    }

    /// `scale · Σ coef |k_a⟩ ⊗ |k_b⟩` on `C^dim ⊗ C^dim`.
    fn from_terms(dim: usize, scale: f64, terms: impl IntoIterator<Item = (usize, usize, C64)>) -> Self {
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim * dim];
        for (a, b, coef) in terms {
            amplitudes[a * dim + b] += coef * scale;
        }
        Self { dim_a: dim, dim_b: dim, amplitudes }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, a: usize, b: usize) -> C64 {
        self.amplitudes[a * self.dim_b + b]
    }

    /// `⟪B|B⟫^{1/2}`.
    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// The `dim_a × dim_b` coefficient matrix `M[a][b]`.
    pub fn amplitude_matrix(&self) -> CMatrix {
        CMatrix::from_fn(self.dim_a, self.dim_b, |a, b| self.amplitude(a, b))
    }
}

/// Numerical Fivel integral plus `|‖B‖ − 1|`.
pub fn fivel_bell(space: &Space, id: FlatMapId, integrator: &Integrator) -> Result<(BipartiteState, f64)> {
    id.check_space(space)?;
    let dim = space.dim();
    let flat = global_unitary(id, dim)?;
    let integral: Vec<C64> = integrate_over(space, integrator, |h| {
        let z = space.coherent_state(h).expect("point dimension matches the space");
        let twisted = flat.apply_conjugate(z.amplitudes());
        let mut out = Vec::with_capacity(dim * dim);
        for a in z.amplitudes() {
            out.extend(twisted.iter().map(|b| a * b));
        }
        out
    });
    let scale = 1.0 / (dim as f64).sqrt();
    let amplitudes = integral.into_iter().map(|a| a * scale).collect();
    let state = BipartiteState::new(dim, dim, amplitudes)?;
    let residual = (state.norm() - 1.0).abs();
    Ok((state, residual))
}

/// Spin-`j` Bell states:
///
/// 1. `Σ |k⟩|k⟩`
/// 2. `Σ (−1)^k |k⟩|k⟩`
/// 3. `Σ |k⟩|2j−k⟩`
/// 4. `Σ (−1)^k |k⟩|2j−k⟩`
///
/// each divided by `√(2j+1)`.
pub fn closed_form_bell_cp1(s: SpinLabel, tag: u8) -> Result<BipartiteState> {
    if !(1..=4).contains(&tag) {
        return Err(Error::UnknownId(format!("cp1:{tag}")));
    }
    let dim = s.dim();
    let scale = 1.0 / (dim as f64).sqrt();
    let terms = (0..dim).map(move |k| {
        let sign = if tag % 2 == 0 && k % 2 == 1 { -1.0 } else { 1.0 };
        let partner = if tag >= 3 { dim - 1 - k } else { k };
        (k, partner, C64::new(sign, 0.0))
    });
    Ok(BipartiteState::from_terms(dim, scale, terms))
}

/// The nine qutrit states `a-1` … `c-3`, written out term by term. Each
/// entry is `(k_a, k_b, power of ω)` with `ω = exp(2πi/3)`.
const CP2_TABLE: [[(usize, usize, i64); 3]; 9] = [
    // a-1, a-2, a-3
    [(0, 0, 0), (1, 1, 0), (2, 2, 0)],
    [(0, 0, 0), (1, 1, 1), (2, 2, 2)],
    [(0, 0, 0), (1, 1, 2), (2, 2, 1)],
    // b-1, b-2, b-3
    [(0, 1, 0), (1, 2, 0), (2, 0, 0)],
    [(0, 1, 0), (1, 2, 1), (2, 0, 2)],
    [(0, 1, 0), (1, 2, 2), (2, 0, 1)],
    // c-1, c-2, c-3
    [(0, 2, 0), (1, 0, 0), (2, 1, 0)],
    [(0, 2, 0), (1, 0, 1), (2, 1, 2)],
    [(0, 2, 0), (1, 0, 2), (2, 1, 1)],
];

/// Closed-form qutrit Bell state of the `CP^2` map `(p, q)`.
pub fn closed_form_bell_cp2(p: usize, q: usize) -> Result<BipartiteState> {
    if p > 2 || q > 2 {
        return Err(Error::UnknownId(format!("cpn:2:{p}:{q}")));
    }
    let terms = CP2_TABLE[3 * q + p].iter().map(|&(a, b, w)| (a, b, root_of_unity(3, w)));
    Ok(BipartiteState::from_terms(3, 1.0 / 3f64.sqrt(), terms))
}

/// `(1/√n) Σ_k ω_n^{pk} |k⟩ ⊗ |(k+q) mod n⟩` with `ω_n = exp(2πi/n)`.
///
/// For `n = 2` and `n = 3` this is the four Bell states and the nine qutrit
/// states above; for larger `n` it is the clock/shift extension of the same
/// pattern.
pub fn generalized_bell(n: usize, p: usize, q: usize) -> Result<BipartiteState> {
    if n == 0 || p >= n || q >= n {
        return Err(Error::domain(format!("generalized Bell state needs 0 ≤ p, q < n (got n={n}, p={p}, q={q})")));
    }
    let terms = (0..n).map(|k| (k, (k + q) % n, root_of_unity(n, (p * k) as i64)));
    Ok(BipartiteState::from_terms(n, 1.0 / (n as f64).sqrt(), terms))
}

/// The closed form that the Fivel integral of `id` should reproduce.
pub fn closed_form(space: &Space, id: FlatMapId) -> Result<BipartiteState> {
    id.check_space(space)?;
    match (id, *space) {
        (FlatMapId::Cp1(tag), Space::Cp1(s)) => closed_form_bell_cp1(s, tag),
        (FlatMapId::Cpn { n: 2, p, q }, _) => closed_form_bell_cp2(p, q),
        (FlatMapId::Cpn { n, p, q }, _) => generalized_bell(n + 1, p, q),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// `(1/√dim V) (I ⊗ U) Σ_k |k⟩ ⊗ |k⟩` for the unitary of `id`.
pub fn transported_bell(space: &Space, id: FlatMapId) -> Result<BipartiteState> {
    id.check_space(space)?;
    let dim = space.dim();
    let u = global_unitary(id, dim)?;
    let m = u.unitary();
    let terms = (0..dim).flat_map(|k| (0..dim).map(move |b| (k, b, m[(b, k)])));
    Ok(BipartiteState::from_terms(dim, 1.0 / (dim as f64).sqrt(), terms))
}

/// Euclidean distance between the numerical Fivel integral and
/// [`transported_bell`].
pub fn unitary_transport_identity(space: &Space, id: FlatMapId, integrator: &Integrator) -> Result<f64> {
    let (numeric, _) = fivel_bell(space, id, integrator)?;
    let analytic = transported_bell(space, id)?;
    crate::analysis::state_distance(&numeric, &analytic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::state_distance;
    use crate::flatmaps::catalog;
    use crate::quadrature::{McSpec, QuadratureSpecCp1};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn expect(dim: usize, scale: f64, terms: &[(usize, usize, C64)]) -> BipartiteState {
        BipartiteState::from_terms(dim, scale, terms.iter().copied())
    }

    #[test]
    fn spin_half_fivel_examples() {
        let s = 0.5f64.sqrt();
        let space = Space::cp1(1);
        let (b, residual) = fivel_bell(&space, FlatMapId::Cp1(1), &Integrator::Exact).unwrap();
        let want = expect(2, s, &[(0, 0, c(1.0, 0.0)), (1, 1, c(1.0, 0.0))]);
        assert!(state_distance(&b, &want).unwrap() <= 1e-12);
        assert!(residual <= 1e-12);

        let (b, _) = fivel_bell(&space, FlatMapId::Cp1(4), &Integrator::Exact).unwrap();
        let want = expect(2, s, &[(0, 1, c(1.0, 0.0)), (1, 0, c(-1.0, 0.0))]);
        assert!(state_distance(&b, &want).unwrap() <= 1e-12);
    }

    #[test]
    fn qutrit_fivel_example() {
        let w = root_of_unity(3, 1);
        let (b, _) = fivel_bell(&Space::Cpn(2), "cp2:b2".parse().unwrap(), &Integrator::Exact).unwrap();
        let want = expect(3, 1.0 / 3f64.sqrt(), &[(0, 1, c(1.0, 0.0)), (1, 2, w), (2, 0, w * w)]);
        assert!(state_distance(&b, &want).unwrap() <= 1e-12);
    }

    #[test]
    fn closed_form_cp1_examples() {
        let t = 1.0 / 3f64.sqrt();
        let one = c(1.0, 0.0);
        let b = closed_form_bell_cp1(SpinLabel::new(2), 1).unwrap();
        assert_eq!(b, expect(3, t, &[(0, 0, one), (1, 1, one), (2, 2, one)]));
        let b = closed_form_bell_cp1(SpinLabel::new(2), 2).unwrap();
        assert_eq!(b, expect(3, t, &[(0, 0, one), (1, 1, -one), (2, 2, one)]));
        let b = closed_form_bell_cp1(SpinLabel::new(2), 3).unwrap();
        assert_eq!(b, expect(3, t, &[(0, 2, one), (1, 1, one), (2, 0, one)]));
        let b = closed_form_bell_cp1(SpinLabel::new(2), 4).unwrap();
        assert_eq!(b, expect(3, t, &[(0, 2, one), (1, 1, -one), (2, 0, one)]));
        for tag in 1..=4 {
            let b = closed_form_bell_cp1(SpinLabel::new(0), tag).unwrap();
            assert_eq!(b.amplitudes(), &[one]);
        }
        assert!(closed_form_bell_cp1(SpinLabel::new(1), 5).is_err());
    }

    #[test]
    fn closed_form_cp2_examples() {
        let t = 1.0 / 3f64.sqrt();
        let w = root_of_unity(3, 1);
        let one = c(1.0, 0.0);
        assert_eq!(closed_form_bell_cp2(0, 0).unwrap(), expect(3, t, &[(0, 0, one), (1, 1, one), (2, 2, one)]));
        let b = closed_form_bell_cp2(2, 2).unwrap();
        assert!(state_distance(&b, &expect(3, t, &[(0, 2, one), (1, 0, w * w), (2, 1, w)])).unwrap() <= 1e-15);
        let b = closed_form_bell_cp2(1, 0).unwrap();
        assert!(state_distance(&b, &expect(3, t, &[(0, 0, one), (1, 1, w), (2, 2, w * w)])).unwrap() <= 1e-15);
        assert!(closed_form_bell_cp2(3, 0).is_err());
    }

    #[test]
    fn generalized_family_reduces_to_the_printed_states() {
        let s = 0.5f64.sqrt();
        let one = c(1.0, 0.0);
        let bell = [
            ((0, 0), expect(2, s, &[(0, 0, one), (1, 1, one)])),
            ((1, 0), expect(2, s, &[(0, 0, one), (1, 1, -one)])),
            ((0, 1), expect(2, s, &[(0, 1, one), (1, 0, one)])),
            ((1, 1), expect(2, s, &[(0, 1, one), (1, 0, -one)])),
        ];
        for ((p, q), want) in bell {
            assert!(state_distance(&generalized_bell(2, p, q).unwrap(), &want).unwrap() <= 1e-15);
        }
        for p in 0..3 {
            for q in 0..3 {
                let d = state_distance(&generalized_bell(3, p, q).unwrap(), &closed_form_bell_cp2(p, q).unwrap());
                assert!(d.unwrap() <= 1e-15);
            }
        }
        assert!(generalized_bell(4, 4, 0).is_err());
        assert!(generalized_bell(0, 0, 0).is_err());
    }

    #[test]
    fn transport_identity_examples() {
        let d = unitary_transport_identity(&Space::cp1(1), FlatMapId::Cp1(3), &Integrator::Exact).unwrap();
        assert!(d <= 1e-12);
        for id in catalog(&Space::Cpn(2)) {
            assert!(unitary_transport_identity(&Space::Cpn(2), id, &Integrator::Exact).unwrap() <= 1e-10);
        }
        let d = unitary_transport_identity(&Space::cp1(6), FlatMapId::Cp1(2), &Integrator::Exact).unwrap();
        assert!(d <= 1e-10);
    }

    #[test]
    fn under_resolved_rule_is_visible() {
        let coarse = Integrator::Quadrature { cp1: Some(QuadratureSpecCp1::new(1, 1).unwrap()), cpn: None };
        let (b, _) = fivel_bell(&Space::cp1(1), FlatMapId::Cp1(4), &coarse).unwrap();
        let want = closed_form_bell_cp1(SpinLabel::new(1), 4).unwrap();
        assert!(state_distance(&b, &want).unwrap() > 1e-3);
    }

    #[test]
    fn conjectured_family_matches_cp3_integrals() {
        let space = Space::Cpn(3);
        let id = FlatMapId::cpn(3, 1, 2).unwrap();
        let (b, _) = fivel_bell(&space, id, &Integrator::Exact).unwrap();
        assert!(state_distance(&b, &generalized_bell(4, 1, 2).unwrap()).unwrap() <= 1e-10);
        let (mc, _) = fivel_bell(&space, id, &Integrator::MonteCarlo(McSpec::new(200_000, 1).unwrap())).unwrap();
        assert!(state_distance(&mc, &generalized_bell(4, 1, 2).unwrap()).unwrap() <= 2e-2);
    }

    #[test]
    fn mismatched_ids_are_rejected() {
        assert!(matches!(fivel_bell(&Space::Cpn(2), FlatMapId::Cp1(1), &Integrator::Exact), Err(Error::UnknownId(_))));
        assert!(closed_form(&Space::cp1(2), "cp2:a1".parse().unwrap()).is_err());
    }

    #[test]
    fn serializes_as_plain_json() {
        let b = closed_form_bell_cp1(SpinLabel::new(1), 1).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert!(json.starts_with("{\"dim_a\":2,\"dim_b\":2,\"amplitudes\":[[0.7071067811865475,0.0]"));
    }
}
