//! Anti-automorphisms `♭` of `CP^1` and `CP^n`.
//!
//! Every map in the catalog is realized as "conjugate, then apply a
//! monomial unitary":
//!
//! ```text
//! |Z♭⟩ = U · conj|Z⟩,    P ↦ U · conj(P) · U†,    [ζ] ↦ [U · conj(ζ)]
//! ```
//!
//! so that `⟨Z♭|W♭⟩ = ⟨W|Z⟩` holds identically.
//!
//! On `CP^1` the four maps are `z ↦ z̄, −z̄, 1/z̄, −1/z̄`; at spin `j` they
//! lift to the identity, `diag((−1)^k)`, the index reversal `|k⟩ ↦ |2j−k⟩`
//! and the reversal after `diag((−1)^k)`. On `CP^n` the map `(p, q)` uses
//! `U = shift^q · clock^p` with `ω = exp(2πi/(n+1))`; for `n = 2`, `q` selects
//! the family `a`/`b`/`c` and `p` the member `1`/`2`/`3`.

use std::fmt;
use std::str::FromStr;

use crate::coherent::Space;
use crate::error::{Error, Result};
use crate::fourier::{clock_power, shift_power};
use crate::projective::{HomogeneousPoint, Projector};
use crate::state::StateVector;
use crate::{CMatrix, C64};

/// Identifier of one anti-automorphism in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlatMapId {
    /// One of the four `CP^1` maps, tags `1..=4`.
    Cp1(u8),
    /// Clock/shift map `(p, q)` on `CP^n`, `0 ≤ p, q ≤ n`.
    Cpn { n: usize, p: usize, q: usize },
}

impl FlatMapId {
    pub fn cp1(tag: u8) -> Result<Self> {
        if !(1..=4).contains(&tag) {
            return Err(Error::UnknownId(format!("cp1:{tag}")));
        }
        Ok(FlatMapId::Cp1(tag))
    }

    pub fn cpn(n: usize, p: usize, q: usize) -> Result<Self> {
        if n == 0 || p > n || q > n {
            return Err(Error::UnknownId(format!("cpn:{n}:{p}:{q}")));
        }
        Ok(FlatMapId::Cpn { n, p, q })
    }

    /// Fails with `UnknownId` unless the id belongs to `space`.
    pub fn check_space(&self, space: &Space) -> Result<()> {
        match (self, space) {
            (FlatMapId::Cp1(_), Space::Cp1(_)) => Ok(()),
            (FlatMapId::Cpn { n, .. }, Space::Cpn(m)) if n == m => Ok(()),
            _ => Err(Error::UnknownId(format!("{self} is not a flat map of {space}"))),
        }
    }

    /// Short catalog label: `1`..`4` on `CP^1`, `a-1`..`c-3` on `CP^2`,
    /// `(p,q)` otherwise.
    pub fn label(&self) -> String {
        match *self {
            FlatMapId::Cp1(tag) => tag.to_string(),
            FlatMapId::Cpn { n: 2, p, q } => format!("{}-{}", family_letter(q), p + 1),
            FlatMapId::Cpn { p, q, .. } => format!("({p},{q})"),
        }
    }
}

fn family_letter(q: usize) -> char {
    (b'a' + q as u8) as char
}

impl fmt::Display for FlatMapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FlatMapId::Cp1(tag) => write!(f, "cp1:{tag}"),
            FlatMapId::Cpn { n: 2, p, q } => write!(f, "cp2:{}{}", family_letter(q), p + 1),
            FlatMapId::Cpn { n, p, q } => write!(f, "cpn:{n}:{p}:{q}"),
        }
    }
}

impl FromStr for FlatMapId {
    type Err = Error;

    /// Accepts `cp1:1`..`cp1:4`, `cp2:a1`..`cp2:c3` (`cp2:a-1` also works)
    /// and `cpn:<n>:<p>:<q>`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownId(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        let mut parts = lower.split(':');
        match (parts.next(), parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some("cp1"), Some(tag), None, None, None) => {
                FlatMapId::cp1(tag.parse().map_err(|_| unknown())?).map_err(|_| unknown())
            }
            (Some("cp2"), Some(tag), None, None, None) => {
                let tag = tag.replace('-', "");
                let bytes = tag.as_bytes();
                if bytes.len() != 2 || !(b'a'..=b'c').contains(&bytes[0]) || !(b'1'..=b'3').contains(&bytes[1]) {
                    return Err(unknown());
                }
                Ok(FlatMapId::Cpn { n: 2, p: usize::from(bytes[1] - b'1'), q: usize::from(bytes[0] - b'a') })
            }
            (Some("cpn"), Some(n), Some(p), Some(q), None) => {
                let parse = |x: &str| x.parse::<usize>().map_err(|_| unknown());
                FlatMapId::cpn(parse(n)?, parse(p)?, parse(q)?).map_err(|_| unknown())
            }
            _ => Err(unknown()),
        }
    }
}

/// Every catalog id of a space: the four `CP^1` tags, or all `(n+1)²`
/// clock/shift pairs ordered by `q`, then `p`.
pub fn catalog(space: &Space) -> Vec<FlatMapId> {
    match *space {
        Space::Cp1(_) => (1..=4).map(FlatMapId::Cp1).collect(),
        Space::Cpn(n) => (0..=n)
            .flat_map(|q| (0..=n).map(move |p| FlatMapId::Cpn { n, p, q }))
            .collect(),
    }
}

/// The monomial unitary `U` of a flat map.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalFlat {
    unitary: CMatrix,
}

impl GlobalFlat {
    pub fn unitary(&self) -> &CMatrix {
        &self.unitary
    }

    pub fn dim(&self) -> usize {
        self.unitary.nrows()
    }

    /// `‖U·U† − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.dim();
        (&self.unitary * self.unitary.adjoint() - CMatrix::identity(d, d)).norm()
    }

    /// `U · conj(v)`.
    pub fn apply_conjugate(&self, v: &[C64]) -> Vec<C64> {
        let dim = self.dim();
        (0..dim)
            .map(|r| (0..dim).map(|c| self.unitary[(r, c)] * v[c].conj()).sum())
            .collect()
    }

    /// `U · conj(U)`, the linear map obtained by applying the flat map twice.
    pub fn square(&self) -> CMatrix {
        &self.unitary * self.unitary.map(|z| z.conj())
    }
}

/// Global unitary of `id` acting on a `dim`-dimensional representation.
///
/// `CP^1` tags accept any `dim = 2j + 1`; `CP^n` pairs require `dim = n + 1`.
pub fn global_unitary(id: FlatMapId, dim: usize) -> Result<GlobalFlat> {
    if dim == 0 {
        return Err(Error::domain("dimension must be positive"));
    }
    let unitary = match id {
        FlatMapId::Cp1(tag) => {
            let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
            let mut u = CMatrix::zeros(dim, dim);
            for k in 0..dim {
                let (row, value) = match tag {
                    1 => (k, 1.0),
                    2 => (k, sign(k)),
                    3 => (dim - 1 - k, 1.0),
                    4 => (dim - 1 - k, sign(k)),
                    _ => return Err(Error::UnknownId(id.to_string())),
                };
                u[(row, k)] = C64::new(value, 0.0);
            }
            u
        }
        FlatMapId::Cpn { n, p, q } => {
            Error::check_dim(n + 1, dim)?;
            if p > n || q > n {
                return Err(Error::UnknownId(id.to_string()));
            }
            shift_power(dim, q) * clock_power(dim, p)
        }
    };
    Ok(GlobalFlat { unitary })
}

/// `|Z♭⟩ = U · conj|Z⟩`.
pub fn flat_state(id: FlatMapId, psi: &StateVector) -> Result<StateVector> {
    let flat = global_unitary(id, psi.dim())?;
    Ok(StateVector::from_raw(flat.apply_conjugate(psi.amplitudes())))
}

/// The point map `[ζ] ↦ [U · conj(ζ)]`, using the fundamental
/// (two-dimensional) unitary for `CP^1` tags.
pub fn flat_point(id: FlatMapId, h: &HomogeneousPoint) -> Result<HomogeneousPoint> {
    let dim = h.n() + 1;
    if let FlatMapId::Cp1(_) = id {
        Error::check_dim(2, dim)?;
    }
    let flat = global_unitary(id, dim)?;
    HomogeneousPoint::new(flat.apply_conjugate(h.coords()))
}

/// `P ↦ U · conj(P) · U†`.
pub fn flat_projector(id: FlatMapId, p: &Projector) -> Result<Projector> {
    let flat = global_unitary(id, p.dim())?;
    let u = flat.unitary();
    Ok(Projector::from_raw(u * p.matrix().map(|z| z.conj()) * u.adjoint()))
}

/// Largest violation of `⟨Z♭|W♭⟩ = ⟨W|Z⟩` over the given pairs of points,
/// evaluated on the coherent states of `space`.
pub fn verify_antimap(space: &Space, id: FlatMapId, pairs: &[(HomogeneousPoint, HomogeneousPoint)]) -> Result<f64> {
    id.check_space(space)?;
    let mut worst: f64 = 0.0;
    for (zp, wp) in pairs {
        let z = space.coherent_state(zp)?;
        let w = space.coherent_state(wp)?;
        let lhs = flat_state(id, &z)?.inner(&flat_state(id, &w)?)?;
        let rhs = w.inner(&z)?;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{binomial, coherent_cp1, SpinLabel};
    use crate::fourier::root_of_unity;
    use crate::projective::{chart_vector, projector_of, to_chart, ChartPoint};
    use crate::quadrature::{sample_fubini_study, McSpec};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(HomogeneousPoint, HomogeneousPoint)> {
        let pts = sample_fubini_study(n, &McSpec::new(2 * count, seed).unwrap());
        pts.chunks(2).map(|w| (w[0].clone(), w[1].clone())).collect()
    }

    #[test]
    fn id_strings_round_trip() {
        for s in ["cp1:1", "cp1:4", "cp2:a1", "cp2:b2", "cp2:c3", "cpn:3:1:2"] {
            let id: FlatMapId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("cp2:b-2".parse::<FlatMapId>().unwrap(), FlatMapId::Cpn { n: 2, p: 1, q: 1 });
        assert_eq!("cpn:2:0:1".parse::<FlatMapId>().unwrap().to_string(), "cp2:b1");
        for bad in ["cp1:0", "cp1:5", "cp2:d1", "cp2:a4", "cpn:3:4:0", "cpn:0:0:0", "cp3:1", ""] {
            assert!(matches!(bad.parse::<FlatMapId>(), Err(Error::UnknownId(_))), "{bad}");
        }
        assert_eq!(FlatMapId::Cpn { n: 2, p: 2, q: 0 }.label(), "a-3");
    }

    #[test]
    fn global_unitary_examples() {
        let sigma3 = global_unitary(FlatMapId::Cp1(2), 2).unwrap();
        assert_eq!(sigma3.unitary(), crate::fourier::clock(2).unwrap().matrix());

        let ba = global_unitary(FlatMapId::Cpn { n: 2, p: 1, q: 1 }, 3).unwrap();
        let a = crate::fourier::clock(3).unwrap().into_matrix();
        let b = crate::fourier::shift(3).unwrap().into_matrix();
        assert!((ba.unitary() - b * a).norm() <= 1e-15);

        let id = global_unitary(FlatMapId::Cpn { n: 2, p: 0, q: 0 }, 3).unwrap();
        assert_eq!(id.unitary(), &CMatrix::identity(3, 3));

        assert!(matches!(global_unitary(FlatMapId::Cpn { n: 2, p: 0, q: 0 }, 4), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(global_unitary(FlatMapId::Cp1(7), 2), Err(Error::UnknownId(_))));
        for space in [Space::cp1(5), Space::Cpn(4)] {
            for id in catalog(&space) {
                assert!(global_unitary(id, space.dim()).unwrap().unitarity_defect() <= 1e-12);
            }
        }
    }

    #[test]
    fn spin_half_states_match_the_explicit_formulas() {
        let z = c(0.7, -1.3);
        let psi = coherent_cp1(SpinLabel::new(1), z);
        let n = 1.0 / (1.0 + z.norm_sqr()).sqrt();
        let zb = z.conj();
        let one = c(1.0, 0.0);
        let expected = [
            [one * n, zb * n],
            [one * n, -zb * n],
            [zb * n, one * n],
            // the −1/z̄ map written with the sign that the spin-j lift and
            // the resulting singlet state require
            [-zb * n, one * n],
        ];
        for (tag, want) in (1..=4).zip(expected) {
            let got = flat_state(FlatMapId::Cp1(tag), &psi).unwrap();
            assert!(close(got.amplitudes(), &want, 1e-12), "tag {tag}");
        }
        // The printed spin-1/2 formula for the fourth map, (z̄, −1), is the
        // same ray with the opposite overall sign.
        let printed = [zb * n, -one * n];
        let got = flat_state(FlatMapId::Cp1(4), &psi).unwrap();
        assert!(close(got.amplitudes(), &printed.map(|a| -a), 1e-12));
    }

    #[test]
    fn spin_j_states_match_the_explicit_formulas() {
        let z = c(-0.4, 0.9);
        for two_j in 0..=10u32 {
            let s = SpinLabel::new(two_j);
            let psi = coherent_cp1(s, z);
            let norm = (1.0 + z.norm_sqr()).powf(s.j());
            let dim = s.dim();
            for tag in 1..=4u8 {
                let mut want = vec![c(0.0, 0.0); dim];
                for k in 0..dim {
                    let sign = if tag % 2 == 0 && k % 2 == 1 { -1.0 } else { 1.0 };
                    let coef = binomial(two_j, k as u32).sqrt() * sign * z.conj().powu(k as u32) / norm;
                    let slot = if tag >= 3 { dim - 1 - k } else { k };
                    want[slot] = coef;
                }
                let got = flat_state(FlatMapId::Cp1(tag), &psi).unwrap();
                assert!(close(got.amplitudes(), &want, 1e-12), "2j = {two_j}, tag {tag}");
            }
        }
    }

    #[test]
    fn cp2_states_match_the_explicit_formulas() {
        let (z1, z2) = (c(0.3, 1.1), c(-0.8, 0.25));
        let psi = chart_vector(&ChartPoint::standard(vec![z1, z2]).unwrap());
        let n = 1.0 / (1.0 + z1.norm_sqr() + z2.norm_sqr()).sqrt();
        let (a, b) = (z1.conj() * n, z2.conj() * n);
        let one = c(n, 0.0);
        let w = root_of_unity(3, 1);
        let w2 = w * w;
        let table: [(&str, [C64; 3]); 9] = [
            ("a1", [one, a, b]),
            ("a2", [one, w * a, w2 * b]),
            ("a3", [one, w2 * a, w * b]),
            ("b1", [b, one, a]),
            ("b2", [w2 * b, one, w * a]),
            ("b3", [w * b, one, w2 * a]),
            ("c1", [a, b, one]),
            ("c2", [w * a, w2 * b, one]),
            ("c3", [w2 * a, w * b, one]),
        ];
        for (tag, want) in table {
            let id: FlatMapId = format!("cp2:{tag}").parse().unwrap();
            let got = flat_state(id, &psi).unwrap();
            assert!(close(got.amplitudes(), &want, 1e-12), "{tag}");
        }
    }

    #[test]
    fn point_map_examples() {
        let h = HomogeneousPoint::new(vec![c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let img = flat_point(FlatMapId::Cp1(3), &h).unwrap();
        let local = to_chart(&img, 0).unwrap();
        assert!((local.local()[0] - c(0.5, 0.0)).norm() <= 1e-15);

        let origin = HomogeneousPoint::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let img = flat_point(FlatMapId::Cp1(3), &origin).unwrap();
        assert_eq!(img, HomogeneousPoint::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap());

        let (z1, z2) = (c(0.5, -1.0), c(1.5, 0.5));
        let h = HomogeneousPoint::new(vec![c(1.0, 0.0), z1, z2]).unwrap();
        let img = to_chart(&flat_point(FlatMapId::Cpn { n: 2, p: 0, q: 1 }, &h).unwrap(), 0).unwrap();
        let want = [c(1.0, 0.0) / z2.conj(), z1.conj() / z2.conj()];
        assert!(close(img.local(), &want, 1e-14));

        // z ↦ −1/z̄ and z ↦ −z̄ in the chart
        let z = c(0.3, 0.4);
        let h = HomogeneousPoint::new(vec![c(1.0, 0.0), z]).unwrap();
        let img = to_chart(&flat_point(FlatMapId::Cp1(4), &h).unwrap(), 0).unwrap();
        assert!((img.local()[0] + c(1.0, 0.0) / z.conj()).norm() <= 1e-14);
        let img = to_chart(&flat_point(FlatMapId::Cp1(2), &h).unwrap(), 0).unwrap();
        assert!((img.local()[0] + z.conj()).norm() <= 1e-14);

        assert!(flat_point(FlatMapId::Cp1(1), &HomogeneousPoint::new(vec![c(1.0, 0.0); 3]).unwrap()).is_err());
    }

    #[test]
    fn projector_examples() {
        let z = c(0.6, -0.2);
        let p = projector_of(&chart_vector(&ChartPoint::standard(vec![z]).unwrap()));
        let p_bar = projector_of(&chart_vector(&ChartPoint::standard(vec![z.conj()]).unwrap()));
        let img = flat_projector(FlatMapId::Cp1(1), &p).unwrap();
        assert!(img.distance(&p_bar) <= 1e-15);
        assert!((img.matrix() - p.matrix().map(|x| x.conj())).norm() <= 1e-15);

        let (z1, z2) = (c(0.2, 0.9), c(-1.1, 0.4));
        let p = projector_of(&chart_vector(&ChartPoint::standard(vec![z1, z2]).unwrap()));
        let img = flat_projector(FlatMapId::Cpn { n: 2, p: 0, q: 0 }, &p).unwrap();
        assert!((img.matrix() - p.matrix().map(|x| x.conj())).norm() <= 1e-15);

        let w = root_of_unity(3, 1);
        let target = StateVector::normalized(vec![c(1.0, 0.0), w * z1.conj(), w * w * z2.conj()]).unwrap();
        let img = flat_projector(FlatMapId::Cpn { n: 2, p: 1, q: 0 }, &p).unwrap();
        assert!(img.distance(&projector_of(&target)) <= 1e-14);

        // The literal form A·conj(P)·A (no adjoint) does not reproduce it.
        let a = global_unitary(FlatMapId::Cpn { n: 2, p: 1, q: 0 }, 3).unwrap();
        let literal = a.unitary() * p.matrix().map(|x| x.conj()) * a.unitary();
        assert!((literal - projector_of(&target).matrix()).norm() > 1e-3);
    }

    #[test]
    fn anti_map_identity_examples() {
        let max = verify_antimap(&Space::cp1(1), FlatMapId::Cp1(1), &random_pairs(1, 1000, 11)).unwrap();
        assert!(max <= 1e-12);
        let max = verify_antimap(&Space::Cpn(2), FlatMapId::Cpn { n: 2, p: 2, q: 1 }, &random_pairs(2, 1000, 12)).unwrap();
        assert!(max <= 1e-12);
        let max = verify_antimap(&Space::cp1(3), FlatMapId::Cp1(3), &random_pairs(1, 1000, 13)).unwrap();
        assert!(max <= 1e-12);
        assert!(verify_antimap(&Space::Cpn(3), FlatMapId::Cp1(1), &[]).is_err());
    }

    #[test]
    fn flat_map_squares() {
        for space in [Space::cp1(1), Space::Cpn(2), Space::Cpn(3), Space::Cpn(4)] {
            let n = space.manifold_dim();
            let points = sample_fubini_study(n, &McSpec::new(50, 99).unwrap());
            for id in catalog(&space) {
                let fundamental = global_unitary(id, n + 1).unwrap();
                let sq = fundamental.square();
                let d = n + 1;
                let phase = sq[(0, 0)];
                let scalar = (&sq - CMatrix::identity(d, d) * phase).norm() <= 1e-12;
                for h in &points {
                    let twice = flat_point(id, &flat_point(id, h).unwrap()).unwrap();
                    let expected = HomogeneousPoint::new((&sq * nalgebra::DVector::from_column_slice(h.coords())).as_slice().to_vec()).unwrap();
                    assert!(twice.distance(&expected).unwrap() <= 1e-12);
                    if scalar {
                        assert!(twice.distance(h).unwrap() <= 1e-12, "{id}");
                    }
                }
            }
        }
    }

    #[test]
    fn cp1_maps_are_involutions_up_to_sign() {
        for tag in 1..=4u8 {
            let sq = global_unitary(FlatMapId::Cp1(tag), 2).unwrap().square();
            let sign = if tag == 4 { -1.0 } else { 1.0 };
            assert!((sq - CMatrix::identity(2, 2) * c(sign, 0.0)).norm() <= 1e-15);
        }
    }

    proptest! {
        #[test]
        fn state_and_projector_actions_agree(re1 in -4.0f64..4.0, im1 in -4.0f64..4.0, re2 in -4.0f64..4.0, im2 in -4.0f64..4.0, pick in 0usize..9, chart in 0usize..3) {
            let cp = ChartPoint::new(chart, vec![c(re1, im1), c(re2, im2)]).unwrap();
            let psi = chart_vector(&cp);
            let id = catalog(&Space::Cpn(2))[pick];
            let via_state = projector_of(&flat_state(id, &psi).unwrap());
            let via_projector = flat_projector(id, &projector_of(&psi)).unwrap();
            prop_assert!(via_state.distance(&via_projector) <= 1e-12);
        }

        #[test]
        fn spin_lift_follows_the_point_map(two_j in 0u32..=8, tag in 1u8..=4, re in -3.0f64..3.0, im in -3.0f64..3.0) {
            let s = SpinLabel::new(two_j);
            let h = HomogeneousPoint::new(vec![c(1.0, 0.0), c(re, im)]).unwrap();
            let lifted = flat_state(FlatMapId::Cp1(tag), &Space::Cp1(s).coherent_state(&h).unwrap()).unwrap();
            let moved = Space::Cp1(s).coherent_state(&flat_point(FlatMapId::Cp1(tag), &h).unwrap()).unwrap();
            prop_assert!(projector_of(&lifted).distance(&projector_of(&moved)) <= 1e-12);
        }
    }
}
