//! Coherent states on complex projective space and Fivel's integral
//! representation of generalized Bell states.
//!
//! The crate builds the spin-`j` coherent states on `CP^1` and the level-1
//! coherent states on `CP^n`, twists them by anti-automorphisms
//! `|Z♭⟩ = U·conj|Z⟩` (with `U` a monomial unitary), and evaluates
//!
//! ```text
//! |B⟫ = (1/√dim V) ∫ dμ(Z) |Z⟩ ⊗ |Z♭⟩
//! ```
//!
//! either with exact Gauss–Legendre × trapezoid rules or with seeded Monte
//! Carlo over the Fubini–Study measure. The results are compared against
//! closed-form maximally entangled states.
//!
//! Module map:
//!
//! - [`projective`]: homogeneous and chart coordinates, projectors.
//! - [`coherent`]: su(2) generators, coherent states and their measures.
//! - [`flatmaps`]: the anti-automorphism catalogs and their global unitaries.
//! - [`quadrature`]: deterministic rules, Fubini–Study sampling, moments.
//! - [`bell`]: the Fivel integral and the closed-form Bell families.
//! - [`analysis`]: resolution of unity, Schmidt data, ranks and distances.
//! - [`fourier`]: clock, shift and (generalized) Walsh–Hadamard matrices.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod bell;
pub mod coherent;
pub mod error;
pub mod flatmaps;
pub mod fourier;
pub mod projective;
pub mod quadrature;
mod state;

pub use num_complex::Complex64 as C64;

/// Dense complex matrix used for projectors, unitaries and amplitude tables.
pub type CMatrix = nalgebra::DMatrix<C64>;

pub use analysis::{rank_of_family, resolution_of_unity, schmidt, state_distance, total_measure, SchmidtData};
pub use bell::{
    closed_form, closed_form_bell_cp1, closed_form_bell_cp2, fivel_bell, generalized_bell,
    unitary_transport_identity, BipartiteState,
};
pub use coherent::{coherent_cp1, coherent_cpn, Space, SpinLabel};
pub use error::{Error, Result};
pub use flatmaps::{flat_point, flat_projector, flat_state, global_unitary, FlatMapId, GlobalFlat};
pub use projective::{ChartPoint, HomogeneousPoint, Projector};
pub use quadrature::{Integrator, McSpec, QuadratureSpecCp1, QuadratureSpecCpn};
pub use state::StateVector;
