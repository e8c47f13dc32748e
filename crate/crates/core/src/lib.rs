//! Linear constraint systems, measurement-based computation and the
//! diagonal-times-shift groups that connect them.
//!
//! Single-qudit operators are monomial matrices `(xi, b)` acting as
//! `|q> -> xi(q+b) |q+b>`, where `xi` is a determinant-one table of exact
//! roots of unity. Tensor products of these form the measurement operators
//! of a GHZ-state computation, and a projection onto the Heisenberg-Weyl
//! group turns commuting operator solutions of a linear system into
//! classical ones.
//!
//! ```
//! use lcsmbqc::{Phase, Torus, KElement};
//!
//! let t = Torus::new(3, 1).unwrap();
//! let x = KElement::shift(t);
//! let z = KElement::clock(t).unwrap();
//! assert!(!x.commutes_with(&z));
//! assert!(x.commutator_scalar(&z).unwrap().as_omega_power().is_some());
//! assert_eq!(Phase::omega(3).pow(3), Phase::one(3));
//! ```

pub mod cyclo;
pub mod error;
pub mod kgroup;
pub mod ktensor;
pub mod lcs;
pub mod mbqc;
pub mod phase_fn;
pub mod projection;
pub mod sampling;
pub mod verify;
pub mod zp;

pub use cyclo::Phase;
pub use error::{Error, Result};
pub use kgroup::{
    maximal_p_torsion_abelian, AbelianSubgroup, CommutingCase, KElement, SubgroupKind,
    SubgroupReport, Torus,
};
pub use ktensor::{symplectic_form, SymplecticVector, TensorElement};
pub use lcs::{check_solution_conditions, reduce_to_classical, GeneratorAssignment, Lcs, SolutionReport};
pub use mbqc::{output_table, MbqcSpec, OutputTable};
pub use phase_fn::{LevelCoefficients, PhaseFunction};
pub use projection::{phi, phi_local, HWElement, Variant};
pub use verify::{run_suite, PropertyResult, Suite, VerifyConfig, VerifyReport};
