//! Invariants of genus 2 curves with split Jacobians, the published surface
//! equations for the (2,2) and (3,3) cases, and exact verification of their
//! parametrizations and singular loci.

pub mod catalog;
pub mod error;
pub mod identities;
pub mod invariants;
pub mod numeric;
pub mod report;
pub mod sampling;
pub mod singular;
pub mod surfaces;

pub use error::{CoreError, Result};
pub use identities::{check_identity, IdentityId, IdentityOptions};
pub use invariants::{
    absolute_from_igusa, curve_from_uv, igusa_from_sextic, pair_h, pair_r1_r2, pair_r3, AbsoluteInvariants, CubicPair,
    IgusaInvariants, PairInvariants, SexticForm,
};
pub use report::{CheckReport, IdentityReport, Status};
pub use singular::{
    classify_automorphism, gradient, sample_c1_c2_singularity, verify_c3_system, verify_minors_on_iso1,
    verify_t3_points, verify_table1, z_from_xy, ClassificationResult, GradientReport, Group,
};
pub use surfaces::{rho, surface_eval, theta, uv_to_r, SurfaceId};
