//! Adversarial contamination and breakdown certification.

mod bounds;
mod counterexample;
mod fsbv;
mod shear;
mod trace;
mod translation;

pub use bounds::{theoretical_bounds, BoundTable, Fraction};
pub use counterexample::{pm_counterexample, DEFAULT_NOISE_SCALE, REDRAW_BUDGET};
pub use fsbv::{
    empirical_fsbv, AttackSuite, BreakdownCertificate, CertificateStatus, FsbvReport, FsbvResult,
    MIN_THRESHOLD_FACTOR, SURVIVED_NOTE,
};
pub use shear::{
    admissible_facets, default_gamma_grid, shear_attack, AdmissibleFacet, PartitionRule,
    ShearAttackConfig, MAX_NUDGE,
};
pub use trace::{AttackRecord, AttackTrace, ContaminationFamily, Nudge, ShearSetup, Witness};
pub use translation::{
    default_radius_grid, translation_attack, TranslationAttackConfig, CLUSTER_SPREAD,
};
