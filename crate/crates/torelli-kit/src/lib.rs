//! torelli-kit: exact-arithmetic computation of Torelli groups of
//! simply-connected 4-manifolds with boundary, presented by framed links.
//!
//! The toolkit works entirely over `Z` (arbitrary precision, no tolerances):
//!
//! * [`linalg`] — Smith normal forms, cokernels, saturated kernels, basis
//!   completion.
//! * [`presentation`] — framed-link traces, their intersection forms and
//!   boundary homology.
//! * [`variation`] — Poincaré variations, the variation group law, the
//!   Torelli subgroup and its identification with skew forms on the boundary.
//! * [`legendrian`] — Legendrian front diagrams, classical invariants, Stein
//!   traces, Chern classes and adjunction-style genus bounds.
//! * [`groupring`] — Laurent group-ring calculus for Seiberg-Witten basic
//!   classes under knot surgery and blow-ups.
//! * [`families`] — the built-in worked families and fixtures.
//! * [`certificate`] — the non-smoothability certificate pipeline and the
//!   boundary Dehn-twist realizability classifier.
//! * [`cli`] — the `torelli-kit` command-line front end.

pub mod certificate;
pub mod cli;
pub mod families;
pub mod groupring;
pub mod json;
pub mod legendrian;
pub mod linalg;
pub mod presentation;
pub mod variation;

pub use certificate::{
    certify, dehn_twist_realizability, stein_certify, BoundaryProfile, Certificate,
    CertificateInput, CertificateSource, HypothesisFailure, RealizabilityVerdict,
};
pub use families::{xn_family, z_fixture};
pub use groupring::{
    alexander_twist, blowup, knot_surgery, pairwise_distinct, sw_family, AlexanderPolynomial,
    GroupRingElement,
};
pub use legendrian::{
    chern_class, classical_invariants, distinguish_boundaries, nontorsion_test, parse_front,
    serialize_front, stein_trace, xn_front, ClassicalInvariants, FrontDiagram, FrontEvent,
    Orientation,
};
pub use linalg::{IntMatrix, IntVector};
pub use presentation::{betti_sanity, boundary_homology, BoundaryData, CapData, LinkTrace};
pub use variation::{
    gluing_displacement, skew_from_variation, variation_from_skew, SkewForm, Variation,
};
