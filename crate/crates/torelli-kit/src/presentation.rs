//! Framed-link presentations of simply-connected 4-manifolds.
//!
//! A [`LinkTrace`] records a framed link with `n` components: the trace `X` of
//! the corresponding 2-handle attachment has `H_2(X) = Z^n` on the handle
//! classes `e_i`, `H_2(X, ∂X) = Z^n` on the dual classes `f_i` with
//! `<e_i, f_j> = δ_ij`, and the intersection form equals the linking matrix
//! `Λ` (framings on the diagonal). In these coordinates the natural map
//! `H_2(X) -> H_2(X, ∂X)` has matrix `Λ`, Poincaré duality
//! `H^2(X) -> H_2(X, ∂X)` is the identity, and `∂ f_i` is the meridian class
//! `[µ_i]` in `H_1(∂X) = coker Λ`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{cokernel, kernel_basis, FGAbelianGroup, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("linking matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("linking matrix must be symmetric")]
    NotSymmetric,
    #[error("framings length {framings} does not match linking size {size}")]
    FramingCount { framings: usize, size: usize },
    #[error("framing {index} is {framing} but the linking diagonal entry is {diagonal}")]
    FramingMismatch {
        index: usize,
        framing: BigInt,
        diagonal: BigInt,
    },
    #[error("labels length {labels} does not match component count {size}")]
    LabelCount { labels: usize, size: usize },
    #[error("boundary duality pairing is not unimodular")]
    NonUnimodularDuality,
}

/// Immutable framed-link presentation: `n` components, framings, and the full
/// linking matrix (framings on the diagonal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkTrace {
    framings: Vec<BigInt>,
    linking: IntMatrix,
    labels: Option<Vec<String>>,
}

impl LinkTrace {
    pub fn new(
        framings: Vec<BigInt>,
        linking: IntMatrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, PresentationError> {
        if !linking.is_square() {
            return Err(PresentationError::NotSquare(linking.rows(), linking.cols()));
        }
        let n = linking.rows();
        if !linking.is_symmetric() {
            return Err(PresentationError::NotSymmetric);
        }
        if framings.len() != n {
            return Err(PresentationError::FramingCount {
                framings: framings.len(),
                size: n,
            });
        }
        for (i, f) in framings.iter().enumerate() {
            if f != linking.get(i, i) {
                return Err(PresentationError::FramingMismatch {
                    index: i,
                    framing: f.clone(),
                    diagonal: linking.get(i, i).clone(),
                });
            }
        }
        if let Some(ref labels) = labels {
            if labels.len() != n {
                return Err(PresentationError::LabelCount {
                    labels: labels.len(),
                    size: n,
                });
            }
        }
        Ok(LinkTrace {
            framings,
            linking,
            labels,
        })
    }

    /// Build from a symmetric linking matrix alone; framings are its diagonal.
    pub fn from_linking(
        linking: IntMatrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, PresentationError> {
        let framings = (0..linking.rows().min(linking.cols()))
            .map(|i| linking.get(i, i).clone())
            .collect();
        LinkTrace::new(framings, linking, labels)
    }

    pub fn components(&self) -> usize {
        self.linking.rows()
    }

    pub fn framings(&self) -> &[BigInt] {
        &self.framings
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The intersection form of the trace: symmetric, equal to the linking
    /// matrix in the handle basis.
    pub fn intersection_form(&self) -> &IntMatrix {
        &self.linking
    }

    /// Trace of the same link with `m` extra 0-framed hyperbolic pairs
    /// (connected sum with `m` copies of `S^2 x S^2`): the form gains `m`
    /// hyperbolic blocks and the boundary is unchanged.
    pub fn stabilized(&self, m: usize) -> LinkTrace {
        let mut linking = self.linking.clone();
        let hyperbolic = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let mut framings = self.framings.clone();
        let mut labels = self.labels.clone();
        for k in 0..m {
            linking = linking.direct_sum(&hyperbolic);
            framings.push(BigInt::zero());
            framings.push(BigInt::zero());
            if let Some(ref mut labels) = labels {
                labels.push(format!("stab{}a", k + 1));
                labels.push(format!("stab{}b", k + 1));
            }
        }
        LinkTrace::new(framings, linking, labels).expect("stabilization preserves validity")
    }
}

/// Data about a capping manifold `Q` glued to the boundary, reducing the
/// geometric hypotheses of the certificate pipeline to checkable flags.
///
/// `cap_h1_vanishes` asserts `H^1(Q) = 0` (true e.g. when `Q` is built from
/// 2-handles and a single 4-handle); this is the hypothesis that makes the
/// boundary inclusion inject on second homology. `basic_class_restriction`
/// is the restriction of a distinguished basic class to the trace, in handle
/// cochain coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapData {
    pub cap_h1_vanishes: bool,
    pub basic_class_restriction: crate::linalg::IntVector,
}

/// Homology of the boundary 3-manifold `∂X` in the trace coordinates.
///
/// * `h1` is `H_1(∂X) = coker Λ` with canonical normal coordinates.
/// * `h2_boundary` is a saturated basis of `H_2(∂X) = ker Λ` inside `H_2(X)`,
///   as columns (canonical Hermite basis of the kernel lattice).
/// * `duality` is the Poincaré pairing `P[i][j] = v_i^T w_j` between the
///   kernel basis `v_i` and lifts `w_j` of the free generators of `H_1(∂X)`.
///   It is unimodular for every symmetric `Λ` — checked, never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryData {
    pub h1: FGAbelianGroup,
    pub h2_boundary: IntMatrix,
    pub duality: IntMatrix,
}

impl BoundaryData {
    /// First Betti number of the boundary.
    pub fn b1(&self) -> usize {
        self.h1.free_rank
    }

    /// Projection from meridian coordinates to the free part of `H_1(∂X)`.
    pub fn free_projection(&self) -> IntMatrix {
        self.h1.free_projection()
    }

    /// Lifts of the free generators of `H_1(∂X)` to meridian coordinates.
    pub fn free_lifts(&self) -> IntMatrix {
        self.h1.free_lifts()
    }
}

/// Compute the boundary homology package of a trace.
///
/// The pairing between `ker Λ` and `coker Λ` is well defined because for
/// `v ∈ ker Λ` and symmetric `Λ` one has `v^T Λ u = (Λ v)^T u = 0`, so the
/// evaluation `v^T w` only depends on the class of `w`; torsion classes pair
/// to zero, so the pairing lives on the free part.
pub fn boundary_homology(t: &LinkTrace) -> Result<BoundaryData, PresentationError> {
    let h1 = cokernel(t.intersection_form());
    let h2_boundary = kernel_basis(t.intersection_form());
    let duality = h2_boundary.transpose().mul(&h1.free_lifts());
    if !duality.is_unimodular() {
        return Err(PresentationError::NonUnimodularDuality);
    }
    Ok(BoundaryData {
        h1,
        h2_boundary,
        duality,
    })
}

/// Rank bookkeeping that every valid trace satisfies; recorded as a report so
/// callers can display the reasoning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub b2: usize,
    pub b1_boundary: usize,
    pub form_rank: usize,
    pub consistent: bool,
    pub observations: Vec<String>,
}

pub fn betti_sanity(t: &LinkTrace) -> BettiReport {
    let b2 = t.components();
    let form_rank = t.intersection_form().rank();
    let b1_boundary = b2 - form_rank;
    let mut observations = vec![format!(
        "b2(X) = {b2} >= b1(boundary) = {b1_boundary}"
    )];
    if b1_boundary == b2 {
        observations.push(format!(
            "b1(boundary) = b2(X) forces a vanishing intersection form: form is {}",
            if t.intersection_form().is_zero() {
                "zero"
            } else {
                "nonzero"
            }
        ));
    }
    let consistent = b2 >= b1_boundary && (b1_boundary != b2 || t.intersection_form().is_zero());
    BettiReport {
        b2,
        b1_boundary,
        form_rank,
        consistent,
        observations,
    }
}
