//! Poincaré variations in the fixed dual bases.
//!
//! A variation is an integer matrix `D` of a map `H_2(X,∂X) -> H_2(X)`
//! written in the bases `f_i`, `e_j` fixed by [`crate::presentation`]. The
//! structural condition is
//!
//! ```text
//!     D + Dᵀ = D·Λ·Dᵀ        (Poincaré condition)
//! ```
//!
//! where `Λ` is the intersection form. Under the dual-basis convention the
//! umkehr map of `D` has matrix `Dᵀ`; the test suite verifies this once by
//! composing the five duality maps explicitly. Poincaré variations form a
//! group (not by matrix addition):
//!
//! ```text
//!     compose(D1, D2) = D1 + (I − D1·Λ)·D2,    inverse(D) = −(I − D·Λ)·D.
//! ```
//!
//! The Torelli variations (`D·Λ = 0`) form an abelian subgroup canonically
//! isomorphic to the group of skew-symmetric forms on the free part of
//! `H_1(∂X)`; [`variation_from_skew`] and [`skew_from_variation`] realize the
//! two directions, exactly and inverse to each other.

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::{unimodular_inverse, IntMatrix, IntVector};
use crate::presentation::{boundary_homology, BoundaryData, CapData, LinkTrace, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariationError {
    #[error("matrix is {rows}x{cols} but the trace has {expected} components")]
    DimensionMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("variations live on different traces")]
    TraceMismatch,
    #[error("matrix does not satisfy the Poincaré condition D + D^T = D*Lambda*D^T")]
    NotPoincare,
    #[error("variation is not Torelli (D*Lambda != 0)")]
    NotTorelli,
    #[error("skew form matrix must be skew-symmetric with matching rank {expected}")]
    InvalidSkewForm { expected: usize },
    #[error("skew form basis must be a unimodular {expected}x{expected} matrix")]
    InvalidSkewBasis { expected: usize },
    #[error("gluing injectivity not certified: cap data with vanishing H^1 required")]
    InjectivityUnverified,
    #[error(transparent)]
    Boundary(#[from] PresentationError),
}

/// A candidate variation: the trace it lives on and its matrix `D`.
///
/// Construction checks dimensions only; the Poincaré condition is a query
/// ([`Variation::is_poincare`]) so that counterexamples can be represented,
/// but every group operation insists on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variation {
    trace: LinkTrace,
    matrix: IntMatrix,
}

impl Variation {
    pub fn new(trace: LinkTrace, matrix: IntMatrix) -> Result<Self, VariationError> {
        let n = trace.components();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(VariationError::DimensionMismatch {
                expected: n,
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(Variation { trace, matrix })
    }

    /// The variation of the identity mapping class: `D = 0`.
    pub fn identity(trace: LinkTrace) -> Self {
        let n = trace.components();
        Variation {
            trace,
            matrix: IntMatrix::zero(n, n),
        }
    }

    pub fn trace(&self) -> &LinkTrace {
        &self.trace
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `D + Dᵀ = D·Λ·Dᵀ`, checked entrywise in exact arithmetic.
    pub fn is_poincare(&self) -> bool {
        let d = &self.matrix;
        let dt = d.transpose();
        let lambda = self.trace.intersection_form();
        d.add(&dt) == d.mul(lambda).mul(&dt)
    }

    fn require_poincare(&self) -> Result<(), VariationError> {
        if self.is_poincare() {
            Ok(())
        } else {
            Err(VariationError::NotPoincare)
        }
    }

    /// Group law: `D1 + (I − D1·Λ)·D2`. Requires both inputs Poincaré and on
    /// the same trace; the result is Poincaré again (closure is a theorem,
    /// exercised by the property suite).
    pub fn compose(&self, other: &Variation) -> Result<Variation, VariationError> {
        if self.trace != other.trace {
            return Err(VariationError::TraceMismatch);
        }
        self.require_poincare()?;
        other.require_poincare()?;
        let n = self.trace.components();
        let lambda = self.trace.intersection_form();
        let correction = IntMatrix::identity(n).sub(&self.matrix.mul(lambda));
        let matrix = self.matrix.add(&correction.mul(&other.matrix));
        Ok(Variation {
            trace: self.trace.clone(),
            matrix,
        })
    }

    /// Group inverse: `−(I − D·Λ)·D`.
    pub fn inverse(&self) -> Result<Variation, VariationError> {
        self.require_poincare()?;
        let n = self.trace.components();
        let lambda = self.trace.intersection_form();
        let matrix = IntMatrix::identity(n)
            .sub(&self.matrix.mul(lambda))
            .mul(&self.matrix)
            .neg();
        Ok(Variation {
            trace: self.trace.clone(),
            matrix,
        })
    }

    /// The automorphism `A = I − D·Λ` induced on `H_2(X)`; it preserves the
    /// intersection form (`AᵀΛA = Λ`, exercised by the property suite).
    pub fn induced_automorphism(&self) -> Result<IntMatrix, VariationError> {
        self.require_poincare()?;
        let n = self.trace.components();
        Ok(IntMatrix::identity(n).sub(&self.matrix.mul(self.trace.intersection_form())))
    }

    /// Torelli test: the induced automorphism is the identity, i.e. `DΛ = 0`.
    pub fn is_torelli(&self) -> Result<bool, VariationError> {
        self.require_poincare()?;
        Ok(self.matrix.mul(self.trace.intersection_form()).is_zero())
    }

    /// Variation on the trace stabilized by `m` hyperbolic pairs, extended by
    /// zero on the new handles. Preserves the Poincaré and Torelli
    /// properties, and the associated skew form when Torelli (the boundary is
    /// unchanged).
    pub fn stabilize(&self, m: usize) -> Variation {
        Variation {
            trace: self.trace.stabilized(m),
            matrix: self.matrix.direct_sum(&IntMatrix::zero(2 * m, 2 * m)),
        }
    }
}

/// A skew-symmetric form on the free part of `H_1(∂X)`.
///
/// `matrix` is the Gram matrix of the form in the generators recorded by
/// `basis`: column `j` of `basis` gives the coordinates of the `j`-th chosen
/// generator in the canonical free-cokernel coordinates. `basis = I` means
/// the canonical generators themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    matrix: IntMatrix,
    basis: IntMatrix,
}

impl SkewForm {
    pub fn new(matrix: IntMatrix, basis: IntMatrix) -> Result<Self, VariationError> {
        let r = matrix.rows();
        if !matrix.is_skew_symmetric() {
            return Err(VariationError::InvalidSkewForm { expected: r });
        }
        if basis.rows() != r || basis.cols() != r || !basis.is_unimodular() {
            return Err(VariationError::InvalidSkewBasis { expected: r });
        }
        Ok(SkewForm { matrix, basis })
    }

    /// Skew form given directly in the canonical free generators.
    pub fn canonical(matrix: IntMatrix) -> Result<Self, VariationError> {
        let r = matrix.rows();
        SkewForm::new(matrix, IntMatrix::identity(r))
    }

    /// The elementary form `u_i^* ∧ u_j^*` in a given basis: value `1` on
    /// `(u_i, u_j)`, zero on all other basis pairs.
    pub fn wedge(rank: usize, i: usize, j: usize, basis: IntMatrix) -> Result<Self, VariationError> {
        assert!(i < rank && j < rank && i != j, "wedge needs distinct indices");
        let mut matrix = IntMatrix::zero(rank, rank);
        matrix.set(i, j, BigInt::from(1));
        matrix.set(j, i, BigInt::from(-1));
        SkewForm::new(matrix, basis)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Gram matrix rewritten in the canonical free generators:
    /// `N_can = C^{-T} · N · C^{-1}` for the basis matrix `C`.
    pub fn canonical_matrix(&self) -> IntMatrix {
        if self.basis.is_identity() {
            return self.matrix.clone();
        }
        let c_inv = unimodular_inverse(&self.basis).expect("basis checked unimodular");
        c_inv.transpose().mul(&self.matrix).mul(&c_inv)
    }

    /// Integer multiple `k·η` (same basis).
    pub fn scale(&self, k: i64) -> SkewForm {
        SkewForm {
            matrix: self.matrix.scale(&BigInt::from(k)),
            basis: self.basis.clone(),
        }
    }

    /// Sum of two forms on the same boundary, computed in canonical
    /// coordinates.
    pub fn add(&self, other: &SkewForm) -> Result<SkewForm, VariationError> {
        if self.rank() != other.rank() {
            return Err(VariationError::InvalidSkewForm {
                expected: self.rank(),
            });
        }
        SkewForm::canonical(self.canonical_matrix().add(&other.canonical_matrix()))
    }
}

/// Build the Torelli variation of a skew form by the duality chain
///
/// ```text
///   H_2(X,∂X) --∂--> H_1(∂X)_free --η^ad--> H_1(∂X)^*_free
///             --PD--> H_2(∂X) --incl--> H_2(X)
/// ```
///
/// concretely `D = K · P^{-T} · N^T · π` where `π` projects meridian
/// coordinates to the canonical free cokernel coordinates, `N` is the
/// canonical Gram matrix, `P` the boundary duality pairing and `K` the kernel
/// basis. The result always satisfies the Poincaré condition and is Torelli;
/// by the identity `Kᵀ = P·π` it collapses to `πᵀ·Nᵀ·π` (a test asserts
/// this).
pub fn variation_from_skew(eta: &SkewForm, trace: &LinkTrace) -> Result<Variation, VariationError> {
    let boundary = boundary_homology(trace)?;
    variation_from_skew_with(eta, trace, &boundary)
}

/// Same as [`variation_from_skew`] with a precomputed [`BoundaryData`].
pub fn variation_from_skew_with(
    eta: &SkewForm,
    trace: &LinkTrace,
    boundary: &BoundaryData,
) -> Result<Variation, VariationError> {
    let r = boundary.b1();
    if eta.rank() != r {
        return Err(VariationError::InvalidSkewForm { expected: r });
    }
    let n_can = eta.canonical_matrix();
    let p_inv_t = unimodular_inverse(&boundary.duality.transpose())
        .expect("duality pairing checked unimodular");
    let matrix = boundary
        .h2_boundary
        .mul(&p_inv_t)
        .mul(&n_can.transpose())
        .mul(&boundary.free_projection());
    Variation::new(trace.clone(), matrix)
}

/// Recover the skew form of a Torelli variation: `N = (Wᵀ·D·W)ᵀ` for the
/// canonical lifts `W` of the free cokernel generators. Exact two-sided
/// inverse of [`variation_from_skew`] on Torelli variations.
pub fn skew_from_variation(v: &Variation) -> Result<SkewForm, VariationError> {
    let boundary = boundary_homology(v.trace())?;
    skew_from_variation_with(v, &boundary)
}

/// Same as [`skew_from_variation`] with a precomputed [`BoundaryData`].
pub fn skew_from_variation_with(
    v: &Variation,
    boundary: &BoundaryData,
) -> Result<SkewForm, VariationError> {
    if !v.is_torelli()? {
        return Err(VariationError::NotTorelli);
    }
    let w = boundary.free_lifts();
    let gram = w.transpose().mul(v.matrix()).mul(&w).transpose();
    SkewForm::canonical(gram)
}

/// Displacement term of the gluing formula: a boundary-supported mapping
/// class extended over a larger manifold moves the class with relative
/// coordinates `x_rel` by `embed · D · x_rel` (the extended map sends `x` to
/// `x` minus this term).
///
/// The formula is only meaningful when the relevant inclusion injects on
/// second homology; the caller certifies this with [`CapData`] whose
/// `cap_h1_vanishes` flag must be set, and the composite `embed · K` is
/// additionally checked to have full column rank. Without both,
/// `InjectivityUnverified` is returned.
pub fn gluing_displacement(
    v: &Variation,
    x_rel: &IntVector,
    embed: &IntMatrix,
    cap: Option<&CapData>,
) -> Result<IntVector, VariationError> {
    let n = v.trace().components();
    if x_rel.len() != n || embed.cols() != n {
        return Err(VariationError::DimensionMismatch {
            expected: n,
            rows: embed.rows(),
            cols: embed.cols(),
        });
    }
    if !v.is_torelli()? {
        return Err(VariationError::NotTorelli);
    }
    match cap {
        Some(cap) if cap.cap_h1_vanishes => {}
        _ => return Err(VariationError::InjectivityUnverified),
    }
    let boundary = boundary_homology(v.trace())?;
    let included = embed.mul(&boundary.h2_boundary);
    if included.rank() != boundary.h2_boundary.cols() {
        return Err(VariationError::InjectivityUnverified);
    }
    Ok(embed.mul_vec(&v.matrix().mul_vec(x_rel)))
}
