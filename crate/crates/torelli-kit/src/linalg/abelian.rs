//! Finitely generated abelian groups presented as cokernels, plus the basis
//! machinery (Hermite forms, saturated kernels, basis completion) that keeps
//! every generator choice canonical and therefore reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::snf::smith_normal_form;
use super::{IntMatrix, LinalgError};

/// `Z^n / im(presentation)` in normal form: a free part of rank `free_rank`
/// and cyclic factors `Z/d` for each `d` in `torsion` (each `d > 1`, in
/// divisibility order).
///
/// Normal coordinates list the free coordinates first, then the torsion ones.
/// `to_normal` maps presentation coordinates to normal coordinates and
/// `from_normal` picks lifts of the normal generators; their composite
/// `to_normal * from_normal` is the identity, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub presentation: IntMatrix,
    pub to_normal: IntMatrix,
    pub from_normal: IntMatrix,
}

impl FGAbelianGroup {
    /// Rank of the ambient free module `Z^n`.
    pub fn ambient_rank(&self) -> usize {
        self.presentation.rows()
    }

    pub fn normal_rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.normal_rank() == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Projection of presentation coordinates onto the free normal
    /// coordinates: the first `free_rank` rows of `to_normal`.
    pub fn free_projection(&self) -> IntMatrix {
        self.to_normal.select_rows(&(0..self.free_rank).collect::<Vec<_>>())
    }

    /// Lifts of the free generators back to presentation coordinates: the
    /// first `free_rank` columns of `from_normal`.
    pub fn free_lifts(&self) -> IntMatrix {
        self.from_normal.select_cols(&(0..self.free_rank).collect::<Vec<_>>())
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn stack_rows(top: &IntMatrix, bottom: &IntMatrix) -> IntMatrix {
    assert_eq!(top.cols(), bottom.cols());
    let mut out = IntMatrix::zero(top.rows() + bottom.rows(), top.cols());
    for i in 0..top.rows() {
        for j in 0..top.cols() {
            out.set(i, j, top.get(i, j).clone());
        }
    }
    for i in 0..bottom.rows() {
        for j in 0..bottom.cols() {
            out.set(top.rows() + i, j, bottom.get(i, j).clone());
        }
    }
    out
}

/// Row-style Hermite normal form, reached by unimodular row operations only:
/// row echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. For a full-row-rank input this is the unique canonical basis
/// of the row lattice, which is what makes downstream generator choices
/// independent of how the Smith form happened to be reached.
pub fn row_hnf(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        loop {
            let pivot_row = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by_key(|&i| h.get(i, c).abs());
            let Some(p) = pivot_row else {
                break;
            };
            if p != r {
                for j in 0..cols {
                    let x = h.get(r, j).clone();
                    let y = h.get(p, j).clone();
                    h.set(r, j, y);
                    h.set(p, j, x);
                }
            }
            let mut clean = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c) / h.get(r, c);
                for j in 0..cols {
                    let val = h.get(i, j) - &q * h.get(r, j);
                    h.set(i, j, val);
                }
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            for j in 0..cols {
                let val = -h.get(r, j).clone();
                h.set(r, j, val);
            }
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let val = h.get(i, j) - &q * h.get(r, j);
                h.set(i, j, val);
            }
        }
        r += 1;
    }
    h
}

/// Column-style Hermite normal form: the transpose convention of [`row_hnf`].
pub fn column_hnf(m: &IntMatrix) -> IntMatrix {
    row_hnf(&m.transpose()).transpose()
}

/// Exact integral right inverse of a surjective `k x n` matrix (all Smith
/// invariant factors 1), or `None` if the matrix is not surjective.
pub fn right_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let k = m.rows();
    let snf = smith_normal_form(m);
    if snf.rank() != k || snf.invariant_factors().iter().any(|d| !d.is_one()) {
        return None;
    }
    // U m V = [I_k | 0]  =>  m * (V[:, :k] U) = I_k.
    let v_left = snf.v.select_cols(&(0..k).collect::<Vec<_>>());
    Some(v_left.mul(&snf.u))
}

/// Exact inverse of a unimodular square matrix, or `None` if not unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if !m.is_square() {
        return None;
    }
    let snf = smith_normal_form(m);
    if !snf.s.is_identity() {
        return None;
    }
    // U m V = I  =>  m^-1 = V U.
    Some(snf.v.mul(&snf.u))
}

/// Cokernel `Z^rows / column-span(m)` with canonical coordinates.
///
/// The free projection is canonicalised through the Hermite form of the free
/// rows of `U`, so it depends only on the presentation's image lattice, not on
/// pivoting choices inside the Smith reduction. That stability is relied on
/// when a presentation is enlarged by unimodular blocks.
pub fn cokernel(m: &IntMatrix) -> FGAbelianGroup {
    let rows = m.rows();
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = snf.rank();

    let torsion_positions: Vec<usize> = (0..rank)
        .filter(|&i| diag[i] > BigInt::one())
        .collect();
    let torsion: Vec<BigInt> = torsion_positions.iter().map(|&i| diag[i].clone()).collect();
    let free_positions: Vec<usize> = (rank..rows).collect();

    let pi = row_hnf(&snf.u.select_rows(&free_positions));
    let torsion_rows = snf.u.select_rows(&torsion_positions);
    let to_normal = stack_rows(&pi, &torsion_rows);
    let from_normal = right_inverse(&to_normal)
        .expect("rows selected from a unimodular matrix span a direct summand");

    FGAbelianGroup {
        free_rank: rows - rank,
        torsion,
        presentation: m.clone(),
        to_normal,
        from_normal,
    }
}

/// Canonical basis of `ker(m: Z^cols -> Z^rows)` as the columns of a
/// `cols x nullity` matrix. The basis is saturated (it spans a direct summand)
/// because it consists of columns of a unimodular matrix, then it is put in
/// column Hermite form so it depends only on the kernel lattice itself.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let free_cols: Vec<usize> = (rank..m.cols()).collect();
    column_hnf(&snf.v.select_cols(&free_cols))
}

/// Extends a primitive vector to a basis of `Z^n`: returns a unimodular matrix
/// whose first column is `v`. The result is normalised to determinant `+1`
/// whenever `n >= 2`, which pins the orientation of every derived basis.
pub fn complete_to_basis(v: &[BigInt]) -> Result<IntMatrix, LinalgError> {
    let n = v.len();
    if n == 0 {
        return Err(LinalgError::ShapeMismatch {
            expected: "n x 1 with n >= 1",
            rows: 0,
            cols: 1,
        });
    }
    let snf = smith_normal_form(&IntMatrix::column(v));
    let content = snf.s.get(0, 0).clone();
    if !content.is_one() {
        return Err(LinalgError::NonPrimitive(content));
    }
    // U v V = e_1 with V = [±1], so v = V[0][0] * (U^-1 e_1).
    let mut b = snf.u_inv.clone();
    if snf.v.get(0, 0).is_negative() {
        for i in 0..n {
            let val = -b.get(i, 0).clone();
            b.set(i, 0, val);
        }
    }
    if n >= 2 && b.determinant().is_negative() {
        let last = n - 1;
        for i in 0..n {
            let val = -b.get(i, last).clone();
            b.set(i, last, val);
        }
    }
    debug_assert_eq!(b.col(0), v.to_vec());
    Ok(b)
}
