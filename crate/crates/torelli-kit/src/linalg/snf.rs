//! Smith normal form over `Z` with unimodular transforms.
//!
//! `smith_normal_form(m)` returns `U, S, V` with `U * m * V = S`, `U` and `V`
//! unimodular, `S` diagonal with nonnegative entries `d_1 | d_2 | ...`. The
//! inverses of `U` and `V` are accumulated alongside (every elementary row
//! operation on `U` is mirrored by the inverse column operation on `U^-1`),
//! so callers get exact integral inverses for free.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub source: IntMatrix,
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Exact check of every contract: `U*M*V = S`, both transforms unimodular
    /// with the accumulated inverses, `S` diagonal, nonnegative, and each
    /// diagonal entry divides the next.
    pub fn verify(&self) -> bool {
        let product_ok = self.u.mul(&self.source).mul(&self.v) == self.s;
        let u_ok = self.u.mul(&self.u_inv).is_identity() && self.u.is_unimodular();
        let v_ok = self.v.mul(&self.v_inv).is_identity() && self.v.is_unimodular();
        product_ok && u_ok && v_ok && diagonal_normal(&self.s)
    }
}

fn diagonal_normal(s: &IntMatrix) -> bool {
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            if i != j && !s.get(i, j).is_zero() {
                return false;
            }
        }
    }
    let diag: Vec<BigInt> = (0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).clone())
        .collect();
    if diag.iter().any(|d| d.is_negative()) {
        return false;
    }
    diag.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        }
    })
}

/// Working state: `s` plus the four transforms kept in sync.
struct Reduction {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reduction {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        swap_rows(&mut self.s, a, b);
        swap_rows(&mut self.u, a, b);
        swap_cols(&mut self.u_inv, a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        swap_cols(&mut self.s, a, b);
        swap_cols(&mut self.v, a, b);
        swap_rows(&mut self.v_inv, a, b);
    }

    /// Row_dst -= q * Row_src.
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        row_axpy(&mut self.s, dst, src, q);
        row_axpy(&mut self.u, dst, src, q);
        // (U')^-1 = U^-1 * E^-1 with E^-1 adding q * col_dst to col_src.
        col_axpy_add(&mut self.u_inv, src, dst, q);
    }

    /// Col_dst -= q * Col_src.
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        col_axpy(&mut self.s, dst, src, q);
        col_axpy(&mut self.v, dst, src, q);
        // (V')^-1 = F^-1 * V^-1 with F^-1 adding q * row_dst to row_src.
        row_axpy_add(&mut self.v_inv, src, dst, q);
    }

    /// Row_dst += Row_src (used to pull non-multiples into the pivot row).
    fn row_add(&mut self, dst: usize, src: usize) {
        let minus_one = -BigInt::one();
        self.row_sub(dst, src, &minus_one);
    }

    fn negate_row(&mut self, i: usize) {
        negate_row(&mut self.s, i);
        negate_row(&mut self.u, i);
        negate_col(&mut self.u_inv, i);
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// Row_dst -= q * Row_src.
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let val = m.get(dst, j) - q * m.get(src, j);
        m.set(dst, j, val);
    }
}

/// Row_dst += q * Row_src.
fn row_axpy_add(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let val = m.get(dst, j) + q * m.get(src, j);
        m.set(dst, j, val);
    }
}

/// Col_dst -= q * Col_src.
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let val = m.get(i, dst) - q * m.get(i, src);
        m.set(i, dst, val);
    }
}

/// Col_dst += q * Col_src.
fn col_axpy_add(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let val = m.get(i, dst) + q * m.get(i, src);
        m.set(i, dst, val);
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let val = -m.get(i, j).clone();
        m.set(i, j, val);
    }
}

fn negate_col(m: &mut IntMatrix, j: usize) {
    for i in 0..m.rows() {
        let val = -m.get(i, j).clone();
        m.set(i, j, val);
    }
}

/// Smallest nonzero entry (by absolute value) in the trailing block `[t.., t..]`.
fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = s.get(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if s.get(bi, bj).abs() <= e.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Reduction {
        s: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&w.s, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            // Clear the pivot column. A nonzero remainder becomes the new
            // (strictly smaller) pivot, so this terminates.
            let mut dirty = false;
            for i in t + 1..rows {
                if w.s.get(i, t).is_zero() {
                    continue;
                }
                let q = w.s.get(i, t) / w.s.get(t, t);
                w.row_sub(i, t, &q);
                if !w.s.get(i, t).is_zero() {
                    w.swap_rows(i, t);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear the pivot row.
            for j in t + 1..cols {
                if w.s.get(t, j).is_zero() {
                    continue;
                }
                let q = w.s.get(t, j) / w.s.get(t, t);
                w.col_sub(j, t, &q);
                if !w.s.get(t, j).is_zero() {
                    w.swap_cols(j, t);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Make the pivot divide everything that remains, so the diagonal
            // comes out in divisibility order without a separate sorting pass.
            let p = w.s.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(w.s.get(i, j) % &p).is_zero())
            });
            match offender {
                Some(i) => {
                    w.row_add(t, i);
                    continue;
                }
                None => break,
            }
        }
        t += 1;
    }

    for i in 0..rows.min(cols) {
        if w.s.get(i, i).is_negative() {
            w.negate_row(i);
        }
    }

    SmithDecomposition {
        source: m.clone(),
        u: w.u,
        s: w.s,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::super::matrix::bigint_vec;
    use super::*;

    fn check(m: IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(&m);
        assert!(snf.verify(), "SNF contract failed for\n{m}");
        snf
    }

    #[test]
    fn snf_of_identity_is_identity() {
        let snf = check(IntMatrix::identity(4));
        assert_eq!(snf.s, IntMatrix::identity(4));
    }

    #[test]
    fn snf_of_zero_matrix() {
        let snf = check(IntMatrix::zero(3, 2));
        assert!(snf.s.is_zero());
        assert_eq!(snf.rank(), 0);
    }

    #[test]
    fn snf_of_empty_matrices() {
        check(IntMatrix::zero(0, 0));
        check(IntMatrix::zero(0, 3));
        check(IntMatrix::zero(3, 0));
    }

    #[test]
    fn snf_rank_one_example() {
        // Row-reduction oracle: [[2,4],[4,8]] has rank 1 and content 2.
        let snf = check(IntMatrix::from_i64_rows(&[vec![2, 4], vec![4, 8]]));
        assert_eq!(snf.diagonal(), bigint_vec(&[2, 0]));
    }

    #[test]
    fn snf_couples_diagonal_entries() {
        // diag(2, 3) is not in Smith form; invariant factors are 1, 6.
        let snf = check(IntMatrix::diagonal(&[2, 3]));
        assert_eq!(snf.diagonal(), bigint_vec(&[1, 6]));
    }

    #[test]
    fn snf_of_smith_form_is_fixed() {
        let s = IntMatrix::diagonal(&[1, 2, 4, 0]);
        let snf = check(s.clone());
        assert_eq!(snf.s, s);
    }

    #[test]
    fn snf_hyperbolic_block() {
        let snf = check(IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(snf.diagonal(), bigint_vec(&[1, 1]));
    }

    #[test]
    fn snf_z_fixture_form() {
        let form = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, -2]])
            .direct_sum(&IntMatrix::zero(2, 2));
        let snf = check(form);
        assert_eq!(snf.diagonal(), bigint_vec(&[1, 1, 0, 0]));
    }

    #[test]
    fn snf_wide_and_tall() {
        let wide = check(IntMatrix::from_i64_rows(&[vec![2, 6, 10]]));
        assert_eq!(wide.diagonal(), bigint_vec(&[2]));
        let tall = check(IntMatrix::from_i64_rows(&[vec![6], vec![10], vec![15]]));
        assert_eq!(tall.diagonal(), bigint_vec(&[1]));
    }

    #[test]
    fn snf_negative_entries_normalize() {
        let snf = check(IntMatrix::from_i64_rows(&[vec![-4, 0], vec![0, -6]]));
        assert_eq!(snf.diagonal(), bigint_vec(&[2, 12]));
    }
}
