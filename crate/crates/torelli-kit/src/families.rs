//! The two worked families: the Stein family `X_n` presented by Legendrian
//! fronts, and the knot-surgery fixture `Z` given by its homological
//! consequences.

use num_bigint::BigInt;

use crate::legendrian::{stein_trace, xn_front, FrontDiagram};
use crate::linalg::{bigint_vec, IntMatrix};
use crate::presentation::{CapData, LinkTrace};

/// The `n`-th Stein family member: the trace of its two-component front
/// (0-framed, zero linking, so the intersection form vanishes) together with
/// the front itself.
pub fn xn_family(n: i64) -> (LinkTrace, FrontDiagram) {
    let front = xn_front(n);
    let trace = stein_trace(&front).expect("family front is valid by construction");
    (trace, front)
}

/// The knot-surgery fixture: a four-component presentation with intersection
/// form `[[0,1],[1,−2]] ⊕ 0`, whose boundary has `H_1 = Z^2` generated by
/// the classes of the last two meridians. The cap is built from 2-handles
/// and a single 4-handle, so its first cohomology vanishes, and the
/// distinguished basic class restricts to `−2(v_1 + v_2)` in those
/// generators — recorded as the meridian-coordinate vector `(0, 0, −2, −2)`.
pub fn z_fixture() -> (LinkTrace, CapData) {
    let linking = IntMatrix::from_i64_rows(&[
        vec![0, 1, 0, 0],
        vec![1, -2, 0, 0],
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 0],
    ]);
    let trace = LinkTrace::from_linking(linking, None).expect("fixture form is symmetric");
    let cap = CapData {
        cap_h1_vanishes: true,
        basic_class_restriction: bigint_vec(&[0, 0, -2, -2]),
    };
    (trace, cap)
}

/// Convenience: the expected divisibility of the family restriction,
/// `d = 2n` for the `n`-th Stein member.
pub fn xn_expected_divisibility(n: i64) -> BigInt {
    BigInt::from(2 * n)
}
