//! Smith normal form with certified unimodular transforms.
//!
//! Run with `cargo run --example smith_normal_form`.

use torelli_kit::linalg::{cokernel, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_i64_rows(&[
        vec![2, 4, 4],
        vec![-6, 6, 12],
        vec![10, 4, 16],
    ]);
    let d = smith_normal_form(&m);

    println!("input:");
    for row in m.to_i64_rows().unwrap() {
        println!("  {row:?}");
    }
    println!("invariant factors: {:?}", d.invariant_factors());
    println!("rank: {}", d.rank());
    println!("U·M·V = S holds: {}", d.verify());
    println!("det U = {}, det V = {}", d.u.determinant(), d.v.determinant());

    // The cokernel of the same matrix, i.e. Z^3 / im(M).
    let coker = cokernel(&m);
    println!("coker(M) = {coker}");

    // A presentation with free part: the kernel basis is saturated, so the
    // quotient by the image has no hidden torsion.
    let wide = IntMatrix::from_i64_rows(&[vec![1, 2, 3, 4], vec![0, 2, 4, 6]]);
    let coker = cokernel(&wide);
    println!("coker of a 2x4 presentation: {coker}");
}
