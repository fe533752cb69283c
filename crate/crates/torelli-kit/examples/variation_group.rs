//! The variation group of a trace and its Torelli subgroup.
//!
//! A variation is an integer matrix `D` satisfying the Poincaré condition
//! `D + Dᵀ = DΛDᵀ` over the intersection form `Λ`. Variations compose like
//! monodromies; the Torelli ones (`DΛ = 0`) form an abelian subgroup
//! isomorphic to skew forms on the free part of `H_1` of the boundary.
//!
//! Run with `cargo run --example variation_group`.

use torelli_kit::linalg::IntMatrix;
use torelli_kit::presentation::LinkTrace;
use torelli_kit::variation::{skew_from_variation, variation_from_skew, SkewForm, Variation};

fn main() {
    // A hyperbolic trace has interesting non-Torelli variations.
    let hyperbolic = LinkTrace::from_linking(
        IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]),
        None,
    )
    .unwrap();
    let d1 = Variation::new(
        hyperbolic.clone(),
        IntMatrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]),
    )
    .unwrap();
    println!("D1 is Poincaré: {}", d1.is_poincare());
    println!("D1 is Torelli: {}", d1.is_torelli().unwrap());
    let a = d1.induced_automorphism().unwrap();
    println!("induced automorphism: {:?}", a.to_i64_rows().unwrap());

    // Composition and inversion satisfy the group law.
    let d2 = d1.inverse().unwrap();
    let id = d1.compose(&d2).unwrap();
    println!("D1 ∘ D1⁻¹ = identity: {}", id.matrix().is_zero());

    // On a 0-framed two-component trace the Torelli subgroup is generated by
    // the single wedge e0 ^ e1.
    let flat = LinkTrace::from_linking(IntMatrix::zero(2, 2), None).unwrap();
    let eta = SkewForm::wedge(2, 0, 1, IntMatrix::identity(2)).unwrap();
    let v = variation_from_skew(&eta, &flat).unwrap();
    println!("wedge variation: {:?}", v.matrix().to_i64_rows().unwrap());
    println!("is Torelli: {}", v.is_torelli().unwrap());

    // The correspondence with skew forms is exact in both directions.
    let back = skew_from_variation(&v).unwrap();
    println!(
        "recovered skew form: {:?}",
        back.canonical_matrix().to_i64_rows().unwrap()
    );
    assert_eq!(back.canonical_matrix(), eta.canonical_matrix());

    // Torelli variations add: composing wedge with itself doubles the form.
    let twice = v.compose(&v).unwrap();
    let doubled = skew_from_variation(&twice).unwrap();
    println!(
        "composed twice: {:?}",
        doubled.canonical_matrix().to_i64_rows().unwrap()
    );

    // Stabilizing the trace changes nothing on the boundary.
    let stabilized = v.stabilize(1);
    let form = skew_from_variation(&stabilized).unwrap();
    assert_eq!(form.canonical_matrix(), eta.canonical_matrix());
    println!("stabilization preserves the skew form: true");
}
