//! Homology of the boundary of a framed-link trace.
//!
//! A trace is described by its linking matrix (framings on the diagonal);
//! the boundary three-manifold's `H_1` is the cokernel of that matrix, and
//! the kernel gives the image of `H_2(∂X)` inside the trace.
//!
//! Run with `cargo run --example boundary_homology`.

use torelli_kit::linalg::IntMatrix;
use torelli_kit::presentation::{betti_sanity, boundary_homology, LinkTrace};

fn report(name: &str, trace: &LinkTrace) {
    let boundary = boundary_homology(trace).unwrap();
    let betti = betti_sanity(trace);
    println!("{name}:");
    println!("  H1(boundary) = {}", boundary.h1);
    println!(
        "  b2 = {}, b1(boundary) = {}, form rank = {}",
        betti.b2, betti.b1_boundary, betti.form_rank
    );
    println!(
        "  H2(boundary) rank = {}",
        boundary.h2_boundary.cols()
    );
    println!("  duality pairing = {:?}", boundary.duality.to_i64_rows().unwrap());
    for line in &betti.observations {
        println!("  note: {line}");
    }
}

fn main() {
    // -2-framed unknot: the boundary is a lens space with H1 = Z/2.
    let lens = LinkTrace::from_linking(IntMatrix::from_i64_rows(&[vec![-2]]), None).unwrap();
    report("unknot with framing -2", &lens);

    // Two 0-framed unlinked components: boundary H1 is free of rank 2 and
    // carries a rank-2 surface group, the situation where Torelli variations
    // first appear.
    let flat = LinkTrace::from_linking(IntMatrix::zero(2, 2), None).unwrap();
    report("two 0-framed split components", &flat);

    // A mixed form: one hyperbolic pair plus two 0-framed components.
    let mixed = LinkTrace::from_linking(
        IntMatrix::from_i64_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]),
        None,
    )
    .unwrap();
    report("hyperbolic pair + two 0-framed components", &mixed);

    // Stabilization pads the presentation without changing the boundary.
    let stabilized = flat.stabilized(2);
    report("the flat trace after two stabilizations", &stabilized);
}
