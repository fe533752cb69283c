//! Certificate for the knot-surgery fixture via the explicit input path.
//!
//! Unlike the Stein family, this manifold is handed to the pipeline as raw
//! data: a trace, the restriction of a basic class to the boundary, a
//! nonzero-invariant flag, and cap data for the displacement argument. The
//! pipeline still produces a full certificate.
//!
//! Run with `cargo run --example z_fixture_certificate`.

use torelli_kit::certificate::{certify, CertificateInput, CertificateSource};
use torelli_kit::families::z_fixture;
use torelli_kit::presentation::boundary_homology;

fn main() {
    let (trace, cap) = z_fixture();
    println!("trace linking matrix: {:?}", trace.intersection_form().to_i64_rows().unwrap());

    let boundary = boundary_homology(&trace).unwrap();
    println!("H1(boundary) = {}", boundary.h1);

    let input = CertificateInput {
        c1_restriction: cap.basic_class_restriction.clone(),
        invariant_nonzero: true,
        cap,
        source: CertificateSource::Explicit,
        trace,
    };
    let certificate = certify(&input).unwrap();

    println!("divisibility d = {}", certificate.d.as_ref().unwrap());
    println!("primitive class v1 = {:?}", certificate.v1.as_ref().unwrap());
    println!("completing class v2 = {:?}", certificate.v2.as_ref().unwrap());
    println!(
        "infinitely many non-smoothable: {}",
        certificate.infinitely_many_nonsmoothable
    );
    println!(
        "all nontrivial classes non-smoothable: {}",
        certificate.all_nontrivial_nonsmoothable
    );

    // Dropping the cap verification produces a certificate that records the
    // failed hypothesis instead of a verdict.
    let (trace, mut cap) = z_fixture();
    cap.cap_h1_vanishes = false;
    let weak = CertificateInput {
        c1_restriction: cap.basic_class_restriction.clone(),
        invariant_nonzero: true,
        cap,
        source: CertificateSource::Explicit,
        trace,
    };
    let partial = certify(&weak).unwrap();
    println!(
        "with unverified cap: verdicts {} / {}, reason: {}",
        partial.infinitely_many_nonsmoothable,
        partial.all_nontrivial_nonsmoothable,
        partial.failure_reason.unwrap().describe()
    );
}
