//! Non-smoothability certificates for the Stein family.
//!
//! For each `n` the pipeline starts from a Legendrian front, computes the
//! trace and its boundary, extracts the divisibility of the Chern class
//! restriction, builds a Torelli variation from a wedge form, and certifies
//! that every mapping class it displaces cannot be realized smoothly.
//!
//! Run with `cargo run --example certify_stein_family`.

use torelli_kit::certificate::stein_certify;
use torelli_kit::legendrian::xn_front;

fn main() {
    for n in 1..=5 {
        let front = xn_front(n);
        let certificate = stein_certify(&front).unwrap();
        println!("n = {n}:");
        println!(
            "  b1(boundary) = {}, Torelli rank = {}",
            certificate.b1_boundary, certificate.torelli_rank
        );
        println!(
            "  divisibility d = {}, primitive class v1 = {:?}",
            certificate.d.as_ref().unwrap(),
            certificate.v1.as_ref().unwrap()
        );
        println!(
            "  displacement witnesses (k, class): {:?}",
            certificate.displacement_witness
        );
        println!(
            "  infinitely many non-smoothable: {}",
            certificate.infinitely_many_nonsmoothable
        );
        println!(
            "  all nontrivial classes non-smoothable: {}",
            certificate.all_nontrivial_nonsmoothable
        );
    }
}
