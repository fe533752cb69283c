//! Realizability of boundary Dehn twists, classified by boundary profile.
//!
//! Run with `cargo run --example dehn_twist_classifier`.

use torelli_kit::certificate::{dehn_twist_realizability, BoundaryProfile, RealizabilityVerdict};

fn main() {
    println!("b1  prime  t3     seifert/T2  verdict");
    for b1 in 0..=4i64 {
        for is_prime in [false, true] {
            for is_t3 in [false, true] {
                for seifert_over_t2 in [false, true] {
                    let profile = BoundaryProfile {
                        b1,
                        is_prime,
                        is_t3,
                        seifert_over_t2,
                    };
                    match dehn_twist_realizability(&profile) {
                        Ok(verdict) => {
                            let verdict = match verdict {
                                RealizabilityVerdict::Realizable => "realizable",
                                RealizabilityVerdict::NotRealizable => "not realizable",
                                RealizabilityVerdict::OutOfScope => "out of scope",
                            };
                            println!(
                                "{b1:<3} {is_prime:<6} {is_t3:<6} {seifert_over_t2:<11} {verdict}"
                            );
                        }
                        Err(_) => {
                            // Inconsistent profiles (e.g. a 3-torus flag with
                            // the wrong Betti number) are rejected, not
                            // classified.
                        }
                    }
                }
            }
        }
    }
}
