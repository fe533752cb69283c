//! Distinguishing Stein-family boundaries by adjunction genus bounds.
//!
//! Member `r` of the doubling family bounds a surface of genus at most
//! `max(2·n_r + 3, 7)` with `n_r = 5·2^(r-1) - 3`, while member `m > r`
//! forces genus at least `1 + 2·n_m` on any such surface. When the upper
//! bound falls below the lower bound the two boundaries cannot match.
//!
//! Run with `cargo run --example distinguish_boundaries`.

use torelli_kit::legendrian::{distinguish_boundaries, DistinguishVerdict};

fn main() {
    println!("pair      n_r    n_m   upper   lower   verdict");
    for r in 1..=6 {
        for m in (r + 1)..=6 {
            let report = distinguish_boundaries(r, m).unwrap();
            let verdict = match report.verdict {
                DistinguishVerdict::Distinct => "distinct",
                DistinguishVerdict::Inconclusive => "inconclusive",
            };
            println!(
                "({r}, {m})  {:>5}  {:>5}  {:>6}  {:>6}   {verdict}",
                report.n_r, report.n_m, report.genus_upper, report.genus_lower
            );
        }
    }
}
