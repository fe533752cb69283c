//! Acceptance suite: one test per criterion, each printing a single
//! `PASS criterion N` / `FAIL criterion N` line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact integer arithmetic; the randomized criteria use
//! a fixed-seed generator so every run checks the same cases.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use torelli_kit::certificate::{
    dehn_twist_realizability, stein_certify, BoundaryProfile, RealizabilityVerdict,
};
use torelli_kit::families::{xn_family, z_fixture};
use torelli_kit::groupring::{pairwise_distinct, sw_family};
use torelli_kit::legendrian::{chern_class, distinguish_boundaries, DistinguishVerdict};
use torelli_kit::linalg::{kernel_basis, smith_normal_form, IntMatrix};
use torelli_kit::presentation::{boundary_homology, LinkTrace};
use torelli_kit::variation::{skew_from_variation, variation_from_skew, SkewForm, Variation};

fn criterion(number: u32, summary: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("PASS criterion {number}: {summary}"),
        Err(message) => {
            println!("FAIL criterion {number}: {summary} — {message}");
            panic!("criterion {number} failed: {message}");
        }
    }
}

fn check(condition: bool, message: impl Into<String>) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn criterion_1_stein_family_certificates() {
    criterion(
        1,
        "Stein family n = 1..10: homology, Chern class, Torelli rank, verdicts",
        (|| {
            for n in 1..=10i64 {
                let (trace, front) = xn_family(n);
                check(
                    trace.components() == 2,
                    format!("n = {n}: expected two handles"),
                )?;
                check(
                    trace.intersection_form().is_zero(),
                    format!("n = {n}: expected the zero intersection form"),
                )?;
                let boundary = boundary_homology(&trace).map_err(|e| e.to_string())?;
                check(
                    boundary.h1.free_rank == 2 && boundary.h1.torsion.is_empty(),
                    format!("n = {n}: expected H1(boundary) = Z^2, got {}", boundary.h1),
                )?;
                let c1 = chern_class(&front).map_err(|e| e.to_string())?;
                check(
                    c1 == vec![big(2 * n), big(0)],
                    format!("n = {n}: expected c1 = (2n, 0), got {c1:?}"),
                )?;
                let certificate = stein_certify(&front).map_err(|e| e.to_string())?;
                check(
                    certificate.torelli_rank == 1,
                    format!("n = {n}: expected Torelli rank 1"),
                )?;
                check(
                    certificate.d == Some(big(2 * n)),
                    format!("n = {n}: expected divisibility 2n, got {:?}", certificate.d),
                )?;
                check(
                    certificate.infinitely_many_nonsmoothable
                        && certificate.all_nontrivial_nonsmoothable,
                    format!("n = {n}: expected both verdicts to hold"),
                )?;
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_2_displacement_formula() {
    criterion(
        2,
        "displacement witnesses equal k·2n·e2 for k = -3..3, n = 1..10",
        (|| {
            for n in 1..=10i64 {
                let (_, front) = xn_family(n);
                let certificate = stein_certify(&front).map_err(|e| e.to_string())?;
                let expected: Vec<(i64, Vec<BigInt>)> = (-3..=3)
                    .map(|k| (k, vec![big(0), big(2 * n * k)]))
                    .collect();
                check(
                    certificate.displacement_witness == expected,
                    format!(
                        "n = {n}: witness list {:?} does not match the formula",
                        certificate.displacement_witness
                    ),
                )?;
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_3_boundary_distinction() {
    criterion(
        3,
        "all 15 pairs 1 <= r < m <= 6 are distinguished by genus bounds",
        (|| {
            let mut pairs = 0;
            for r in 1..=6i64 {
                for m in (r + 1)..=6 {
                    let report = distinguish_boundaries(r, m).map_err(|e| e.to_string())?;
                    let upper = 5 * 2i64.pow(r as u32) - 3;
                    let lower = 5 * 2i64.pow(m as u32) - 5;
                    check(
                        report.genus_upper == upper,
                        format!("({r}, {m}): upper bound {} != {upper}", report.genus_upper),
                    )?;
                    check(
                        report.genus_lower == lower,
                        format!("({r}, {m}): lower bound {} != {lower}", report.genus_lower),
                    )?;
                    check(
                        upper < lower && report.verdict == DistinguishVerdict::Distinct,
                        format!("({r}, {m}): expected a strict gap and a distinct verdict"),
                    )?;
                    pairs += 1;
                }
            }
            check(pairs == 15, format!("expected 15 pairs, saw {pairs}"))
        })(),
    );
}

#[test]
fn criterion_4_seiberg_witten_family() {
    criterion(
        4,
        "SW series: 12 basic classes, marker coefficient -(2n-1), distinct for n = 1..20",
        (|| {
            let family: Vec<_> = (1..=20).map(sw_family).collect();
            for (index, sw) in family.iter().enumerate() {
                let n = index as i64 + 1;
                check(
                    sw.basic_classes().len() == 12,
                    format!("n = {n}: expected 12 basic classes"),
                )?;
                check(
                    sw.coefficient(&[1, 1, 0]) == big(-(2 * n - 1)),
                    format!(
                        "n = {n}: marker coefficient {} != -(2n-1)",
                        sw.coefficient(&[1, 1, 0])
                    ),
                )?;
            }
            let report = pairwise_distinct(&family).map_err(|e| e.to_string())?;
            check(
                report.all_distinct,
                format!("collisions at {:?}", report.equal_pairs),
            )
        })(),
    );
}

/// Traces used by the randomized variation suite; every linking matrix has
/// at most five components.
fn suite_traces() -> Vec<LinkTrace> {
    let rows = |r: &[&[i64]]| {
        let rows: Vec<Vec<i64>> = r.iter().map(|x| x.to_vec()).collect();
        LinkTrace::from_linking(IntMatrix::from_i64_rows(&rows), None).unwrap()
    };
    vec![
        rows(&[&[0, 0], &[0, 0]]),
        rows(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
        rows(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
        ]),
        rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]),
        rows(&[
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
        ]),
        rows(&[
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, -2, 0, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0],
        ]),
    ]
}

fn random_skew(rng: &mut ChaCha8Rng, rank: usize, bound: i64) -> SkewForm {
    let mut m = IntMatrix::zero(rank, rank);
    for i in 0..rank {
        for j in (i + 1)..rank {
            let value = big(rng.gen_range(-bound..=bound));
            m.set(i, j, value.clone());
            m.set(j, i, -value);
        }
    }
    SkewForm::canonical(m).unwrap()
}

/// A pool of Poincaré variations over the trace: random Torelli ones plus,
/// when the form has a hyperbolic block, non-Torelli seed involutions
/// embedded on that block.
fn variation_pool(rng: &mut ChaCha8Rng, trace: &LinkTrace) -> Vec<Variation> {
    let n = trace.components();
    let boundary = boundary_homology(trace).unwrap();
    let b1 = boundary.b1();
    let mut pool = vec![Variation::identity(trace.clone())];
    for _ in 0..4 {
        let form = random_skew(rng, b1, 3);
        pool.push(variation_from_skew(&form, trace).unwrap());
    }
    // Find a hyperbolic block (consecutive components i, i+1 with framing 0
    // and linking 1) and embed the two seed variations there.
    let lambda = trace.intersection_form();
    for i in 0..n.saturating_sub(1) {
        let zero_diag = lambda.get(i, i) == &big(0) && lambda.get(i + 1, i + 1) == &big(0);
        let unit_link = lambda.get(i, i + 1) == &big(1);
        let isolated = (0..n)
            .filter(|&k| k != i && k != i + 1)
            .all(|k| lambda.get(i, k) == &big(0) && lambda.get(i + 1, k) == &big(0));
        if zero_diag && unit_link && isolated {
            for seed in [[[1, 1], [1, 1]], [[0, 2], [2, 0]]] {
                let mut d = IntMatrix::zero(n, n);
                for a in 0..2 {
                    for b in 0..2 {
                        d.set(i + a, i + b, big(seed[a][b]));
                    }
                }
                pool.push(Variation::new(trace.clone(), d).unwrap());
            }
            break;
        }
    }
    pool
}

#[test]
fn criterion_5_variation_group_suite() {
    criterion(
        5,
        "1200 random variation cases: group axioms, closure, form preservation, roundtrips",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7072657365);
            let mut cases = 0usize;
            for trace in suite_traces() {
                let lambda = trace.intersection_form().clone();
                let pool = variation_pool(&mut rng, &trace);
                let identity = Variation::identity(trace.clone());
                for _ in 0..200 {
                    cases += 1;
                    let pick = |rng: &mut ChaCha8Rng| {
                        let v = &pool[rng.gen_range(0..pool.len())];
                        if rng.gen_bool(0.5) {
                            v.inverse().unwrap()
                        } else {
                            v.clone()
                        }
                    };
                    let (w1, w2, w3) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));

                    // Closure and form preservation.
                    let c = w1.compose(&w2).map_err(|e| e.to_string())?;
                    check(c.is_poincare(), "composition left the Poincaré set")?;
                    let a = c.induced_automorphism().map_err(|e| e.to_string())?;
                    check(
                        a.transpose().mul(&lambda).mul(&a) == lambda,
                        "induced automorphism does not preserve the form",
                    )?;

                    // Associativity, identity, inverses.
                    let left = c.compose(&w3).map_err(|e| e.to_string())?;
                    let right = w1
                        .compose(&w2.compose(&w3).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    check(left == right, "composition is not associative")?;
                    check(
                        w1.compose(&identity).map_err(|e| e.to_string())? == w1
                            && identity.compose(&w1).map_err(|e| e.to_string())? == w1,
                        "identity is not neutral",
                    )?;
                    check(
                        w1.compose(&w1.inverse().unwrap()).map_err(|e| e.to_string())?
                            == identity,
                        "inverse fails",
                    )?;

                    // Torelli correspondence: exact roundtrips in both
                    // directions, and stabilization leaves the form alone.
                    if w1.is_torelli().map_err(|e| e.to_string())? {
                        let form = skew_from_variation(&w1).map_err(|e| e.to_string())?;
                        let back =
                            variation_from_skew(&form, &trace).map_err(|e| e.to_string())?;
                        check(back == w1, "variation -> skew -> variation is not exact")?;
                        let stabilized = w1.stabilize(1);
                        let stable_form =
                            skew_from_variation(&stabilized).map_err(|e| e.to_string())?;
                        check(
                            stable_form.canonical_matrix() == form.canonical_matrix(),
                            "stabilization changed the skew form",
                        )?;
                    }

                    // Skew -> variation -> skew from a fresh random form.
                    let b1 = boundary_homology(&trace).unwrap().b1();
                    let form = random_skew(&mut rng, b1, 4);
                    let v = variation_from_skew(&form, &trace).map_err(|e| e.to_string())?;
                    let back = skew_from_variation(&v).map_err(|e| e.to_string())?;
                    check(
                        back.canonical_matrix() == form.canonical_matrix(),
                        "skew -> variation -> skew is not exact",
                    )?;
                }
            }
            check(cases >= 1000, format!("only {cases} cases"))
        })(),
    );
}

#[test]
fn criterion_6_exact_linear_algebra() {
    criterion(
        6,
        "500 random Smith decompositions and 500 random boundary dualities",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6c69_6e61_6c67);
            for case in 0..500 {
                let rows = rng.gen_range(1..=6);
                let cols = rng.gen_range(1..=6);
                let entries: Vec<Vec<i64>> = (0..rows)
                    .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                    .collect();
                let m = IntMatrix::from_i64_rows(&entries);
                let d = smith_normal_form(&m);
                check(d.verify(), format!("case {case}: U·M·V != S or transforms fail"))?;
                let diag = d.diagonal();
                for i in 0..diag.len() {
                    check(
                        diag[i] >= big(0),
                        format!("case {case}: negative invariant factor"),
                    )?;
                    if i + 1 < diag.len() && diag[i] != big(0) {
                        check(
                            (&diag[i + 1] % &diag[i]) == big(0),
                            format!("case {case}: divisibility chain broken"),
                        )?;
                    }
                    if diag[i] == big(0) && i + 1 < diag.len() {
                        check(
                            diag[i + 1] == big(0),
                            format!("case {case}: zero before a nonzero factor"),
                        )?;
                    }
                }
                // Kernel: correct rank and saturated (no invariant factor
                // exceeds 1), so the quotient by the kernel is torsion-free.
                let k = kernel_basis(&m);
                check(
                    m.mul(&k).is_zero(),
                    format!("case {case}: kernel basis is not annihilated"),
                )?;
                check(
                    k.cols() == cols - d.rank(),
                    format!("case {case}: kernel rank mismatch"),
                )?;
                if k.cols() > 0 {
                    let factors = smith_normal_form(&k).invariant_factors();
                    check(
                        factors.iter().all(|f| f == &big(1)),
                        format!("case {case}: kernel basis is not saturated"),
                    )?;
                }
            }

            for case in 0..500 {
                let n = rng.gen_range(1..=5);
                let mut m = IntMatrix::zero(n, n);
                for i in 0..n {
                    for j in i..n {
                        let value = big(rng.gen_range(-5..=5));
                        m.set(i, j, value.clone());
                        m.set(j, i, value);
                    }
                }
                let trace = LinkTrace::from_linking(m, None).map_err(|e| e.to_string())?;
                let boundary = boundary_homology(&trace).map_err(|e| e.to_string())?;
                let h = boundary.h2_boundary.cols();
                check(
                    boundary.duality.rows() == h && boundary.duality.cols() == h,
                    format!("case {case}: duality pairing has the wrong shape"),
                )?;
                if h > 0 {
                    check(
                        boundary.duality.is_unimodular(),
                        format!("case {case}: duality pairing is not unimodular"),
                    )?;
                }
                // The pairing intertwines the kernel inclusion and the free
                // projection: Kᵀ = P·π.
                let product = boundary.duality.mul(&boundary.free_projection());
                check(
                    product == boundary.h2_boundary.transpose(),
                    format!("case {case}: duality does not factor the pairing"),
                )?;
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_7_dehn_twist_truth_table() {
    criterion(
        7,
        "the 12 consistent prime profiles with b1 <= 4 classify as 7 realizable / 5 not",
        (|| {
            let mut consistent = 0;
            let mut realizable = 0;
            let mut not_realizable = 0;
            for b1 in 0..=4i64 {
                for is_t3 in [false, true] {
                    for seifert_over_t2 in [false, true] {
                        let profile = BoundaryProfile {
                            b1,
                            is_prime: true,
                            is_t3,
                            seifert_over_t2,
                        };
                        match dehn_twist_realizability(&profile) {
                            Ok(RealizabilityVerdict::Realizable) => {
                                consistent += 1;
                                realizable += 1;
                            }
                            Ok(RealizabilityVerdict::NotRealizable) => {
                                consistent += 1;
                                not_realizable += 1;
                            }
                            Ok(RealizabilityVerdict::OutOfScope) => {
                                return Err(format!(
                                    "prime profile {profile:?} classified out of scope"
                                ));
                            }
                            Err(_) => {} // inconsistent combination, skipped
                        }
                    }
                }
            }
            check(
                consistent == 12,
                format!("expected 12 consistent profiles, saw {consistent}"),
            )?;
            check(
                realizable == 7 && not_realizable == 5,
                format!("expected 7 realizable / 5 not, saw {realizable} / {not_realizable}"),
            )
        })(),
    );
}

#[test]
fn criterion_8_knot_surgery_fixture() {
    criterion(
        8,
        "knot-surgery fixture: form, boundary homology, restriction, verdicts",
        (|| {
            let (trace, cap) = z_fixture();
            let expected = IntMatrix::from_i64_rows(&[
                vec![0, 1, 0, 0],
                vec![1, -2, 0, 0],
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
            ]);
            check(
                trace.intersection_form() == &expected,
                "fixture linking matrix changed",
            )?;
            let boundary = boundary_homology(&trace).map_err(|e| e.to_string())?;
            check(
                boundary.h1.free_rank == 2 && boundary.h1.torsion.is_empty(),
                format!("expected H1(boundary) = Z^2, got {}", boundary.h1),
            )?;
            let restricted = boundary
                .free_projection()
                .mul_vec(&cap.basic_class_restriction);
            check(
                restricted == vec![big(-2), big(-2)],
                format!("expected restriction (-2, -2), got {restricted:?}"),
            )?;

            let input = torelli_kit::certificate::CertificateInput {
                c1_restriction: cap.basic_class_restriction.clone(),
                invariant_nonzero: true,
                cap,
                source: torelli_kit::certificate::CertificateSource::Explicit,
                trace,
            };
            let certificate =
                torelli_kit::certificate::certify(&input).map_err(|e| e.to_string())?;
            check(certificate.d == Some(big(2)), "expected divisibility 2")?;
            let v1 = certificate.v1.clone().ok_or("missing v1")?;
            check(
                v1.iter().map(|x| x * big(2)).collect::<Vec<_>>() == restricted,
                format!("expected 2·v1 to equal the restriction, got v1 = {v1:?}"),
            )?;
            check(
                certificate.infinitely_many_nonsmoothable
                    && certificate.all_nontrivial_nonsmoothable,
                "expected both verdicts to hold",
            )
        })(),
    );
}
