//! The versioned JSON interchange format used by the command-line tool.
//!
//! Every document carries `"schema": "torelli-kit/1"`, parses strictly, and
//! serializes deterministically, so reports can be diffed byte-for-byte.
//!
//! Run with `cargo run --example json_interchange`.

use torelli_kit::json::{CertificateDto, JsonError, TraceDto};
use torelli_kit::certificate::stein_certify;
use torelli_kit::families::xn_family;
use torelli_kit::presentation::LinkTrace;

fn main() {
    let (trace, front) = xn_family(1);

    let dto = TraceDto::try_from(&trace).unwrap();
    let text = serde_json::to_string_pretty(&dto).unwrap();
    println!("trace document:\n{text}\n");

    // Round trip is exact and byte-stable.
    let parsed: TraceDto = serde_json::from_str(&text).unwrap();
    let back = LinkTrace::try_from(parsed).unwrap();
    assert_eq!(back, trace);
    let again = serde_json::to_string_pretty(&TraceDto::try_from(&back).unwrap()).unwrap();
    assert_eq!(again, text);
    println!("round trip: byte-identical");

    // Unknown schema versions are rejected up front.
    let mut wrong = TraceDto::try_from(&trace).unwrap();
    wrong.schema = "torelli-kit/2".into();
    match LinkTrace::try_from(wrong) {
        Err(JsonError::Schema { got }) => println!("rejected schema: {got}"),
        other => panic!("expected a schema error, got {other:?}"),
    }

    // Certificates serialize the same way; this is what the command-line
    // `certify --family xn --n 1` prints.
    let certificate = stein_certify(&front).unwrap();
    let report = CertificateDto::new(&certificate).unwrap();
    println!("\ncertificate report:\n{}", serde_json::to_string_pretty(&report).unwrap());
}
