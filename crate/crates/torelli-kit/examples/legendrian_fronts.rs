//! Legendrian front diagrams: invariants, traces, and the text format.
//!
//! Fronts are encoded as event words read left to right: `L i` opens a left
//! cusp at strand position `i`, `R i` closes a right cusp, and `X i` crosses
//! strands `i` and `i+1`.
//!
//! Run with `cargo run --example legendrian_fronts`.

use torelli_kit::legendrian::{
    chern_class, classical_invariants, parse_front, serialize_front, stein_trace, xn_front,
    FrontDiagram, FrontEvent, Orientation,
};

fn main() {
    // A right-handed trefoil with maximal Thurston-Bennequin invariant.
    use FrontEvent::{Cross, Left, Right};
    let trefoil = FrontDiagram::new(
        vec![vec![
            Left(0),
            Left(2),
            Cross(1),
            Cross(1),
            Cross(1),
            Right(0),
            Right(0),
        ]],
        vec![Orientation::Plus],
    )
    .unwrap();
    let inv = classical_invariants(&trefoil, 0).unwrap();
    println!("right trefoil: tb = {}, rot = {}, crossings = {}", inv.tb, inv.rot, inv.crossings);

    // The same data flows into a Stein trace: framings are tb - 1.
    let trace = stein_trace(&trefoil).unwrap();
    println!("stein framing: {:?}", trace.framings());

    // The text format round-trips exactly.
    let text = serialize_front(&trefoil);
    println!("--- text form ---\n{text}-----------------");
    assert_eq!(parse_front(&text).unwrap(), trefoil);

    // The two-component family member with n = 2: a split front whose first
    // component has rotation number 2n.
    let front = xn_front(2);
    for index in 0..front.component_count() {
        let inv = classical_invariants(&front, index).unwrap();
        println!(
            "family n=2, component {}: tb = {}, rot = {}, cusps L/R = {}/{}",
            index + 1,
            inv.tb,
            inv.rot,
            inv.left_cusps,
            inv.right_cusps
        );
    }
    let c1 = chern_class(&front).unwrap();
    println!("family n=2: c1 = {c1:?}");

    // Reversing a component's orientation negates its rotation number.
    let reversed = front.reverse_component(0).unwrap();
    let inv = classical_invariants(&reversed, 0).unwrap();
    println!("after reversing component 1: rot = {}", inv.rot);
}
