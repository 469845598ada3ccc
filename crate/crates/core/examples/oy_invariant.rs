//! Type A: two-row arrays, the OY-invariant and the duality `Γ ↦ Γ*`.

use rowmotion::type_a::TypeA;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let a = TypeA::new(n).unwrap();
    let p = a.poset();

    let gamma = a
        .antichain(&[(1, 1), (3, 3)])
        .unwrap_or_else(|_| a.simple_roots());
    let array = a.to_array(&gamma).unwrap();
    println!(
        "Γ = {}  top {:?} bottom {:?}",
        a.format(&gamma).unwrap(),
        array.top(),
        array.bottom()
    );
    println!(
        "Y(Γ) = {} = {}",
        a.oy_ideal_form(&gamma).unwrap(),
        array.oy()
    );

    let orbit = p.orbit_of(&gamma);
    for g in orbit.antichains() {
        let star = a.star(g).unwrap();
        println!(
            "  {:<16} Y={}   Γ* = {:<16} Y={}",
            a.format(g).unwrap(),
            a.oy_ideal_form(g).unwrap(),
            a.format(&star).unwrap(),
            a.oy_ideal_form(&star).unwrap()
        );
    }

    // Y partitions the antichains into unions of orbits.
    let mut histogram = std::collections::BTreeMap::new();
    for g in p.enumerate_antichains() {
        *histogram.entry(a.oy_ideal_form(&g).unwrap()).or_insert(0) += 1;
    }
    println!("A{n}: antichains per value of Y: {histogram:?}");
}
