//! Rowmotion on a small hand-built poset.
//!
//! Run with `cargo run --example basics`.

use rowmotion::Poset;

fn main() {
    // Two minimal elements under one maximal one, plus a separate chain.
    let p = Poset::from_cover_relations(
        &["a", "b", "c", "x", "y"],
        &[("a", "c"), ("b", "c"), ("x", "y")],
    )
    .expect("acyclic covers");

    let all = p.enumerate_antichains();
    println!("{} elements, {} antichains", p.len(), all.len());

    let start = p.antichain_from_labels(&["a", "b"]).unwrap();
    let mut cur = start;
    loop {
        let next = p.rowmotion(&cur);
        println!(
            "{:?} -> {:?}",
            p.labels_of(cur.members()),
            p.labels_of(next.members())
        );
        assert_eq!(p.inverse_rowmotion(&next), cur);
        cur = next;
        if cur == start {
            break;
        }
    }

    for orbit in p.all_orbits() {
        println!(
            "orbit of size {:>2}, mean size {}, representative {:?}",
            orbit.size(),
            rowmotion::fraction_string(&orbit.mean_size()),
            p.labels_of(orbit.representative().members()),
        );
    }
    println!("order of rowmotion: {}", p.rowmotion_order());
}
