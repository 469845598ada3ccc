//! Loads a poset file, reports its grading and orbits, and compares it with
//! a root poset.
//!
//! `cargo run --example custom_poset -- crates/core/data/p2.poset`

use rowmotion::fraction_string;
use rowmotion::poset::parse_poset;
use rowmotion::root_system::{PosetVariant, RootSystem};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            std::process::exit(2);
        }),
        None => rowmotion::harness::P2_TEXT.to_string(),
    };
    let p = parse_poset(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(3);
    });

    match p.grading() {
        Some(g) => println!(
            "graded of level {}; lowest level = minimal elements: {}, highest level = maximal elements: {}",
            g.level(),
            g.bottom_is_minimal(),
            g.top_is_maximal()
        ),
        None => println!("not graded"),
    }
    match p.standard_orbit() {
        Ok(o) => println!("standard orbit of size {}", o.size()),
        Err(e) => println!("no standard orbit: {e}"),
    }
    for o in p.all_orbits() {
        println!(
            "orbit {:>3}  mean {}",
            o.size(),
            fraction_string(&o.mean_size())
        );
    }
    println!("order {}", p.rowmotion_order());

    let a3 = RootSystem::from_name("A3")
        .unwrap()
        .root_poset(&PosetVariant::Full)
        .unwrap();
    let iso = p.isomorphism(a3.poset()).unwrap();
    println!("isomorphic to A3/full: {}", iso.is_some());
}
