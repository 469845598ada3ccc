//! Orbit structure of every root-poset variant of one root system.
//!
//! `cargo run --example root_orbits -- E6`

use rowmotion::fraction_string;
use rowmotion::root_system::{PosetVariant, RootSystem};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "F4".to_string());
    let sys = RootSystem::from_name(&name).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    println!(
        "{sys}: {} positive roots, h = {}, exponents {:?}, w0 = -1: {}",
        sys.positive_roots().len(),
        sys.coxeter_number(),
        sys.exponents(),
        sys.w0_is_minus_one()
    );

    let mut variants = vec![PosetVariant::Full, PosetVariant::NoSimple];
    if sys.has_two_root_lengths() {
        variants.push(PosetVariant::Short);
        variants.push(PosetVariant::ShortNoSimple);
    }
    for v in variants {
        let rp = sys.root_poset(&v).unwrap();
        let orbits = rp.poset().all_orbits();
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.size()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let means: std::collections::BTreeSet<String> = orbits
            .iter()
            .map(|o| fraction_string(&o.mean_size()))
            .collect();
        let expected = sys
            .expected_antichain_count(&v)
            .map(|c| c.to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "{:<18} #AN={:<5} formula={:<5} ord={:<4} sizes={:?} means={:?}",
            rp.name(),
            sizes.iter().sum::<usize>(),
            expected,
            rp.poset().rowmotion_order(),
            sizes,
            means
        );
    }
}
