//! Antichain counts from enumeration next to the product formulas.

use rowmotion::harness::default_matrix;
use rowmotion::root_system::{PosetVariant, RootSystem};

fn main() {
    println!(
        "{:<5} {:>8} {:>10} {:>8}",
        "type", "full", "no-simple", "short"
    );
    for (ty, n) in default_matrix(false) {
        let sys = RootSystem::build(ty, n).unwrap();
        let cell = |v: PosetVariant| -> String {
            match sys.root_poset(&v) {
                Ok(rp) => {
                    let count = rp.poset().enumerate_antichains().len() as u64;
                    let formula = sys.expected_antichain_count(&v).ok();
                    let mark = if formula == Some(count) { "" } else { "!" };
                    format!("{count}{mark}")
                }
                Err(_) => "-".into(),
            }
        };
        println!(
            "{:<5} {:>8} {:>10} {:>8}",
            sys.to_string(),
            cell(PosetVariant::Full),
            cell(PosetVariant::NoSimple),
            cell(PosetVariant::Short)
        );
    }
}
