//! Prints the F4 orbits in the reversed simple-root numbering and replays
//! the bundled orbit tables.

use rowmotion::harness::{check_f4_tables, f4_tables};
use rowmotion::root_system::{CartanType, Convention, PosetVariant, RootSystem};

fn main() {
    let f4 = RootSystem::build(CartanType::F, 4).unwrap();
    let short = f4.root_poset(&PosetVariant::Short).unwrap();
    let p = short.poset();
    for orbit in p.all_orbits() {
        let chain: Vec<String> = orbit
            .antichains()
            .iter()
            .map(|a| {
                format!(
                    "{{{}}}",
                    short
                        .print_antichain(a, Convention::PaperF4)
                        .unwrap()
                        .join(",")
                )
            })
            .collect();
        println!("{:>2}: {}", orbit.size(), chain.join(" -> "));
    }

    println!(
        "{} printed no-simple chains",
        f4_tables::NO_SIMPLE_CHAINS.len()
    );
    let report = check_f4_tables();
    println!("{}", report.summary_line());
    println!("arrows checked: {}", report.evidence["arrows_checked"]);
}
