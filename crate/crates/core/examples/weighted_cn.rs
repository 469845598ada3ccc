//! Removal-index sums on `C_n` along each rowmotion orbit, with weight 2 on
//! short roots and without weights.

use rowmotion::harness::check_weighted_oy_cn;
use rowmotion::root_system::{CartanType, PosetVariant, RootSystem};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let sys = RootSystem::build(CartanType::C, n).unwrap();
    let rp = sys.root_poset(&PosetVariant::Full).unwrap();
    let p = rp.poset();
    for o in p.all_orbits() {
        let weighted: Vec<i64> = o
            .antichains()
            .iter()
            .map(|g| p.weighted_oy(g, |x| if rp.is_short(x) { 2 } else { 1 }))
            .collect();
        let plain: Vec<i64> = o
            .antichains()
            .iter()
            .map(|g| p.weighted_oy(g, |_| 1))
            .collect();
        println!("size {:>2}: weighted {:?}", o.size(), weighted);
        println!("         plain    {:?}", plain);
    }
    let report = check_weighted_oy_cn(n);
    println!("{}", report.to_json());
}
