//! The poset engine against brute force on small random posets.
//!
//! The oracle side works on plain `u32` masks and an explicit order matrix,
//! sharing no code with the library.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use proptest::prelude::*;
use rowmotion::poset::{parse_poset, write_poset};
use rowmotion::type_a::TypeA;
use rowmotion::{Antichain, ElementSet, Poset};

/// Reflexive-transitive order matrix of a random DAG on `0..n` whose edges
/// all go from a smaller index to a larger one.
#[derive(Debug, Clone)]
struct Oracle {
    n: usize,
    leq: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl Oracle {
    fn new(n: usize, coin: &[bool]) -> Oracle {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if coin[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &edges {
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Oracle { n, leq, edges }
    }

    fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    fn is_antichain(&self, m: u32) -> bool {
        (0..self.n)
            .all(|x| m >> x & 1 == 0 || (0..self.n).all(|y| m >> y & 1 == 0 || !self.lt(x, y)))
    }

    fn antichains(&self) -> BTreeSet<u32> {
        (0..1u32 << self.n)
            .filter(|&m| self.is_antichain(m))
            .collect()
    }

    fn up(&self, m: u32) -> u32 {
        (0..self.n)
            .filter(|&y| (0..self.n).any(|g| m >> g & 1 == 1 && self.leq[g][y]))
            .fold(0, |acc, y| acc | 1 << y)
    }

    fn down(&self, m: u32) -> u32 {
        (0..self.n)
            .filter(|&y| (0..self.n).any(|g| m >> g & 1 == 1 && self.leq[y][g]))
            .fold(0, |acc, y| acc | 1 << y)
    }

    fn maximal(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&x| s >> x & 1 == 1 && (0..self.n).all(|y| s >> y & 1 == 0 || !self.lt(x, y)))
            .fold(0, |acc, x| acc | 1 << x)
    }

    fn minimal(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&x| s >> x & 1 == 1 && (0..self.n).all(|y| s >> y & 1 == 0 || !self.lt(y, x)))
            .fold(0, |acc, x| acc | 1 << x)
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn rowmotion(&self, m: u32) -> u32 {
        self.maximal(self.full() & !self.up(m))
    }

    fn inverse(&self, m: u32) -> u32 {
        self.minimal(self.full() & !self.down(m))
    }

    fn covers(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) && !(0..self.n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.insert((x, y));
                }
            }
        }
        out
    }

    fn poset(&self) -> Poset {
        let labels = (0..self.n).map(|i| format!("e{i}")).collect();
        Poset::from_covers(labels, &self.edges).unwrap()
    }
}

fn mask(a: &Antichain) -> u32 {
    a.iter().fold(0, |acc, x| acc | 1 << x)
}

fn antichain(p: &Poset, m: u32) -> Antichain {
    let mut s = ElementSet::new();
    for x in 0..32 {
        if m >> x & 1 == 1 {
            s.insert(x);
        }
    }
    p.antichain(s).unwrap()
}

fn oracle() -> impl Strategy<Value = Oracle> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(prop::bool::weighted(0.3), pairs),
        )
            .prop_map(|(n, coin)| Oracle::new(n, &coin))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_and_covers_match(o in oracle()) {
        let p = o.poset();
        for x in 0..o.n {
            for y in 0..o.n {
                prop_assert_eq!(p.leq(x, y), o.leq[x][y]);
            }
        }
        let covers: BTreeSet<(usize, usize)> = p.covers().into_iter().collect();
        prop_assert_eq!(covers, o.covers());
    }

    #[test]
    fn antichains_match_subset_search(o in oracle()) {
        let p = o.poset();
        let listed: Vec<u32> = p.enumerate_antichains().iter().map(mask).collect();
        let distinct: BTreeSet<u32> = listed.iter().copied().collect();
        prop_assert_eq!(distinct.len(), listed.len());
        prop_assert_eq!(distinct, o.antichains());
    }

    #[test]
    fn rowmotion_and_inverse_match(o in oracle()) {
        let p = o.poset();
        let mut images = BTreeSet::new();
        for m in o.antichains() {
            let a = antichain(&p, m);
            let r = p.rowmotion(&a);
            prop_assert_eq!(mask(&r), o.rowmotion(m));
            prop_assert_eq!(mask(&p.inverse_rowmotion(&a)), o.inverse(m));
            prop_assert_eq!(p.inverse_rowmotion(&r), a);
            images.insert(mask(&r));
        }
        prop_assert_eq!(images, o.antichains());
    }

    #[test]
    fn orbits_and_order_match(o in oracle()) {
        let p = o.poset();
        let mut left = o.antichains();
        let mut lcm = 1u64;
        let mut lengths = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut len = 0;
            let mut cur = start;
            loop {
                left.remove(&cur);
                len += 1;
                cur = o.rowmotion(cur);
                if cur == start {
                    break;
                }
            }
            lcm = lcm.lcm(&len);
            lengths.push(len as usize);
        }
        lengths.sort_unstable();
        let mut sizes: Vec<usize> = p.all_orbits().iter().map(|x| x.size()).collect();
        sizes.sort_unstable();
        prop_assert_eq!(sizes, lengths);
        prop_assert_eq!(p.rowmotion_order(), lcm);
    }

    #[test]
    fn edge_count_matches_ideal_lattice(o in oracle()) {
        let p = o.poset();
        let ideals: BTreeSet<u32> = o.antichains().iter().map(|&m| o.up(m)).collect();
        let mut covers = 0u64;
        for &i in &ideals {
            for x in 0..o.n {
                if i >> x & 1 == 0 && ideals.contains(&(i | 1 << x)) {
                    covers += 1;
                }
            }
        }
        prop_assert_eq!(p.antichain_lattice_cover_count(), covers);
        prop_assert_eq!(p.antichain_lattice_edge_count(), covers);
    }

    #[test]
    fn removal_index_matches(o in oracle()) {
        let p = o.poset();
        for m in o.antichains() {
            let a = antichain(&p, m);
            for g in a.iter() {
                let rest = o.up(m) & !(1 << g);
                let expected = o.minimal(rest).count_ones() as i64 - m.count_ones() as i64 + 1;
                prop_assert_eq!(p.removal_index(&a, g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn relabelled_copies_are_isomorphic(o in oracle(), seed in any::<u64>()) {
        let p = o.poset();
        let mut perm: Vec<usize> = (0..o.n).collect();
        let mut s = seed;
        for i in (1..o.n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<(usize, usize)> = o.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let labels = (0..o.n).map(|i| format!("f{i}")).collect();
        let q = Poset::from_covers(labels, &edges).unwrap();
        let f = p.isomorphism(&q).unwrap().expect("relabelled copy");
        for x in 0..o.n {
            for y in 0..o.n {
                prop_assert_eq!(p.leq(x, y), q.leq(f[x], f[y]));
            }
        }
        let round = parse_poset(&write_poset(&p)).unwrap();
        prop_assert!(p.isomorphism(&round).unwrap().is_some());
    }

    #[test]
    fn standard_orbit_is_rowmotion_orbit_of_empty(o in oracle()) {
        let p = o.poset();
        if let Ok(std) = p.standard_orbit() {
            prop_assert_eq!(std.antichains()[0], p.empty_antichain());
            prop_assert_eq!(std.size(), p.orbit_of(&p.empty_antichain()).size());
        }
    }
}

#[test]
fn type_a_order_is_interval_containment() {
    for n in 1..=6 {
        let a = TypeA::new(n).unwrap();
        let p = a.poset();
        let index: HashMap<(usize, usize), usize> =
            (0..p.len()).map(|x| (a.interval(x), x)).collect();
        assert_eq!(index.len(), n * (n + 1) / 2);
        for (&(i, j), &x) in &index {
            assert_eq!(a.element(i, j), x);
            for (&(k, l), &y) in &index {
                assert_eq!(
                    p.leq(x, y),
                    k <= i && j <= l,
                    "A{n}: ({i},{j}) vs ({k},{l})"
                );
            }
        }
    }
}

#[test]
fn type_a_oy_is_removal_index_sum() {
    for n in 1..=6 {
        let a = TypeA::new(n).unwrap();
        let p = a.poset();
        for g in p.enumerate_antichains() {
            let direct: i64 = g.iter().map(|x| p.removal_index(&g, x).unwrap()).sum();
            assert_eq!(a.oy_ideal_form(&g).unwrap(), direct);
            assert_eq!(a.oy_difference_form(&g).unwrap(), direct);
        }
    }
}
