use std::collections::VecDeque;

use super::Poset;
use crate::bitset::ElementSet;

/// A rank function `d: P → {1..r}` raising rank by one along every cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    level: usize,
    rank: Vec<usize>,
    bottom_is_minimal: bool,
    top_is_maximal: bool,
}

impl Grading {
    /// The level `r`.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// `d⁻¹(i)`.
    pub fn level_set(&self, i: usize) -> ElementSet {
        self.rank
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == i)
            .map(|(x, _)| x)
            .collect()
    }

    /// Whether `d⁻¹(1)` is exactly the set of minimal elements.
    pub fn bottom_is_minimal(&self) -> bool {
        self.bottom_is_minimal
    }

    /// Whether `d⁻¹(r)` is exactly the set of maximal elements.
    pub fn top_is_maximal(&self) -> bool {
        self.top_is_maximal
    }
}

impl Poset {
    /// The rank function, if every cover raises rank by exactly one.
    ///
    /// Each connected component of the Hasse diagram is normalized so its
    /// lowest rank is 1. Returns `None` for the empty poset.
    pub fn grading(&self) -> Option<Grading> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        let mut rank: Vec<Option<i64>> = vec![None; n];
        for root in 0..n {
            if rank[root].is_some() {
                continue;
            }
            rank[root] = Some(0);
            let mut component = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let rx = rank[x].unwrap();
                let steps = self.upper_covers(x).iter().map(|&y| (y, rx + 1));
                let steps = steps.chain(self.lower_covers(x).iter().map(|&y| (y, rx - 1)));
                for (y, want) in steps {
                    match rank[y] {
                        None => {
                            rank[y] = Some(want);
                            component.push(y);
                            queue.push_back(y);
                        }
                        Some(have) if have != want => return None,
                        Some(_) => {}
                    }
                }
            }
            let low = component.iter().map(|&x| rank[x].unwrap()).min().unwrap();
            for &x in &component {
                rank[x] = Some(rank[x].unwrap() - low + 1);
            }
        }
        let rank: Vec<usize> = rank.into_iter().map(|r| r.unwrap() as usize).collect();
        let level = *rank.iter().max().unwrap();
        let mut grading = Grading {
            level,
            rank,
            bottom_is_minimal: false,
            top_is_maximal: false,
        };
        let all = self.elements();
        grading.bottom_is_minimal = grading.level_set(1) == self.minimal_elements(&all);
        grading.top_is_maximal = grading.level_set(level) == self.maximal_elements(&all);
        Some(grading)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incomparable_pair_is_level_one() {
        let p = Poset::from_cover_relations::<&str>(&["a", "b"], &[]).unwrap();
        let g = p.grading().unwrap();
        assert_eq!(g.level(), 1);
        assert!(g.bottom_is_minimal() && g.top_is_maximal());
    }

    #[test]
    fn skewed_diamond_is_not_graded() {
        // a < b < c < d and a < d directly via e: a < e < d gives lengths 3 and 2.
        let p = Poset::from_cover_relations(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "e"), ("e", "d")],
        )
        .unwrap();
        assert!(p.grading().is_none());
    }

    #[test]
    fn graded_but_top_level_not_all_maximal() {
        // x sits at rank 2 but is maximal.
        let p = Poset::from_cover_relations(
            &["a", "b", "x", "y", "t"],
            &[("a", "x"), ("b", "y"), ("y", "t")],
        )
        .unwrap();
        let g = p.grading().unwrap();
        assert_eq!(g.level(), 3);
        assert!(g.bottom_is_minimal());
        assert!(!g.top_is_maximal());
        assert!(p.standard_orbit().is_err());
    }
}
