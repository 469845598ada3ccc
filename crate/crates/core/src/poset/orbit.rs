use std::collections::HashMap;

use num_integer::Integer;

use super::{Antichain, Poset, PosetError};
use crate::bitset::ElementSet;
use crate::Rational;

/// A rowmotion orbit `[Γ, 𝔛(Γ), 𝔛²(Γ), …]`; rowmotion of the last entry
/// is the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    antichains: Vec<Antichain>,
}

impl Orbit {
    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn size(&self) -> usize {
        self.antichains.len()
    }

    /// Mean antichain cardinality along the orbit.
    pub fn mean_size(&self) -> Rational {
        let total: usize = self.antichains.iter().map(Antichain::len).sum();
        Rational::new(total as i64, self.size() as i64)
    }

    /// The canonically smallest antichain in the orbit.
    pub fn representative(&self) -> &Antichain {
        self.antichains.iter().min().expect("orbits are non-empty")
    }

    pub fn contains(&self, a: &Antichain) -> bool {
        self.antichains.contains(a)
    }
}

/// Rowmotion tabulated as a permutation of the enumerated antichains.
#[derive(Debug, Clone)]
pub struct RowmotionTable {
    antichains: Vec<Antichain>,
    index: HashMap<ElementSet, usize>,
    next: Vec<usize>,
}

impl RowmotionTable {
    pub fn new(poset: &Poset) -> Self {
        let antichains = poset.enumerate_antichains();
        let index: HashMap<ElementSet, usize> = antichains
            .iter()
            .enumerate()
            .map(|(i, a)| (*a.members(), i))
            .collect();
        let next = antichains
            .iter()
            .map(|a| index[poset.rowmotion(a).members()])
            .collect();
        RowmotionTable {
            antichains,
            index,
            next,
        }
    }

    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }

    pub fn index_of(&self, a: &Antichain) -> Option<usize> {
        self.index.get(a.members()).copied()
    }

    /// Image of each antichain index under rowmotion.
    pub fn images(&self) -> &[usize] {
        &self.next
    }

    /// The permutation `𝔛^k` for `k ≥ 0`, by repeated squaring.
    pub fn power(&self, mut k: u64) -> Vec<usize> {
        let mut result: Vec<usize> = (0..self.len()).collect();
        let mut base = self.next.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.iter().map(|&i| base[i]).collect();
            }
            base = base.iter().map(|&i| base[i]).collect();
            k >>= 1;
        }
        result
    }

    /// Orbits sorted by `(size, canonical representative)`, each started at
    /// its representative.
    pub fn orbits(&self) -> Vec<Orbit> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        // Antichains are in canonical order, so the first unseen index of a
        // cycle is its representative.
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(self.antichains[i]);
                i = self.next[i];
            }
            orbits.push(Orbit { antichains: cycle });
        }
        orbits.sort_by(|a, b| (a.size(), a.representative()).cmp(&(b.size(), b.representative())));
        orbits
    }
}

impl Poset {
    pub fn rowmotion_table(&self) -> RowmotionTable {
        RowmotionTable::new(self)
    }

    /// The orbit of `Γ`, starting at `Γ`.
    pub fn orbit_of(&self, gamma: &Antichain) -> Orbit {
        let mut antichains = vec![*gamma];
        let mut cur = self.rowmotion(gamma);
        while cur != *gamma {
            antichains.push(cur);
            cur = self.rowmotion(&cur);
        }
        Orbit { antichains }
    }

    /// Every orbit, sorted by `(size, canonical representative)`.
    pub fn all_orbits(&self) -> Vec<Orbit> {
        self.rowmotion_table().orbits()
    }

    /// `ord(𝔛)`: least common multiple of the orbit sizes.
    pub fn rowmotion_order(&self) -> u64 {
        orbit_lcm(&self.all_orbits())
    }

    /// The orbit `∅ → P(r) → … → P(1) → ∅` through the rank levels, when the
    /// poset is graded with bottom level = minimal elements and top level =
    /// maximal elements. Each step is checked against rowmotion.
    pub fn standard_orbit(&self) -> Result<Orbit, PosetError> {
        let grading = self
            .grading()
            .ok_or_else(|| PosetError::HypothesesNotMet("poset is not graded".into()))?;
        if !grading.bottom_is_minimal() {
            return Err(PosetError::HypothesesNotMet(
                "lowest rank level differs from the minimal elements".into(),
            ));
        }
        if !grading.top_is_maximal() {
            return Err(PosetError::HypothesesNotMet(
                "highest rank level differs from the maximal elements".into(),
            ));
        }
        let mut antichains = vec![self.empty_antichain()];
        for level in (1..=grading.level()).rev() {
            antichains.push(self.antichain(grading.level_set(level))?);
        }
        for (i, a) in antichains.iter().enumerate() {
            let expected = &antichains[(i + 1) % antichains.len()];
            assert_eq!(
                &self.rowmotion(a),
                expected,
                "rank levels do not form a rowmotion orbit"
            );
        }
        Ok(Orbit { antichains })
    }
}

pub(crate) fn orbit_lcm(orbits: &[Orbit]) -> u64 {
    orbits
        .iter()
        .fold(1u64, |acc, o| acc.lcm(&(o.size() as u64)))
}
