//! Finite posets over indexed elements, their antichains, and the rowmotion
//! operator `Γ ↦ (P ∖ I(Γ))_max`.
//!
//! A [`Poset`] stores, for every element, its strict up-set and down-set as
//! [`ElementSet`]s, so order queries are a single bit test and ideal
//! closures are unions of precomputed masks. Posets are immutable after
//! construction.

mod grading;
mod iso;
mod orbit;
mod text;

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::bitset::{ElementSet, CAPACITY};

pub use grading::Grading;
pub use iso::DEFAULT_ISOMORPHISM_LIMIT;
pub use orbit::{Orbit, RowmotionTable};
pub use text::{parse_poset, write_poset, PosetTextError};

/// Environment variable overriding the element-count guard.
pub const MAX_ELEMENTS_ENV: &str = "ROWMOTION_MAX_ELEMENTS";

/// Element-count guard used when [`MAX_ELEMENTS_ENV`] is unset.
pub const DEFAULT_MAX_ELEMENTS: usize = 130;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("cover relations contain a directed cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("poset has {count} elements, limit is {limit}")]
    TooManyElements { count: usize, limit: usize },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("`{0}` and `{1}` are comparable, so the set is not an antichain")]
    NotAnAntichain(String, String),
    #[error("element `{0}` is not a member of the antichain")]
    NotAMember(String),
    #[error("standard orbit hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("isomorphism search limited to {limit} elements, got {count}")]
    SizeLimitExceeded { count: usize, limit: usize },
}

/// Element-count guard, read from [`MAX_ELEMENTS_ENV`] and clamped to the
/// bitset capacity.
pub fn element_limit() -> usize {
    std::env::var(MAX_ELEMENTS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
        .min(CAPACITY)
}

/// Identity of a constructed poset; clones share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PosetId(u64);

impl PosetId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        PosetId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// A set of pairwise incomparable elements of one particular poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Antichain {
    poset: PosetId,
    members: ElementSet,
}

impl Antichain {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn poset_id(&self) -> PosetId {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> crate::bitset::Iter {
        self.members.iter()
    }
}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on sorted member indices.
impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

#[derive(Debug, Clone)]
pub struct Poset {
    id: PosetId,
    labels: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds a poset from named elements and `(lower, upper)` cover pairs.
    ///
    /// The order is the reflexive-transitive closure of the pairs; redundant
    /// pairs are accepted and dropped from the recomputed cover relation.
    pub fn from_cover_relations<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
    ) -> Result<Poset, PosetError> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_ref().to_string(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.as_ref().to_string()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.as_ref().to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        let labels = labels.iter().map(|l| l.as_ref().to_string()).collect();
        Poset::from_covers(labels, &pairs)
    }

    /// Index form of [`Poset::from_cover_relations`].
    pub fn from_covers(
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        check_size(n)?;
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(lo, hi) in covers {
            if lo >= n {
                return Err(PosetError::ElementOutOfRange(lo));
            }
            if hi >= n {
                return Err(PosetError::ElementOutOfRange(hi));
            }
            if lo == hi {
                return Err(PosetError::CycleDetected(labels[lo].clone()));
            }
            succ[lo].push(hi);
            indegree[hi] += 1;
        }

        // Kahn's algorithm; leftovers lie on or above a cycle.
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&x| indegree[x] > 0).unwrap_or(0);
            return Err(PosetError::CycleDetected(labels[stuck].clone()));
        }

        let mut up = vec![ElementSet::new(); n];
        for &x in topo.iter().rev() {
            let mut acc = ElementSet::new();
            for &y in &succ[x] {
                acc.insert(y);
                acc = acc.union(&up[y]);
            }
            up[x] = acc;
        }
        Ok(Poset::from_strict_up_sets(labels, up))
    }

    /// Builds a poset from an order predicate `leq(x, y)` meaning `x ≼ y`.
    ///
    /// The predicate is validated as a partial order on all pairs and triples.
    pub fn from_order<F>(labels: Vec<String>, leq: F) -> Result<Poset, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        check_size(n)?;
        let mut up = vec![ElementSet::new(); n];
        for x in 0..n {
            if !leq(x, x) {
                return Err(PosetError::NotAPartialOrder(format!(
                    "`{}` is not ≼ itself",
                    labels[x]
                )));
            }
            for y in 0..n {
                if x != y && leq(x, y) {
                    if leq(y, x) {
                        return Err(PosetError::NotAPartialOrder(format!(
                            "`{}` and `{}` precede each other",
                            labels[x], labels[y]
                        )));
                    }
                    up[x].insert(y);
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if !up[y].is_subset(&up[x]) {
                    return Err(PosetError::NotAPartialOrder(format!(
                        "not transitive through `{}`",
                        labels[y]
                    )));
                }
            }
        }
        Ok(Poset::from_strict_up_sets(labels, up))
    }

    fn from_strict_up_sets(labels: Vec<String>, up: Vec<ElementSet>) -> Poset {
        let n = labels.len();
        let mut down = vec![ElementSet::new(); n];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.iter() {
                down[y].insert(x);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].iter() {
                if up[x].intersection(&down[y]).is_empty() {
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        Poset {
            id: PosetId::fresh(),
            labels,
            up,
            down,
            upper_covers,
            lower_covers,
        }
    }

    /// The subposet induced on `keep` (in increasing index order), with the
    /// cover relation recomputed inside the subset.
    pub fn induced(&self, keep: &ElementSet) -> Poset {
        let elems = keep.to_vec();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let mut up = vec![ElementSet::new(); elems.len()];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if self.up[x].contains(y) {
                    up[i].insert(j);
                }
            }
        }
        Poset::from_strict_up_sets(labels, up)
    }

    pub fn id(&self) -> PosetId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// `x ≼ y`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.up[x].contains(y)
    }

    /// `x ≺ y`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements strictly above `x`.
    pub fn strict_up(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    /// Elements strictly below `x`.
    pub fn strict_down(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// All covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn is_antichain(&self, set: &ElementSet) -> bool {
        set.iter().all(|x| self.up[x].is_disjoint(set))
    }

    /// Wraps `set` as an antichain of this poset after checking it.
    pub fn antichain(&self, set: ElementSet) -> Result<Antichain, PosetError> {
        for x in set.iter() {
            if x >= self.len() {
                return Err(PosetError::ElementOutOfRange(x));
            }
            if let Some(y) = self.up[x].intersection(&set).first() {
                return Err(PosetError::NotAnAntichain(
                    self.labels[x].clone(),
                    self.labels[y].clone(),
                ));
            }
        }
        Ok(Antichain {
            poset: self.id,
            members: set,
        })
    }

    pub fn antichain_from_labels<S: AsRef<str>>(
        &self,
        labels: &[S],
    ) -> Result<Antichain, PosetError> {
        let set = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| PosetError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<ElementSet, _>>()?;
        self.antichain(set)
    }

    pub fn empty_antichain(&self) -> Antichain {
        self.wrap(ElementSet::new())
    }

    /// Internal constructor for sets known to be antichains.
    fn wrap(&self, members: ElementSet) -> Antichain {
        debug_assert!(self.is_antichain(&members));
        Antichain {
            poset: self.id,
            members,
        }
    }

    fn check_owner(&self, a: &Antichain) {
        assert_eq!(a.poset, self.id, "antichain belongs to a different poset");
    }

    pub fn labels_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|x| self.labels[x].clone()).collect()
    }

    /// Upward closure of an arbitrary element set.
    pub fn upper_closure(&self, set: &ElementSet) -> ElementSet {
        set.iter().fold(*set, |acc, x| acc.union(&self.up[x]))
    }

    /// Downward closure of an arbitrary element set.
    pub fn lower_closure(&self, set: &ElementSet) -> ElementSet {
        set.iter().fold(*set, |acc, x| acc.union(&self.down[x]))
    }

    /// The upper ideal `I(Γ) = {ε | ∃γ ∈ Γ, γ ≼ ε}`.
    pub fn upper_ideal(&self, gamma: &Antichain) -> ElementSet {
        self.check_owner(gamma);
        self.upper_closure(&gamma.members)
    }

    /// Elements of `set` with nothing strictly smaller inside `set`.
    pub fn minimal_elements(&self, set: &ElementSet) -> ElementSet {
        set.iter()
            .filter(|&x| self.down[x].is_disjoint(set))
            .collect()
    }

    /// Elements of `set` with nothing strictly larger inside `set`.
    pub fn maximal_elements(&self, set: &ElementSet) -> ElementSet {
        set.iter()
            .filter(|&x| self.up[x].is_disjoint(set))
            .collect()
    }

    /// The antichain of minimal elements of an upper ideal.
    pub fn antichain_of_ideal(&self, ideal: &ElementSet) -> Antichain {
        self.wrap(self.minimal_elements(ideal))
    }

    pub fn minimal_antichain(&self) -> Antichain {
        self.wrap(self.minimal_elements(&self.elements()))
    }

    pub fn maximal_antichain(&self) -> Antichain {
        self.wrap(self.maximal_elements(&self.elements()))
    }

    /// Rowmotion: the maximal elements of the complement of `I(Γ)`.
    pub fn rowmotion(&self, gamma: &Antichain) -> Antichain {
        let rest = self.elements().difference(&self.upper_ideal(gamma));
        self.wrap(self.maximal_elements(&rest))
    }

    /// Inverse rowmotion: the minimal elements of the complement of the
    /// lower ideal generated by `Γ`.
    pub fn inverse_rowmotion(&self, gamma: &Antichain) -> Antichain {
        self.check_owner(gamma);
        let rest = self
            .elements()
            .difference(&self.lower_closure(&gamma.members));
        self.wrap(self.minimal_elements(&rest))
    }

    /// `Γ` moved by rowmotion `k` times; negative `k` applies the inverse.
    pub fn rowmotion_power(&self, gamma: &Antichain, k: i64) -> Antichain {
        let mut cur = *gamma;
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 {
                self.rowmotion(&cur)
            } else {
                self.inverse_rowmotion(&cur)
            };
        }
        cur
    }

    /// All antichains, each once, in canonical (lexicographic) order.
    pub fn enumerate_antichains(&self) -> Vec<Antichain> {
        let comparable: Vec<ElementSet> = (0..self.len())
            .map(|x| {
                let mut s = self.up[x].union(&self.down[x]);
                s.insert(x);
                s
            })
            .collect();
        let mut out = Vec::new();
        // Depth-first pre-order with ascending extensions yields lex order.
        let mut stack = vec![(ElementSet::new(), self.elements())];
        while let Some((current, candidates)) = stack.pop() {
            out.push(self.wrap(current));
            let choices = candidates.to_vec();
            for &x in choices.iter().rev() {
                let mut next = current;
                next.insert(x);
                let later = candidates.difference(&ElementSet::full(x + 1));
                stack.push((next, later.difference(&comparable[x])));
            }
        }
        out
    }

    /// `r_Γ(γ) = #(I ∖ {γ})_min − #I_min + 1` with `I = I(Γ)`.
    pub fn removal_index(&self, gamma: &Antichain, member: usize) -> Result<i64, PosetError> {
        self.check_owner(gamma);
        if !gamma.contains(member) {
            let label = self
                .labels
                .get(member)
                .cloned()
                .unwrap_or_else(|| member.to_string());
            return Err(PosetError::NotAMember(label));
        }
        let mut ideal = self.upper_ideal(gamma);
        ideal.remove(member);
        let after = self.minimal_elements(&ideal).len() as i64;
        Ok(after - gamma.len() as i64 + 1)
    }

    /// `Σ weight(γ)·r_Γ(γ)` over the members of `Γ`; zero for `Γ = ∅`.
    pub fn weighted_oy<W>(&self, gamma: &Antichain, weight: W) -> i64
    where
        W: Fn(usize) -> i64,
    {
        gamma
            .iter()
            .map(|g| weight(g) * self.removal_index(gamma, g).expect("member of Γ"))
            .sum()
    }

    /// `Σ #Γ` over all antichains.
    pub fn antichain_lattice_edge_count(&self) -> u64 {
        self.enumerate_antichains()
            .iter()
            .map(|a| a.len() as u64)
            .sum()
    }

    /// Number of covering pairs in the lattice of upper ideals, counted
    /// directly: pairs `(I, x)` with `x ∉ I` and `I ∪ {x}` again one of the
    /// enumerated ideals.
    pub fn antichain_lattice_cover_count(&self) -> u64 {
        let ideals: Vec<ElementSet> = self
            .enumerate_antichains()
            .iter()
            .map(|a| self.upper_ideal(a))
            .collect();
        let known: std::collections::HashSet<ElementSet> = ideals.iter().copied().collect();
        let all = self.elements();
        ideals
            .iter()
            .map(|ideal| {
                all.difference(ideal)
                    .iter()
                    .filter(|&x| {
                        let mut bigger = *ideal;
                        bigger.insert(x);
                        known.contains(&bigger)
                    })
                    .count() as u64
            })
            .sum()
    }
}

fn check_size(n: usize) -> Result<(), PosetError> {
    let limit = element_limit();
    if n > limit {
        return Err(PosetError::TooManyElements { count: n, limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Poset {
        // α1, α2 below θ.
        Poset::from_cover_relations(&["a1", "a2", "t"], &[("a1", "t"), ("a2", "t")]).unwrap()
    }

    fn set(p: &Poset, labels: &[&str]) -> ElementSet {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::from_cover_relations::<&str>(&["a"], &[]).unwrap();
        assert!(p.leq(0, 0));
        assert_eq!(p.enumerate_antichains().len(), 2);
        assert!(p.enumerate_antichains()[0].is_empty());
    }

    #[test]
    fn cycle_and_unknown_label_are_rejected() {
        let err = Poset::from_cover_relations(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(_)));
        let err = Poset::from_cover_relations(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, PosetError::UnknownLabel("z".into()));
        let err = Poset::from_cover_relations(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, PosetError::DuplicateLabel("a".into()));
    }

    #[test]
    fn redundant_covers_are_reduced() {
        let p =
            Poset::from_cover_relations(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
                .unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));
    }

    #[test]
    fn from_order_rejects_non_orders() {
        let labels = vec!["x".to_string(), "y".to_string()];
        assert!(Poset::from_order(labels.clone(), |_, _| true).is_err());
        let labels3: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        // x<y, y<z but not x<z
        let rel = |a: usize, b: usize| a == b || (a, b) == (0, 1) || (a, b) == (1, 2);
        assert!(matches!(
            Poset::from_order(labels3, rel),
            Err(PosetError::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn ideals_and_extremes_on_a2() {
        let p = a2();
        let empty = p.empty_antichain();
        assert!(p.upper_ideal(&empty).is_empty());
        let g = p.antichain(set(&p, &["a1"])).unwrap();
        assert_eq!(p.upper_ideal(&g), set(&p, &["a1", "t"]));
        let all = p.elements();
        assert_eq!(p.maximal_elements(&all), set(&p, &["t"]));
        assert_eq!(p.minimal_elements(&all), set(&p, &["a1", "a2"]));
        assert!(p.minimal_elements(&ElementSet::new()).is_empty());
        let ac = set(&p, &["a1", "a2"]);
        assert_eq!(p.minimal_elements(&ac), ac);
        assert_eq!(p.maximal_elements(&ac), ac);
        assert_eq!(p.upper_ideal(&p.minimal_antichain()), all);
    }

    #[test]
    fn rowmotion_on_a2_by_hand() {
        let p = a2();
        let theta = p.antichain(set(&p, &["t"])).unwrap();
        let simples = p.antichain(set(&p, &["a1", "a2"])).unwrap();
        let empty = p.empty_antichain();
        assert_eq!(p.rowmotion(&empty), p.maximal_antichain());
        assert_eq!(p.rowmotion(&theta), simples);
        assert_eq!(p.rowmotion(&simples), empty);
        assert_eq!(p.rowmotion(&empty), theta);
        assert_eq!(p.inverse_rowmotion(&theta), empty);
        assert_eq!(p.inverse_rowmotion(&p.maximal_antichain()), empty);
        assert_eq!(p.rowmotion_power(&theta, -2), simples);
    }

    #[test]
    fn antichain_rejects_comparable_members() {
        let p = a2();
        assert!(matches!(
            p.antichain(set(&p, &["a1", "t"])),
            Err(PosetError::NotAnAntichain(_, _))
        ));
    }

    #[test]
    fn removal_index_on_a2() {
        let p = a2();
        let theta = p.antichain(set(&p, &["t"])).unwrap();
        assert_eq!(p.removal_index(&theta, p.index_of("t").unwrap()), Ok(0));
        assert!(matches!(
            p.removal_index(&theta, 0),
            Err(PosetError::NotAMember(_))
        ));
        assert_eq!(p.weighted_oy(&p.empty_antichain(), |_| 1), 0);
    }

    #[test]
    fn edge_count_small() {
        let p = a2();
        assert_eq!(p.antichain_lattice_edge_count(), 5);
        assert_eq!(p.antichain_lattice_cover_count(), 5);
        let empty = Poset::from_covers(vec![], &[]).unwrap();
        assert_eq!(empty.antichain_lattice_edge_count(), 0);
        assert_eq!(empty.antichain_lattice_cover_count(), 0);
    }

    #[test]
    #[should_panic(expected = "different poset")]
    fn foreign_antichain_panics() {
        let p = a2();
        let q = a2();
        let g = q.empty_antichain();
        p.rowmotion(&g);
    }
}
