use super::{Poset, PosetError};

/// Default element bound for [`Poset::isomorphism`].
pub const DEFAULT_ISOMORPHISM_LIMIT: usize = 64;

/// Per-element data preserved by any order isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    depth: usize,
    up: usize,
    down: usize,
    upper_covers: usize,
    lower_covers: usize,
}

fn signatures(p: &Poset) -> Vec<Signature> {
    // Longest chain ending at x, filled in order of down-set size.
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.strict_down(x).len());
    let mut depth = vec![0usize; p.len()];
    for &x in &order {
        depth[x] = p
            .lower_covers(x)
            .iter()
            .map(|&y| depth[y] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..p.len())
        .map(|x| Signature {
            depth: depth[x],
            up: p.strict_up(x).len(),
            down: p.strict_down(x).len(),
            upper_covers: p.upper_covers(x).len(),
            lower_covers: p.lower_covers(x).len(),
        })
        .collect()
}

impl Poset {
    /// An order isomorphism `self → other` as `map[x] = image of x`, or
    /// `None` if the posets are not isomorphic.
    pub fn isomorphism(&self, other: &Poset) -> Result<Option<Vec<usize>>, PosetError> {
        self.isomorphism_with_limit(other, DEFAULT_ISOMORPHISM_LIMIT)
    }

    pub fn isomorphism_with_limit(
        &self,
        other: &Poset,
        limit: usize,
    ) -> Result<Option<Vec<usize>>, PosetError> {
        let count = self.len().max(other.len());
        if count > limit {
            return Err(PosetError::SizeLimitExceeded { count, limit });
        }
        if self.len() != other.len() || self.covers().len() != other.covers().len() {
            return Ok(None);
        }
        let sig_p = signatures(self);
        let sig_q = signatures(other);
        let mut sorted_p = sig_p.clone();
        let mut sorted_q = sig_q.clone();
        sorted_p.sort();
        sorted_q.sort();
        if sorted_p != sorted_q {
            return Ok(None);
        }

        // Visit bottom-up so each new element is constrained by mapped ones.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (sig_p[x].depth, x));
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        let found = Search {
            p: self,
            q: other,
            sig_p: &sig_p,
            sig_q: &sig_q,
            order: &order,
        }
        .extend(0, &mut map, &mut used);
        Ok(found.then_some(map))
    }
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    sig_p: &'a [Signature],
    sig_q: &'a [Signature],
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        for y in 0..self.q.len() {
            if used[y] || self.sig_q[y] != self.sig_p[x] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&w| {
                let v = map[w];
                self.p.lt(w, x) == self.q.lt(v, y) && self.p.lt(x, w) == self.q.lt(y, v)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn chain_vs_antichain() {
        let chain = Poset::from_covers(named(3), &[(0, 1), (1, 2)]).unwrap();
        let flat = Poset::from_covers(named(3), &[]).unwrap();
        assert_eq!(chain.isomorphism(&flat).unwrap(), None);
    }

    #[test]
    fn relabelled_copy_maps_back() {
        let p = Poset::from_covers(named(4), &[(0, 2), (1, 2), (2, 3)]).unwrap();
        let q = Poset::from_covers(named(4), &[(3, 1), (2, 1), (1, 0)]).unwrap();
        let map = p.isomorphism(&q).unwrap().expect("isomorphic");
        for (a, b) in p.covers() {
            assert!(q.upper_covers(map[a]).contains(&map[b]));
        }
    }

    #[test]
    fn limit_is_enforced() {
        let p = Poset::from_covers(named(5), &[]).unwrap();
        assert_eq!(
            p.isomorphism_with_limit(&p, 4),
            Err(PosetError::SizeLimitExceeded { count: 5, limit: 4 })
        );
    }
}
