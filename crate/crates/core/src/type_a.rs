//! Type `A_n` antichains as two-row arrays.
//!
//! The positive root `αᵢ + … + αⱼ` of `A_n` is the column `(i, j)` with
//! `1 ≤ i ≤ j ≤ n`. An antichain is a set of columns whose top entries and
//! bottom entries are both strictly increasing, so it is determined by two
//! increasing sequences `i₁ < … < i_k` and `j₁ < … < j_k` with `i_s ≤ j_s`.
//!
//! In this picture rowmotion is a shift-and-delete on columns, the
//! OY-invariant counts gaps of size at least two, and the duality
//! `Γ ↦ Γ*` swaps the two rows for their complements in `[n]`. The array
//! routines here never consult the poset; [`TypeA`] converts between arrays
//! and antichains of the `A_n` root poset so the two descriptions can be
//! compared.

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::poset::{Antichain, Poset};
use crate::root_system::{CartanType, PosetVariant, RootPoset, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeAError {
    #[error("antichain does not belong to the full root poset of A{0}")]
    NotTypeA(usize),
    #[error("invalid two-row array: {0}")]
    InvalidArray(String),
    #[error("type A needs rank at least 1")]
    InvalidRank,
}

/// `χ(a) = 1` if `a ≥ 2`, else 0: whether a consecutive difference is
/// essential.
#[inline]
pub fn chi(a: usize) -> usize {
    usize::from(a >= 2)
}

/// `Σ χ(i_s − i_{s−1})` over the increasing sequence `I` with `i₀ = 0`.
pub fn lower_essential_gaps(seq: &[usize]) -> usize {
    let mut prev = 0;
    seq.iter()
        .map(|&i| {
            let g = chi(i - prev);
            prev = i;
            g
        })
        .sum()
}

/// `Σ χ(j_{s+1} − j_s)` over the increasing sequence `J` with `j_{k+1} = n + 1`.
pub fn upper_essential_gaps(seq: &[usize], n: usize) -> usize {
    seq.iter()
        .enumerate()
        .map(|(s, &j)| chi(seq.get(s + 1).copied().unwrap_or(n + 1) - j))
        .sum()
}

/// Number of maximal runs of consecutive integers in `set` (sorted).
fn runs(set: &[usize]) -> usize {
    set.iter()
        .enumerate()
        .filter(|&(s, &x)| s == 0 || set[s - 1] + 1 != x)
        .count()
}

/// Connected components of `I ∪ {0}`, minus one.
pub fn components_with_zero(seq: &[usize]) -> usize {
    let mut with_zero = vec![0];
    with_zero.extend_from_slice(seq);
    runs(&with_zero) - 1
}

/// Connected components of `J ∪ {n + 1}`, minus one.
pub fn components_with_top(seq: &[usize], n: usize) -> usize {
    let mut with_top = seq.to_vec();
    with_top.push(n + 1);
    runs(&with_top) - 1
}

/// `[n] ∖ seq`, increasing.
pub fn complement(seq: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|t| !seq.contains(t)).collect()
}

/// A type-A antichain as columns `(i_s, j_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoRowArray {
    n: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowArray {
    pub fn new(n: usize, top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, TypeAError> {
        if top.len() != bottom.len() {
            return Err(TypeAError::InvalidArray("rows differ in length".into()));
        }
        for s in 0..top.len() {
            if !(1 <= top[s] && top[s] <= bottom[s] && bottom[s] <= n) {
                return Err(TypeAError::InvalidArray(format!(
                    "column ({},{}) is not a root of A{n}",
                    top[s], bottom[s]
                )));
            }
            if s > 0 && (top[s - 1] >= top[s] || bottom[s - 1] >= bottom[s]) {
                return Err(TypeAError::InvalidArray(
                    "rows are not strictly increasing".into(),
                ));
            }
        }
        Ok(TwoRowArray { n, top, bottom })
    }

    /// Builds an array from columns in any order.
    pub fn from_columns(n: usize, mut columns: Vec<(usize, usize)>) -> Result<Self, TypeAError> {
        columns.sort_unstable();
        let (top, bottom) = columns.into_iter().unzip();
        TwoRowArray::new(n, top, bottom)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `(i₁, …, i_k)`.
    pub fn top(&self) -> &[usize] {
        &self.top
    }

    /// `(j₁, …, j_k)`.
    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.top
            .iter()
            .copied()
            .zip(self.bottom.iter().copied())
            .collect()
    }

    /// The OY-invariant as the number of essential differences in
    /// `(0, i₁, …, i_k)` and `(j₁, …, j_k, n + 1)`.
    pub fn oy(&self) -> usize {
        lower_essential_gaps(&self.top) + upper_essential_gaps(&self.bottom, self.n)
    }

    /// Rowmotion by shifting: columns `(i_{s−1} + 1, j_s − 1)` for
    /// `s = 1..k+1` with `i₀ = 0`, `j_{k+1} = n + 1`, keeping only those that
    /// are roots.
    pub fn rowmotion(&self) -> TwoRowArray {
        let k = self.len();
        let columns: Vec<(usize, usize)> = (0..=k)
            .map(|s| {
                let i = if s == 0 { 1 } else { self.top[s - 1] + 1 };
                let j = if s == k { self.n } else { self.bottom[s] - 1 };
                (i, j)
            })
            .filter(|&(i, j)| 1 <= i && i <= j && j <= self.n)
            .collect();
        let (top, bottom) = columns.into_iter().unzip();
        TwoRowArray::new(self.n, top, bottom)
            .expect("good columns of the shifted array form an antichain")
    }

    /// Inverse rowmotion by column creation: diagonal columns before `i₁`,
    /// one column or a diagonal run between consecutive columns, diagonal
    /// columns after `j_k`.
    pub fn inverse_rowmotion(&self) -> TwoRowArray {
        let n = self.n;
        let k = self.len();
        if k == 0 {
            // ∅ is the image of Π.
            let all: Vec<usize> = (1..=n).collect();
            return TwoRowArray::new(n, all.clone(), all).unwrap();
        }
        let mut columns = Vec::new();
        columns.extend((1..self.top[0]).map(|t| (t, t)));
        for s in 0..k - 1 {
            let a = self.top[s + 1] - 1;
            let b = self.bottom[s] + 1;
            if a <= b {
                columns.push((a, b));
            } else {
                columns.extend((b..=a).map(|t| (t, t)));
            }
        }
        columns.extend((self.bottom[k - 1] + 1..=n).map(|t| (t, t)));
        let (top, bottom) = columns.into_iter().unzip();
        TwoRowArray::new(n, top, bottom).expect("created columns form an antichain")
    }

    /// The dual array: top row `[n] ∖ J`, bottom row `[n] ∖ I`.
    pub fn star(&self) -> TwoRowArray {
        TwoRowArray::new(
            self.n,
            complement(&self.bottom, self.n),
            complement(&self.top, self.n),
        )
        .expect("the dual of an antichain is an antichain")
    }
}

/// The full root poset of `A_n` with interval bookkeeping.
#[derive(Debug, Clone)]
pub struct TypeA {
    n: usize,
    roots: RootPoset,
    // element[i-1][j-1] for the root (i, j)
    element: Vec<Vec<usize>>,
    interval: Vec<(usize, usize)>,
}

impl TypeA {
    pub fn new(n: usize) -> Result<TypeA, TypeAError> {
        if n == 0 {
            return Err(TypeAError::InvalidRank);
        }
        let system = RootSystem::build(CartanType::A, n).map_err(|_| TypeAError::InvalidRank)?;
        let roots = system
            .root_poset(&PosetVariant::Full)
            .map_err(|_| TypeAError::InvalidRank)?;
        let mut element = vec![vec![usize::MAX; n]; n];
        let mut interval = vec![(0, 0); roots.poset().len()];
        for (e, slot) in interval.iter_mut().enumerate() {
            let c = roots.coefficients(e);
            let i = c.iter().position(|&v| v == 1).unwrap() + 1;
            let j = c.iter().rposition(|&v| v == 1).unwrap() + 1;
            element[i - 1][j - 1] = e;
            *slot = (i, j);
        }
        Ok(TypeA {
            n,
            roots,
            element,
            interval,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &Poset {
        self.roots.poset()
    }

    pub fn root_poset(&self) -> &RootPoset {
        &self.roots
    }

    /// Poset element of the root `(i, j)`.
    pub fn element(&self, i: usize, j: usize) -> usize {
        self.element[i - 1][j - 1]
    }

    /// The interval `(i, j)` of a poset element.
    pub fn interval(&self, element: usize) -> (usize, usize) {
        self.interval[element]
    }

    fn check(&self, gamma: &Antichain) -> Result<(), TypeAError> {
        if gamma.poset_id() != self.poset().id() {
            return Err(TypeAError::NotTypeA(self.n));
        }
        Ok(())
    }

    pub fn to_array(&self, gamma: &Antichain) -> Result<TwoRowArray, TypeAError> {
        self.check(gamma)?;
        let columns = gamma.iter().map(|e| self.interval[e]).collect();
        TwoRowArray::from_columns(self.n, columns)
    }

    pub fn from_array(&self, array: &TwoRowArray) -> Result<Antichain, TypeAError> {
        if array.rank() != self.n {
            return Err(TypeAError::InvalidArray(format!(
                "array of rank {} used with A{}",
                array.rank(),
                self.n
            )));
        }
        let set: ElementSet = array
            .columns()
            .into_iter()
            .map(|(i, j)| self.element(i, j))
            .collect();
        self.poset()
            .antichain(set)
            .map_err(|e| TypeAError::InvalidArray(e.to_string()))
    }

    /// The antichain with the given `(i, j)` columns.
    pub fn antichain(&self, columns: &[(usize, usize)]) -> Result<Antichain, TypeAError> {
        self.from_array(&TwoRowArray::from_columns(self.n, columns.to_vec())?)
    }

    /// `𝒴(Γ) = Σ r_Γ(γ)` computed from upper ideals.
    pub fn oy_ideal_form(&self, gamma: &Antichain) -> Result<i64, TypeAError> {
        self.check(gamma)?;
        Ok(self.poset().weighted_oy(gamma, |_| 1))
    }

    /// `𝒴(Γ)` as a count of essential differences.
    pub fn oy_difference_form(&self, gamma: &Antichain) -> Result<i64, TypeAError> {
        Ok(self.to_array(gamma)?.oy() as i64)
    }

    pub fn rowmotion_array(&self, gamma: &Antichain) -> Result<Antichain, TypeAError> {
        self.from_array(&self.to_array(gamma)?.rowmotion())
    }

    pub fn inverse_rowmotion_array(&self, gamma: &Antichain) -> Result<Antichain, TypeAError> {
        self.from_array(&self.to_array(gamma)?.inverse_rowmotion())
    }

    pub fn star(&self, gamma: &Antichain) -> Result<Antichain, TypeAError> {
        self.from_array(&self.to_array(gamma)?.star())
    }

    /// All simple roots `Π`.
    pub fn simple_roots(&self) -> Antichain {
        let cols: Vec<_> = (1..=self.n).map(|t| (t, t)).collect();
        self.antichain(&cols).unwrap()
    }

    /// Simple roots with odd index, `{α₁, α₃, …}`.
    pub fn odd_simple_roots(&self) -> Antichain {
        let cols: Vec<_> = (1..=self.n).step_by(2).map(|t| (t, t)).collect();
        self.antichain(&cols).unwrap()
    }

    /// Simple roots with even index, `{α₂, α₄, …}`.
    pub fn even_simple_roots(&self) -> Antichain {
        let cols: Vec<_> = (2..=self.n).step_by(2).map(|t| (t, t)).collect();
        self.antichain(&cols).unwrap()
    }

    /// `Δ(i)`, the roots of height `i` (empty outside `1..=n`).
    pub fn height_level(&self, height: usize) -> Antichain {
        let cols: Vec<_> = if (1..=self.n).contains(&height) {
            (1..=self.n + 1 - height)
                .map(|t| (t, t + height - 1))
                .collect()
        } else {
            Vec::new()
        };
        self.antichain(&cols).unwrap()
    }

    /// `i-j` notation, comma separated, in column order.
    pub fn format(&self, gamma: &Antichain) -> Result<String, TypeAError> {
        Ok(self
            .to_array(gamma)?
            .columns()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> TypeA {
        TypeA::new(n).unwrap()
    }

    #[test]
    fn arrays_of_small_antichains() {
        let a3 = a(3);
        let arr = a3.to_array(&a3.simple_roots()).unwrap();
        assert_eq!(arr.top(), &[1, 2, 3]);
        assert_eq!(arr.bottom(), &[1, 2, 3]);
        let g = a3.antichain(&[(3, 3), (1, 2)]).unwrap();
        let arr = a3.to_array(&g).unwrap();
        assert_eq!(arr.top(), &[1, 3]);
        assert_eq!(arr.bottom(), &[2, 3]);
        assert!(a3
            .to_array(&a3.poset().empty_antichain())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn foreign_antichain_is_not_type_a() {
        let a3 = a(3);
        let other = a(3);
        assert_eq!(
            a3.to_array(&other.simple_roots()),
            Err(TypeAError::NotTypeA(3))
        );
    }

    #[test]
    fn invalid_arrays() {
        assert!(TwoRowArray::new(3, vec![2], vec![1]).is_err());
        assert!(TwoRowArray::new(3, vec![1, 1], vec![2, 3]).is_err());
        assert!(TwoRowArray::new(3, vec![1], vec![4]).is_err());
        assert!(TwoRowArray::new(3, vec![1], vec![]).is_err());
    }

    #[test]
    fn oy_examples() {
        let a3 = a(3);
        let g = a3.antichain(&[(1, 1), (3, 3)]).unwrap();
        assert_eq!(a3.oy_difference_form(&g), Ok(2));
        assert_eq!(a3.oy_ideal_form(&g), Ok(2));
        assert_eq!(a3.poset().removal_index(&g, a3.element(1, 1)), Ok(1));
        for n in 1..=6 {
            let an = a(n);
            assert_eq!(an.oy_ideal_form(&an.simple_roots()), Ok(0));
            assert_eq!(an.oy_difference_form(&an.simple_roots()), Ok(0));
            assert_eq!(an.oy_ideal_form(&an.poset().empty_antichain()), Ok(0));
            let theta = an.antichain(&[(1, n)]).unwrap();
            assert_eq!(an.oy_difference_form(&theta), Ok(0));
            for i in 1..=n {
                assert_eq!(an.oy_ideal_form(&an.height_level(i)), Ok(0));
            }
            assert_eq!(an.oy_ideal_form(&an.odd_simple_roots()), Ok(n as i64 - 1));
            if n >= 2 {
                assert_eq!(an.oy_ideal_form(&an.even_simple_roots()), Ok(n as i64 - 1));
            }
            // Interior simple roots of Π have removal index 0.
            let pi = an.simple_roots();
            for t in 1..=n {
                assert_eq!(an.poset().removal_index(&pi, an.element(t, t)), Ok(0));
            }
        }
    }

    #[test]
    fn rowmotion_array_examples() {
        let a3 = a(3);
        let g = a3.antichain(&[(1, 1)]).unwrap();
        assert_eq!(a3.format(&a3.rowmotion_array(&g).unwrap()).unwrap(), "2-3");
        let empty = a3.poset().empty_antichain();
        assert_eq!(
            a3.format(&a3.rowmotion_array(&empty).unwrap()).unwrap(),
            "1-3"
        );
        let g = a3.antichain(&[(2, 2), (3, 3)]).unwrap();
        assert_eq!(
            a3.format(&a3.inverse_rowmotion_array(&g).unwrap()).unwrap(),
            "1-1,2-3"
        );
        let theta = a3.antichain(&[(1, 3)]).unwrap();
        assert!(a3.inverse_rowmotion_array(&theta).unwrap().is_empty());
    }

    #[test]
    fn star_examples() {
        let a3 = a(3);
        let g = a3.antichain(&[(1, 1)]).unwrap();
        assert_eq!(a3.format(&a3.star(&g).unwrap()).unwrap(), "2-2,3-3");
        let empty = a3.poset().empty_antichain();
        assert_eq!(a3.star(&empty).unwrap(), a3.simple_roots());
        assert_eq!(
            a3.format(&a3.star(&a3.height_level(2)).unwrap()).unwrap(),
            "1-3"
        );
    }

    #[test]
    fn gap_helpers() {
        assert_eq!(lower_essential_gaps(&[]), 0);
        assert_eq!(lower_essential_gaps(&[1, 3]), 1);
        assert_eq!(upper_essential_gaps(&[1, 3], 3), 1);
        assert_eq!(components_with_zero(&[1, 3]), 1);
        assert_eq!(components_with_top(&[1, 3], 3), 1);
        assert_eq!(complement(&[1, 3], 4), vec![2, 4]);
    }
}
