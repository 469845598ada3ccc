//! Irreducible root systems of types A–G.
//!
//! Positive roots are stored as coefficient vectors over the simple roots in
//! Bourbaki numbering and are generated height by height from the Gram matrix
//! of the simple roots using root strings. Everything is integer arithmetic.

mod notation;
mod variant;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poset::PosetError;

pub use notation::Convention;
pub use variant::{PosetVariant, RootPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("no root system of type {0}{1}")]
    InvalidRank(CartanType, usize),
    #[error("cannot parse root system name `{0}`")]
    BadName(String),
    #[error("{0} has a single root length, so it has no short roots")]
    NoShortRoots(String),
    #[error("no counting formula for variant {0}")]
    UnsupportedVariant(String),
    #[error("counting product is not an integer: {0}")]
    NonIntegralCount(String),
    #[error("convention {0} does not apply to {1}")]
    ConventionMismatch(Convention, String),
    #[error("`{0}` is not a positive root of {1}")]
    UnknownRoot(String, String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    /// Whether systems of this type have two root lengths.
    pub fn is_two_length_type(self) -> bool {
        matches!(
            self,
            CartanType::B | CartanType::C | CartanType::F | CartanType::G
        )
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for CartanType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(RootSystemError::BadName(s.to_string())),
        }
    }
}

/// Splits a name such as `F4` or `a10` into type and rank.
pub fn parse_type_name(name: &str) -> Result<(CartanType, usize), RootSystemError> {
    let bad = || RootSystemError::BadName(name.to_string());
    let name = name.trim();
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let ty: CartanType = letter.to_string().parse().map_err(|_| bad())?;
    let rank = chars.as_str().parse::<usize>().map_err(|_| bad())?;
    Ok((ty, rank))
}

/// A positive root as non-negative coefficients over the simple roots.
pub type Coefficients = Vec<u32>;

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    roots: Vec<Coefficients>,
    index: HashMap<Coefficients, usize>,
    is_short: Vec<bool>,
    two_lengths: bool,
    exponents: Vec<u32>,
    coxeter_number: u32,
    theta: usize,
    theta_short: Option<usize>,
    minus_w0: Vec<usize>,
}

impl RootSystem {
    /// Builds the positive roots and Coxeter data of `ty` in rank `rank`.
    ///
    /// Valid inputs are `A_n (n ≥ 1)`, `B_n`, `C_n (n ≥ 2)`, `D_n (n ≥ 4)`,
    /// `E6`–`E8`, `F4` and `G2`.
    pub fn build(ty: CartanType, rank: usize) -> Result<RootSystem, RootSystemError> {
        let valid = match ty {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if !valid {
            return Err(RootSystemError::InvalidRank(ty, rank));
        }
        let gram = gram_matrix(ty, rank);
        let roots = generate_positive_roots(&gram);
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.clone(), i);
        }

        let norms: Vec<i64> = roots.iter().map(|r| norm(&gram, r)).collect();
        let short_norm = *norms.iter().min().unwrap();
        let two_lengths = norms.iter().any(|&v| v != short_norm);
        let is_short: Vec<bool> = norms
            .iter()
            .map(|&v| two_lengths && v == short_norm)
            .collect();

        let exponents = exponent_table(ty, rank);
        let coxeter_number = exponents.iter().copied().max().unwrap() + 1;
        let theta = max_height_root(&roots, |_| true);
        let theta_short = two_lengths.then(|| max_height_root(&roots, |i| is_short[i]));
        let minus_w0 = minus_w0_on_simple(ty, rank);

        let rs = RootSystem {
            cartan_type: ty,
            rank,
            gram,
            roots,
            index,
            is_short,
            two_lengths,
            exponents,
            coxeter_number,
            theta,
            theta_short,
            minus_w0,
        };
        rs.validate_tables();
        Ok(rs)
    }

    /// Cross-checks the exponent table against the generated roots.
    fn validate_tables(&self) {
        let sum: u32 = self.exponents.iter().sum();
        assert_eq!(
            sum as usize,
            self.roots.len(),
            "Σ exponents ≠ #Δ⁺ for {self}"
        );
        assert_eq!(
            self.rank * self.coxeter_number as usize,
            2 * self.roots.len(),
            "#Δ⁺ ≠ n·h/2 for {self}"
        );
        assert_eq!(
            self.height(self.theta),
            self.coxeter_number - 1,
            "hot(θ) ≠ h − 1 for {self}"
        );
    }

    /// Looks up a system by name, e.g. `"E6"`.
    pub fn from_name(name: &str) -> Result<RootSystem, RootSystemError> {
        let (ty, rank) = parse_type_name(name)?;
        RootSystem::build(ty, rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    /// Positive roots ordered by height, simple roots `α₁..αₙ` first.
    pub fn positive_roots(&self) -> &[Coefficients] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Coefficients {
        &self.roots[i]
    }

    pub fn root_index(&self, coeffs: &[u32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of the simple root `α_{i+1}` (zero-based `i`).
    pub fn simple_root(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        self.index[&c]
    }

    pub fn height(&self, i: usize) -> u32 {
        self.roots[i].iter().sum()
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.is_short[i]
    }

    pub fn has_two_root_lengths(&self) -> bool {
        self.two_lengths
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    /// Index of the highest root `θ`.
    pub fn theta(&self) -> usize {
        self.theta
    }

    /// Index of the highest short root `θ_s`.
    pub fn theta_short(&self) -> Option<usize> {
        self.theta_short
    }

    /// `hot(θ_s)`, which equals `h*(Δ∨) − 1`.
    pub fn short_level(&self) -> Option<u32> {
        self.theta_short.map(|i| self.height(i))
    }

    /// The dual Coxeter number of the dual root system, `hot(θ_s) + 1`.
    pub fn dual_coxeter_of_dual(&self) -> Option<u32> {
        self.short_level().map(|l| l + 1)
    }

    /// Short simple roots, as zero-based simple indices.
    pub fn short_simple_roots(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.is_short[self.simple_root(i)])
            .collect()
    }

    /// `(α_i, α_j)` for simple roots, scaled so the form is integral.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Whether the longest Weyl group element acts as `−1`.
    pub fn w0_is_minus_one(&self) -> bool {
        self.minus_w0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The diagram automorphism induced by `−w₀` on simple indices.
    pub fn minus_w0_on_simple_roots(&self) -> &[usize] {
        &self.minus_w0
    }

    /// The permutation `γ ↦ −w₀(γ)` of positive-root indices.
    pub fn minus_w0_on_roots(&self) -> Vec<usize> {
        self.roots
            .iter()
            .map(|r| {
                let mut image = vec![0; self.rank];
                for (i, &c) in r.iter().enumerate() {
                    image[self.minus_w0[i]] = c;
                }
                self.index[&image]
            })
            .collect()
    }

    /// Splits the simple roots into two classes of mutually orthogonal roots
    /// (the 2-colouring of the Dynkin tree), with `α₁` in the first class.
    pub fn orthogonal_bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank;
        let mut colour = vec![None; n];
        colour[0] = Some(0u8);
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && self.gram[i][j] != 0 && colour[j].is_none() {
                    colour[j] = Some(1 - colour[i].unwrap());
                    stack.push(j);
                }
            }
        }
        let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| colour[i] == Some(0));
        (first, second)
    }

    /// `x ≼ y` in the root order: `y − x` has non-negative coefficients.
    pub fn root_leq(&self, x: usize, y: usize) -> bool {
        self.roots[x]
            .iter()
            .zip(&self.roots[y])
            .all(|(a, b)| a <= b)
    }

    /// Whether every simple root in the support of root `i` lies in `simple`.
    pub fn supported_in(&self, i: usize, simple: &[usize]) -> bool {
        self.roots[i]
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || simple.contains(&j))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cartan_type, self.rank)
    }
}

fn norm(gram: &[Vec<i64>], c: &[u32]) -> i64 {
    let mut total = 0;
    for (i, &ci) in c.iter().enumerate() {
        for (j, &cj) in c.iter().enumerate() {
            total += ci as i64 * cj as i64 * gram[i][j];
        }
    }
    total
}

/// `(β, α_i)` for a root given by coefficients.
fn pairing(gram: &[Vec<i64>], c: &[u32], i: usize) -> i64 {
    c.iter()
        .enumerate()
        .map(|(j, &cj)| cj as i64 * gram[j][i])
        .sum()
}

/// Positive roots by height closure: `β + α_i` is a root iff `q > 0` where
/// `p − q = ⟨β, α_i^∨⟩` and `p` is the length of the `α_i`-string below `β`.
fn generate_positive_roots(gram: &[Vec<i64>]) -> Vec<Coefficients> {
    let n = gram.len();
    let mut known: std::collections::HashSet<Coefficients> = Default::default();
    let mut layer: Vec<Coefficients> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: Vec<Coefficients> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0i64;
                let mut probe = beta.clone();
                while probe[i] > 0 {
                    probe[i] -= 1;
                    if !known.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let coroot_pairing = 2 * pairing(gram, beta, i) / gram[i][i];
                let q = p - coroot_pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: u32 = a.iter().sum();
        let hb: u32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

fn max_height_root<F: Fn(usize) -> bool>(roots: &[Coefficients], keep: F) -> usize {
    (0..roots.len())
        .filter(|&i| keep(i))
        .max_by_key(|&i| roots[i].iter().sum::<u32>())
        .unwrap()
}

/// Gram matrix `(α_i, α_j)` in Bourbaki numbering. Short roots have squared
/// length 2; long roots 4 (B, C, F) or 6 (G).
fn gram_matrix(ty: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let mut link = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty {
        CartanType::A => {
            for i in 1..n {
                link(i - 1, i, -1);
            }
        }
        CartanType::B => {
            for i in 1..n {
                link(i - 1, i, -2);
            }
        }
        CartanType::C => {
            for i in 1..n - 1 {
                link(i - 1, i, -1);
            }
            link(n - 2, n - 1, -2);
        }
        CartanType::D => {
            for i in 1..n - 1 {
                link(i - 1, i, -1);
            }
            link(n - 3, n - 1, -1);
        }
        CartanType::E => {
            link(0, 2, -1);
            link(1, 3, -1);
            for i in 3..n {
                link(i - 1, i, -1);
            }
        }
        CartanType::F => {
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
        }
        CartanType::G => link(0, 1, -3),
    }
    let diag: Vec<i64> = match ty {
        CartanType::A | CartanType::D | CartanType::E => vec![2; n],
        CartanType::B => (0..n).map(|i| if i + 1 < n { 4 } else { 2 }).collect(),
        CartanType::C => (0..n).map(|i| if i + 1 < n { 2 } else { 4 }).collect(),
        CartanType::F => vec![4, 4, 2, 2],
        CartanType::G => vec![2, 6],
    };
    for (i, d) in diag.into_iter().enumerate() {
        g[i][i] = d;
    }
    g
}

fn exponent_table(ty: CartanType, n: usize) -> Vec<u32> {
    let n32 = n as u32;
    match ty {
        CartanType::A => (1..=n32).collect(),
        CartanType::B | CartanType::C => (0..n32).map(|i| 2 * i + 1).collect(),
        CartanType::D => {
            let mut e: Vec<u32> = (0..n32 - 1).map(|i| 2 * i + 1).collect();
            e.push(n32 - 1);
            e.sort_unstable();
            e
        }
        CartanType::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        CartanType::F => vec![1, 5, 7, 11],
        CartanType::G => vec![1, 5],
    }
}

/// `−w₀` as a Dynkin diagram automorphism on simple indices.
fn minus_w0_on_simple(ty: CartanType, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    match ty {
        CartanType::A => perm.reverse(),
        CartanType::D if n % 2 == 1 => perm.swap(n - 2, n - 1),
        CartanType::E if n == 6 => {
            perm.swap(0, 5);
            perm.swap(2, 4);
        }
        _ => {}
    }
    perm
}
