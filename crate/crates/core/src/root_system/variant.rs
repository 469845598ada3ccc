use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::{CartanType, Coefficients, Convention, RootSystem, RootSystemError};
use crate::bitset::ElementSet;
use crate::poset::{Antichain, Poset};

/// Which subset of the positive roots to order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PosetVariant {
    /// All positive roots.
    Full,
    /// Positive roots of height at least 2.
    NoSimple,
    /// Short positive roots.
    Short,
    /// Short positive roots that are not simple.
    ShortNoSimple,
    /// Positive roots of height at least `j`.
    HeightAtLeast(u32),
    /// Positive roots supported on the given simple roots (zero-based).
    Parabolic(Vec<usize>),
}

impl PosetVariant {
    /// Canonical form: `HeightAtLeast(1)` is `Full`, `HeightAtLeast(2)` is
    /// `NoSimple`.
    pub fn normalized(&self) -> PosetVariant {
        match self {
            PosetVariant::HeightAtLeast(0 | 1) => PosetVariant::Full,
            PosetVariant::HeightAtLeast(2) => PosetVariant::NoSimple,
            PosetVariant::Parabolic(v) => {
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                PosetVariant::Parabolic(v)
            }
            other => other.clone(),
        }
    }
}

impl fmt::Display for PosetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetVariant::Full => write!(f, "full"),
            PosetVariant::NoSimple => write!(f, "no-simple"),
            PosetVariant::Short => write!(f, "short"),
            PosetVariant::ShortNoSimple => write!(f, "short-no-simple"),
            PosetVariant::HeightAtLeast(j) => write!(f, "height-geq-{j}"),
            PosetVariant::Parabolic(v) => {
                let names: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "parabolic-{}", names.join(","))
            }
        }
    }
}

impl FromStr for PosetVariant {
    type Err = String;

    /// Accepts `full`, `no-simple`, `short`, `short-no-simple`,
    /// `height-geq-J`, and `parabolic-1,2,…` (one-based simple indices).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        match s.as_str() {
            "full" => return Ok(PosetVariant::Full),
            "no-simple" => return Ok(PosetVariant::NoSimple),
            "short" => return Ok(PosetVariant::Short),
            "short-no-simple" => return Ok(PosetVariant::ShortNoSimple),
            _ => {}
        }
        if let Some(j) = s.strip_prefix("height-geq-") {
            return j
                .parse()
                .map(PosetVariant::HeightAtLeast)
                .map_err(|_| format!("bad height bound in `{s}`"));
        }
        if let Some(list) = s.strip_prefix("parabolic-") {
            return list
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(format!("bad simple index `{t}`")),
                })
                .collect::<Result<Vec<_>, _>>()
                .map(PosetVariant::Parabolic);
        }
        Err(format!("unknown poset variant `{s}`"))
    }
}

/// A root poset: an induced subposet of the positive roots.
///
/// Element `i` of [`RootPoset::poset`] is the positive root
/// [`RootPoset::root_index`]`(i)` of the underlying system; labels are the
/// Bourbaki coefficient strings.
#[derive(Debug, Clone)]
pub struct RootPoset {
    system: RootSystem,
    variant: PosetVariant,
    roots: Vec<usize>,
    poset: Poset,
}

impl RootPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn variant(&self) -> &PosetVariant {
        &self.variant
    }

    pub fn name(&self) -> String {
        format!("{}/{}", self.system, self.variant)
    }

    pub fn root_index(&self, element: usize) -> usize {
        self.roots[element]
    }

    pub fn coefficients(&self, element: usize) -> &Coefficients {
        self.system.root(self.roots[element])
    }

    pub fn height(&self, element: usize) -> u32 {
        self.system.height(self.roots[element])
    }

    pub fn is_short(&self, element: usize) -> bool {
        self.system.is_short(self.roots[element])
    }

    /// Poset element holding root `root`, if the variant contains it.
    pub fn element_of_root(&self, root: usize) -> Option<usize> {
        self.roots.binary_search(&root).ok()
    }

    pub fn element_of_coefficients(&self, coeffs: &[u32]) -> Option<usize> {
        self.system
            .root_index(coeffs)
            .and_then(|r| self.element_of_root(r))
    }

    /// The rank function the variant is expected to carry: height minus the
    /// smallest height present, plus one.
    pub fn expected_rank(&self, element: usize) -> u32 {
        let low = (0..self.roots.len())
            .map(|e| self.height(e))
            .min()
            .unwrap_or(1);
        self.height(element) - low + 1
    }

    /// `−w₀` as a permutation of poset elements, when the variant's root set
    /// is stable under it.
    pub fn minus_w0_permutation(&self) -> Option<Vec<usize>> {
        let on_roots = self.system.minus_w0_on_roots();
        self.roots
            .iter()
            .map(|&r| self.element_of_root(on_roots[r]))
            .collect()
    }

    /// Applies `−w₀` elementwise to an antichain.
    pub fn minus_w0(&self, a: &Antichain) -> Antichain {
        let perm = self
            .minus_w0_permutation()
            .expect("variant is not stable under −w₀");
        let image: ElementSet = a.iter().map(|x| perm[x]).collect();
        self.poset
            .antichain(image)
            .expect("−w₀ is a poset automorphism")
    }

    /// Prints one element in the given notation.
    pub fn print_element(
        &self,
        element: usize,
        convention: Convention,
    ) -> Result<String, RootSystemError> {
        self.system
            .print_root(self.coefficients(element), convention)
    }

    /// Prints an antichain as a comma-separated list in canonical order.
    pub fn print_antichain(
        &self,
        a: &Antichain,
        convention: Convention,
    ) -> Result<Vec<String>, RootSystemError> {
        a.iter()
            .map(|x| self.print_element(x, convention))
            .collect()
    }

    /// Parses root strings into an antichain of this poset.
    pub fn parse_antichain<S: AsRef<str>>(
        &self,
        items: &[S],
        convention: Convention,
    ) -> Result<Antichain, RootSystemError> {
        let mut set = ElementSet::new();
        for item in items {
            let coeffs = self.system.parse_root(item.as_ref(), convention)?;
            let e = self.element_of_coefficients(&coeffs).ok_or_else(|| {
                RootSystemError::UnknownRoot(item.as_ref().to_string(), self.name())
            })?;
            set.insert(e);
        }
        Ok(self.poset.antichain(set)?)
    }
}

impl RootSystem {
    /// The induced subposet of `Δ⁺` selected by `variant`.
    pub fn root_poset(&self, variant: &PosetVariant) -> Result<RootPoset, RootSystemError> {
        let variant = variant.normalized();
        if matches!(variant, PosetVariant::Short | PosetVariant::ShortNoSimple) && !self.two_lengths
        {
            return Err(RootSystemError::NoShortRoots(self.name()));
        }
        let keep = |i: usize| -> bool {
            let h = self.height(i);
            match &variant {
                PosetVariant::Full => true,
                PosetVariant::NoSimple => h >= 2,
                PosetVariant::Short => self.is_short(i),
                PosetVariant::ShortNoSimple => self.is_short(i) && h >= 2,
                PosetVariant::HeightAtLeast(j) => h >= *j,
                PosetVariant::Parabolic(simple) => self.supported_in(i, simple),
            }
        };
        let roots: Vec<usize> = (0..self.roots.len()).filter(|&i| keep(i)).collect();
        let labels = roots
            .iter()
            .map(|&i| {
                self.roots[i]
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<String>()
            })
            .collect();
        let poset = Poset::from_order(labels, |a, b| self.root_leq(roots[a], roots[b]))?;
        Ok(RootPoset {
            system: self.clone(),
            variant,
            roots,
            poset,
        })
    }

    /// The closed-form antichain count for `full`, `no-simple` and `short`.
    ///
    /// `full`: `∏ (h + eᵢ + 1)/(eᵢ + 1)`; `no-simple`: `∏ (h + eᵢ − 1)/(eᵢ + 1)`;
    /// `short`: the `full` product over the `m = #Π_s` smallest exponents.
    pub fn expected_antichain_count(&self, variant: &PosetVariant) -> Result<u64, RootSystemError> {
        let variant = variant.normalized();
        let h = self.coxeter_number as i128;
        let factors: Vec<(i128, i128)> = match &variant {
            PosetVariant::Full => self
                .exponents
                .iter()
                .map(|&e| (h + e as i128 + 1, e as i128 + 1))
                .collect(),
            PosetVariant::NoSimple => self
                .exponents
                .iter()
                .map(|&e| (h + e as i128 - 1, e as i128 + 1))
                .collect(),
            PosetVariant::Short => {
                if !self.two_lengths {
                    return Err(RootSystemError::NoShortRoots(self.name()));
                }
                let m = self.short_simple_roots().len();
                let mut e = self.exponents.clone();
                e.sort_unstable();
                e.iter()
                    .take(m)
                    .map(|&e| (h + e as i128 + 1, e as i128 + 1))
                    .collect()
            }
            other => return Err(RootSystemError::UnsupportedVariant(other.to_string())),
        };
        let product = factors
            .iter()
            .fold(Ratio::from_integer(1i128), |acc, &(p, q)| {
                acc * Ratio::new(p, q)
            });
        if !product.is_integer() {
            return Err(RootSystemError::NonIntegralCount(format!(
                "{} for {}/{}",
                product, self, variant
            )));
        }
        Ok(product.to_integer() as u64)
    }

    /// `C_n` only: index set of `α₁..α_{n−2}` used by the short-root orbit
    /// representatives.
    pub fn leading_type_a_simple_roots(&self) -> Option<Vec<usize>> {
        (self.cartan_type == CartanType::C).then(|| (0..self.rank.saturating_sub(2)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType::*;

    fn rs(ty: CartanType, n: usize) -> RootSystem {
        RootSystem::build(ty, n).unwrap()
    }

    #[test]
    fn variant_names_round_trip() {
        for v in [
            PosetVariant::Full,
            PosetVariant::NoSimple,
            PosetVariant::Short,
            PosetVariant::ShortNoSimple,
            PosetVariant::HeightAtLeast(3),
            PosetVariant::Parabolic(vec![0, 1]),
        ] {
            assert_eq!(v.to_string().parse::<PosetVariant>().unwrap(), v);
        }
        assert_eq!(
            PosetVariant::HeightAtLeast(1).normalized(),
            PosetVariant::Full
        );
        assert_eq!(
            PosetVariant::HeightAtLeast(2).normalized(),
            PosetVariant::NoSimple
        );
        assert!("sideways".parse::<PosetVariant>().is_err());
    }

    #[test]
    fn f4_counts() {
        let f4 = rs(F, 4);
        assert_eq!(f4.expected_antichain_count(&PosetVariant::Full), Ok(105));
        assert_eq!(f4.expected_antichain_count(&PosetVariant::NoSimple), Ok(66));
        assert_eq!(f4.expected_antichain_count(&PosetVariant::Short), Ok(21));
        assert!(matches!(
            f4.expected_antichain_count(&PosetVariant::ShortNoSimple),
            Err(RootSystemError::UnsupportedVariant(_))
        ));
        assert!(matches!(
            f4.expected_antichain_count(&PosetVariant::HeightAtLeast(3)),
            Err(RootSystemError::UnsupportedVariant(_))
        ));
    }

    #[test]
    fn a2_count_and_cn_short_binomial() {
        assert_eq!(
            rs(A, 2).expected_antichain_count(&PosetVariant::Full),
            Ok(5)
        );
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        for n in 2..=6 {
            assert_eq!(
                rs(C, n).expected_antichain_count(&PosetVariant::Short),
                Ok(binom(2 * n as u64 - 1, n as u64))
            );
        }
    }

    #[test]
    fn short_variants_need_two_lengths() {
        assert!(matches!(
            rs(E, 6).root_poset(&PosetVariant::Short),
            Err(RootSystemError::NoShortRoots(_))
        ));
        assert!(matches!(
            rs(A, 3).expected_antichain_count(&PosetVariant::Short),
            Err(RootSystemError::NoShortRoots(_))
        ));
    }

    #[test]
    fn full_order_equals_closure_of_simple_root_covers() {
        for sys in [
            rs(A, 4),
            rs(B, 3),
            rs(C, 4),
            rs(D, 5),
            rs(F, 4),
            rs(G, 2),
            rs(E, 6),
        ] {
            let rp = sys.root_poset(&PosetVariant::Full).unwrap();
            let n = sys.positive_roots().len();
            let mut covers = Vec::new();
            for x in 0..n {
                for i in 0..sys.rank() {
                    let mut c = sys.root(x).clone();
                    c[i] += 1;
                    if let Some(y) = sys.root_index(&c) {
                        covers.push((x, y));
                    }
                }
            }
            let closure = Poset::from_covers(rp.poset().labels().to_vec(), &covers).unwrap();
            for x in 0..n {
                assert_eq!(closure.strict_up(x), rp.poset().strict_up(x), "{sys}");
            }
            covers.sort_unstable();
            assert_eq!(
                rp.poset().covers(),
                covers,
                "{sys}: covers differ by a simple root"
            );
        }
    }

    #[test]
    fn minus_w0_is_a_poset_automorphism() {
        for sys in [rs(A, 4), rs(D, 5), rs(E, 6), rs(F, 4)] {
            for v in [PosetVariant::Full, PosetVariant::NoSimple] {
                let rp = sys.root_poset(&v).unwrap();
                let perm = rp.minus_w0_permutation().unwrap();
                for (a, b) in rp.poset().covers() {
                    assert!(rp.poset().upper_covers(perm[a]).contains(&perm[b]));
                }
            }
        }
        let a3 = rs(A, 3).root_poset(&PosetVariant::Full).unwrap();
        let g = a3.parse_antichain(&["1-1"], Convention::IntervalA).unwrap();
        assert_eq!(
            a3.print_antichain(&a3.minus_w0(&g), Convention::IntervalA)
                .unwrap(),
            vec!["(3,3)"]
        );
    }

    #[test]
    fn type_a_minus_w0_on_intervals() {
        for n in 2..=6 {
            let rp = rs(A, n).root_poset(&PosetVariant::Full).unwrap();
            let perm = rp.minus_w0_permutation().unwrap();
            for (x, &image) in perm.iter().enumerate() {
                let c = rp.coefficients(x);
                let i = c.iter().position(|&v| v == 1).unwrap() + 1;
                let j = c.iter().rposition(|&v| v == 1).unwrap() + 1;
                let d = rp.coefficients(image);
                let i2 = d.iter().position(|&v| v == 1).unwrap() + 1;
                let j2 = d.iter().rposition(|&v| v == 1).unwrap() + 1;
                assert_eq!((i2, j2), (n + 1 - j, n + 1 - i));
            }
        }
    }

    #[test]
    fn parabolic_is_subsystem() {
        let c5 = rs(C, 5);
        let rp = c5
            .root_poset(&PosetVariant::Parabolic(vec![0, 1, 2]))
            .unwrap();
        // Δ⁺(A₃) inside C₅.
        assert_eq!(rp.poset().len(), 6);
        assert!((0..6).all(|e| rp.is_short(e)));
        assert_eq!(c5.leading_type_a_simple_roots(), Some(vec![0, 1, 2]));
    }
}
