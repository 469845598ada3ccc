//! Rowmotion on antichains of finite posets, specialised to the positive-root
//! posets of irreducible root systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`poset`]: generic finite posets, antichains, upper ideals, rowmotion
//!   `𝔛(Γ) = (P ∖ I(Γ))_max` and its inverse, orbit decomposition, gradings,
//!   the removal index `r_Γ`, and isomorphism search.
//! - [`root_system`]: root systems of types A–G built from their Gram
//!   matrices, with Coxeter data, short roots, the `−w₀` diagram involution,
//!   and the root-poset variants (full, without simple roots, short roots, …).
//! - [`type_a`]: the two-row array picture of type-A antichains, the
//!   OY-invariant in both of its forms, array rowmotion, and the duality
//!   `Γ ↦ Γ*`.
//! - [`harness`]: exhaustive checks producing PASS/FAIL [`harness::Report`]s.
//! - [`cli`]: the command-line front end used by the `rowmotion` binary.
//!
//! ```
//! use rowmotion::root_system::{CartanType, PosetVariant, RootSystem};
//!
//! let f4 = RootSystem::build(CartanType::F, 4).unwrap();
//! let poset = f4.root_poset(&PosetVariant::Full).unwrap();
//! let orbits = poset.poset().all_orbits();
//! assert_eq!(orbits.len(), 11);
//! assert_eq!(poset.poset().rowmotion_order(), 12);
//! ```

pub mod bitset;
pub mod cli;
pub mod harness;
pub mod poset;
pub mod root_system;
pub mod type_a;

pub use bitset::ElementSet;
pub use poset::{Antichain, Grading, Orbit, Poset, PosetError};

/// Exact rational numbers used for orbit means and counting products.
pub type Rational = num_rational::Ratio<i64>;

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (p, q): (i64, i64) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (s.parse().ok()?, 1),
    };
    (q != 0).then(|| Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_round_trip() {
        let r = Rational::new(40, 22);
        assert_eq!(fraction_string(&r), "20/11");
        assert_eq!(parse_fraction("20/11"), Some(r));
        assert_eq!(fraction_string(&Rational::from_integer(2)), "2/1");
        assert_eq!(parse_fraction("2"), Some(Rational::from_integer(2)));
        assert_eq!(parse_fraction("1/0"), None);
    }
}
