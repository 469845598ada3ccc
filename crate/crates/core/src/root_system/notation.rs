use std::fmt;
use std::str::FromStr;

use super::{CartanType, Coefficients, RootSystem, RootSystemError};

/// How roots are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// Coefficient digits in Bourbaki numbering, e.g. `2342` for `θ(F₄)`.
    #[default]
    Bourbaki,
    /// `F₄` with the simple roots numbered in reverse (`αᵢ ↔ α₅₋ᵢ`), so
    /// `θ = 2432` and `θ_s = 2321`.
    PaperF4,
    /// Type A interval `(i,j)` for `αᵢ + … + αⱼ`.
    IntervalA,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Bourbaki => "bourbaki",
            Convention::PaperF4 => "paper-f4",
            Convention::IntervalA => "interval-a",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "bourbaki" => Ok(Convention::Bourbaki),
            "paper-f4" => Ok(Convention::PaperF4),
            "interval-a" | "interval" => Ok(Convention::IntervalA),
            other => Err(format!("unknown convention `{other}`")),
        }
    }
}

impl RootSystem {
    fn check_convention(&self, convention: Convention) -> Result<(), RootSystemError> {
        let ok = match convention {
            Convention::Bourbaki => true,
            Convention::PaperF4 => self.cartan_type == CartanType::F,
            Convention::IntervalA => self.cartan_type == CartanType::A,
        };
        if ok {
            Ok(())
        } else {
            Err(RootSystemError::ConventionMismatch(convention, self.name()))
        }
    }

    /// Writes a root given by Bourbaki coefficients.
    pub fn print_root(
        &self,
        coeffs: &[u32],
        convention: Convention,
    ) -> Result<String, RootSystemError> {
        self.check_convention(convention)?;
        let digits =
            |it: &mut dyn Iterator<Item = &u32>| it.map(|c| c.to_string()).collect::<String>();
        Ok(match convention {
            Convention::Bourbaki => digits(&mut coeffs.iter()),
            Convention::PaperF4 => digits(&mut coeffs.iter().rev()),
            Convention::IntervalA => {
                let i = coeffs.iter().position(|&c| c != 0).map_or(0, |p| p + 1);
                let j = coeffs.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
                format!("({i},{j})")
            }
        })
    }

    /// Reads a root back into Bourbaki coefficients. Interval notation
    /// accepts both `(i,j)` and `i-j`; surrounding parentheses are optional
    /// for coefficient strings.
    pub fn parse_root(
        &self,
        text: &str,
        convention: Convention,
    ) -> Result<Coefficients, RootSystemError> {
        self.check_convention(convention)?;
        let unknown = || RootSystemError::UnknownRoot(text.to_string(), self.name());
        let body = text
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        let coeffs: Coefficients = match convention {
            Convention::Bourbaki | Convention::PaperF4 => {
                let mut c = body
                    .chars()
                    .map(|ch| ch.to_digit(10).ok_or_else(unknown))
                    .collect::<Result<Vec<u32>, _>>()?;
                if convention == Convention::PaperF4 {
                    c.reverse();
                }
                c
            }
            Convention::IntervalA => {
                let (i, j) = body
                    .split_once(',')
                    .or_else(|| body.split_once('-'))
                    .ok_or_else(unknown)?;
                let i: usize = i.trim().parse().map_err(|_| unknown())?;
                let j: usize = j.trim().parse().map_err(|_| unknown())?;
                if i < 1 || i > j || j > self.rank {
                    return Err(unknown());
                }
                (1..=self.rank)
                    .map(|t| u32::from(i <= t && t <= j))
                    .collect()
            }
        };
        if coeffs.len() != self.rank || self.root_index(&coeffs).is_none() {
            return Err(unknown());
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_paper_numbering() {
        let f4 = RootSystem::build(CartanType::F, 4).unwrap();
        let theta = f4.root(f4.theta()).clone();
        assert_eq!(f4.print_root(&theta, Convention::PaperF4).unwrap(), "2432");
        assert_eq!(f4.print_root(&theta, Convention::Bourbaki).unwrap(), "2342");
        let ts = f4.root(f4.theta_short().unwrap()).clone();
        assert_eq!(f4.print_root(&ts, Convention::PaperF4).unwrap(), "2321");
        assert_eq!(f4.parse_root("2432", Convention::PaperF4).unwrap(), theta);
        assert!(f4.parse_root("2433", Convention::PaperF4).is_err());
        assert!(matches!(
            f4.print_root(&theta, Convention::IntervalA),
            Err(RootSystemError::ConventionMismatch(..))
        ));
    }

    #[test]
    fn intervals_in_type_a() {
        let a3 = RootSystem::build(CartanType::A, 3).unwrap();
        assert_eq!(
            a3.print_root(&[1, 1, 0], Convention::IntervalA).unwrap(),
            "(1,2)"
        );
        assert_eq!(
            a3.parse_root("(1,2)", Convention::IntervalA).unwrap(),
            vec![1, 1, 0]
        );
        assert_eq!(
            a3.parse_root("2-3", Convention::IntervalA).unwrap(),
            vec![0, 1, 1]
        );
        assert!(a3.parse_root("3-2", Convention::IntervalA).is_err());
        assert!(a3.parse_root("1-4", Convention::IntervalA).is_err());
        let a = RootSystem::build(CartanType::B, 3).unwrap();
        assert!(a.parse_root("1-1", Convention::IntervalA).is_err());
    }

    #[test]
    fn simple_roots_are_unit_strings() {
        let e6 = RootSystem::build(CartanType::E, 6).unwrap();
        for i in 0..6 {
            let s = e6
                .print_root(e6.root(e6.simple_root(i)), Convention::Bourbaki)
                .unwrap();
            let expected: String = (0..6).map(|j| if i == j { '1' } else { '0' }).collect();
            assert_eq!(s, expected);
        }
    }
}
