//! Family tokens: the string names under which the CLI and the C ABI
//! expose every generating function in the crate.
//!
//! `f` and `g` are the balanced-string generating function via the
//! transfer-matrix route and the lattice route respectively; `bad` and
//! `good` count walks on `C_k`; the rest are the path families and the
//! ratio sequence.

use thiserror::Error;

use crate::bigpoly::RatFunc;
use crate::lattice::{family_gf, PathFamily};
use crate::transfer::{bad_walk_gf, f_balanced, good_walk_gf};

/// All accepted family tokens, matched case-sensitively (`f` and `F`
/// name different functions).
pub const FAMILY_TOKENS: [&str; 11] = [
    "f", "g", "F", "G", "Fbar", "Gbar", "H", "Hbar", "R", "bad", "good",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}; expected one of f, g, F, G, Fbar, Gbar, H, Hbar, R, bad, good")]
    Unknown(String),
    #[error("family {family} requires k >= {min}, got {k}")]
    KOutOfRange {
        family: &'static str,
        min: i64,
        k: i64,
    },
}

fn check_k(family: &'static str, k: i64, min: i64) -> Result<(), FamilyError> {
    if k < min {
        Err(FamilyError::KOutOfRange { family, min, k })
    } else {
        Ok(())
    }
}

/// Resolves a family token and index to its reduced generating
/// function.
pub fn resolve(token: &str, k: i64) -> Result<RatFunc, FamilyError> {
    let lattice = |family: PathFamily, name: &'static str, min: i64| -> Result<RatFunc, FamilyError> {
        check_k(name, k, min)?;
        Ok(family_gf(family, k).expect("range checked"))
    };
    match token {
        "f" => {
            check_k("f", k, 0)?;
            Ok(f_balanced(k))
        }
        "g" => lattice(PathFamily::Balanced, "g", 0),
        "F" => lattice(PathFamily::F, "F", 0),
        "G" => lattice(PathFamily::G, "G", 0),
        "Fbar" => lattice(PathFamily::FBar, "Fbar", 0),
        "Gbar" => lattice(PathFamily::GBar, "Gbar", 0),
        "H" => lattice(PathFamily::H, "H", 0),
        "Hbar" => lattice(PathFamily::HBar, "Hbar", 0),
        "R" => lattice(PathFamily::R, "R", -1),
        "bad" => {
            check_k("bad", k, 3)?;
            Ok(bad_walk_gf(k).expect("range checked"))
        }
        "good" => {
            check_k("good", k, 3)?;
            Ok(good_walk_gf(k).expect("range checked"))
        }
        other => Err(FamilyError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpoly::Poly;

    #[test]
    fn tokens_resolve() {
        for token in FAMILY_TOKENS {
            let k = if token == "bad" || token == "good" { 3 } else { 2 };
            assert!(resolve(token, k).is_ok(), "{token}");
        }
    }

    #[test]
    fn f_and_g_agree_through_the_surface() {
        for k in 0..=6 {
            assert_eq!(resolve("f", k).unwrap(), resolve("g", k).unwrap());
        }
    }

    #[test]
    fn case_sensitivity_matters() {
        // F_1 = 1/(1-x^2) while f_1 = (1+x)/(1-x)
        let upper = resolve("F", 1).unwrap();
        let lower = resolve("f", 1).unwrap();
        assert_ne!(upper, lower);
        assert_eq!(upper, RatFunc::new(Poly::one(), Poly::from_ints(&[1, 0, -1])));
    }

    #[test]
    fn range_errors() {
        assert_eq!(
            resolve("bad", 2),
            Err(FamilyError::KOutOfRange { family: "bad", min: 3, k: 2 })
        );
        assert_eq!(
            resolve("R", -2),
            Err(FamilyError::KOutOfRange { family: "R", min: -1, k: -2 })
        );
        assert!(matches!(resolve("q", 1), Err(FamilyError::Unknown(_))));
    }
}
