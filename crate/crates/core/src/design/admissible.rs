use thiserror::Error;

/// Existence questions with a known necessary-and-sufficient arithmetic
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    /// Steiner triple system of order `v`.
    Sts { v: usize },
    /// Kirkman triple system of order `v`.
    Kts { v: usize },
    /// `(v,4,1)` design.
    QuadrupleSystem { v: usize },
    /// Kirkman frame of type `g^u`.
    Frame { g: usize, u: usize },
    /// Kirkman frame of type `g^u m^1`.
    FrameWithOne { g: usize, u: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("unknown design kind {0:?}")]
    UnknownKind(String),
    #[error("{kind} takes {expected} parameters, got {found}")]
    Arity { kind: &'static str, expected: usize, found: usize },
    #[error("frames of type g^u m^1 are only classified for 0 < g <= 12 or g divisible by 12 (g = {g})")]
    Unclassified { g: usize },
}

impl Admissibility {
    /// `kind` is one of `sts`, `kts`, `qs`, `frame` (params `g u`) or
    /// `frame1` (params `g u m`), case-insensitive.
    pub fn from_kind(kind: &str, params: &[usize]) -> Result<Self, AdmissibilityError> {
        let arity = |kind: &'static str, expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(AdmissibilityError::Arity { kind, expected, found: params.len() })
            }
        };
        match kind.to_ascii_lowercase().as_str() {
            "sts" => arity("sts", 1).map(|_| Admissibility::Sts { v: params[0] }),
            "kts" => arity("kts", 1).map(|_| Admissibility::Kts { v: params[0] }),
            "qs" | "quadruple" => arity("qs", 1).map(|_| Admissibility::QuadrupleSystem { v: params[0] }),
            "frame" => arity("frame", 2).map(|_| Admissibility::Frame { g: params[0], u: params[1] }),
            "frame1" => {
                arity("frame1", 3).map(|_| Admissibility::FrameWithOne { g: params[0], u: params[1], m: params[2] })
            }
            other => Err(AdmissibilityError::UnknownKind(other.to_string())),
        }
    }
}

pub fn admissible(kind: Admissibility) -> Result<bool, AdmissibilityError> {
    Ok(match kind {
        Admissibility::Sts { v } => v % 6 == 1 || v % 6 == 3,
        Admissibility::Kts { v } => v % 6 == 3,
        Admissibility::QuadrupleSystem { v } => v % 12 == 1 || v % 12 == 4,
        Admissibility::Frame { g, u } => g > 0 && u >= 4 && g % 2 == 0 && (g * (u - 1)) % 3 == 0,
        Admissibility::FrameWithOne { g, u, m } => {
            if g == 0 || !(g <= 12 || g % 12 == 0) {
                return Err(AdmissibilityError::Unclassified { g });
            }
            let size_ok = if u == 3 { m == g } else { m > 0 && 2 * m <= g * (u.saturating_sub(1)) };
            u > 0 && m > 0 && g % 2 == 0 && (g * u) % 3 == 0 && m % 6 == g % 6 && u >= 3 && size_ok
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_and_quadruple_systems() {
        assert!(admissible(Admissibility::Kts { v: 33 }).unwrap());
        assert!(!admissible(Admissibility::Kts { v: 13 }).unwrap());
        assert!(admissible(Admissibility::Sts { v: 13 }).unwrap());
        assert!(!admissible(Admissibility::Sts { v: 11 }).unwrap());
        assert!(admissible(Admissibility::QuadrupleSystem { v: 13 }).unwrap());
        assert!(admissible(Admissibility::QuadrupleSystem { v: 16 }).unwrap());
        assert!(!admissible(Admissibility::QuadrupleSystem { v: 10 }).unwrap());
    }

    #[test]
    fn uniform_frames() {
        assert!(admissible(Admissibility::Frame { g: 2, u: 4 }).unwrap());
        assert!(!admissible(Admissibility::Frame { g: 2, u: 5 }).unwrap());
        assert!(!admissible(Admissibility::Frame { g: 3, u: 4 }).unwrap());
        assert!(!admissible(Admissibility::Frame { g: 6, u: 3 }).unwrap());
        assert!(admissible(Admissibility::Frame { g: 32, u: 4 }).unwrap());
    }

    #[test]
    fn frames_with_one_odd_group() {
        assert!(!admissible(Admissibility::FrameWithOne { g: 4, u: 3, m: 10 }).unwrap());
        assert!(admissible(Admissibility::FrameWithOne { g: 4, u: 3, m: 4 }).unwrap());
        assert!(admissible(Admissibility::FrameWithOne { g: 4, u: 6, m: 10 }).unwrap());
        assert!(!admissible(Admissibility::FrameWithOne { g: 4, u: 6, m: 16 }).unwrap());
        assert!(matches!(
            admissible(Admissibility::FrameWithOne { g: 14, u: 6, m: 2 }),
            Err(AdmissibilityError::Unclassified { g: 14 })
        ));
    }

    #[test]
    fn kinds_parse() {
        assert_eq!(Admissibility::from_kind("KTS", &[9]).unwrap(), Admissibility::Kts { v: 9 });
        assert!(matches!(Admissibility::from_kind("pbd", &[9]), Err(AdmissibilityError::UnknownKind(_))));
        assert!(matches!(Admissibility::from_kind("frame", &[2]), Err(AdmissibilityError::Arity { .. })));
    }
}
