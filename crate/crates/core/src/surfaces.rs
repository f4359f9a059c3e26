//! Surfaces `S_{g,n}^b` / `N_{g,n}^b` and the closed-form vcd of their
//! mapping class groups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SurfaceKind {
    Orientable,
    NonOrientable,
}

impl SurfaceKind {
    /// `S` or `N`, the letter used in surface literals.
    pub fn letter(self) -> char {
        match self {
            SurfaceKind::Orientable => 'S',
            SurfaceKind::NonOrientable => 'N',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("non-orientable surfaces have genus at least 1")]
    NonOrientableGenusZero,
    #[error("malformed surface literal `{0}` (expected N:g,n,b or S:g,n,b)")]
    Malformed(String),
}

/// A connected surface of finite type: genus, `n` punctures and `b` boundary
/// components. Non-orientable genus counts cross-caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Surface {
    kind: SurfaceKind,
    genus: u32,
    punctures: u32,
    boundaries: u32,
}

impl Surface {
    pub fn new(
        kind: SurfaceKind,
        genus: u32,
        punctures: u32,
        boundaries: u32,
    ) -> Result<Self, SurfaceError> {
        if kind == SurfaceKind::NonOrientable && genus == 0 {
            return Err(SurfaceError::NonOrientableGenusZero);
        }
        Ok(Surface {
            kind,
            genus,
            punctures,
            boundaries,
        })
    }

    /// Closed non-orientable surface `N_g`. Panics for `g = 0`.
    pub fn closed_non_orientable(genus: u32) -> Self {
        Surface::new(SurfaceKind::NonOrientable, genus, 0, 0).expect("genus must be ≥ 1")
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn boundaries(&self) -> u32 {
        self.boundaries
    }

    pub fn is_orientable(&self) -> bool {
        self.kind == SurfaceKind::Orientable
    }

    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let base = match self.kind {
            SurfaceKind::Orientable => 2 - 2 * g,
            SurfaceKind::NonOrientable => 2 - g,
        };
        base - self.punctures as i64 - self.boundaries as i64
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.euler_characteristic() < 0
    }

    /// vcd of the mapping class group (boundary fixed pointwise, punctures
    /// permutable). Covers every valid surface, including those with `χ ≥ 0`.
    pub fn vcd_mcg(&self) -> u32 {
        let (g, n, b) = (
            self.genus as i64,
            self.punctures as i64,
            self.boundaries as i64,
        );
        let v = match self.kind {
            SurfaceKind::Orientable => match g {
                0 if n + b <= 3 => b,
                0 => n + 2 * b - 3,
                1 if n + b == 0 => 1 + b,
                1 => n + 2 * b,
                _ if n + b == 0 => 4 * g - 5,
                _ => 4 * g + n + 2 * b - 4,
            },
            SurfaceKind::NonOrientable => match g {
                1 if n + b <= 2 => b,
                1 => n + 2 * b - 2,
                2 => n + 2 * b,
                _ if n + b == 0 => 2 * g - 5,
                _ => 2 * g + n + 2 * b - 4,
            },
        };
        debug_assert!(v >= 0);
        v as u32
    }

    /// The pure subgroup has finite index, so its vcd is the same.
    pub fn vcd_pure_mcg(&self) -> u32 {
        self.vcd_mcg()
    }

    /// Proven bracket for the proper cohomological/geometric dimension of the
    /// (pure, when punctured) mapping class group.
    pub fn known_dimension_bounds(&self) -> DimensionBounds {
        let vcd = self.vcd_mcg();
        let slack = match self.kind {
            SurfaceKind::Orientable => 0,
            // Torsion-free as soon as there is a boundary component.
            SurfaceKind::NonOrientable if self.boundaries > 0 => 0,
            SurfaceKind::NonOrientable => match self.genus {
                4 => 3,
                5 => 1,
                _ => 0,
            },
        };
        DimensionBounds {
            lower: vcd,
            upper: vcd + slack,
            equal: slack == 0,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{},{},{}",
            self.kind.letter(),
            self.genus,
            self.punctures,
            self.boundaries
        )
    }
}

/// Parses `N:g,n,b` / `S:g,n,b`; `N:g` and `N:g,n` are accepted shorthands.
impl FromStr for Surface {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SurfaceError::Malformed(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(malformed)?;
        let kind = match kind.trim() {
            "N" | "n" => SurfaceKind::NonOrientable,
            "S" | "s" => SurfaceKind::Orientable,
            _ => return Err(malformed()),
        };
        let nums = rest
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| malformed()))
            .collect::<Result<Vec<_>, _>>()?;
        match nums.as_slice() {
            [g] => Surface::new(kind, *g, 0, 0),
            [g, n] => Surface::new(kind, *g, *n, 0),
            [g, n, b] => Surface::new(kind, *g, *n, *b),
            _ => Err(malformed()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionBounds {
    pub lower: u32,
    pub upper: u32,
    pub equal: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use SurfaceKind::*;

    fn s(kind: SurfaceKind, g: u32, n: u32, b: u32) -> Surface {
        Surface::new(kind, g, n, b).unwrap()
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(s(NonOrientable, 6, 0, 0).euler_characteristic(), -4);
        assert_eq!(s(Orientable, 0, 0, 0).euler_characteristic(), 2);
        assert_eq!(s(NonOrientable, 1, 1, 1).euler_characteristic(), -1);
    }

    #[test]
    fn hyperbolicity() {
        assert!(s(NonOrientable, 3, 0, 0).is_hyperbolic());
        // Möbius band
        assert!(!s(NonOrientable, 1, 0, 1).is_hyperbolic());
        assert!(!s(Orientable, 1, 0, 0).is_hyperbolic());
    }

    #[test]
    fn vcd_examples() {
        assert_eq!(s(NonOrientable, 6, 0, 0).vcd_mcg(), 7);
        assert_eq!(s(NonOrientable, 4, 0, 0).vcd_mcg(), 3);
        assert_eq!(s(Orientable, 0, 3, 0).vcd_mcg(), 0);
        assert_eq!(s(NonOrientable, 3, 0, 1).vcd_mcg(), 4);
        assert_eq!(s(NonOrientable, 1, 3, 0).vcd_mcg(), 1);
        assert_eq!(s(Orientable, 1, 0, 0).vcd_mcg(), 1);
    }

    #[test]
    fn pure_vcd_examples() {
        assert_eq!(s(NonOrientable, 6, 2, 0).vcd_pure_mcg(), 10);
        assert_eq!(s(NonOrientable, 2, 0, 0).vcd_pure_mcg(), 0);
        assert_eq!(s(NonOrientable, 2, 1, 0).vcd_pure_mcg(), 1);
    }

    #[test]
    fn dimension_bounds() {
        let b = |g| s(NonOrientable, g, 0, 0).known_dimension_bounds();
        assert_eq!(
            b(7),
            DimensionBounds {
                lower: 9,
                upper: 9,
                equal: true
            }
        );
        assert_eq!(
            b(4),
            DimensionBounds {
                lower: 3,
                upper: 6,
                equal: false
            }
        );
        assert_eq!(
            b(5),
            DimensionBounds {
                lower: 5,
                upper: 6,
                equal: false
            }
        );
        let punctured = s(NonOrientable, 4, 2, 0).known_dimension_bounds();
        assert_eq!((punctured.lower, punctured.upper), (6, 9));
        assert!(s(NonOrientable, 4, 2, 1).known_dimension_bounds().equal);
        assert!(s(Orientable, 4, 0, 0).known_dimension_bounds().equal);
    }

    #[test]
    fn rejects_non_orientable_genus_zero() {
        assert_eq!(
            Surface::new(NonOrientable, 0, 1, 0),
            Err(SurfaceError::NonOrientableGenusZero)
        );
    }

    #[test]
    fn literal_round_trip() {
        let x: Surface = "N:6,0,0".parse().unwrap();
        assert_eq!(x, Surface::closed_non_orientable(6));
        assert_eq!(x.to_string(), "N:6,0,0");
        assert_eq!("S:1".parse::<Surface>().unwrap(), s(Orientable, 1, 0, 0));
        assert!("N:0,1,1".parse::<Surface>().is_err());
        assert!("X:1,2,3".parse::<Surface>().is_err());
        assert!("N:1,2,3,4".parse::<Surface>().is_err());
    }

    #[test]
    fn euler_drops_by_one_per_puncture_or_boundary() {
        for kind in [Orientable, NonOrientable] {
            for g in 1..6 {
                for n in 0..5 {
                    for b in 0..5 {
                        let chi = s(kind, g, n, b).euler_characteristic();
                        assert_eq!(s(kind, g, n + 1, b).euler_characteristic(), chi - 1);
                        assert_eq!(s(kind, g, n, b + 1).euler_characteristic(), chi - 1);
                    }
                }
            }
        }
    }
}
