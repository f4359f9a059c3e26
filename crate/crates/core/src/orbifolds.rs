//! Quotient 2-orbifold signatures and their Euler characteristic bookkeeping.
//!
//! A signature `(g_F; ±; [q_1,…]; {(p_1,…), …})` records the genus and
//! orientability of the underlying surface, the orders of the elliptic
//! (cone) points and, per boundary circle of the underlying surface, the
//! orders of its corner reflectors. A boundary with no corners is a pure
//! mirror.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rational;
use crate::surfaces::{Surface, SurfaceKind};

/// Largest cone/corner order accepted in a signature.
pub const MAX_POINT_ORDER: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("genus: a non-orientable quotient has genus at least 1")]
    NonOrientableGenusZero,
    #[error("{field}: order {value} is below 2")]
    OrderTooSmall { field: &'static str, value: u32 },
    #[error("{field}: order {value} exceeds {}", MAX_POINT_ORDER)]
    OrderTooLarge { field: &'static str, value: u32 },
    #[error("orders: the Euler characteristic denominator exceeds 2^64")]
    TooComplex,
}

/// `lcm` of all `q` and `2p`, the denominator scale of `χ(O)`; `None` past
/// `2^64`, which keeps every derived quantity well inside `i128`.
fn euler_scale(elliptic: &[u32], corners: impl Iterator<Item = u32>) -> Option<u64> {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut l: u128 = 1;
    for k in elliptic
        .iter()
        .map(|&q| q as u128)
        .chain(corners.map(|p| 2 * p as u128))
    {
        l = l / gcd(l, k) * k;
        if l > u64::MAX as u128 {
            return None;
        }
    }
    Some(l as u64)
}

/// One boundary circle of the underlying surface, with its corner reflector
/// orders read around the circle. Stored in dihedral normal form: the
/// lexicographically least rotation of the sequence or of its reverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryComponent {
    corners: Vec<u32>,
}

impl BoundaryComponent {
    pub fn mirror() -> Self {
        BoundaryComponent {
            corners: Vec::new(),
        }
    }

    pub fn new(corners: Vec<u32>) -> Result<Self, SignatureError> {
        check_orders("corner_orders", &corners)?;
        Ok(BoundaryComponent {
            corners: dihedral_normal_form(&corners),
        })
    }

    pub fn corners(&self) -> &[u32] {
        &self.corners
    }

    pub fn is_mirror(&self) -> bool {
        self.corners.is_empty()
    }
}

fn dihedral_normal_form(seq: &[u32]) -> Vec<u32> {
    let n = seq.len();
    let reversed: Vec<u32> = seq.iter().rev().copied().collect();
    let mut best = seq.to_vec();
    for base in [seq, reversed.as_slice()] {
        for shift in 0..n {
            let cand: Vec<u32> = base[shift..]
                .iter()
                .chain(&base[..shift])
                .copied()
                .collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

fn check_orders(field: &'static str, orders: &[u32]) -> Result<(), SignatureError> {
    for &value in orders {
        if value < 2 {
            return Err(SignatureError::OrderTooSmall { field, value });
        }
        if value > MAX_POINT_ORDER {
            return Err(SignatureError::OrderTooLarge { field, value });
        }
    }
    Ok(())
}

/// Canonical quotient-orbifold signature.
///
/// Elliptic orders are sorted ascending and boundaries are sorted by their
/// normalized corner tuples (mirror-only circles first), so two signatures
/// describing the same data compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbifoldSignature {
    orientable: bool,
    genus: u32,
    elliptic: Vec<u32>,
    boundaries: Vec<BoundaryComponent>,
}

impl OrbifoldSignature {
    pub fn new(
        orientable: bool,
        genus: u32,
        mut elliptic: Vec<u32>,
        boundaries: Vec<Vec<u32>>,
    ) -> Result<Self, SignatureError> {
        if !orientable && genus == 0 {
            return Err(SignatureError::NonOrientableGenusZero);
        }
        check_orders("elliptic_orders", &elliptic)?;
        elliptic.sort_unstable();
        let mut boundaries = boundaries
            .into_iter()
            .map(BoundaryComponent::new)
            .collect::<Result<Vec<_>, _>>()?;
        boundaries.sort();
        euler_scale(
            &elliptic,
            boundaries.iter().flat_map(|b| b.corners.iter().copied()),
        )
        .ok_or(SignatureError::TooComplex)?;
        Ok(OrbifoldSignature {
            orientable,
            genus,
            elliptic,
            boundaries,
        })
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    /// `g_F`, genus of the underlying surface.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn elliptic_orders(&self) -> &[u32] {
        &self.elliptic
    }

    pub fn boundaries(&self) -> &[BoundaryComponent] {
        &self.boundaries
    }

    /// `e_F`
    pub fn elliptic_count(&self) -> u32 {
        self.elliptic.len() as u32
    }

    /// `c_F`
    pub fn corner_count(&self) -> u32 {
        self.boundaries.iter().map(|b| b.corners.len() as u32).sum()
    }

    /// `b_m`, boundary circles made only of mirror points.
    pub fn mirror_boundaries(&self) -> u32 {
        self.boundaries.iter().filter(|b| b.is_mirror()).count() as u32
    }

    /// `b_c`, boundary circles carrying at least one corner.
    pub fn cornered_boundaries(&self) -> u32 {
        self.boundaries.len() as u32 - self.mirror_boundaries()
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundaries.len() as u32
    }

    fn all_corners(&self) -> impl Iterator<Item = u32> + '_ {
        self.boundaries
            .iter()
            .flat_map(|b| b.corners.iter().copied())
    }

    /// `(E_F, C_F)`: sums of `1 - 1/q` over cone points and of `1 - 1/p`
    /// over corner reflectors.
    pub fn ef_cf(&self) -> (Rational, Rational) {
        let deficit = |k: u32| Rational::ONE - Rational::recip_of(k as i128);
        let e = self.elliptic.iter().map(|&q| deficit(q)).sum();
        let c = self.all_corners().map(deficit).sum();
        (e, c)
    }

    /// Euler characteristic of the underlying surface with its boundary.
    pub fn underlying_euler(&self) -> i64 {
        let g = self.genus as i64;
        let b = self.boundary_count() as i64;
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    /// `χ(O_F) = χ(S_F) - C_F/2 - E_F`.
    pub fn orbifold_euler(&self) -> Rational {
        let (e, c) = self.ef_cf();
        Rational::from(self.underlying_euler()) - c / Rational::from_integer(2) - e
    }

    /// Group order forced by `|F| χ(O_F) = χ(N_g)`, when that is a positive
    /// integer. `None` means the signature cannot be a quotient of `N_g`.
    pub fn rh_order(&self, g: u32) -> Option<u64> {
        if g < 3 {
            return None;
        }
        let chi = self.orbifold_euler();
        if !chi.is_negative() {
            return None;
        }
        let order = Rational::from_integer(2 - g as i128) / chi;
        (order.is_integer() && order.is_positive()).then(|| order.numer() as u64)
    }

    /// Local stabilizers must embed in a group of the given order: cone
    /// points of order `q` need `q | order`, corners of order `p` need
    /// `2p | order`, and any mirror needs an involution.
    pub fn stabilizers_divide(&self, order: u64) -> bool {
        let divides = |k: u64| k != 0 && order.is_multiple_of(k);
        self.elliptic.iter().all(|&q| divides(q as u64))
            && self.all_corners().all(|p| divides(2 * p as u64))
            && (self.boundaries.is_empty() || divides(2))
    }

    /// Underlying surface with `b_c` boundary components and `e_F + b_m`
    /// punctures.
    pub fn underlying_surface(&self) -> Surface {
        let kind = if self.orientable {
            SurfaceKind::Orientable
        } else {
            SurfaceKind::NonOrientable
        };
        Surface::new(
            kind,
            self.genus,
            self.elliptic_count() + self.mirror_boundaries(),
            self.cornered_boundaries(),
        )
        .expect("signature invariants give a valid surface")
    }

    /// vcd of the Weyl group of a finite subgroup with this quotient.
    pub fn vcd_weyl(&self) -> u32 {
        self.underlying_surface().vcd_mcg()
    }

    /// Checks `e_F/2 ≤ E_F ≤ e_F` and `c_F/2 ≤ C_F ≤ c_F`.
    pub fn validate_inequalities(&self) -> bool {
        let (e, c) = self.ef_cf();
        let half = Rational::new(1, 2);
        let ef = Rational::from(self.elliptic_count());
        let cf = Rational::from(self.corner_count());
        ef * half <= e && e <= ef && cf * half <= c && c <= cf
    }
}

impl Serialize for OrbifoldSignature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
