//! Brute-force checks of the elementary inequalities the dimension argument
//! rests on. Everything is exact; no floating point.

use serde::Serialize;

use crate::criterion::{check_pair_inequality, Epsilon};
use crate::groups::{floor_log2, omega, FiniteGroup, GroupError, GroupSpec};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaAbReport {
    pub epsilon: Epsilon,
    pub a_max: u32,
    pub b_max: u32,
    /// Every `(a, b)` in the window violating `a + b/2 ≤ b(a − ε) − 1`.
    pub exceptions: Vec<(u32, u32)>,
    /// `(1, b)` fails for every `b` in the window.
    pub one_b_family: bool,
    /// Exceptions outside the `(1, b)` family (all of them when the family
    /// is incomplete).
    pub sporadic: Vec<(u32, u32)>,
}

/// Scans `1 ≤ a ≤ a_max`, `2 ≤ b ≤ b_max`.
pub fn verify_lemma_ab(epsilon: Epsilon, a_max: u32, b_max: u32) -> LemmaAbReport {
    let exceptions: Vec<(u32, u32)> = (1..=a_max)
        .flat_map(|a| (2..=b_max).map(move |b| (a, b)))
        .filter(|&(a, b)| !check_pair_inequality(a, b as u64, epsilon))
        .collect();
    let one_b_family = b_max >= 2 && (2..=b_max).all(|b| exceptions.contains(&(1, b)));
    let sporadic = exceptions
        .iter()
        .copied()
        .filter(|&(a, _)| !(one_b_family && a == 1))
        .collect();
    LemmaAbReport {
        epsilon,
        a_max,
        b_max,
        exceptions,
        one_b_family,
        sporadic,
    }
}

fn deficiency(q: u32, r: u32, s: u32) -> Rational {
    Rational::ONE
        - Rational::recip_of(q as i128)
        - Rational::recip_of(r as i128)
        - Rational::recip_of(s as i128)
}

/// For each `(q, r)` with `2 ≤ q ≤ r ≤ bound`, the least `s ≥ r` (`s ≤
/// bound`) making `k = 1 − 1/q − 1/r − 1/s` positive. `k` grows with `s`,
/// so no other `s` can give a smaller positive value for that pair.
fn pair_minima(bound: u32, require_two_equal: bool) -> Vec<(Rational, (u32, u32, u32))> {
    let mut out = Vec::new();
    for q in 2..=bound {
        for r in q..=bound {
            let s_range = if require_two_equal && q != r {
                r..=r
            } else {
                r..=bound
            };
            if let Some(s) = s_range
                .into_iter()
                .find(|&s| deficiency(q, r, s).is_positive())
            {
                out.push((deficiency(q, r, s), (q, r, s)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub k: Rational,
    pub witnesses: Vec<(u32, u32, u32)>,
}

/// Least positive `1 − 1/q − 1/r − 1/s` over `2 ≤ q ≤ r ≤ s ≤ bound`,
/// optionally with two of the three equal.
pub fn min_positive_deficiency(bound: u32, require_two_equal: bool) -> Option<Deficiency> {
    let minima = pair_minima(bound, require_two_equal);
    let k = minima.iter().map(|(k, _)| *k).min()?;
    let witnesses = minima
        .into_iter()
        .filter(|(v, _)| *v == k)
        .map(|(_, t)| t)
        .collect();
    Some(Deficiency { k, witnesses })
}

/// Minimal positive-deficiency triple for each pair `q ∈ qs`, `r ∈ rs`
/// with `q ≤ r`, in the order the pairs are listed.
pub fn deficiency_candidates(qs: &[u32], rs: &[u32], bound: u32) -> Vec<(u32, u32, u32)> {
    let minima = pair_minima(bound, false);
    qs.iter()
        .flat_map(|&q| rs.iter().map(move |&r| (q, r)))
        .filter(|(q, r)| q <= r)
        .filter_map(|(q, r)| {
            minima
                .iter()
                .find(|(_, (a, b, _))| (*a, *b) == (q, r))
                .map(|(_, t)| *t)
        })
        .collect()
}

/// A group whose subgroup chain length breaks `λ ≤ |F|/2` or
/// `λ ≤ log₂|F|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaCounterexample {
    pub group: String,
    pub order: usize,
    pub lambda: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaAudit {
    pub checked: usize,
    pub counterexamples: Vec<LambdaCounterexample>,
    /// Groups with `λ > Ω(|F|)`; `Ω` is a valid bound, so expected empty.
    pub omega_violations: Vec<LambdaCounterexample>,
}

/// Named test families for the `λ` audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    /// `C_n`, `n ≤ 64`.
    Cyclic,
    /// `D_n` of order `2n`, `n ≤ 32`.
    Dihedral,
    /// `S_d`, `d ≤ 5`.
    Symmetric,
    /// Products of two groups from a small base list.
    Products,
    /// All of the above.
    All,
}

impl GroupFamily {
    pub fn specs(self, cap: usize) -> Vec<GroupSpec> {
        match self {
            GroupFamily::Cyclic => (1..=64).map(GroupSpec::Cyclic).collect(),
            GroupFamily::Dihedral => (1..=32).map(GroupSpec::Dihedral).collect(),
            GroupFamily::Symmetric => (1..=5).map(GroupSpec::Symmetric).collect(),
            GroupFamily::Products => {
                let base: Vec<(GroupSpec, usize)> = (2..=8)
                    .map(|n| (GroupSpec::Cyclic(n), n))
                    .chain((2..=4).map(|n| (GroupSpec::Dihedral(n), 2 * n)))
                    .chain([(GroupSpec::Symmetric(3), 6), (GroupSpec::Symmetric(4), 24)])
                    .collect();
                let mut out = Vec::new();
                for (i, (a, oa)) in base.iter().enumerate() {
                    for (b, ob) in &base[i..] {
                        if oa * ob <= cap {
                            out.push(GroupSpec::product(a.clone(), b.clone()));
                        }
                    }
                }
                out
            }
            GroupFamily::All => [
                GroupFamily::Cyclic,
                GroupFamily::Dihedral,
                GroupFamily::Symmetric,
                GroupFamily::Products,
            ]
            .into_iter()
            .flat_map(|f| f.specs(cap))
            .collect(),
        }
    }
}

/// Computes `λ` exactly for each group and reports bound violations.
pub fn verify_lambda_bounds(specs: &[GroupSpec], cap: usize) -> Result<LambdaAudit, GroupError> {
    let mut audit = LambdaAudit {
        checked: 0,
        counterexamples: Vec::new(),
        omega_violations: Vec::new(),
    };
    for spec in specs {
        let group: FiniteGroup = spec.build(cap)?;
        let order = group.order();
        let lambda = group.lambda_exact();
        let entry = LambdaCounterexample {
            group: spec.to_string(),
            order,
            lambda,
        };
        // λ ≤ log₂|F| ⇔ λ ≤ ⌊log₂|F|⌋ since λ is an integer
        if 2 * lambda as usize > order || lambda > floor_log2(order as u64) {
            audit.counterexamples.push(entry.clone());
        }
        if lambda > omega(order as u64) {
            audit.omega_violations.push(entry);
        }
        audit.checked += 1;
    }
    Ok(audit)
}
