//! The proper-dimension bound: if `vcd(WF) + λ(F) ≤ m` for every
//! finite `F ≤ G`, then `cd_F(G) ≤ m`, and `gd_F(G) ≤ max{3, cd_F(G)}`.
//!
//! For `G = Mod(N_g)` each conjugacy class of finite subgroups has a
//! quotient signature, `vcd(WF)` is read off that signature and `λ(F)` is
//! bounded by `Ω(|F|)` or by a known exact value.

use serde::Serialize;
use thiserror::Error;

use crate::enumerator::{enumerate_all, hurwitz_ceiling};
use crate::groups::omega;
use crate::orbifolds::OrbifoldSignature;
use crate::rational::Rational;
use crate::sigio::{render_signature, ActionRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Every signature compatible with Riemann–Hurwitz and the stabilizer
    /// divisibility test, `λ` bounded by `Ω(|F|)`.
    #[serde(rename = "PureRH")]
    PureRh,
    /// Only the supplied action rows, `λ` bounded by `min(Ω, lambda_max)`.
    Database,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::PureRh => "PureRH",
            Mode::Database => "Database",
        })
    }
}

/// Where a witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// The trivial subgroup.
    Trivial,
    /// Arithmetic compatibility only; no action is known to realize it.
    Rh,
    /// A supplied action row.
    Database,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Trivial => "trivial",
            Source::Rh => "rh",
            Source::Database => "database",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("genus {0} is below 3")]
    GenusTooSmall(u32),
    #[error("database mode needs action rows")]
    MissingActions,
    #[error("no action rows for genus {0}")]
    NoRows(u32),
    #[error("row {signature} has order {order}, Riemann–Hurwitz gives {expected:?}")]
    RowMismatch {
        order: u64,
        signature: String,
        expected: Option<u64>,
    },
    #[error("genus {0} needs a criterion report")]
    MissingReport(u32),
    #[error("report is for genus {report}, asked about genus {asked}")]
    GenusMismatch { report: u32, asked: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub order: u64,
    pub signature: String,
    pub vcd_weyl: u32,
    pub lambda_bound: u32,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub g: u32,
    pub mode: Mode,
    pub m_star: u32,
    pub vcd_target: u32,
    pub cd_upper: u32,
    pub gd_upper: u32,
    pub equal: bool,
    /// The search stopped below `84(g − 2)` (PureRH) or dropped rows above
    /// `max_order` (Database), so `m_star` may be an underestimate.
    pub ceiling_hit: bool,
    pub max_order: u64,
    /// Number of (order, signature) pairs examined, excluding `F = 1`.
    pub examined: usize,
    pub witnesses: Vec<Witness>,
}

/// One finite subgroup class to score.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub order: u64,
    pub signature: OrbifoldSignature,
    pub lambda_bound: u32,
    pub source: Source,
}

/// `(m_star, witnesses)` over the candidates plus the trivial subgroup.
pub fn evaluate_candidates(
    g: u32,
    candidates: impl IntoIterator<Item = Candidate>,
) -> (u32, Vec<Witness>) {
    let trivial = Candidate {
        order: 1,
        signature: OrbifoldSignature::new(false, g, vec![], vec![])
            .expect("g ≥ 1 gives a valid signature"),
        lambda_bound: 0,
        source: Source::Trivial,
    };
    let mut best = 0;
    let mut witnesses: Vec<Witness> = Vec::new();
    for c in std::iter::once(trivial).chain(candidates) {
        let vcd_weyl = c.signature.vcd_weyl();
        let score = vcd_weyl + c.lambda_bound;
        if score < best {
            continue;
        }
        if score > best {
            best = score;
            witnesses.clear();
        }
        witnesses.push(Witness {
            order: c.order,
            signature: render_signature(&c.signature),
            vcd_weyl,
            lambda_bound: c.lambda_bound,
            source: c.source,
        });
    }
    witnesses.sort_by(|a, b| {
        (a.order, &a.signature, a.lambda_bound).cmp(&(b.order, &b.signature, b.lambda_bound))
    });
    witnesses.dedup();
    (best, witnesses)
}

/// Runs the criterion for `N_g`.
///
/// `max_order` defaults to `84(g − 2)`. In database mode rows for other
/// genera are ignored and every row for `g` is checked against
/// Riemann–Hurwitz.
pub fn check_criterion(
    g: u32,
    mode: Mode,
    actions: Option<&[ActionRow]>,
    max_order: Option<u64>,
) -> Result<CriterionReport, CriterionError> {
    if g < 3 {
        return Err(CriterionError::GenusTooSmall(g));
    }
    let ceiling = hurwitz_ceiling(g);
    let max_order = max_order.unwrap_or(ceiling);
    let (candidates, ceiling_hit) = match mode {
        Mode::PureRh => {
            let cands: Vec<Candidate> = enumerate_all(g, max_order)
                .into_iter()
                .map(|(order, signature)| Candidate {
                    order,
                    signature,
                    lambda_bound: omega(order),
                    source: Source::Rh,
                })
                .collect();
            (cands, max_order < ceiling)
        }
        Mode::Database => {
            let rows: Vec<&ActionRow> = actions
                .ok_or(CriterionError::MissingActions)?
                .iter()
                .filter(|r| r.genus == g)
                .collect();
            if rows.is_empty() {
                return Err(CriterionError::NoRows(g));
            }
            for r in &rows {
                let expected = r.signature.rh_order(g);
                if expected != Some(r.order) {
                    return Err(CriterionError::RowMismatch {
                        order: r.order,
                        signature: r.signature.to_string(),
                        expected,
                    });
                }
            }
            let kept: Vec<Candidate> = rows
                .iter()
                .filter(|r| r.order <= max_order)
                .map(|r| Candidate {
                    order: r.order,
                    signature: r.signature.clone(),
                    lambda_bound: r
                        .lambda_max
                        .map_or(omega(r.order), |l| l.min(omega(r.order))),
                    source: Source::Database,
                })
                .collect();
            let dropped = kept.len() < rows.len();
            (kept, dropped)
        }
    };
    let examined = candidates.len();
    let (m_star, witnesses) = evaluate_candidates(g, candidates);
    let vcd_target = 2 * g - 5;
    Ok(CriterionReport {
        g,
        mode,
        m_star,
        vcd_target,
        cd_upper: m_star,
        gd_upper: m_star.max(3),
        equal: m_star == vcd_target && vcd_target >= 3,
        ceiling_hit,
        max_order,
        examined,
        witnesses,
    })
}

/// The `ε` of the pair inequality `a + b/2 ≤ b(a − ε) − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Epsilon {
    Zero,
    Half,
    One,
}

impl Epsilon {
    pub const ALL: [Epsilon; 3] = [Epsilon::Zero, Epsilon::Half, Epsilon::One];

    pub fn value(self) -> Rational {
        match self {
            Epsilon::Zero => Rational::ZERO,
            Epsilon::Half => Rational::new(1, 2),
            Epsilon::One => Rational::ONE,
        }
    }
}

/// `vcd(WF) + |F|/2 ≤ |F|(vcd(WF) − ε) − 1`, exactly.
pub fn check_pair_inequality(vcd_wf: u32, order: u64, epsilon: Epsilon) -> bool {
    let a = Rational::from(vcd_wf);
    let b = Rational::from(order);
    a + b / Rational::from_integer(2) <= b * (a - epsilon.value()) - Rational::ONE
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub g: u32,
    pub vcd: u32,
    pub cd: (u32, u32),
    pub gd: (u32, u32),
    pub equal: bool,
}

/// Dimension bracket for `Mod(N_g)`.
///
/// `g = 1, 2` give finite groups (all dimensions 0); `Mod(N_3)` is
/// virtually free and infinite, so everything is 1. From `g = 4` on the
/// bracket `vcd ≤ cd_F ≤ gd_F ≤ max{3, cd_F}` is closed with a report.
pub fn conclude(g: u32, report: Option<&CriterionReport>) -> Result<Conclusion, CriterionError> {
    let fixed = |d| Conclusion {
        g,
        vcd: d,
        cd: (d, d),
        gd: (d, d),
        equal: true,
    };
    match g {
        0 => Err(CriterionError::GenusTooSmall(0)),
        1 | 2 => Ok(fixed(0)),
        3 => Ok(fixed(1)),
        _ => {
            let r = report.ok_or(CriterionError::MissingReport(g))?;
            if r.g != g {
                return Err(CriterionError::GenusMismatch {
                    report: r.g,
                    asked: g,
                });
            }
            let vcd = 2 * g - 5;
            let cd_hi = r.cd_upper.max(vcd);
            let equal = cd_hi == vcd && vcd >= 3;
            Ok(Conclusion {
                g,
                vcd,
                cd: (vcd, cd_hi),
                gd: (vcd, cd_hi.max(3)),
                equal,
            })
        }
    }
}
