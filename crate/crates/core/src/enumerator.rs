//! Exhaustive search for quotient signatures of a closed non-orientable
//! surface `N_g` under a group of given order.
//!
//! Riemann–Hurwitz alone leaves infinitely many candidates for some orders
//! (an order-2 quotient of `N_5` could in principle be a sphere with four
//! cone points of orders 3, 7, 43, 1806). The search therefore also imposes
//! the local-stabilizer condition from [`OrbifoldSignature::stabilizers_divide`]:
//! every cone order divides `|F|`, every corner order `p` has `2p | |F|`,
//! and mirrors need `|F|` even. The result is still a superset of the
//! signatures realized by actual actions.
//!
//! Corner reflectors on one boundary circle are emitted in non-decreasing
//! order; the Euler characteristic and the Weyl-group vcd depend only on the
//! multiset, so other cyclic arrangements would repeat the same data.

use std::collections::BTreeSet;

use crate::orbifolds::{OrbifoldSignature, MAX_POINT_ORDER};
use crate::rational::Rational;
use crate::sigio::render_signature;

/// `84(g − 2)`: `|χ|` of a hyperbolic 2-orbifold is at least `1/84`
/// (attained by the (2,3,7) reflection triangle), so no larger group acts.
pub fn hurwitz_ceiling(g: u32) -> u64 {
    84 * (g as u64).saturating_sub(2)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

struct Search {
    /// Admissible cone orders, ascending.
    cones: Vec<u32>,
    /// Admissible corner orders, ascending.
    corners: Vec<u32>,
    /// Smallest possible `1/q` or `1/(2p)` term.
    min_term: Rational,
}

impl Search {
    fn new(order: u64) -> Self {
        let divs = divisors(order);
        let cap = MAX_POINT_ORDER as u64;
        let cones: Vec<u32> = divs
            .iter()
            .filter(|&&q| q >= 2 && q <= cap)
            .map(|&q| q as u32)
            .collect();
        let corners: Vec<u32> = divs
            .iter()
            .filter(|&&d| d % 2 == 0 && d >= 4 && d / 2 <= cap)
            .map(|&d| (d / 2) as u32)
            .collect();
        Search {
            cones,
            corners,
            min_term: Rational::new(1, order as i128),
        }
    }

    /// All non-decreasing tuples from `values` of length `k` whose terms
    /// `1/(scale·v)` sum to `residue`, given that `reserve` more terms
    /// (each in `(min_term, reserve_max]`) will follow.
    #[allow(clippy::too_many_arguments)]
    fn tuples(
        &self,
        values: &[u32],
        scale: i128,
        k: usize,
        residue: Rational,
        reserve: usize,
        reserve_max: Rational,
        prefix: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Rational)>,
    ) {
        if k == 0 {
            out.push((prefix.clone(), residue));
            return;
        }
        let start = prefix
            .last()
            .map_or(0, |&last| values.partition_point(|&v| v < last));
        for &v in &values[start..] {
            let term = Rational::new(1, scale * v as i128);
            let count = Rational::from_integer(k as i128);
            let reserve_n = Rational::from_integer(reserve as i128);
            // terms only shrink from here on
            if term * count + reserve_max * reserve_n < residue {
                break;
            }
            let rest = residue - term;
            let lower = self.min_term * Rational::from_integer((k - 1 + reserve) as i128);
            if rest < lower {
                continue;
            }
            if k == 1 && reserve == 0 && !rest.is_zero() {
                continue;
            }
            prefix.push(v);
            self.tuples(
                values,
                scale,
                k - 1,
                rest,
                reserve,
                reserve_max,
                prefix,
                out,
            );
            prefix.pop();
        }
    }
}

/// Set partitions of `items` (sorted) into exactly `boxes` non-empty
/// blocks, each block sorted, blocks sorted; duplicates removed.
fn split_into_boxes(items: &[u32], boxes: usize) -> BTreeSet<Vec<Vec<u32>>> {
    fn go(
        items: &[u32],
        i: usize,
        boxes: usize,
        current: &mut Vec<Vec<u32>>,
        out: &mut BTreeSet<Vec<Vec<u32>>>,
    ) {
        if items.len() - i < boxes - current.len() {
            return;
        }
        if i == items.len() {
            if current.len() == boxes {
                let mut blocks = current.clone();
                blocks.sort();
                out.insert(blocks);
            }
            return;
        }
        for b in 0..current.len() {
            current[b].push(items[i]);
            go(items, i + 1, boxes, current, out);
            current[b].pop();
        }
        if current.len() < boxes {
            current.push(vec![items[i]]);
            go(items, i + 1, boxes, current, out);
            current.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(items, 0, boxes, &mut Vec::new(), &mut out);
    out
}

fn canonical_sort(sigs: &mut [OrbifoldSignature]) {
    sigs.sort_by_cached_key(|s| {
        (
            s.is_orientable(),
            s.genus(),
            s.boundary_count(),
            render_signature(s),
        )
    });
}

/// Every signature with `order · χ(O) = 2 − g` whose local stabilizers fit
/// in a group of that order, duplicate-free and canonically sorted.
pub fn enumerate_signatures(g: u32, order: u64) -> Vec<OrbifoldSignature> {
    if g < 3 || order < 2 {
        return Vec::new();
    }
    let search = Search::new(order);
    let target = Rational::new(2 - g as i128, order as i128);
    let half = Rational::new(1, 2);
    let quarter = Rational::new(1, 4);
    let mut found = BTreeSet::new();

    for orientable in [false, true] {
        for genus in u32::from(!orientable).. {
            let base = if orientable {
                2 - 2 * genus as i64
            } else {
                2 - genus as i64
            };
            if Rational::from(base) < target {
                break;
            }
            for b in 0u32.. {
                // deficit to be paid by cone points and corners
                let d = Rational::from(base - b as i64) - target;
                if d.is_negative() {
                    break;
                }
                if b > 0 && !order.is_multiple_of(2) {
                    continue;
                }
                let e_max = (d / half).floor() as usize;
                for e in 0..=e_max {
                    let c_room = (d - Rational::from(e as u64) * half) / quarter;
                    let c_max = c_room.floor() as usize;
                    for c in 0..=c_max {
                        let residue = Rational::from(e as i64) + Rational::new(c as i128, 2) - d;
                        if e + c == 0 {
                            if !d.is_zero() {
                                continue;
                            }
                        } else if !residue.is_positive() {
                            continue;
                        }
                        for b_c in 0..=b.min(c as u32) {
                            if (c == 0) != (b_c == 0) {
                                continue;
                            }
                            let b_m = b - b_c;
                            emit(
                                &search,
                                orientable,
                                genus,
                                (e, c, b_m, b_c),
                                residue,
                                &mut found,
                            );
                        }
                    }
                }
            }
        }
    }

    let mut sigs: Vec<OrbifoldSignature> = found.into_iter().collect();
    debug_assert!(sigs
        .iter()
        .all(|s| s.orbifold_euler() * Rational::from(order) == Rational::from(2 - g as i64)));
    canonical_sort(&mut sigs);
    sigs
}

fn emit(
    search: &Search,
    orientable: bool,
    genus: u32,
    (e, c, b_m, b_c): (usize, usize, u32, u32),
    residue: Rational,
    found: &mut BTreeSet<OrbifoldSignature>,
) {
    if e + c == 0 {
        let boundaries = vec![Vec::new(); b_m as usize];
        if let Ok(sig) = OrbifoldSignature::new(orientable, genus, vec![], boundaries) {
            found.insert(sig);
        }
        return;
    }
    let quarter = Rational::new(1, 4);
    let mut cone_tuples = Vec::new();
    search.tuples(
        &search.cones,
        1,
        e,
        residue,
        c,
        quarter,
        &mut Vec::new(),
        &mut cone_tuples,
    );
    for (cones, rest) in cone_tuples {
        let mut corner_tuples = Vec::new();
        search.tuples(
            &search.corners,
            2,
            c,
            rest,
            0,
            Rational::ZERO,
            &mut Vec::new(),
            &mut corner_tuples,
        );
        for (corners, left) in corner_tuples {
            debug_assert!(left.is_zero());
            for mut boxes in split_into_boxes(&corners, b_c as usize) {
                boxes.extend(std::iter::repeat_with(Vec::new).take(b_m as usize));
                if let Ok(sig) = OrbifoldSignature::new(orientable, genus, cones.clone(), boxes) {
                    found.insert(sig);
                }
            }
        }
    }
}

/// [`enumerate_signatures`] for every order in `2..=max_order`, ascending.
pub fn enumerate_all(g: u32, max_order: u64) -> Vec<(u64, OrbifoldSignature)> {
    (2..=max_order)
        .flat_map(|order| {
            enumerate_signatures(g, order)
                .into_iter()
                .map(move |sig| (order, sig))
        })
        .collect()
}
