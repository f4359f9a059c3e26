//! Small finite groups as Cayley tables, their subgroup lattices and the
//! length `λ(F)` of the longest strictly increasing chain
//! `1 = F_0 < F_1 < … < F_λ = F`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::rational::Rational;

pub const DEFAULT_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds cap {cap} (reached {reached})")]
    CapExceeded { reached: usize, cap: usize },
    #[error("malformed cycle notation: {0}")]
    MalformedCycles(String),
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown group spec `{0}` (expected Cn, Dn, Sn or AxB)")]
    UnknownSpec(String),
}

/// A finite group given by its multiplication table. Element `0` is the
/// identity; `table[i * order + j]` is the index of `i·j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        Self::cyclic_with_cap(n, DEFAULT_CAP)
    }

    pub fn cyclic_with_cap(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "cyclic order must be ≥ 1".into(),
            ));
        }
        check_cap(n, cap)?;
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32))
            .collect();
        Ok(FiniteGroup { order: n, table })
    }

    /// Dihedral group of order `2n`, elements `r^k s^e` at index `k + n·e`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        Self::dihedral_with_cap(n, DEFAULT_CAP)
    }

    pub fn dihedral_with_cap(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "dihedral index must be ≥ 1".into(),
            ));
        }
        let order = 2 * n;
        check_cap(order, cap)?;
        let mut table = vec![0u32; order * order];
        for x in 0..order {
            let (a, e) = (x % n, x / n);
            for y in 0..order {
                let (b, f) = (y % n, y / n);
                // r^a s^e · r^b s^f = r^(a ± b) s^(e+f)
                let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                table[x * order + y] = (k + n * ((e + f) % 2)) as u32;
            }
        }
        Ok(FiniteGroup { order, table })
    }

    pub fn symmetric(degree: usize) -> Result<Self, GroupError> {
        Self::symmetric_with_cap(degree, DEFAULT_CAP)
    }

    pub fn symmetric_with_cap(degree: usize, cap: usize) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be ≥ 1".into()));
        }
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        let mut transposition: Vec<usize> = (0..degree).collect();
        if degree > 1 {
            transposition.swap(0, 1);
        }
        Self::from_permutation_images(&[cycle, transposition], degree, cap)
    }

    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        Self::direct_product_with_cap(g, h, DEFAULT_CAP)
    }

    pub fn direct_product_with_cap(
        g: &FiniteGroup,
        h: &FiniteGroup,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let order = g.order * h.order;
        check_cap(order, cap)?;
        let mut table = vec![0u32; order * order];
        for x in 0..order {
            let (x1, x2) = (x / h.order, x % h.order);
            for y in 0..order {
                let (y1, y2) = (y / h.order, y % h.order);
                table[x * order + y] = (g.mul(x1, y1) * h.order + h.mul(x2, y2)) as u32;
            }
        }
        Ok(FiniteGroup { order, table })
    }

    /// Group generated by permutations written in cycle notation on points
    /// `1..=degree`, e.g. `"(1 2 3 4 5), (1 2)"` or `"(1 2)(3 4); (1 3)(2 4)"`.
    pub fn from_permutations(generators: &str, degree: usize) -> Result<Self, GroupError> {
        Self::from_permutations_with_cap(generators, degree, DEFAULT_CAP)
    }

    pub fn from_permutations_with_cap(
        generators: &str,
        degree: usize,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let gens = parse_generators(generators, degree)?;
        Self::from_permutation_images(&gens, degree, cap)
    }

    fn from_permutation_images(
        gens: &[Vec<usize>],
        degree: usize,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        // x·g applies x first, then g
        let compose = |a: &[usize], b: &[usize]| a.iter().map(|&i| b[i]).collect::<Vec<_>>();
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = compose(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            reached: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let order = elements.len();
        let mut table = vec![0u32; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * order + j] = index[&compose(a, b)] as u32;
            }
        }
        Ok(FiniteGroup { order, table })
    }

    /// Subgroup generated by the given element indices.
    fn closure(&self, gens: &[usize]) -> Bitset {
        let mut set = Bitset::new(self.order);
        let mut elems = vec![0usize];
        set.insert(0);
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let p = self.mul(x, g);
                if set.insert(p) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        set
    }

    pub fn subgroup_lattice(&self) -> SubgroupLattice {
        SubgroupLattice::build(self)
    }

    /// `λ(G)`, the length of a longest chain of subgroups from `1` to `G`.
    pub fn lambda_exact(&self) -> u32 {
        self.subgroup_lattice().longest_chain()
    }
}

fn check_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::CapExceeded {
            reached: order,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Splits `"(1 2 3), (1 2)"` / `"(1 2)(3 4); (1 3)"` into 0-based images.
fn parse_generators(text: &str, degree: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    if degree == 0 {
        return Err(GroupError::InvalidParameter("degree must be ≥ 1".into()));
    }
    let bad = |msg: &str| GroupError::MalformedCycles(format!("{msg} in `{text}`"));
    let mut gens = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut cycle: Option<Vec<usize>> = None;
    let mut number = String::new();

    let flush_number =
        |number: &mut String, cycle: &mut Option<Vec<usize>>| -> Result<(), GroupError> {
            if number.is_empty() {
                return Ok(());
            }
            let p: usize = number.parse().map_err(|_| bad("bad point"))?;
            number.clear();
            if p == 0 || p > degree {
                return Err(bad(&format!("point {p} outside 1..={degree}")));
            }
            cycle
                .as_mut()
                .ok_or_else(|| bad("point outside a cycle"))?
                .push(p - 1);
            Ok(())
        };

    for ch in text.chars() {
        match ch {
            '(' => {
                if cycle.is_some() {
                    return Err(bad("nested '('"));
                }
                cycle = Some(Vec::new());
                current.get_or_insert_with(|| (0..degree).collect());
            }
            ')' => {
                flush_number(&mut number, &mut cycle)?;
                let c = cycle.take().ok_or_else(|| bad("unmatched ')'"))?;
                let mut seen = vec![false; degree];
                for &p in &c {
                    if std::mem::replace(&mut seen[p], true) {
                        return Err(bad("repeated point inside a cycle"));
                    }
                }
                // Cycles are composed left to right: the leftmost acts first.
                let perm = current.as_mut().expect("set when '(' opened");
                let mut step: Vec<usize> = (0..degree).collect();
                for k in 0..c.len() {
                    step[c[k]] = c[(k + 1) % c.len()];
                }
                for img in perm.iter_mut() {
                    *img = step[*img];
                }
            }
            ',' | ';' if cycle.is_none() => {
                gens.push(current.take().ok_or_else(|| bad("empty generator"))?);
            }
            ',' => flush_number(&mut number, &mut cycle)?,
            c if c.is_ascii_digit() => {
                if cycle.is_none() {
                    return Err(bad("point outside a cycle"));
                }
                number.push(c);
            }
            c if c.is_whitespace() => flush_number(&mut number, &mut cycle)?,
            c => return Err(bad(&format!("unexpected '{c}'"))),
        }
    }
    if cycle.is_some() {
        return Err(bad("unclosed '('"));
    }
    match current {
        Some(p) => gens.push(p),
        None if gens.is_empty() => return Err(bad("no generators")),
        None => return Err(bad("trailing separator")),
    }
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if `i` was newly inserted.
    fn insert(&mut self, i: usize) -> bool {
        let was = self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        !was
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// All subgroups of a finite group, sorted by order, with the covering
/// relation (maximal proper subgroups) of the inclusion order.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Bitset>,
    maximal: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    fn build(group: &FiniteGroup) -> Self {
        let n = group.order;
        let trivial = group.closure(&[]);
        let mut found: HashMap<Bitset, Vec<usize>> = HashMap::from([(trivial.clone(), vec![])]);
        let mut queue = VecDeque::from([trivial]);
        // Every subgroup is reached from a smaller one by adjoining a single
        // element, so saturating this frontier finds them all.
        while let Some(h) = queue.pop_front() {
            let gens = found[&h].clone();
            for x in 0..n {
                if h.contains(x) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(x);
                let k = group.closure(&ext);
                if !found.contains_key(&k) {
                    found.insert(k.clone(), ext);
                    queue.push_back(k);
                }
            }
        }
        let mut subgroups: Vec<Bitset> = found.into_keys().collect();
        subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let orders: Vec<usize> = subgroups.iter().map(Bitset::len).collect();

        let mut maximal = vec![Vec::new(); subgroups.len()];
        for k in 0..subgroups.len() {
            let mut proper: Vec<usize> = (0..k)
                .filter(|&h| orders[h] < orders[k] && subgroups[h].is_subset(&subgroups[k]))
                .collect();
            proper.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
            let mut maxes: Vec<usize> = Vec::new();
            for h in proper {
                if !maxes.iter().any(|&m| subgroups[h].is_subset(&subgroups[m])) {
                    maxes.push(h);
                }
            }
            maxes.sort_unstable();
            maximal[k] = maxes;
        }
        SubgroupLattice { subgroups, maximal }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn order_of(&self, idx: usize) -> usize {
        self.subgroups[idx].len()
    }

    /// Element indices of subgroup `idx`.
    pub fn elements(&self, idx: usize) -> Vec<usize> {
        self.subgroups[idx].iter().collect()
    }

    /// Maximal proper subgroups of subgroup `idx` (the covering edges).
    pub fn maximal_subgroups(&self, idx: usize) -> &[usize] {
        &self.maximal[idx]
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.subgroups[inner].is_subset(&self.subgroups[outer])
    }

    /// Longest chain from the trivial subgroup to the whole group, by
    /// dynamic programming over the covering edges in order of size.
    pub fn longest_chain(&self) -> u32 {
        let mut depth = vec![0u32; self.subgroups.len()];
        for k in 0..self.subgroups.len() {
            depth[k] = self.maximal[k]
                .iter()
                .map(|&h| depth[h] + 1)
                .max()
                .unwrap_or(0);
        }
        depth.last().copied().unwrap_or(0)
    }
}

/// `Ω(n)`: prime factors of `n` counted with multiplicity.
pub fn omega(mut n: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

pub fn floor_log2(n: u64) -> u32 {
    assert!(n >= 1);
    63 - n.leading_zeros()
}

/// Upper bounds on `λ(F)` that depend only on `|F|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaBounds {
    pub half: Rational,
    pub log2_floor: u32,
    pub omega: u32,
}

pub fn lambda_bounds(order: u64) -> LambdaBounds {
    assert!(order >= 1, "group order must be positive");
    LambdaBounds {
        half: Rational::new(order as i128, 2),
        log2_floor: floor_log2(order),
        omega: omega(order),
    }
}

/// Textual group description: `C8`, `D4` (order 8), `S5`, products `C2xD4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Permutations { generators: String, degree: usize },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic_with_cap(*n, cap),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral_with_cap(*n, cap),
            GroupSpec::Symmetric(d) => FiniteGroup::symmetric_with_cap(*d, cap),
            GroupSpec::Permutations { generators, degree } => {
                FiniteGroup::from_permutations_with_cap(generators, *degree, cap)
            }
            GroupSpec::Product(a, b) => {
                let (a, b) = (a.build(cap)?, b.build(cap)?);
                FiniteGroup::direct_product_with_cap(&a, &b, cap)
            }
        }
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Permutations { generators, degree } => {
                write!(f, "<{generators}>/{degree}")
            }
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let unknown = || GroupError::UnknownSpec(s.to_string());
        let mut factors = s.split(['x', 'X', '*']).map(|part| {
            let part = part.trim();
            let (head, num) = part.split_at(part.chars().next().map_or(0, char::len_utf8));
            let n: usize = num.parse().map_err(|_| unknown())?;
            match head {
                "C" | "c" | "Z" => Ok(GroupSpec::Cyclic(n)),
                "D" | "d" => Ok(GroupSpec::Dihedral(n)),
                "S" | "s" => Ok(GroupSpec::Symmetric(n)),
                _ => Err(unknown()),
            }
        });
        let first = factors.next().ok_or_else(unknown)??;
        factors.try_fold(first, |acc, next| Ok(GroupSpec::product(acc, next?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_closure_orders() {
        assert_eq!(
            FiniteGroup::from_permutations("(1 2)", 2).unwrap().order(),
            2
        );
        assert_eq!(
            FiniteGroup::from_permutations("(1 2 3 4 5), (1 2)", 5)
                .unwrap()
                .order(),
            120
        );
        let klein = FiniteGroup::from_permutations("(1 2)(3 4), (1 3)(2 4)", 4).unwrap();
        assert_eq!(klein.order(), 4);
        assert!((0..4).all(|x| klein.mul(x, x) == 0));
        assert_eq!(
            FiniteGroup::from_permutations("(1,2,3); (1,2)", 3)
                .unwrap()
                .order(),
            6
        );
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        for bad in [
            "(1 2", "1 2)", "(1 7)", "(1 1)", "(1 (2))", "", "(1 2),", "(a b)",
        ] {
            assert!(
                matches!(
                    FiniteGroup::from_permutations(bad, 3),
                    Err(GroupError::MalformedCycles(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FiniteGroup::from_permutations_with_cap("(1 2 3 4 5), (1 2)", 5, 100),
            Err(GroupError::CapExceeded { cap: 100, .. })
        ));
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(FiniteGroup::cyclic(401).is_err());
    }

    #[test]
    fn constructors() {
        assert_eq!(FiniteGroup::cyclic(8).unwrap().order(), 8);
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!((0..4).all(|x| v4.mul(x, x) == 0));
    }

    /// Multiplication tables produced by every constructor are groups.
    #[test]
    fn tables_satisfy_group_axioms() {
        let groups = [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::dihedral(3).unwrap(),
                &FiniteGroup::cyclic(2).unwrap(),
            )
            .unwrap(),
        ];
        for g in &groups {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(0, a), a);
                assert_eq!(g.mul(a, 0), a);
                assert!((0..n).any(|b| g.mul(a, b) == 0));
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    /// Subgroup count by brute force over all subsets containing the
    /// identity, for groups small enough to enumerate `2^(n-1)` subsets.
    fn brute_force_subgroup_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..1 << (n - 1))
            .filter(|mask| {
                let member = |x: usize| x == 0 || mask >> (x - 1) & 1 == 1;
                (0..n).all(|a| !member(a) || (0..n).all(|b| !member(b) || member(g.mul(a, b))))
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::cyclic(12).unwrap().subgroup_lattice().len(), 6);
        let s3 = FiniteGroup::from_permutations("(1 2 3), (1 2)", 3).unwrap();
        assert_eq!(brute_force_subgroup_count(&s3), 6);
        assert_eq!(s3.subgroup_lattice().len(), 6);
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(brute_force_subgroup_count(&d4), 10);
        assert_eq!(d4.subgroup_lattice().len(), 10);
        for g in [
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::cyclic(16).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(2).unwrap(),
                &FiniteGroup::dihedral(4).unwrap(),
            )
            .unwrap(),
        ] {
            assert_eq!(g.subgroup_lattice().len(), brute_force_subgroup_count(&g));
        }
    }

    #[test]
    fn lattice_members_are_subgroups() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let lat = g.subgroup_lattice();
        assert_eq!(lat.len(), 30);
        for i in 0..lat.len() {
            let elems = lat.elements(i);
            assert!(elems.contains(&0));
            assert_eq!(g.order() % elems.len(), 0);
            for &a in &elems {
                for &b in &elems {
                    assert!(elems.contains(&g.mul(a, b)));
                }
            }
            for &m in lat.maximal_subgroups(i) {
                assert!(lat.contains(i, m));
                assert!(lat.order_of(m) < lat.order_of(i));
            }
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(FiniteGroup::trivial().lambda_exact(), 0);
        assert_eq!(FiniteGroup::cyclic(2).unwrap().lambda_exact(), 1);
        assert_eq!(FiniteGroup::cyclic(8).unwrap().lambda_exact(), 3);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().lambda_exact(), 5);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().lambda_exact(), 4);
        // both groups of order 4 have length 2
        assert_eq!(FiniteGroup::cyclic(4).unwrap().lambda_exact(), 2);
        assert_eq!(FiniteGroup::dihedral(2).unwrap().lambda_exact(), 2);
    }

    #[test]
    fn lambda_of_prime_powers() {
        for (p, k) in [(2usize, 1u32), (2, 5), (2, 8), (3, 4), (5, 3), (7, 2)] {
            let g = FiniteGroup::cyclic(p.pow(k)).unwrap();
            assert_eq!(g.lambda_exact(), k, "C{}", p.pow(k));
        }
    }

    #[test]
    fn lambda_bound_examples() {
        assert_eq!(
            lambda_bounds(48),
            LambdaBounds {
                half: Rational::from_integer(24),
                log2_floor: 5,
                omega: 5
            }
        );
        assert_eq!(
            lambda_bounds(160),
            LambdaBounds {
                half: Rational::from_integer(80),
                log2_floor: 7,
                omega: 6
            }
        );
        assert_eq!(
            lambda_bounds(2),
            LambdaBounds {
                half: Rational::ONE,
                log2_floor: 1,
                omega: 1
            }
        );
        assert_eq!(lambda_bounds(1).omega, 0);
    }

    #[test]
    fn spec_strings() {
        let s: GroupSpec = "C2xD4".parse().unwrap();
        assert_eq!(s.build(DEFAULT_CAP).unwrap().order(), 16);
        assert_eq!(s.to_string(), "C2xD4");
        assert_eq!(
            "S5".parse::<GroupSpec>()
                .unwrap()
                .build(400)
                .unwrap()
                .order(),
            120
        );
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("C".parse::<GroupSpec>().is_err());
    }
}
