//! Finite linking forms on `⊕ Z/o_i` and exhaustive search for their
//! self-annihilating subgroups.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Largest group order the subgroup search accepts (`|Z9^4|`).
pub const MAX_FORM_ORDER: u64 = 6561;

/// Symmetric form `λ(e_i, e_j) = values[i][j] / modulus` in `Q/Z` on
/// `⊕ Z/orders[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingForm {
    orders: Vec<u64>,
    modulus: u64,
    values: Vec<Vec<u64>>,
}

impl LinkingForm {
    /// Validates that the form is well defined, symmetric and nonsingular.
    pub fn new(orders: Vec<u64>, modulus: u64, values: Vec<Vec<u64>>) -> Result<Self> {
        let k = orders.len();
        if modulus < 2 || orders.iter().any(|&o| o < 2) {
            return Err(Error::InvalidParameter(
                "orders and modulus must be at least 2".into(),
            ));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter(format!(
                "linking matrix must be {k}x{k}"
            )));
        }
        let values: Vec<Vec<u64>> = values
            .into_iter()
            .map(|r| r.into_iter().map(|v| v % modulus).collect())
            .collect();
        for i in 0..k {
            for j in 0..k {
                if values[i][j] != values[j][i] {
                    return Err(Error::InvalidParameter("linking form is not symmetric".into()));
                }
                if !(orders[i] as u128 * values[i][j] as u128).is_multiple_of(modulus as u128) {
                    return Err(Error::InvalidParameter(format!(
                        "λ(e{i}, e{j}) is not killed by the order of e{i}"
                    )));
                }
            }
        }
        let form = Self {
            orders,
            modulus,
            values,
        };
        if !form.is_nonsingular()? {
            return Err(Error::InvalidParameter("linking form is singular".into()));
        }
        Ok(form)
    }

    /// `(Z9, 2/9)^n ⊕ (Z9, −2/9)^m`.
    pub fn standard(n: usize, m: usize) -> Result<Self> {
        let k = n + m;
        let values = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match (i == j, i < n) {
                        (false, _) => 0,
                        (true, true) => 2,
                        (true, false) => 7,
                    })
                    .collect()
            })
            .collect();
        Self::new(vec![9; k], 9, values)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `|G|`, or `None` past `u64`.
    pub fn group_order(&self) -> Option<u64> {
        self.orders.iter().try_fold(1u64, |acc, &o| acc.checked_mul(o))
    }

    /// Numerator of `λ(x, y)` over [`Self::modulus`].
    pub fn pair(&self, x: &[u64], y: &[u64]) -> u64 {
        let q = self.modulus as u128;
        let mut acc = 0u128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc = (acc + xi as u128 * yj as u128 % q * self.values[i][j] as u128) % q;
            }
        }
        acc as u64
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Homogeneous forms (every order equals the modulus) are nonsingular
    /// iff the value matrix is a unit mod the modulus; other forms are
    /// checked element by element.
    fn is_nonsingular(&self) -> Result<bool> {
        if self.orders.iter().all(|&o| o == self.modulus) {
            let m = IntMatrix::new(
                self.rank(),
                self.rank(),
                self.values.iter().flatten().map(|&v| BigInt::from(v)).collect(),
            )?;
            let det = m.det();
            return Ok(num_integer::Integer::gcd(&det, &BigInt::from(self.modulus)).is_one());
        }
        let order = self.checked_order()?;
        let basis: Vec<Vec<u64>> = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| u64::from(i == j)).collect())
            .collect();
        Ok((1..order).all(|idx| {
            let x = self.coords(idx);
            basis.iter().any(|e| self.pair(&x, e) != 0)
        }))
    }

    fn checked_order(&self) -> Result<u64> {
        match self.group_order() {
            Some(o) if o <= MAX_FORM_ORDER => Ok(o),
            _ => Err(Error::TooLarge(format!(
                "linking form on a group of order above {MAX_FORM_ORDER}"
            ))),
        }
    }

    /// Mixed-radix coordinates of element `idx`, first coordinate fastest.
    pub fn coords(&self, mut idx: u64) -> Vec<u64> {
        self.orders
            .iter()
            .map(|&o| {
                let c = idx % o;
                idx /= o;
                c
            })
            .collect()
    }

    pub fn index(&self, x: &[u64]) -> u64 {
        self.orders
            .iter()
            .zip(x)
            .rev()
            .fold(0, |acc, (&o, &c)| acc * o + c % o)
    }

    fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.orders
            .iter()
            .zip(x.iter().zip(y))
            .map(|(&o, (&a, &b))| (a + b) % o)
            .collect()
    }
}

/// A self-annihilating subgroup with its elements in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metabolizer {
    /// Greedy generators: each is the smallest element outside the span of
    /// the previous ones.
    pub generators: Vec<Vec<u64>>,
    pub order: u64,
    #[serde(skip)]
    elements: Vec<u64>,
}

impl Metabolizer {
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, form: &LinkingForm, x: &[u64]) -> bool {
        self.elements.binary_search(&form.index(x)).is_ok()
    }
}

struct Search<'a> {
    form: &'a LinkingForm,
    coords: Vec<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(form: &'a LinkingForm) -> Result<Self> {
        let order = form.checked_order()?;
        let coords: Vec<Vec<u64>> = (0..order).map(|i| form.coords(i)).collect();
        Ok(Self { form, coords })
    }

    fn sum(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (&self.coords[a as usize], &self.coords[b as usize]);
        let mut idx = 0u64;
        for ((&o, &u), &v) in self.form.orders.iter().zip(x).zip(y).rev() {
            idx = idx * o + (u + v) % o;
        }
        idx as u32
    }

    fn words(&self) -> usize {
        self.coords.len().div_ceil(64)
    }

    /// `H + <x>` as a bitset, given `H` as an element list.
    fn extend(&self, h: &[u32], x: u32) -> Vec<u64> {
        let mut bits = vec![0u64; self.words()];
        let mut m = 0u32;
        loop {
            for &e in h {
                let s = self.sum(e, m);
                bits[s as usize / 64] |= 1 << (s % 64);
            }
            m = self.sum(m, x);
            if m == 0 || has(&bits, m) {
                break;
            }
        }
        bits
    }
}

fn has(bits: &[u64], i: u32) -> bool {
    bits[i as usize / 64] >> (i % 64) & 1 == 1
}

fn members(bits: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut rest = word;
        while rest != 0 {
            let b = rest.trailing_zeros();
            out.push(w as u32 * 64 + b);
            rest &= rest - 1;
        }
    }
    out
}

fn greedy_generators(search: &Search<'_>, elements: &[u32]) -> Vec<Vec<u64>> {
    let mut span: Vec<u32> = vec![0];
    let mut gens = Vec::new();
    for &e in elements {
        if span.binary_search(&e).is_err() {
            gens.push(search.coords[e as usize].clone());
            span = members(&search.extend(&span, e));
        }
    }
    gens
}

/// Every subgroup `S` with `|S| = target_order` and `λ(S, S) = 0`, sorted by
/// element list.
///
/// Grows isotropic subgroups one generator at a time; each subgroup is
/// visited once per order.
pub fn enumerate_isotropic_subgroups(
    form: &LinkingForm,
    target_order: u64,
) -> Result<Vec<Metabolizer>> {
    let search = Search::new(form)?;
    let order = search.coords.len() as u64;
    if target_order == 0 || !order.is_multiple_of(target_order) {
        return Ok(Vec::new());
    }
    let isotropic: Vec<u32> = (0..order as u32)
        .filter(|&x| {
            let c = &search.coords[x as usize];
            form.pair(c, c) == 0
        })
        .collect();

    // subgroup bitset -> (elements, generators)
    let mut level: HashMap<Vec<u64>, (Vec<u32>, Vec<u32>)> = HashMap::new();
    let mut zero = vec![0u64; search.words()];
    zero[0] = 1;
    level.insert(zero, (vec![0], Vec::new()));
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();

    while !level.is_empty() {
        let mut next: HashMap<Vec<u64>, (Vec<u32>, Vec<u32>)> = HashMap::new();
        for (bits, (elems, gens)) in level {
            if elems.len() as u64 == target_order {
                found.push(elems);
                continue;
            }
            let mut done = bits.clone();
            for &x in &isotropic {
                if has(&done, x) {
                    continue;
                }
                let cx = &search.coords[x as usize];
                if gens
                    .iter()
                    .any(|&g| form.pair(cx, &search.coords[g as usize]) != 0)
                {
                    continue;
                }
                let bigger = search.extend(&elems, x);
                let size = bigger.iter().map(|w| w.count_ones() as u64).sum::<u64>();
                // elements generating the same extension need no second visit
                let k = size / elems.len() as u64;
                let mut m = x;
                for step in 1..k {
                    if num_integer::Integer::gcd(&step, &k) == 1 {
                        for &h in &elems {
                            let y = search.sum(h, m);
                            done[y as usize / 64] |= 1 << (y % 64);
                        }
                    }
                    m = search.sum(m, x);
                }
                if !target_order.is_multiple_of(size) || seen.contains(&bigger) {
                    continue;
                }
                seen.insert(bigger.clone());
                let mut g2 = gens.clone();
                g2.push(x);
                next.insert(bigger.clone(), (members(&bigger), g2));
            }
        }
        level = next;
    }

    found.sort();
    found.dedup();
    Ok(found
        .into_iter()
        .map(|elems| Metabolizer {
            generators: greedy_generators(&search, &elems),
            order: elems.len() as u64,
            elements: elems.into_iter().map(u64::from).collect(),
        })
        .collect())
}

/// Independent check: `elements` is closed under addition, contains 0, and
/// pairs to zero with itself.
pub fn is_isotropic_subgroup(form: &LinkingForm, elements: &[u64]) -> bool {
    let set: HashSet<u64> = elements.iter().copied().collect();
    if !set.contains(&0) {
        return false;
    }
    let coords: Vec<Vec<u64>> = elements.iter().map(|&e| form.coords(e)).collect();
    coords.iter().all(|x| {
        coords
            .iter()
            .all(|y| form.pair(x, y) == 0 && set.contains(&form.index(&form.add(x, y))))
    })
}

/// Subgroups `M` with `|M|^2 = |G|` and `λ(M, M) = 0`.
pub fn enumerate_metabolizers(form: &LinkingForm) -> Result<Vec<Metabolizer>> {
    let order = form.checked_order()?;
    let root = (order as f64).sqrt().round() as u64;
    if root * root != order {
        return Ok(Vec::new());
    }
    let found = enumerate_isotropic_subgroups(form, root)?;
    for m in &found {
        if !is_isotropic_subgroup(form, &m.elements) {
            return Err(Error::InvariantViolation(format!(
                "search produced a non-isotropic subgroup generated by {:?}",
                m.generators
            )));
        }
    }
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportWitness {
    pub generators: Vec<Vec<u64>>,
    /// Order-3 element of the subgroup with a nonzero `(Z9)^n` component.
    pub witness: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub n: usize,
    pub m: usize,
    pub genus: u64,
    pub subgroup_order: u64,
    pub subgroups: Vec<SupportWitness>,
    /// True when every subgroup has a witness, so none lies in `0 ⊕ (Z9)^m`.
    pub holds: bool,
}

/// On `(Z9, 2/9)^n ⊕ (Z9, −2/9)^m`, checks that no self-annihilating
/// subgroup of order at least `3^(n+m−2g)` lies in `0 ⊕ (Z9)^m`.
///
/// Only subgroups of order exactly `3^(n+m−2g)` are enumerated: every larger
/// one contains such a subgroup, and containing a witness passes upward.
/// Requires `n > 2g`, which makes that order exceed `|0 ⊕ (Z9)^m|`.
pub fn metabolizer_support_check(n: usize, m: usize, g: u64) -> Result<SupportReport> {
    if n == 0 || n as u64 <= 2 * g {
        return Err(Error::HypothesisViolated(format!(
            "the support check needs n > 2g, got n = {n}, g = {g}"
        )));
    }
    let form = LinkingForm::standard(n, m)?;
    form.checked_order()?;
    let exponent = (n + m) as u64 - 2 * g;
    let target = 3u64.pow(exponent as u32);
    let subgroups = enumerate_isotropic_subgroups(&form, target)?;
    let reports: Vec<SupportWitness> = subgroups
        .iter()
        .map(|s| {
            let witness = s
                .elements
                .iter()
                .map(|&e| form.coords(e))
                .find(|x| {
                    x.iter().all(|&c| c % 3 == 0) && x[..n].iter().any(|&c| !c.is_zero())
                });
            SupportWitness {
                generators: s.generators.clone(),
                witness,
            }
        })
        .collect();
    let holds = reports.iter().all(|r| r.witness.is_some());
    Ok(SupportReport {
        n,
        m,
        genus: g,
        subgroup_order: target,
        subgroups: reports,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_validation() {
        assert!(LinkingForm::new(vec![9], 9, vec![vec![3]]).is_err());
        assert!(LinkingForm::new(vec![3, 3], 3, vec![vec![0, 1], vec![2, 0]]).is_err());
        assert!(LinkingForm::new(vec![3], 9, vec![vec![2]]).is_err());
        assert!(LinkingForm::new(vec![3], 9, vec![vec![3]]).is_ok());
        let f = LinkingForm::standard(1, 1).unwrap();
        assert_eq!(f.pair(&[1, 1], &[1, 1]), 0);
        assert_eq!(f.pair(&[1, 0], &[1, 0]), 2);
        assert_eq!(f.index(&f.coords(47)), 47);
    }

    #[test]
    fn metabolizers_of_one_plus_one() {
        let f = LinkingForm::standard(1, 1).unwrap();
        let ms = enumerate_metabolizers(&f).unwrap();
        assert_eq!(ms.len(), 3);
        let has_sub = |x: &[u64]| ms.iter().any(|m| m.contains(&f, x));
        assert!(ms.iter().any(|m| m.contains(&f, &[1, 1])));
        assert!(ms.iter().any(|m| m.contains(&f, &[1, 8])));
        assert!(ms.iter().any(|m| m.generators == vec![vec![3, 0], vec![0, 3]]));
        assert!(!has_sub(&[0, 1]));
        for m in &ms {
            assert_eq!(m.order, 9);
            assert!(is_isotropic_subgroup(&f, m.elements()));
        }
    }

    #[test]
    fn brute_force_agrees_on_z9_squared() {
        // every subgroup of Z9^2 is generated by at most two elements
        let f = LinkingForm::standard(1, 1).unwrap();
        let mut brute: HashSet<Vec<u64>> = HashSet::new();
        for a in 0..81u64 {
            for b in 0..81u64 {
                let (x, y) = (f.coords(a), f.coords(b));
                let mut elems: Vec<u64> = (0..9)
                    .flat_map(|i| (0..9).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        f.index(&[(i * x[0] + j * y[0]) % 9, (i * x[1] + j * y[1]) % 9])
                    })
                    .collect();
                elems.sort();
                elems.dedup();
                if elems.len() == 9 && is_isotropic_subgroup(&f, &elems) {
                    brute.insert(elems);
                }
            }
        }
        let found: HashSet<Vec<u64>> = enumerate_metabolizers(&f)
            .unwrap()
            .into_iter()
            .map(|m| m.elements().to_vec())
            .collect();
        assert_eq!(found, brute);
    }

    #[test]
    fn support_check_cases() {
        for (n, m, g) in [(1, 1, 0), (2, 1, 0), (1, 2, 0), (2, 2, 0), (3, 1, 1)] {
            let r = metabolizer_support_check(n, m, g).unwrap();
            assert!(r.holds, "({n},{m},{g})");
            assert!(!r.subgroups.is_empty());
        }
        assert!(matches!(
            metabolizer_support_check(1, 1, 1),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            metabolizer_support_check(3, 2, 0),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn support_fails_without_hypothesis_margin() {
        // with only m summands on the n side, 0 ⊕ Z9 is isotropic of order 9 < 81
        let f = LinkingForm::standard(1, 1).unwrap();
        let all = enumerate_isotropic_subgroups(&f, 3).unwrap();
        assert!(all.iter().any(|s| s.contains(&f, &[0, 3])));
    }
}
