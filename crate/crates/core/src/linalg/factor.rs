//! Factorization of univariate rational polynomials into monic irreducibles.
//!
//! Squarefree decomposition (Yun), then rational-root extraction, then
//! Kronecker's interpolation search for integer factors of degree up to
//! half the remaining degree. Candidate factors are pruned by a Mignotte
//! coefficient bound. Inputs are limited to degree [`MAX_FACTOR_DEGREE`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::RatPoly;
use crate::error::{Error, Result};

pub const MAX_FACTOR_DEGREE: usize = 12;

/// `unit * prod(f_i ^ e_i)` with each `f_i` monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(RatPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.unit.clone()), |acc, (f, e)| {
                acc.mul(&f.pow(*e))
            })
    }

    pub fn irreducibles(&self) -> impl Iterator<Item = &RatPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

pub fn factor_rational_poly(f: &RatPoly) -> Result<Factorization> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge(deg));
    }
    let unit = f.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for g in factor_squarefree(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// True iff `f` has positive degree and no nontrivial factorization over Q.
pub fn is_irreducible(f: &RatPoly) -> Result<bool> {
    let fac = factor_rational_poly(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Yun's algorithm: monic pairwise-coprime squarefree parts with multiplicities.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let f = f.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&next_b.derivative());
        if !a.is_constant() {
            out.push((a, i));
        }
        b = next_b;
        i += 1;
    }
    out
}

fn to_rat_poly(ints: &[BigInt]) -> RatPoly {
    RatPoly::from_big_ints(ints)
}

/// Irreducible monic factors of a monic squarefree polynomial.
fn factor_squarefree(f: &RatPoly) -> Vec<RatPoly> {
    let (_, mut h) = f.primitive_part();
    let mut out = Vec::new();

    if h[0].is_zero() {
        out.push(RatPoly::t());
        h = to_rat_poly(&h).div_rem(&RatPoly::t()).0.primitive_part().1;
    }

    // Rational roots p/q with p | h(0), q | lc(h).
    if h.len() > 2 {
        let lead = h.last().unwrap().clone();
        let mut roots = Vec::new();
        for q in positive_divisors(&lead) {
            for p in positive_divisors(&h[0]) {
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = BigRational::new(&s * &p, q.clone());
                    if !roots.contains(&r) && to_rat_poly(&h).eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        for r in roots {
            let lin = RatPoly::linear_root(r);
            h = to_rat_poly(&h).div_rem(&lin).0.primitive_part().1;
            out.push(lin);
        }
    }

    let mut k = 2;
    while h.len() > 1 && 2 * k < h.len() {
        match kronecker_factor(&h, k) {
            Some(g) => {
                let gp = to_rat_poly(&g);
                h = to_rat_poly(&h).div_rem(&gp).0.primitive_part().1;
                out.push(gp.monic());
            }
            None => k += 1,
        }
    }
    if h.len() > 1 {
        out.push(to_rat_poly(&h).monic());
    }
    out.sort();
    out
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    if let Some(m) = n.to_u64() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= m {
            if m % d == 0 {
                small.push(d);
                if m / d != d {
                    large.push(m / d);
                }
            }
            d += 1;
        }
        return small
            .into_iter()
            .chain(large.into_iter().rev())
            .map(BigInt::from)
            .collect();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn eval_int(h: &[BigInt], x: &BigInt) -> BigInt {
    h.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Searches for an integer factor of exact degree `k` of the primitive
/// polynomial `h` (which has no rational roots). Returns it with positive
/// leading coefficient.
fn kronecker_factor(h: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    let norm_sq: BigInt = h.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let bound = (BigInt::one() << k) * norm;

    // k evaluation points with the fewest divisors; the leading coefficient
    // supplies the last degree of freedom.
    let mut candidates: Vec<(usize, BigInt, BigInt)> = (-8i64..=8)
        .map(BigInt::from)
        .map(|x| {
            let v = eval_int(h, &x);
            (positive_divisors(&v).len(), x, v)
        })
        .collect();
    candidates.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.abs().cmp(&b.1.abs())));
    let points: Vec<(BigInt, BigInt)> = candidates
        .into_iter()
        .take(k)
        .map(|(_, x, v)| (x, v))
        .collect();

    // |g(x)| <= bound * sum |x|^i
    let value_caps: Vec<BigInt> = points
        .iter()
        .map(|(x, _)| {
            let ax = x.abs();
            let mut s = BigInt::zero();
            let mut pw = BigInt::one();
            for _ in 0..=k {
                s += &pw;
                pw *= &ax;
            }
            &bound * s
        })
        .collect();
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .zip(&value_caps)
        .map(|((_, v), cap)| {
            positive_divisors(v)
                .into_iter()
                .filter(|d| d <= cap)
                .flat_map(|d| [d.clone(), -d])
                .collect()
        })
        .collect();
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let basis = lagrange_basis(&xs);
    let node_poly = xs
        .iter()
        .fold(RatPoly::one(), |acc, x| acc.mul(&RatPoly::linear_root(x.clone())));

    let target = to_rat_poly(h);
    let mut idx = vec![0usize; k];
    for lead in positive_divisors(h.last().unwrap()) {
        if lead > bound {
            continue;
        }
        let lead_part = node_poly.scale(&BigRational::from_integer(lead.clone()));
        if choices.iter().any(Vec::is_empty) {
            return None;
        }
        idx.iter_mut().for_each(|i| *i = 0);
        loop {
            let mut g = lead_part.clone();
            for (j, b) in basis.iter().enumerate() {
                let v = &choices[j][idx[j]];
                g = g.add(&b.scale(&BigRational::from_integer(v.clone())));
            }
            if g.degree() == Some(k)
                && g.coeffs()
                    .iter()
                    .all(|c| c.is_integer() && c.abs() <= BigRational::from_integer(bound.clone()))
                && g.divides(&target)
            {
                return Some(g.coeffs().iter().map(|c| c.to_integer()).collect());
            }
            // odometer
            let mut j = 0;
            loop {
                if j == k {
                    break;
                }
                idx[j] += 1;
                if idx[j] < choices[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
        }
    }
    None
}

fn lagrange_basis(xs: &[BigRational]) -> Vec<RatPoly> {
    xs.iter()
        .enumerate()
        .map(|(i, xi)| {
            let mut num = RatPoly::one();
            let mut den = BigRational::one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    num = num.mul(&RatPoly::linear_root(xj.clone()));
                    den *= xi - xj;
                }
            }
            num.scale(&den.recip())
        })
        .collect()
}

/// Small helper for callers that want machine-sized multiplicities.
pub fn multiplicity_of(fac: &Factorization, f: &RatPoly) -> usize {
    let f = f.monic();
    fac.factors
        .iter()
        .find(|(g, _)| *g == f)
        .map_or(0, |(_, e)| *e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn alexander_of_stevedore() {
        let f = factor_rational_poly(&p(&[2, -5, 2])).unwrap();
        assert_eq!(f.unit, BigRational::from_integer(2.into()));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            f.factors,
            vec![
                (RatPoly::linear_root(BigRational::from_integer(2.into())), 1),
                (RatPoly::linear_root(half), 1),
            ]
        );
        assert_eq!(f.expand(), p(&[2, -5, 2]));
    }

    #[test]
    fn irreducible_quadratic_and_cube() {
        let f = factor_rational_poly(&p(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, 1]), 1)]);
        let cube = p(&[-1, 1]).pow(3);
        let f = factor_rational_poly(&cube).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 3)]);
    }

    #[test]
    fn quartic_without_roots() {
        // (t^2 + t + 1)(t^2 - 2)
        let g = p(&[1, 1, 1]).mul(&p(&[-2, 0, 1]));
        let f = factor_rational_poly(&g).unwrap();
        assert_eq!(f.factors, vec![(p(&[-2, 0, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])).unwrap());
        // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
        let f = factor_rational_poly(&p(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn non_monic_quadratic_factors() {
        // (2t^2 + 3t + 5)(3t^2 - t + 7)
        let g = p(&[5, 3, 2]).mul(&p(&[7, -1, 3]));
        let f = factor_rational_poly(&g).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), g);
    }

    #[test]
    fn zero_and_constant() {
        assert_eq!(factor_rational_poly(&RatPoly::zero()), Err(Error::ZeroPolynomial));
        let f = factor_rational_poly(&p(&[5])).unwrap();
        assert!(f.factors.is_empty());
        assert!(!is_irreducible(&p(&[5])).unwrap());
        let big = p(&[1; 14]);
        assert_eq!(factor_rational_poly(&big), Err(Error::DegreeTooLarge(13)));
    }

    #[test]
    fn squarefree_parts() {
        let g = p(&[-1, 1]).pow(2).mul(&p(&[1, 1])).mul(&p(&[0, 1]).pow(3));
        let parts = squarefree_decomposition(&g);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (p(&[1, 1]), 1));
        assert_eq!(parts[1], (p(&[-1, 1]), 2));
        assert_eq!(parts[2], (p(&[0, 1]), 3));
    }
}
