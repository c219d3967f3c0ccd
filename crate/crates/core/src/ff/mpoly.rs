//! Sparse multivariate polynomials over a finite field.
//!
//! Monomials pack up to four exponents into a `u64` (16 bits each, variable 0
//! in the high bits), so integer order on the packed word is lex order with
//! `x0 > x1 > ...` and monomial multiplication is integer addition.

use std::fmt;

use super::field::{Elem, Field};
use super::upoly::UPoly;

pub const MAX_VARS: usize = 4;
const BITS: u32 = 16;
const MASK: u64 = (1 << BITS) - 1;
/// Exponents stay below this so packed addition never carries.
const MAX_EXPONENT: u64 = 1 << 15;

pub type Monomial = u64;

pub fn pack(exps: &[u32]) -> Monomial {
    assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
    let mut m = 0u64;
    for (i, &e) in exps.iter().enumerate() {
        assert!((e as u64) < MAX_EXPONENT, "exponent {e} too large");
        m |= (e as u64) << (BITS * (MAX_VARS - 1 - i) as u32);
    }
    m
}

pub fn unpack(m: Monomial, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| exponent(m, i)).collect()
}

#[inline]
pub fn exponent(m: Monomial, var: usize) -> u32 {
    ((m >> (BITS * (MAX_VARS - 1 - var) as u32)) & MASK) as u32
}

fn divides(d: Monomial, m: Monomial) -> bool {
    (0..MAX_VARS).all(|i| exponent(d, i) <= exponent(m, i))
}

fn degree_of(m: Monomial) -> u32 {
    (0..MAX_VARS).map(|i| exponent(m, i)).sum()
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    nvars: usize,
    /// Strictly decreasing monomials, nonzero coefficients.
    terms: Vec<(Monomial, Elem)>,
}

impl MPoly {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        MPoly { field: field.clone(), nvars, terms: Vec::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if c != 0 {
            p.terms.push((0, c));
        }
        p
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(field, &exps, 1)
    }

    pub fn monomial(field: &Field, exps: &[u32], c: Elem) -> Self {
        let mut p = Self::zero(field, exps.len());
        if c != 0 {
            p.terms.push((pack(exps), c));
        }
        p
    }

    /// Build from arbitrary terms, combining duplicates.
    pub fn from_terms(field: &Field, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Elem)>) -> Self {
        let raw = terms.into_iter().map(|(e, c)| {
            assert_eq!(e.len(), nvars);
            (pack(&e), c)
        });
        Self::normalize(field, nvars, raw.collect())
    }

    fn normalize(field: &Field, nvars: usize, mut raw: Vec<(Monomial, Elem)>) -> Self {
        raw.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut terms: Vec<(Monomial, Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|&(_, c)| c != 0);
        MPoly { field: field.clone(), nvars, terms }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, Elem)> + '_ {
        self.terms.iter().map(move |&(m, c)| (unpack(m, self.nvars), c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|&(m, _)| degree_of(m)).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|&(m, _)| m == 0)
    }

    pub fn leading_coeff(&self) -> Elem {
        self.terms.first().map_or(0, |t| t.1)
    }

    fn merge(&self, other: &MPoly, negate_other: bool) -> MPoly {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: Elem| if negate_other { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, conv(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(a[i].1, conv(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, conv(c))));
        MPoly { field: f.clone(), nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> MPoly {
        let f = &self.field;
        MPoly { terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: Elem) -> MPoly {
        if c == 0 {
            return Self::zero(&self.field, self.nvars);
        }
        let f = &self.field;
        MPoly { terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field, self.nvars);
        }
        let f = &self.field;
        if self.terms.len() == 1 || other.terms.len() == 1 {
            // monomial times polynomial keeps the order
            let (mono, poly) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (m, c) = mono.terms[0];
            return MPoly {
                field: f.clone(),
                nvars: self.nvars,
                terms: poly.terms.iter().map(|&(pm, pc)| (pm + m, f.mul(pc, c))).collect(),
            };
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                raw.push((ma + mb, f.mul(ca, cb)));
            }
        }
        Self::normalize(f, self.nvars, raw)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = Self::constant(&self.field, self.nvars, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self / divisor` when the division is exact, `None` otherwise.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = &self.field;
        let (dm, dc) = divisor.terms[0];
        let dinv = f.inv(dc).unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(&(rm, rc)) = rem.terms.first() {
            if !divides(dm, rm) {
                return None;
            }
            let qm = rm - dm;
            let qc = f.mul(rc, dinv);
            quot.push((qm, qc));
            let step = MPoly {
                field: f.clone(),
                nvars: self.nvars,
                terms: divisor.terms.iter().map(|&(m, c)| (m + qm, f.mul(c, qc))).collect(),
            };
            rem = rem.sub(&step);
        }
        Some(MPoly { field: f.clone(), nvars: self.nvars, terms: quot })
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> MPoly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.field.inv(c).unwrap()),
        }
    }

    /// Evaluate at a point of an extension of the coefficient field.
    pub fn eval(&self, field: &Field, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.nvars);
        assert!(field.contains(&self.field));
        let mut acc = 0;
        for &(m, c) in &self.terms {
            let mut term = c;
            for (i, &x) in point.iter().enumerate() {
                let e = exponent(m, i);
                if e > 0 {
                    term = field.mul(term, field.pow(x, e as u64));
                }
            }
            acc = field.add(acc, term);
        }
        acc
    }

    /// Fix every variable except `free` to the given prime-field values and
    /// return the resulting polynomial in `free`.
    pub fn specialize_to_univariate(&self, free: usize, values: &[Elem]) -> UPoly {
        assert!(self.field.is_prime_field());
        let p = self.field.characteristic();
        let f = &self.field;
        let mut coeffs: Vec<u32> = Vec::new();
        for &(m, c) in &self.terms {
            let mut term = c;
            for (i, &x) in values.iter().enumerate().take(self.nvars) {
                if i == free {
                    continue;
                }
                term = f.mul(term, f.pow(x, exponent(m, i) as u64));
            }
            let e = exponent(m, free) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = f.add(coeffs[e], term);
        }
        UPoly::from_coeffs(p, coeffs)
    }

    /// Display with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        if poly.is_zero() {
            return write!(f, "0");
        }
        let field = &poly.field;
        for (k, &(m, c)) in poly.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let exps = unpack(m, poly.nvars);
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || m == 0 {
                if field.is_prime_field() {
                    factors.push(c.to_string());
                } else {
                    factors.push(format!("{:?}", field.coeffs(c)));
                }
            }
            for (i, &e) in exps.iter().enumerate() {
                let name = self.names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let s = self.display(&names).to_string();
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(field: &Field, nvars: usize, deg: u32, rng: &mut ChaCha8Rng) -> MPoly {
        let terms = (0..6).map(|_| {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=deg)).collect();
            (exps, field.random(rng))
        });
        MPoly::from_terms(field, nvars, terms)
    }

    #[test]
    fn ring_laws_by_evaluation() {
        let f = Field::prime(7).unwrap();
        let ext = Field::new(7, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let a = random_poly(&f, 3, 3, &mut rng);
            let b = random_poly(&f, 3, 3, &mut rng);
            let pt: Vec<Elem> = (0..3).map(|_| ext.random(&mut rng)).collect();
            let ev = |q: &MPoly| q.eval(&ext, &pt);
            assert_eq!(ev(&a.mul(&b)), ext.mul(ev(&a), ev(&b)));
            assert_eq!(ev(&a.sub(&b)), ext.sub(ev(&a), ev(&b)));
        }
    }

    #[test]
    fn exact_division_round_trip() {
        let f = Field::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let a = random_poly(&f, 2, 4, &mut rng);
            let b = random_poly(&f, 2, 4, &mut rng);
            if b.is_zero() {
                continue;
            }
            assert_eq!(a.mul(&b).exact_div(&b), Some(a));
        }
        let x = MPoly::var(&f, 2, 0);
        let y = MPoly::var(&f, 2, 1);
        assert_eq!(x.exact_div(&y), None);
    }

    #[test]
    fn specialization() {
        let f = Field::prime(5).unwrap();
        // 2*x0^2*x1 + x1^3 + 3 at x0 = 2
        let q = MPoly::from_terms(&f, 2, vec![(vec![2, 1], 2), (vec![0, 3], 1), (vec![0, 0], 3)]);
        let u = q.specialize_to_univariate(1, &[2, 0]);
        assert_eq!(u, UPoly::from_coeffs(5, vec![3, 8, 0, 1]));
    }

    #[test]
    fn display() {
        let f = Field::prime(5).unwrap();
        let q = MPoly::from_terms(&f, 2, vec![(vec![1, 1], 1), (vec![0, 2], 4)]);
        let names = vec!["l1".to_string(), "l2".to_string()];
        assert_eq!(q.display(&names).to_string(), "l1*l2 + 4*l2^2");
    }
}
