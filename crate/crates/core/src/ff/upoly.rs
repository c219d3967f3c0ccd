//! Dense univariate polynomials over a prime field GF(p).
//!
//! Used to build extension-field moduli and for elimination over the
//! principal ideal domain GF(p)[t].

use std::fmt;

/// Polynomial with coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly {
    p: u32,
    coeffs: Vec<u32>,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

impl UPoly {
    pub fn zero(p: u32) -> Self {
        UPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: u32) -> Self {
        Self::from_coeffs(p, vec![c % p])
    }

    /// The monomial `t`.
    pub fn t(p: u32) -> Self {
        Self::from_coeffs(p, vec![0, 1])
    }

    pub fn from_coeffs(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { p, coeffs }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out.push((a + b) % p);
        }
        Self::from_coeffs(p, out)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self::from_coeffs(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        Self::from_coeffs(self.p, self.coeffs.iter().map(|&a| (a as u64 * c as u64 % p) as u32).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_coeffs(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p as u64;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let lead_inv = inv_mod(divisor.lead(), self.p) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        let mut quot = vec![0u32; self.coeffs.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] % p;
            if c == 0 {
                continue;
            }
            let q = c * lead_inv % p;
            quot[k] = q as u32;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = (rem[k + i] + (p - q) * d as u64) % p;
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(self.p, quot), Self::from_coeffs(self.p, rem.into_iter().map(|c| c as u32).collect()))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else { return false };
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let p = self.p as u64;
        let x = Self::t(self.p);
        // frob[k] = x^(p^k) mod self
        let mut frob = Vec::with_capacity(m + 1);
        frob.push(x.rem(self));
        for k in 1..=m {
            let next = frob[k - 1].pow_mod(p, self);
            frob.push(next);
        }
        if frob[m] != x.rem(self) {
            return false;
        }
        for l in prime_factors(m as u64) {
            let k = m / l as usize;
            let g = frob[k].sub(&x).gcd(self);
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Evaluate at a prime-field point.
    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p;
        }
        acc as u32
    }

    /// Largest `e` with `t^e` dividing `self` (zero for the zero polynomial).
    pub fn t_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == 0).count()
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}
