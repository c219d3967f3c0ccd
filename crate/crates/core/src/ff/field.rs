use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use super::upoly::{prime_factors, UPoly};
use crate::error::{Error, Result};

/// A field element: the base-`p` integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
/// of its coordinates in the power basis of `GF(p)[x]/(modulus)`.
///
/// Prime-field residues are therefore represented identically in every
/// extension of the same characteristic.
pub type Elem = u32;

const ZERO_LOG: u32 = u32::MAX;
/// Fields up to this order get exp/log/Zech tables.
const TABLE_LIMIT: u32 = 1 << 20;
/// Largest supported field order.
const ORDER_LIMIT: u64 = 1 << 31;

/// Handle to `GF(p^m)`. Cheap to clone; all arithmetic goes through it.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    degree: u32,
    order: u32,
    /// Monic, low degree first, length `degree + 1`.
    modulus: Vec<u32>,
    prime_inv: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, or `ZERO_LOG`.
    zech: Vec<u32>,
    log_minus_one: u32,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1)
    }

    /// GF(p^m), with the lexicographically smallest monic irreducible modulus
    /// (coefficients compared from `x^{m-1}` down to the constant term).
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !(2..=251).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not a prime in 2..=251")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(m).filter(|&q| q <= ORDER_LIMIT);
        let Some(order) = order else {
            return Err(Error::InvalidField(format!("GF({p}^{m}) is too large")));
        };
        if let Some(f) = cache().lock().unwrap().get(&(p, m)) {
            return Ok(f.clone());
        }
        let field = Self::build(p, m, order as u32);
        cache().lock().unwrap().insert((p, m), field.clone());
        Ok(field)
    }

    fn build(p: u32, m: u32, order: u32) -> Field {
        let prime_inv = (0..p).map(|a| if a == 0 { 0 } else { (1..p).find(|b| a * b % p == 1).unwrap() }).collect();
        let modulus = if m == 1 { vec![0, 1] } else { smallest_irreducible(p, m) };
        let mut inner = Inner { p, degree: m, order, modulus, prime_inv, tables: None };
        if m > 1 && order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Field(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.degree == 1
    }

    /// Monic modulus, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// `true` when `self` contains `other` via the identity on prime residues.
    pub fn contains(&self, other: &Field) -> bool {
        self.0.p == other.0.p && (other.0.degree == 1 || other.0.degree == self.0.degree)
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Embed an integer through the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.0.p as i64) as Elem
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.degree as usize {
            return Err(Error::InvalidField(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.0.degree
            )));
        }
        let p = self.0.p;
        let mut acc = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(Error::InvalidField(format!("coefficient {c} is not a residue mod {p}")));
            }
            acc = acc * p + c;
        }
        Ok(acc)
    }

    /// Power-basis coordinates, exactly `degree` of them.
    pub fn coeffs(&self, mut a: Elem) -> Vec<u32> {
        let p = self.0.p;
        (0..self.0.degree)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    }

    pub fn contains_elem(&self, a: Elem) -> bool {
        a < self.0.order
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.0.order)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(1..self.0.order)
    }

    /// All elements in increasing representation order.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.0.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.degree == 1 {
            let s = a + b;
            return if s >= inner.p { s - inner.p } else { s };
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let la = t.log[a as usize];
                let lb = t.log[b as usize];
                let d = if lb >= la { lb - la } else { lb + n - la };
                let z = t.zech[d as usize];
                if z == ZERO_LOG {
                    0
                } else {
                    let e = la + z;
                    t.exp[(if e >= n { e - n } else { e }) as usize]
                }
            }
            None => self.digitwise(a, b, |x, y| x + y),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.0;
        if a == 0 {
            return 0;
        }
        if inner.degree == 1 {
            return inner.p - a;
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let e = t.log[a as usize] + t.log_minus_one;
                t.exp[(if e >= n { e - n } else { e }) as usize]
            }
            None => self.digitwise(0, a, |x, y| inner.p - y + x),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if inner.degree == 1 {
            return ((a as u64 * b as u64) % inner.p as u64) as Elem;
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let e = t.log[a as usize] + t.log[b as usize];
                t.exp[(if e >= n { e - n } else { e }) as usize]
            }
            None => self.slow_mul(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let inner = &*self.0;
        if inner.degree == 1 {
            return Some(inner.prime_inv[a as usize]);
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let l = t.log[a as usize];
                Some(t.exp[((n - l) % n) as usize])
            }
            None => Some(self.pow(a, inner.order as u64 - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn digitwise(&self, mut a: Elem, mut b: Elem, op: impl Fn(u32, u32) -> u32) -> Elem {
        let p = self.0.p;
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.0.degree {
            let d = op(a % p, b % p) % p;
            out += d * scale;
            scale = scale.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        out
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        let pa = UPoly::from_coeffs(p, self.coeffs(a));
        let pb = UPoly::from_coeffs(p, self.coeffs(b));
        let m = UPoly::from_coeffs(p, self.0.modulus.clone());
        let r = pa.mul(&pb).rem(&m);
        self.from_coeffs(r.coeffs()).expect("reduced product fits the field")
    }
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for c in 0..count {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut v = c;
        for _ in 0..m {
            coeffs.push((v % p as u64) as u32);
            v /= p as u64;
        }
        coeffs.push(1);
        if coeffs[0] == 0 {
            continue;
        }
        if UPoly::from_coeffs(p, coeffs.clone()).is_irreducible() {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn build_tables(inner: &Inner) -> Tables {
    let p = inner.p;
    let q = inner.order;
    let n = q - 1;
    let modulus = UPoly::from_coeffs(p, inner.modulus.clone());
    let encode = |u: &UPoly| -> u32 {
        let mut acc = 0u32;
        for i in (0..inner.degree as usize).rev() {
            acc = acc * p + u.coeffs().get(i).copied().unwrap_or(0);
        }
        acc
    };
    let decode = |mut a: u32| -> UPoly {
        let mut c = Vec::new();
        for _ in 0..inner.degree {
            c.push(a % p);
            a /= p;
        }
        UPoly::from_coeffs(p, c)
    };
    let factors = prime_factors(n as u64);
    let generator = (p..q)
        .map(&decode)
        .find(|g| factors.iter().all(|&l| g.pow_mod(n as u64 / l, &modulus) != UPoly::one(p)))
        .expect("the multiplicative group is cyclic");
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![ZERO_LOG; q as usize];
    let mut cur = UPoly::one(p);
    for i in 0..n {
        let code = encode(&cur);
        exp.push(code);
        log[code as usize] = i;
        cur = cur.mul(&generator).rem(&modulus);
    }
    // 1 + g^d: adding one touches only the constant coordinate.
    let zech = (0..n)
        .map(|d| {
            let a = exp[d as usize];
            let c0 = a % p;
            let b = a - c0 + (c0 + 1) % p;
            if b == 0 {
                ZERO_LOG
            } else {
                log[b as usize]
            }
        })
        .collect();
    let log_minus_one = if p == 2 { 0 } else { n / 2 };
    Tables { exp, log, zech, log_minus_one }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.degree == other.0.degree
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.degree)
        }
    }
}
