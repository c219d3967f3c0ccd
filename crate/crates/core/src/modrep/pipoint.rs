use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{Elem, Field, Matrix};
use crate::jordan::JordanType;

use super::group::GroupData;
use super::module::ModuleRep;

/// How flatness of a π-point was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flatness {
    /// The image has a nonzero linear part, so it is part of a coordinate
    /// system of `K[x_1..x_r]/(x_i^p)`.
    LinearPart,
    /// The regular representation restricts to a free `K[t]/t^p`-module.
    RegularRepresentation,
}

/// A map `K[t]/t^p -> K[x_1..x_r]/(x_i^p)`, given by the image of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPoint {
    field: Field,
    r: usize,
    /// Nonzero terms `(exponents, coefficient)`, sorted, no constant term,
    /// every exponent below `p`.
    image: Vec<(Vec<u32>, Elem)>,
    flat: Option<Flatness>,
}

impl PiPoint {
    pub fn new(field: &Field, r: usize, terms: Vec<(Vec<u32>, Elem)>) -> Result<Self> {
        let p = field.characteristic();
        let mut image: Vec<(Vec<u32>, Elem)> = Vec::new();
        for (e, c) in terms {
            if e.len() != r {
                return Err(Error::DimensionMismatch(format!("monomial in {} variables, expected {r}", e.len())));
            }
            if !field.contains_elem(c) {
                return Err(Error::InvalidField(format!("coefficient {c} is not in {field}")));
            }
            if e.iter().any(|&k| k >= p) || c == 0 {
                continue;
            }
            match image.iter_mut().find(|(m, _)| *m == e) {
                Some(t) => t.1 = field.add(t.1, c),
                None => image.push((e, c)),
            }
        }
        image.retain(|t| t.1 != 0);
        if image.iter().any(|(e, _)| e.iter().all(|&k| k == 0)) {
            return Err(Error::NotFlat("image has a nonzero constant term".into()));
        }
        image.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(&a.0))
        });
        let mut pt = PiPoint { field: field.clone(), r, image, flat: None };
        pt.flat = pt.certify();
        Ok(pt)
    }

    /// `Σ c_i x_i`.
    pub fn linear(field: &Field, coeffs: &[Elem]) -> Result<Self> {
        let r = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut e = vec![0; r];
                e[i] = 1;
                (e, c)
            })
            .collect();
        Self::new(field, r, terms)
    }

    /// Parse an image such as `x0 - x1^2` or `2x0 + 3 x0 x1`.
    pub fn parse(field: &Field, r: usize, text: &str) -> Result<Self> {
        let terms = parse_polynomial(text, r)?;
        let terms = terms.into_iter().map(|(e, c)| (e, field.from_int(c))).collect();
        Self::new(field, r, terms)
    }

    fn certify(&self) -> Option<Flatness> {
        if self.image.is_empty() {
            return None;
        }
        if self.image.iter().any(|(e, _)| e.iter().sum::<u32>() == 1) {
            return Some(Flatness::LinearPart);
        }
        let p = self.field.characteristic();
        let group = GroupData::additive(p, self.r).ok()?;
        let regular = ModuleRep::free(group, &self.field, 1);
        let ty = JordanType::of_operator(&self.apply(&regular)).ok()?;
        let free = JordanType::blocks(p, group.algebra_dim() / p as usize, p as usize).ok()?;
        (ty == free).then_some(Flatness::RegularRepresentation)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.r
    }

    pub fn image(&self) -> &[(Vec<u32>, Elem)] {
        &self.image
    }

    pub fn flatness(&self) -> Option<Flatness> {
        self.flat
    }

    pub fn is_linear(&self) -> bool {
        self.image.iter().all(|(e, _)| e.iter().sum::<u32>() == 1)
    }

    /// Coefficients of `x_1..x_r` in the linear part.
    pub fn linear_coeffs(&self) -> Vec<Elem> {
        let mut out = vec![0; self.r];
        for (e, c) in &self.image {
            if e.iter().sum::<u32>() == 1 {
                out[e.iter().position(|&k| k == 1).unwrap()] = *c;
            }
        }
        out
    }

    pub fn is_flat(&self, group: &GroupData) -> bool {
        group.p == self.field.characteristic() && group.r == self.r && self.flat.is_some()
    }

    fn apply(&self, m: &ModuleRep) -> Matrix {
        let f = &self.field;
        let mut acc = Matrix::zeros(f, m.dim(), m.dim());
        for (e, c) in &self.image {
            acc = acc.add(&m.monomial_action(e).scale(*c)).expect("same shape");
        }
        acc
    }

    /// The operator `θ` by which `t` acts on `m`, over the larger of the two fields.
    pub fn theta(&self, m: &ModuleRep) -> Result<Matrix> {
        if m.group().r != self.r || m.p() != self.field.characteristic() {
            return Err(Error::GroupMismatch(format!(
                "point in {} variables over {}, module over {:?}",
                self.r,
                self.field,
                m.group()
            )));
        }
        if self.field.contains(m.field()) {
            Ok(self.apply(&m.lift(&self.field)?))
        } else if m.field().contains(&self.field) {
            let pt = PiPoint { field: m.field().clone(), ..self.clone() };
            Ok(pt.apply(m))
        } else {
            Err(Error::GroupMismatch(format!("fields {} and {}", self.field, m.field())))
        }
    }

    /// Local Jordan type of `m` at this point.
    pub fn jtype(&self, m: &ModuleRep) -> Result<JordanType> {
        if self.flat.is_none() {
            return Err(Error::NotFlat(format!("image {self} is not flat")));
        }
        JordanType::of_operator(&self.theta(m)?)
    }
}

impl fmt::Display for PiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.image.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if *c != 1 {
                if self.field.is_prime_field() {
                    parts.push(c.to_string());
                } else {
                    parts.push(format!("{:?}", self.field.coeffs(*c)));
                }
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("x{i}")),
                    k => parts.push(format!("x{i}^{k}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Parse a polynomial in `x0..x{r-1}` with integer coefficients.
pub fn parse_polynomial(text: &str, r: usize) -> Result<Vec<(Vec<u32>, i64)>> {
    #[derive(Debug, Clone, Copy, PartialEq)]
    enum Tok {
        Num(i64),
        Var(usize),
        Plus,
        Minus,
        Caret,
        Star,
    }
    let err = |msg: String| Error::Parse(format!("polynomial '{text}': {msg}"));
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<i64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    while i < chars.len() {
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1
            }
            'x' => {
                i += 1;
                let v = read_int(&mut i).ok_or_else(|| err("variable index expected after 'x'".into()))?;
                if v as usize >= r {
                    return Err(err(format!("variable x{v} out of range for {r} generators")));
                }
                toks.push(Tok::Var(v as usize));
            }
            c if c.is_ascii_digit() => {
                let n = read_int(&mut i).ok_or_else(|| err("number too large".into()))?;
                toks.push(Tok::Num(n));
            }
            c => return Err(err(format!("unexpected character '{c}'"))),
        }
    }
    let mut terms: Vec<(Vec<u32>, i64)> = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() || first {
        let mut sign = 1i64;
        if !first || matches!(toks.get(pos), Some(Tok::Plus | Tok::Minus)) {
            match toks.get(pos) {
                Some(Tok::Plus) => {}
                Some(Tok::Minus) => sign = -1,
                _ => return Err(err("expected '+' or '-'".into())),
            }
            pos += 1;
        }
        first = false;
        let mut coeff = sign;
        let mut exps = vec![0u32; r];
        let mut factors = 0;
        loop {
            match toks.get(pos) {
                Some(Tok::Star) if factors > 0 => {
                    pos += 1;
                    continue;
                }
                Some(&Tok::Num(n)) => {
                    pos += 1;
                    let e = exponent(
                        &toks,
                        &mut pos,
                        |t| matches!(t, Tok::Caret),
                        |t| match t {
                            Tok::Num(n) => Some(*n),
                            _ => None,
                        },
                    )
                    .map_err(|m| err(m.into()))?;
                    coeff = coeff
                        .checked_mul(n.checked_pow(e as u32).ok_or_else(|| err("overflow".into()))?)
                        .ok_or_else(|| err("overflow".into()))?;
                }
                Some(&Tok::Var(v)) => {
                    pos += 1;
                    let e = exponent(
                        &toks,
                        &mut pos,
                        |t| matches!(t, Tok::Caret),
                        |t| match t {
                            Tok::Num(n) => Some(*n),
                            _ => None,
                        },
                    )
                    .map_err(|m| err(m.into()))?;
                    exps[v] += e as u32;
                }
                _ => break,
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(err("empty term".into()));
        }
        terms.push((exps, coeff));
    }
    Ok(terms)
}

fn exponent<T>(
    toks: &[T],
    pos: &mut usize,
    is_caret: impl Fn(&T) -> bool,
    as_num: impl Fn(&T) -> Option<i64>,
) -> std::result::Result<i64, &'static str> {
    if toks.get(*pos).is_some_and(&is_caret) {
        *pos += 1;
        let e = toks.get(*pos).and_then(as_num).ok_or("exponent expected after '^'")?;
        *pos += 1;
        if e > 1 << 15 {
            return Err("exponent too large");
        }
        Ok(e)
    } else {
        Ok(1)
    }
}
