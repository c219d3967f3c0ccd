//! Jordan types of p-nilpotent operators: partitions with parts in `1..=p`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ff::{Field, Matrix};

/// `Σ a_i [i]`, stored as the counts `a_1, ..., a_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JordanType {
    p: u32,
    counts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl JordanType {
    pub fn new(p: u32, counts: Vec<usize>) -> Result<Self> {
        if counts.len() > p as usize {
            return Err(Error::out_of_range("largest block size", counts.len(), format!("1..={p}")));
        }
        let mut counts = counts;
        counts.resize(p as usize, 0);
        Ok(JordanType { p, counts })
    }

    pub fn zero(p: u32) -> Self {
        JordanType { p, counts: vec![0; p as usize] }
    }

    /// `n [i]`.
    pub fn blocks(p: u32, n: usize, size: usize) -> Result<Self> {
        Self::from_parts(p, &vec![size; n])
    }

    pub fn from_parts(p: u32, parts: &[usize]) -> Result<Self> {
        let mut counts = vec![0; p as usize];
        for &s in parts {
            if s == 0 || s > p as usize {
                return Err(Error::out_of_range("block size", s, format!("1..={p}")));
            }
            counts[s - 1] += 1;
        }
        Ok(JordanType { p, counts })
    }

    /// Recover the type from `dim` and the ranks `r_1, r_2, ...` of successive
    /// powers. Missing trailing ranks are taken to be zero.
    pub fn from_rank_chain(p: u32, dim: usize, ranks: &[usize]) -> Result<Self> {
        let p_us = p as usize;
        if ranks.len() > p_us {
            return Err(Error::InvalidChain(format!("{} ranks given for p = {p}", ranks.len())));
        }
        let r = |j: usize| -> usize {
            match j {
                0 => dim,
                j if j <= ranks.len() => ranks[j - 1],
                _ => 0,
            }
        };
        if r(p_us) != 0 {
            return Err(Error::InvalidChain(format!("rank of the p-th power is {}", r(p_us))));
        }
        for j in 1..=p_us {
            if r(j) > r(j - 1) {
                return Err(Error::InvalidChain(format!("rank increases at power {j}")));
            }
        }
        for j in 1..p_us {
            if r(j - 1) - r(j) < r(j) - r(j + 1) {
                return Err(Error::InvalidChain(format!("rank chain is not convex at power {j}")));
            }
        }
        let counts = (1..=p_us).map(|i| r(i - 1) + r(i + 1) - 2 * r(i)).collect();
        Ok(JordanType { p, counts })
    }

    /// Jordan type of a square matrix that must satisfy `X^p = 0`.
    pub fn of_operator(m: &Matrix) -> Result<Self> {
        let p = m.field().characteristic();
        let ranks = m.power_ranks(p as usize)?;
        if ranks[p as usize - 1] != 0 {
            return Err(Error::InvalidModule(format!("operator is not {p}-nilpotent")));
        }
        Self::from_rank_chain(p, m.rows(), &ranks)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// `a_1, ..., a_p`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of blocks of size `i`.
    pub fn count(&self, i: usize) -> usize {
        if i == 0 || i > self.counts.len() {
            0
        } else {
            self.counts[i - 1]
        }
    }

    pub fn dim(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, &a)| (i + 1) * a).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Block sizes in descending order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.num_blocks());
        for i in (1..=self.counts.len()).rev() {
            out.extend(std::iter::repeat_n(i, self.counts[i - 1]));
        }
        out
    }

    pub fn largest_part(&self) -> usize {
        (1..=self.counts.len()).rev().find(|&i| self.counts[i - 1] > 0).unwrap_or(0)
    }

    /// `rk(t^j) = Σ_{i>j} a_i (i - j)`.
    pub fn rank_of_power(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.p as usize {
            return Err(Error::out_of_range("power", j, format!("1..={}", self.p)));
        }
        Ok(self.rank_unchecked(j))
    }

    fn rank_unchecked(&self, j: usize) -> usize {
        (j + 1..=self.counts.len()).map(|i| self.counts[i - 1] * (i - j)).sum()
    }

    /// `r_1, ..., r_p`.
    pub fn rank_chain(&self) -> Vec<usize> {
        (1..=self.p as usize).map(|j| self.rank_unchecked(j)).collect()
    }

    /// Dominance order, compared through partial sums of the largest parts.
    pub fn compare_dominance(&self, other: &JordanType) -> Result<Dominance> {
        if self.p != other.p {
            return Err(Error::GroupMismatch(format!("characteristics {} and {}", self.p, other.p)));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!("dimensions {} and {}", self.dim(), other.dim())));
        }
        let (a, b) = (self.parts(), other.parts());
        let (mut ge, mut le) = (true, true);
        let (mut sa, mut sb) = (0, 0);
        for k in 0..a.len().max(b.len()) {
            sa += a.get(k).copied().unwrap_or(0);
            sb += b.get(k).copied().unwrap_or(0);
            match sa.cmp(&sb) {
                Ordering::Greater => le = false,
                Ordering::Less => ge = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// Number of projective blocks `[p]`.
    pub fn projective_count(&self) -> usize {
        self.counts[self.p as usize - 1]
    }

    pub fn is_projective(&self) -> bool {
        self.counts[..self.p as usize - 1].iter().all(|&a| a == 0)
    }

    /// Drop the projective blocks.
    pub fn stable_part(&self) -> JordanType {
        let mut out = self.clone();
        out.counts[self.p as usize - 1] = 0;
        out
    }

    /// `a^⊥_i = a_{p-i}` on a type without projective blocks.
    pub fn flip(&self) -> Result<JordanType> {
        if self.projective_count() != 0 {
            return Err(Error::InvalidChain("flip needs a type without projective blocks".into()));
        }
        let p = self.p as usize;
        let counts = (1..=p).map(|i| if i == p { 0 } else { self.counts[p - i - 1] }).collect();
        Ok(JordanType { p: self.p, counts })
    }

    /// Direct sum of types.
    pub fn add(&self, other: &JordanType) -> Result<JordanType> {
        if self.p != other.p {
            return Err(Error::GroupMismatch(format!("characteristics {} and {}", self.p, other.p)));
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(JordanType { p: self.p, counts })
    }

    /// Block-diagonal nilpotent matrix of this type over `field`, blocks in
    /// descending size, each block sending basis vector `k` to `k + 1`.
    pub fn nilpotent_matrix(&self, field: &Field) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(field, n, n);
        let mut start = 0;
        for size in self.parts() {
            for k in 0..size - 1 {
                m.set(start + k + 1, start + k, 1);
            }
            start += size;
        }
        m
    }

    /// Type of `J_a ⊗ 1 + 1 ⊗ J_b`.
    pub fn tensor(&self, other: &JordanType) -> Result<JordanType> {
        if self.p != other.p {
            return Err(Error::GroupMismatch(format!("characteristics {} and {}", self.p, other.p)));
        }
        let field = Field::prime(self.p)?;
        let a = self.nilpotent_matrix(&field);
        let b = other.nilpotent_matrix(&field);
        let ia = Matrix::identity(&field, a.rows());
        let ib = Matrix::identity(&field, b.rows());
        let op = a.kron(&ib)?.add(&ia.kron(&b)?)?;
        Self::of_operator(&op)
    }

    /// Parse the canonical text form, e.g. `16[5]+24[3]+17[1]` or `4[3]+[1]`.
    pub fn parse(p: u32, s: &str) -> Result<JordanType> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Jordan type".into()));
        }
        let mut counts = vec![0usize; p as usize];
        if s == "0" {
            return Ok(JordanType { p, counts });
        }
        for term in s.split('+') {
            let bad = || Error::Parse(format!("malformed term '{term}'"));
            let (mult, rest) = term.split_once('[').ok_or_else(bad)?;
            let size = rest.strip_suffix(']').ok_or_else(bad)?;
            let mult: usize = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
            let size: usize = size.parse().map_err(|_| bad())?;
            if size == 0 || size > p as usize {
                return Err(Error::out_of_range("block size", size, format!("1..={p}")));
            }
            counts[size - 1] += mult;
        }
        Ok(JordanType { p, counts })
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (1..=self.counts.len()).rev() {
            let a = self.counts[i - 1];
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if a == 1 {
                write!(f, "[{i}]")?;
            } else {
                write!(f, "{a}[{i}]")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (p={})", self.p)
    }
}

impl Serialize for JordanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
