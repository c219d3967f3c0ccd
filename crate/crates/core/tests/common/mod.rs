//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use jstrata::{Elem, Field, JordanType, Matrix};
use rand::Rng;

/// `[a] ⊗ [b]` in characteristic `p` from the closed-form Clebsch-Gordan
/// rule, `1 <= a, b <= p`.
pub fn cg_tensor(p: usize, a: usize, b: usize) -> Vec<usize> {
    let (a, b) = (a.min(b), a.max(b));
    let mut parts = Vec::new();
    if a + b <= p {
        for i in 1..=a {
            parts.push(b - a + 2 * i - 1);
        }
    } else {
        parts.extend(std::iter::repeat_n(p, a + b - p));
        for i in 1..=p - b {
            parts.push(b - a + 2 * i - 1);
        }
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    parts
}

/// `rank(t^j)` of a partition.
pub fn partition_rank(parts: &[usize], j: usize) -> usize {
    parts.iter().map(|&s| s.saturating_sub(j)).sum()
}

pub fn blocks(n: usize, size: usize) -> Vec<usize> {
    vec![size; n]
}

/// `Γ^j` of the simple `SL_2` Frobenius-kernel module `S_λ` on the points
/// `[0:1], [1:0]`, from block combinatorics alone. Away from these two points
/// the type is `[λ0+1] ⊗ [λ1+1]`.
pub fn sl2_gamma_oracle(p: usize, lambda: usize, j: usize) -> Vec<Vec<Elem>> {
    let (l0, l1) = (lambda % p, lambda / p);
    let generic = cg_tensor(p, l0 + 1, l1 + 1);
    let at_10 = blocks(l0 + 1, l1 + 1);
    let at_01 = blocks(l1 + 1, l0 + 1);
    let r = partition_rank(&generic, j);
    let mut out = Vec::new();
    if partition_rank(&at_01, j) < r {
        out.push(vec![0, 1]);
    }
    if partition_rank(&at_10, j) < r {
        out.push(vec![1, 0]);
    }
    out
}

/// The summary table for `V^j` of `S_λ` as printed, threshold `λ̄ = λ0 + λ1`.
pub fn sl2_gamma_printed(p: usize, lambda: usize, j: usize) -> Vec<Vec<Elem>> {
    let (l0, l1) = (lambda % p, lambda / p);
    if j > l0 + l1 {
        return vec![];
    }
    let top = p - 1;
    if 0 < l0 && l0 < top && 0 < l1 && l1 < top {
        vec![vec![0, 1], vec![1, 0]]
    } else if (l0 != 0 && l1 == 0) || (l0 == top && l1 != top) {
        vec![vec![1, 0]]
    } else if (l0 == 0 && l1 != 0) || (l0 != top && l1 == top) {
        vec![vec![0, 1]]
    } else {
        vec![]
    }
}

/// A Jordan basis for a nilpotent `x`: `b` with `x b = b J`, where `J` has
/// blocks of the returned sizes in descending order, each chain written
/// `v, xv, x^2 v, ...`.
pub fn jordan_basis(x: &Matrix) -> Option<(Matrix, Vec<usize>)> {
    let f = x.field().clone();
    let n = x.rows();
    let mut powers = vec![Matrix::identity(&f, n)];
    while !powers.last().unwrap().is_zero() {
        let next = x.mul(powers.last().unwrap()).ok()?;
        powers.push(next);
        if powers.len() > n + 1 {
            return None;
        }
    }
    let height = powers.len() - 1;
    let kernel = |k: usize| -> Matrix { powers[k].kernel() };
    let mut heads: Vec<(usize, Vec<Elem>)> = Vec::new();
    for level in (1..=height).rev() {
        // span of ker x^{level-1} and the level-`level` vectors of longer chains
        let mut span = kernel(level - 1);
        for (len, v) in &heads {
            let w = powers[len - level].mul_vec(v);
            span = span.hstack(&Matrix::from_columns(&f, n, &[w])).ok()?;
        }
        let candidates = kernel(level);
        for c in candidates.columns() {
            let trial = span.hstack(&Matrix::from_columns(&f, n, std::slice::from_ref(&c))).ok()?;
            if trial.rank() > span.rank() {
                span = trial;
                heads.push((level, c));
            }
        }
    }
    let mut cols = Vec::new();
    let mut sizes = Vec::new();
    for (len, v) in &heads {
        sizes.push(*len);
        for power in &powers[..*len] {
            cols.push(power.mul_vec(v));
        }
    }
    if cols.len() != n {
        return None;
    }
    Some((Matrix::from_columns(&f, n, &cols), sizes))
}

pub fn random_invertible<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let data = (0..n * n).map(|_| field.random(rng)).collect();
        let g = Matrix::from_elems(field, n, n, data).unwrap();
        if g.rank() == n {
            return g;
        }
    }
}

pub fn jt(p: u32, s: &str) -> JordanType {
    JordanType::parse(p, s).unwrap()
}
