//! Matrices over GF(p)[λ_1, ..., λ_n].

#![allow(clippy::needless_range_loop)]

use rayon::prelude::*;

use super::field::{Elem, Field};
use super::matrix::Matrix;
use super::mpoly::MPoly;
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    names: Vec<String>,
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

/// A connected component of the bipartite graph "row i -- col j iff entry (i, j) != 0".
/// After permuting rows and columns the matrix is block diagonal in its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl PolyMatrix {
    pub fn zeros(field: &Field, names: &[String], rows: usize, cols: usize) -> Self {
        assert!(field.is_prime_field(), "polynomial matrices live over a prime field");
        let nvars = names.len();
        PolyMatrix {
            field: field.clone(),
            names: names.to_vec(),
            rows,
            cols,
            entries: vec![MPoly::zero(field, nvars); rows * cols],
        }
    }

    pub fn from_entries(
        field: &Field,
        names: &[String],
        rows: usize,
        cols: usize,
        entries: Vec<MPoly>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.nvars() != names.len() || e.field() != field) {
            return Err(Error::DimensionMismatch("entries must share the parameter list".into()));
        }
        Ok(PolyMatrix { field: field.clone(), names: names.to_vec(), rows, cols, entries })
    }

    /// `Σ c_k M_k` for polynomial coefficients `c_k` and constant matrices `M_k`.
    pub fn linear_combination(field: &Field, names: &[String], terms: &[(MPoly, Matrix)]) -> Result<Self> {
        let (rows, cols) = match terms.first() {
            Some((_, m)) => (m.rows(), m.cols()),
            None => return Err(Error::DimensionMismatch("empty linear combination".into())),
        };
        let mut out = Self::zeros(field, names, rows, cols);
        for (c, m) in terms {
            if m.rows() != rows || m.cols() != cols || m.field() != field {
                return Err(Error::DimensionMismatch("terms must have equal shape over the prime field".into()));
            }
            for i in 0..rows {
                for j in 0..cols {
                    let v = m.get(i, j);
                    if v != 0 {
                        let e = &mut out.entries[i * cols + j];
                        *e = e.add(&c.scale(v));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let n = other.cols;
        let entries: Vec<MPoly> = (0..self.rows)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut row = vec![MPoly::zero(&self.field, self.nvars()); n];
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, slot) in row.iter_mut().enumerate() {
                        let b = other.get(k, j);
                        if !b.is_zero() {
                            *slot = slot.add(&a.mul(b));
                        }
                    }
                }
                row
            })
            .collect();
        Ok(PolyMatrix { entries, cols: n, ..self.clone() })
    }

    pub fn pow(&self, e: usize) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::zeros(&self.field, &self.names, self.rows, self.cols);
        for i in 0..self.rows {
            acc.set(i, i, MPoly::constant(&self.field, self.nvars(), 1));
        }
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluate at a point with coordinates in `field` (an extension of the base field).
    pub fn eval(&self, field: &Field, point: &[Elem]) -> Matrix {
        let data = self.entries.iter().map(|e| e.eval(field, point)).collect();
        Matrix::from_elems(field, self.rows, self.cols, data).expect("shape is consistent")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    pub fn components(&self) -> Vec<Component> {
        // union-find over rows 0..rows and cols rows..rows+cols
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut touched = vec![false; n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, self.rows + j));
                    parent[a] = b;
                    touched[i] = true;
                    touched[self.rows + j] = true;
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut groups: std::collections::HashMap<usize, Component> = Default::default();
        for x in 0..n {
            if !touched[x] {
                continue;
            }
            let root = find(&mut parent, x);
            let comp = groups.entry(root).or_insert_with(|| {
                order.push(root);
                Component { rows: Vec::new(), cols: Vec::new() }
            });
            if x < self.rows {
                comp.rows.push(x);
            } else {
                comp.cols.push(x - self.rows);
            }
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    fn dense_block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<MPoly>> {
        rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect()
    }

    /// Rank over the fraction field GF(p)(λ).
    pub fn symbolic_rank(&self) -> usize {
        self.component_ranks().iter().map(|(_, r)| r).sum()
    }

    /// Each component together with its symbolic rank.
    pub fn component_ranks(&self) -> Vec<(Component, usize)> {
        self.components()
            .into_iter()
            .map(|c| {
                let r = bareiss(self.dense_block(&c.rows, &c.cols), &self.field).0;
                (c, r)
            })
            .collect()
    }

    /// Number of `size`-minors: `C(rows, size) * C(cols, size)`.
    pub fn minor_count(&self, size: usize) -> u128 {
        binomial(self.rows, size).saturating_mul(binomial(self.cols, size))
    }

    /// All nonzero `size x size` minors, made monic, sorted and deduplicated.
    pub fn minors_ideal(&self, size: usize) -> Result<Vec<MPoly>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::out_of_range("minor size", size, format!("1..={}", self.rows.min(self.cols))));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(normalize_generators(block_minors(self, &rows, &cols, size)))
    }

    /// Generators of the ideal of `rank`-minors where `rank` is the symbolic rank,
    /// assembled from the components, or `None` when more than `budget` minors
    /// would have to be formed.
    ///
    /// A nonzero maximal minor of a block-diagonal matrix is a product of
    /// maximal minors of the blocks, so the ideal is the product of the
    /// per-component ideals.
    pub fn max_rank_minors(&self, budget: u128) -> Option<Vec<MPoly>> {
        let comps = self.component_ranks();
        let mut work: u128 = 0;
        for (c, r) in &comps {
            work = work.saturating_add(binomial(c.rows.len(), *r).saturating_mul(binomial(c.cols.len(), *r)));
        }
        if work > budget {
            return None;
        }
        let nvars = self.nvars();
        let mut acc = vec![MPoly::constant(&self.field, nvars, 1)];
        for (c, r) in &comps {
            let gens = normalize_generators(block_minors(self, &c.rows, &c.cols, *r));
            if (acc.len() as u128).saturating_mul(gens.len() as u128) > budget {
                return None;
            }
            acc = acc.iter().flat_map(|a| gens.iter().map(move |g| a.mul(g))).collect();
            acc = normalize_generators(acc);
        }
        Some(acc)
    }

    /// Specialize every parameter except `free` and return the matrix over GF(p)[t].
    pub fn specialize(&self, free: usize, values: &[Elem]) -> Vec<Vec<UPoly>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).specialize_to_univariate(free, values)).collect())
            .collect()
    }

    /// The `rank`-th determinantal divisor (monic gcd of all `rank`-minors) of the
    /// specialization to GF(p)[t]; zero when the specialized rank is below `rank`.
    ///
    /// Requires `rank` to be at least the symbolic rank.
    pub fn chart_divisor(&self, free: usize, values: &[Elem], rank: usize) -> UPoly {
        let p = self.field.characteristic();
        let mut acc = UPoly::one(p);
        let mut total = 0;
        for c in self.components() {
            let block = c
                .rows
                .iter()
                .map(|&i| c.cols.iter().map(|&j| self.get(i, j).specialize_to_univariate(free, values)).collect())
                .collect();
            for d in diagonalize(block) {
                acc = acc.mul(&d);
                total += 1;
            }
        }
        assert!(total <= rank, "divisor requested below the generic rank");
        if total < rank {
            UPoly::zero(p)
        } else {
            acc.monic()
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn normalize_generators(mut gens: Vec<MPoly>) -> Vec<MPoly> {
    gens.retain(|g| !g.is_zero());
    let mut gens: Vec<MPoly> = gens.iter().map(MPoly::monic).collect();
    let key = |g: &MPoly| g.terms().collect::<Vec<_>>();
    gens.sort_by_cached_key(|g| std::cmp::Reverse(key(g)));
    gens.dedup();
    gens
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for t in i + 1..k {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

fn block_minors(m: &PolyMatrix, rows: &[usize], cols: &[usize], size: usize) -> Vec<MPoly> {
    let rsets = combinations(rows.len(), size);
    let csets = combinations(cols.len(), size);
    rsets
        .par_iter()
        .flat_map_iter(|rs| {
            let r: Vec<usize> = rs.iter().map(|&i| rows[i]).collect();
            csets.iter().map(move |cs| {
                let c: Vec<usize> = cs.iter().map(|&j| cols[j]).collect();
                bareiss(m.dense_block(&r, &c), &m.field).1
            })
        })
        .collect()
}

/// Fraction-free elimination with full pivoting on the entry of lowest total
/// degree (ties broken by fewest terms). Returns the rank and, for a square
/// input, the determinant up to sign.
fn bareiss(mut a: Vec<Vec<MPoly>>, field: &Field) -> (usize, MPoly) {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let nvars = a.first().and_then(|r| r.first()).map_or(0, MPoly::nvars);
    let mut prev = MPoly::constant(field, nvars, 1);
    let mut rank = 0;
    for k in 0..n.min(m) {
        let mut best: Option<(u32, usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if e.is_zero() {
                    continue;
                }
                let key = (e.total_degree().unwrap(), e.len(), i, j);
                if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                    best = Some(key);
                }
            }
        }
        let Some((_, _, pi, pj)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        tail.par_iter_mut().for_each(|row| {
            let lead = std::mem::replace(&mut row[k], MPoly::zero(field, nvars));
            for j in k + 1..m {
                let cur = &row[j];
                if cur.is_zero() && (lead.is_zero() || pivot_row[j].is_zero()) {
                    continue;
                }
                let num = pivot.mul(cur).sub(&lead.mul(&pivot_row[j]));
                row[j] = num.exact_div(&prev).expect("fraction-free elimination divides exactly");
            }
        });
        prev = pivot.clone();
        rank += 1;
    }
    let det = if n == m && rank == n { prev } else { MPoly::zero(field, nvars) };
    (rank, det)
}

/// Diagonalize over GF(p)[t] by unimodular row and column operations and
/// return the nonzero diagonal entries. Their product is the determinantal
/// divisor of order equal to the rank.
fn diagonalize(mut a: Vec<Vec<UPoly>>) -> Vec<UPoly> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for s in 0..n.min(m) {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(s) {
            for (j, e) in row.iter().enumerate().skip(s) {
                if let Some(d) = e.degree() {
                    if best.is_none_or(|b| d < b.0) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(s, pi);
        for row in a.iter_mut() {
            row.swap(s, pj);
        }
        loop {
            // clear column s below the pivot
            for i in s + 1..n {
                if a[i][s].is_zero() {
                    continue;
                }
                let (q, _) = a[i][s].divrem(&a[s][s]);
                for j in s..m {
                    let t = q.mul(&a[s][j]);
                    a[i][j] = a[i][j].sub(&t);
                }
            }
            // clear row s right of the pivot
            for j in s + 1..m {
                if a[s][j].is_zero() {
                    continue;
                }
                let (q, _) = a[s][j].divrem(&a[s][s]);
                for row in a.iter_mut().skip(s) {
                    let t = q.mul(&row[s]);
                    row[j] = row[j].sub(&t);
                }
            }
            // remainders of lower degree become the new pivot
            let pdeg = a[s][s].degree().unwrap();
            let mut next: Option<(usize, usize, usize)> = None;
            for i in s + 1..n {
                if let Some(d) = a[i][s].degree() {
                    if next.is_none_or(|b| d < b.0) {
                        next = Some((d, i, s));
                    }
                }
            }
            for j in s + 1..m {
                if let Some(d) = a[s][j].degree() {
                    if next.is_none_or(|b| d < b.0) {
                        next = Some((d, s, j));
                    }
                }
            }
            match next {
                None => break,
                Some((d, i, j)) => {
                    debug_assert!(d < pdeg);
                    if i != s {
                        a.swap(s, i);
                    } else {
                        for row in a.iter_mut() {
                            row.swap(s, j);
                        }
                    }
                }
            }
        }
        diag.push(a[s][s].clone());
    }
    diag
}
