//! Shared fixtures for the benchmarks.

use jstrata::{gallery, Field, Matrix, ModuleRep, PiFamily};

/// Deterministic dense matrix with entries from a linear congruential sequence.
pub fn dense_matrix(field: &Field, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut state = seed;
    let data = (0..rows * cols)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % field.order() as u64) as u32
        })
        .collect();
    Matrix::from_elems(field, rows, cols, data).expect("shape matches")
}

/// The tensor square of the 13-dimensional example at `p = 7`.
pub fn w_tensor_square() -> (ModuleRep, PiFamily) {
    let w = gallery::w_module(7).expect("p = 7 is supported");
    let ww = w.tensor(&w).expect("same group");
    let fam = PiFamily::standard(*ww.group()).expect("standard family");
    (ww, fam)
}
