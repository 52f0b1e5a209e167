//! Linear algebra over `F_q` on matrices of canonical symbol indices.
//!
//! Used for parity-check expansion, generator/nullspace computation,
//! scrambler arithmetic, and interleaved codeword/error matrices. An
//! `ℓ × n` matrix of code symbols doubles as an interleaved word; the burst
//! support and weight of an error matrix derive from its nonzero columns.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::field::{FieldContext, Symbol};

/// Dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Symbol>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> FqMatrix {
        FqMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> FqMatrix {
        let mut m = FqMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> FqMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        FqMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Symbol {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Symbol) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Number of nonzero columns (the burst weight of an error matrix).
    pub fn burst_weight(&self) -> usize {
        self.nonzero_columns().len()
    }

    /// Indices of nonzero columns, ascending.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c) != 0))
            .collect()
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = FqMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix, ctx: &FieldContext) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ctx.sym_add(a, b))
            .collect();
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &FqMatrix, ctx: &FieldContext) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ctx.sym_sub(a, b))
            .collect();
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &FqMatrix, ctx: &FieldContext) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = FqMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let t = ctx.sym_mul(a, other.get(k, c));
                    let cur = out.get(r, c);
                    out.set(r, c, ctx.sym_add(cur, t));
                }
            }
        }
        out
    }

    /// `row · self` for a length-`rows` vector.
    pub fn vec_mul(&self, v: &[Symbol], ctx: &FieldContext) -> Vec<Symbol> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = vec![0 as Symbol; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = ctx.sym_add(out[c], ctx.sym_mul(a, self.get(k, c)));
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self, ctx: &FieldContext) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| self.get(r, pc) != 0) else {
                continue;
            };
            if sel != pr {
                for c in 0..self.cols {
                    let tmp = self.get(pr, c);
                    self.set(pr, c, self.get(sel, c));
                    self.set(sel, c, tmp);
                }
            }
            let inv = ctx.sym_inv(self.get(pr, pc)).expect("pivot nonzero");
            for c in 0..self.cols {
                self.set(pr, c, ctx.sym_mul(self.get(pr, c), inv));
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, pc);
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let t = ctx.sym_mul(factor, self.get(pr, c));
                    self.set(r, c, ctx.sym_sub(self.get(r, c), t));
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self, ctx: &FieldContext) -> usize {
        let mut work = self.clone();
        work.rref(ctx).len()
    }

    /// Basis of the right nullspace `{v : self · vᵀ = 0}`, one vector per row.
    ///
    /// Deterministic: one basis vector per free column, ascending, with a 1
    /// in the free position.
    pub fn nullspace(&self, ctx: &FieldContext) -> FqMatrix {
        let mut work = self.clone();
        let pivots = work.rref(ctx);
        nullspace_from_rref(&work, &pivots, ctx)
    }

    /// Inverse of a square matrix, if it is nonsingular.
    pub fn inverse(&self, ctx: &FieldContext) -> Option<FqMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = FqMatrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref(ctx);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = FqMatrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    pub fn random(
        rows: usize,
        cols: usize,
        ctx: &FieldContext,
        rng: &mut impl RngCore,
    ) -> FqMatrix {
        let data = (0..rows * cols).map(|_| ctx.random_symbol(rng)).collect();
        FqMatrix { rows, cols, data }
    }

    /// Rejection-samples a nonsingular square matrix.
    pub fn random_invertible(n: usize, ctx: &FieldContext, rng: &mut impl RngCore) -> FqMatrix {
        loop {
            let m = FqMatrix::random(n, n, ctx, rng);
            if m.rank(ctx) == n {
                return m;
            }
        }
    }

    /// Applies a column permutation: column `j` of the input becomes column
    /// `perm[j]` of the output (right-multiplication by the permutation
    /// matrix with 1 at `(j, perm[j])`).
    pub fn permute_columns(&self, perm: &[usize], ctx: &FieldContext) -> FqMatrix {
        let _ = ctx;
        assert_eq!(perm.len(), self.cols);
        let mut out = FqMatrix::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, perm[c], self.get(r, c));
            }
        }
        out
    }

    /// The permutation matrix `P` with `A.permute_columns(perm) == A·P`.
    pub fn permutation_matrix(perm: &[usize]) -> FqMatrix {
        let n = perm.len();
        let mut p = FqMatrix::zero(n, n);
        for (j, &pj) in perm.iter().enumerate() {
            p.set(j, pj, 1);
        }
        p
    }
}

/// Nullspace basis from an already-reduced matrix and its pivot columns.
pub fn nullspace_from_rref(rref: &FqMatrix, pivots: &[usize], ctx: &FieldContext) -> FqMatrix {
    let free: Vec<usize> = (0..rref.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = FqMatrix::zero(free.len(), rref.cols);
    for (bi, &fc) in free.iter().enumerate() {
        basis.set(bi, fc, 1);
        for (pr, &pc) in pivots.iter().enumerate() {
            basis.set(bi, pc, ctx.sym_neg(rref.get(pr, fc)));
        }
    }
    basis
}

/// Inverse of an index permutation.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
