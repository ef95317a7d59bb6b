//! Dense exact linear algebra over a finite field.
//!
//! Everything reduces to one routine: reduced row echelon form. Solutions
//! are made deterministic by zeroing free variables, and infeasibility is
//! certified by a row vector `w` with `wᵀM = 0` and `wᵀb ≠ 0`, extracted
//! from the augmented elimination.
//!
//! Problems over a truncation ring are never solved here; callers split
//! them into residue-field solves through the exact sequence first.

use crate::coeff::{Gf, GfElem};
use crate::error::{Error, Result};

/// A dense row-major matrix over a fixed finite field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub gf: Gf,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<GfElem>,
}

/// Outcome of a linear solve.
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    /// One exact solution (free variables set to zero).
    Solution(Vec<GfElem>),
    /// No solution; `witness · M = 0` while `witness · b ≠ 0`, and `row` is
    /// the index of the inconsistent pivot row in the augmented echelon form.
    Infeasible { row: usize, witness: Vec<GfElem> },
}

impl Matrix {
    pub fn zeros(gf: Gf, rows: usize, cols: usize) -> Self {
        Matrix {
            gf,
            rows,
            cols,
            entries: vec![gf.zero(); rows * cols],
        }
    }

    pub fn identity(gf: Gf, n: usize) -> Self {
        let mut m = Matrix::zeros(gf, n, n);
        for i in 0..n {
            m[(i, i)] = gf.one();
        }
        m
    }

    pub fn from_rows(gf: Gf, rows: &[Vec<GfElem>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            gf,
            rows: r,
            cols: c,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn row(&self, i: usize) -> &[GfElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mat_vec(&self, v: &[GfElem]) -> Result<Vec<GfElem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let gf = self.gf;
        let mut out = vec![gf.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = gf.zero();
            for (j, &x) in v.iter().enumerate() {
                acc = gf.add(acc, gf.mul(self[(i, j)], x));
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns in
    /// strictly increasing order. Row scan order is fixed, so the result is
    /// deterministic.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let gf = self.gf;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let Some(pr) = (r..self.rows).find(|&i| !gf.is_zero(self[(i, c)])) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let tmp = self[(r, j)];
                    self[(r, j)] = self[(pr, j)];
                    self[(pr, j)] = tmp;
                }
            }
            let inv = gf.inv(self[(r, c)]).expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = gf.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && !gf.is_zero(self[(i, c)]) {
                    let factor = self[(i, c)];
                    for j in c..self.cols {
                        let sub = gf.mul(factor, self[(r, j)]);
                        self[(i, j)] = gf.sub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `M x = b`, zeroing free variables. Infeasibility comes with a
    /// certificate; see [`SolveOutcome`].
    pub fn solve(&self, b: &[GfElem]) -> Result<SolveOutcome> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, rhs has length {}",
                self.rows,
                b.len()
            )));
        }
        let gf = self.gf;
        // augmented [M | b | I]; the identity block records row operations
        // and yields the infeasibility witness when needed
        let width = self.cols + 1 + self.rows;
        let mut aug = Matrix::zeros(gf, self.rows, width);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
            aug[(i, self.cols + 1 + i)] = gf.one();
        }
        let pivots = aug.rref_in_place();
        // a pivot in the b column certifies inconsistency
        if let Some(pos) = pivots.iter().position(|&c| c == self.cols) {
            let witness = (0..self.rows)
                .map(|j| aug[(pos, self.cols + 1 + j)])
                .collect();
            return Ok(SolveOutcome::Infeasible { row: pos, witness });
        }
        let mut x = vec![gf.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            if c < self.cols {
                x[c] = aug[(r, self.cols)];
            }
        }
        Ok(SolveOutcome::Solution(x))
    }

    /// A basis of `ker M`, one vector per free column, deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<GfElem>> {
        let gf = self.gf;
        let (rr, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![gf.zero(); self.cols];
            v[free] = gf.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = gf.neg(rr[(r, free)]);
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GfElem;
    fn index(&self, (i, j): (usize, usize)) -> &GfElem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GfElem {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

// ---------------------------------------------------------------------------
// vector helpers over a field
// ---------------------------------------------------------------------------

pub fn vec_add(gf: Gf, a: &[GfElem], b: &[GfElem]) -> Vec<GfElem> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| gf.add(x, y)).collect()
}

pub fn vec_sub(gf: Gf, a: &[GfElem], b: &[GfElem]) -> Vec<GfElem> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| gf.sub(x, y)).collect()
}

pub fn vec_scale(gf: Gf, s: GfElem, a: &[GfElem]) -> Vec<GfElem> {
    a.iter().map(|&x| gf.mul(s, x)).collect()
}

pub fn vec_is_zero(gf: Gf, a: &[GfElem]) -> bool {
    a.iter().all(|&x| gf.is_zero(x))
}

pub fn vec_dot(gf: Gf, a: &[GfElem], b: &[GfElem]) -> GfElem {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = gf.zero();
    for (&x, &y) in a.iter().zip(b) {
        acc = gf.add(acc, gf.mul(x, y));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> Gf {
        Gf::prime(p).unwrap()
    }

    fn mat(gf: Gf, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<GfElem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| gf.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(gf, &rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let gf = f(2);
        let id = Matrix::identity(gf, 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let z = Matrix::zeros(gf, 2, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        // second row is 2× the first, so it eliminates to zero
        let gf = f(5);
        let m = mat(gf, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, mat(gf, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let gf = f(3);
        let id = Matrix::identity(gf, 3);
        let b = vec![gf.from_i64(2), gf.from_i64(0), gf.from_i64(1)];
        match id.solve(&b).unwrap() {
            SolveOutcome::Solution(x) => assert_eq!(x, b),
            _ => panic!("expected a solution"),
        }

        let gf = f(2);
        let m = mat(gf, &[&[1, 1]]);
        let b = vec![gf.one()];
        match m.solve(&b).unwrap() {
            SolveOutcome::Solution(x) => {
                assert_eq!(m.mat_vec(&x).unwrap(), b);
            }
            _ => panic!("expected a solution"),
        }
    }

    #[test]
    fn solve_infeasible_with_witness() {
        let gf = f(3);
        let m = mat(gf, &[&[1], &[1]]);
        let b = vec![gf.from_i64(1), gf.from_i64(2)];
        match m.solve(&b).unwrap() {
            SolveOutcome::Infeasible { witness, .. } => {
                // wᵀ M = 0 and wᵀ b ≠ 0
                for j in 0..m.cols {
                    let col: Vec<GfElem> = (0..m.rows).map(|i| m[(i, j)]).collect();
                    assert!(gf.is_zero(vec_dot(gf, &witness, &col)));
                }
                assert!(!gf.is_zero(vec_dot(gf, &witness, &b)));
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn kernel_examples() {
        let gf = f(2);
        assert!(Matrix::identity(gf, 4).kernel_basis().is_empty());

        let z = Matrix::zeros(gf, 1, 3);
        assert_eq!(z.kernel_basis().len(), 3);

        let gf = f(5);
        let m = mat(gf, &[&[1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // deterministic representative: free variable set to one
        assert_eq!(k[0], vec![gf.from_i64(3), gf.from_i64(1)]);
        assert!(vec_is_zero(gf, &m.mat_vec(&k[0]).unwrap()));
    }

    /// rank + nullity = cols, kernel vectors annihilate, rref idempotent;
    /// randomized over several primes and shapes.
    #[test]
    fn rank_nullity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &p in &[2u64, 3, 5] {
            let gf = f(p);
            for trial in 0..70 {
                // mostly small shapes, with a few large ones up to 40
                let cap = if trial % 10 == 0 { 40 } else { 12 };
                let rows = rng.gen_range(1..=cap);
                let cols = rng.gen_range(1..=cap);
                let mut m = Matrix::zeros(gf, rows, cols);
                for i in 0..rows {
                    for j in 0..cols {
                        m[(i, j)] = gf.from_u64(rng.gen_range(0..p));
                    }
                }
                let (rr, pivots) = m.rref();
                let kernel = m.kernel_basis();
                assert_eq!(pivots.len() + kernel.len(), cols);
                for v in &kernel {
                    assert!(vec_is_zero(gf, &m.mat_vec(v).unwrap()));
                }
                let (rr2, pivots2) = rr.rref();
                assert_eq!(rr2, rr);
                assert_eq!(pivots2, pivots);
            }
        }
    }

    /// Solve agrees with brute-force enumeration on tiny systems.
    #[test]
    fn solve_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &p in &[2u64, 3] {
            let gf = f(p);
            for _ in 0..40 {
                let rows = rng.gen_range(1..=3);
                let cols = rng.gen_range(1..=4);
                let mut m = Matrix::zeros(gf, rows, cols);
                for i in 0..rows {
                    for j in 0..cols {
                        m[(i, j)] = gf.from_u64(rng.gen_range(0..p));
                    }
                }
                let b: Vec<GfElem> =
                    (0..rows).map(|_| gf.from_u64(rng.gen_range(0..p))).collect();
                // enumerate all candidate solutions
                let total = p.pow(cols as u32);
                let mut any = false;
                for code in 0..total {
                    let mut x = Vec::with_capacity(cols);
                    let mut c = code;
                    for _ in 0..cols {
                        x.push(gf.from_u64(c % p));
                        c /= p;
                    }
                    if m.mat_vec(&x).unwrap() == b {
                        any = true;
                        break;
                    }
                }
                match m.solve(&b).unwrap() {
                    SolveOutcome::Solution(x) => {
                        assert!(any);
                        assert_eq!(m.mat_vec(&x).unwrap(), b);
                    }
                    SolveOutcome::Infeasible { .. } => assert!(!any),
                }
            }
        }
    }
}
