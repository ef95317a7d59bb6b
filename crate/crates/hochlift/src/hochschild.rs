//! Hochschild cochains `C^n(B, M)` for `n ≤ 3`, with coefficients in a
//! twisted bimodule, the differential, cocycle and coboundary predicates,
//! cohomology dimensions, and restriction to subalgebras.
//!
//! A cochain is stored as a dense tensor: one value vector per tuple of
//! basis indices of the indexing algebra `B`. The indexing algebra may be a
//! subalgebra of the module's carrier, embedded by explicit basis vectors;
//! taking `B` = carrier with the identity embedding recovers the usual
//! complex of the algebra itself.
//!
//! Degrees are capped at 3: degree 3 is needed only as the target of `δ²`
//! when certifying 2-cocycles. The dense degree-3 tensor is the memory
//! ceiling, so those operations refuse indexing dimensions above
//! [`MAX_DEGREE3_DIM`] instead of thrashing.

use crate::algebra::{subalgebra_on, AlgebraSC, LinMap, Subspace, TwistedBimodule};
use crate::coeff::{Gf, GfElem};
use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, Matrix, SolveOutcome};

/// Largest indexing dimension for operations that materialize a degree-3
/// tensor.
pub const MAX_DEGREE3_DIM: usize = 16;

/// A dense multilinear map `B^{⊗n} → M` in basis coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain {
    pub degree: usize,
    pub base_dim: usize,
    pub value_dim: usize,
    tensor: Vec<Vec<GfElem>>, // base_dim^degree entries
}

impl Cochain {
    pub fn zero(gf: Gf, degree: usize, base_dim: usize, value_dim: usize) -> Self {
        let len = base_dim.pow(degree as u32);
        Cochain {
            degree,
            base_dim,
            value_dim,
            tensor: vec![vec![gf.zero(); value_dim]; len],
        }
    }

    pub fn rank_tuple(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &i| acc * self.base_dim + i)
    }

    pub fn get(&self, tuple: &[usize]) -> &[GfElem] {
        &self.tensor[self.rank_tuple(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: Vec<GfElem>) {
        debug_assert_eq!(v.len(), self.value_dim);
        let idx = self.rank_tuple(tuple);
        self.tensor[idx] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &[GfElem])> {
        let d = self.base_dim;
        let n = self.degree;
        self.tensor.iter().enumerate().map(move |(mut idx, v)| {
            let mut t = vec![0usize; n];
            for pos in (0..n).rev() {
                t[pos] = idx % d;
                idx /= d;
            }
            (t, v.as_slice())
        })
    }

    pub fn is_zero(&self, gf: Gf) -> bool {
        self.tensor.iter().all(|v| vec_is_zero(gf, v))
    }

    pub fn add(&self, gf: Gf, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.tensor.len(), other.tensor.len());
        let tensor = self
            .tensor
            .iter()
            .zip(&other.tensor)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| gf.add(x, y)).collect())
            .collect();
        Cochain {
            degree: self.degree,
            base_dim: self.base_dim,
            value_dim: self.value_dim,
            tensor,
        }
    }

    pub fn sub(&self, gf: Gf, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.tensor.len(), other.tensor.len());
        let tensor = self
            .tensor
            .iter()
            .zip(&other.tensor)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| gf.sub(x, y)).collect())
            .collect();
        Cochain {
            degree: self.degree,
            base_dim: self.base_dim,
            value_dim: self.value_dim,
            tensor,
        }
    }

    pub fn flatten(&self) -> Vec<GfElem> {
        self.tensor.iter().flatten().copied().collect()
    }

    pub fn from_flat(
        degree: usize,
        base_dim: usize,
        value_dim: usize,
        flat: &[GfElem],
    ) -> Result<Self> {
        let len = base_dim.pow(degree as u32);
        if flat.len() != len * value_dim {
            return Err(Error::DimensionMismatch("flattened cochain has wrong length".into()));
        }
        let tensor = flat.chunks(value_dim).map(|c| c.to_vec()).collect();
        Ok(Cochain {
            degree,
            base_dim,
            value_dim,
            tensor,
        })
    }

    /// A degree-1 cochain as the matrix of a linear map `B → M`; square
    /// matrices only (`B` = carrier).
    pub fn to_linmap(&self, gf: Gf) -> Result<LinMap<Gf>> {
        if self.degree != 1 || self.base_dim != self.value_dim {
            return Err(Error::DimensionMismatch("need a square degree-1 cochain".into()));
        }
        let cols: Vec<Vec<GfElem>> = (0..self.base_dim).map(|j| self.get(&[j]).to_vec()).collect();
        LinMap::from_cols(gf, &cols)
    }

    pub fn from_linmap(m: &LinMap<Gf>) -> Cochain {
        let mut c = Cochain::zero(m.ring, 1, m.n, m.n);
        for j in 0..m.n {
            c.set(&[j], m.col(j));
        }
        c
    }

    /// `true` iff `c(x⊗y) = c(y⊗x)` on all index pairs (degree 2).
    pub fn is_symmetric(&self) -> bool {
        assert_eq!(self.degree, 2);
        for i in 0..self.base_dim {
            for j in i + 1..self.base_dim {
                if self.get(&[i, j]) != self.get(&[j, i]) {
                    return false;
                }
            }
        }
        true
    }
}

/// The data a Hochschild complex is computed in: an indexing algebra `B`
/// embedded into the carrier of a twisted bimodule.
pub struct CochainSpace<'a> {
    pub base: &'a AlgebraSC<Gf>,
    /// Images of `B`'s basis vectors inside the module carrier.
    pub embed: Vec<Vec<GfElem>>,
    pub module: TwistedBimodule<'a>,
}

/// Outcome of a coboundary solve.
#[derive(Clone, Debug)]
pub enum CoboundaryOutcome {
    /// `h` with `δ¹h = c`, free coordinates zeroed.
    Solved(Cochain),
    /// Certified infeasibility: `witness · δ¹-matrix = 0` while
    /// `witness · c ≠ 0`; `row` is the inconsistent pivot row of the
    /// augmented echelon form.
    Infeasible { row: usize, witness: Vec<GfElem> },
}

impl<'a> CochainSpace<'a> {
    /// The complex of the carrier algebra itself with twist `f`.
    pub fn full(algebra: &'a AlgebraSC<Gf>, twist: LinMap<Gf>) -> Result<Self> {
        let embed = (0..algebra.dim()).map(|i| algebra.basis_vec(i)).collect();
        Ok(CochainSpace {
            base: algebra,
            embed,
            module: TwistedBimodule::new(algebra, twist)?,
        })
    }

    /// A complex indexed by a subalgebra `B` of the carrier with the same
    /// module.
    pub fn embedded(
        base: &'a AlgebraSC<Gf>,
        embed: Vec<Vec<GfElem>>,
        module: TwistedBimodule<'a>,
    ) -> Result<Self> {
        if embed.len() != base.dim() || embed.iter().any(|v| v.len() != module.dim()) {
            return Err(Error::DimensionMismatch("embedding shape mismatch".into()));
        }
        Ok(CochainSpace { base, embed, module })
    }

    pub fn gf(&self) -> Gf {
        self.base.gf()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn value_dim(&self) -> usize {
        self.module.dim()
    }

    pub fn zero_cochain(&self, degree: usize) -> Cochain {
        Cochain::zero(self.gf(), degree, self.base_dim(), self.value_dim())
    }

    fn check_cochain(&self, c: &Cochain) -> Result<()> {
        if c.base_dim != self.base_dim() || c.value_dim != self.value_dim() {
            return Err(Error::DimensionMismatch("cochain does not fit this complex".into()));
        }
        Ok(())
    }

    /// The Hochschild differential: for a degree-`n` cochain `c`,
    ///
    /// ```text
    /// (δⁿc)(a_1 ⊗ … ⊗ a_{n+1}) = a_1·c(a_2 ⊗ … ⊗ a_{n+1})
    ///     + Σ_{i=1}^{n} (−1)^i c(a_1 ⊗ … ⊗ a_i a_{i+1} ⊗ … ⊗ a_{n+1})
    ///     + (−1)^{n+1} c(a_1 ⊗ … ⊗ a_n)·a_{n+1}
    /// ```
    ///
    /// with the twisted module action on both ends. Degrees above 2 are
    /// rejected, as is a degree-2 input over an indexing algebra larger than
    /// [`MAX_DEGREE3_DIM`].
    pub fn delta(&self, c: &Cochain) -> Result<Cochain> {
        self.check_cochain(c)?;
        let n = c.degree;
        if n > 2 {
            return Err(Error::DegreeOutOfRange(n));
        }
        let d = self.base_dim();
        if n == 2 && d > MAX_DEGREE3_DIM {
            return Err(Error::Domain(format!(
                "degree-3 tensors over an algebra of dimension {d} exceed the supported ceiling {MAX_DEGREE3_DIM}"
            )));
        }
        let gf = self.gf();
        let vd = self.value_dim();
        let mut out = self.zero_cochain(n + 1);
        let mut tuple = vec![0usize; n + 1];
        loop {
            let mut acc = self.module.act_left(&self.embed[tuple[0]], c.get(&tuple[1..]));
            for i in 1..=n {
                let sign = gf.from_i64(if i % 2 == 1 { -1 } else { 1 });
                let mut merged = Vec::with_capacity(n);
                merged.extend_from_slice(&tuple[..i - 1]);
                merged.push(0usize); // placeholder for the product index
                merged.extend_from_slice(&tuple[i + 1..]);
                for &(k, coef) in self.base.sc(tuple[i - 1], tuple[i]) {
                    merged[i - 1] = k;
                    let s = gf.mul(sign, coef);
                    for (a, &v) in acc.iter_mut().zip(c.get(&merged)) {
                        *a = gf.add(*a, gf.mul(s, v));
                    }
                }
            }
            let last_sign = gf.from_i64(if (n + 1) % 2 == 1 { -1 } else { 1 });
            let last = self.module.act_right(c.get(&tuple[..n]), &self.embed[tuple[n]]);
            for (a, &v) in acc.iter_mut().zip(&last) {
                *a = gf.add(*a, gf.mul(last_sign, v));
            }
            out.set(&tuple, acc);
            // advance the tuple counter
            let mut pos = n + 1;
            loop {
                if pos == 0 {
                    let _ = vd;
                    return Ok(out);
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < d {
                    break;
                }
                tuple[pos] = 0;
            }
        }
    }

    /// `true` iff `δc = 0` exactly.
    pub fn is_cocycle(&self, c: &Cochain) -> Result<bool> {
        Ok(self.delta(c)?.is_zero(self.gf()))
    }

    /// The matrix of `δⁿ: C^n → C^{n+1}` in the flattened coordinates,
    /// assembled column by column.
    pub fn delta_matrix(&self, n: usize) -> Result<Matrix> {
        if n > 2 {
            return Err(Error::DegreeOutOfRange(n));
        }
        let gf = self.gf();
        let d = self.base_dim();
        let vd = self.value_dim();
        let cols_len = d.pow(n as u32) * vd;
        let rows_len = d.pow(n as u32 + 1) * vd;
        let mut m = Matrix::zeros(gf, rows_len, cols_len);
        let mut basis = self.zero_cochain(n);
        for col in 0..cols_len {
            let tuple_idx = col / vd;
            let coord = col % vd;
            let mut v = vec![gf.zero(); vd];
            v[coord] = gf.one();
            basis.tensor[tuple_idx] = v;
            let image = self.delta(&basis)?;
            for (row, &x) in image.flatten().iter().enumerate() {
                if !gf.is_zero(x) {
                    m[(row, col)] = x;
                }
            }
            basis.tensor[tuple_idx] = vec![gf.zero(); vd];
        }
        Ok(m)
    }

    /// Solves `δ¹h = c` for a degree-2 cocycle `c`. Rejects non-cocycles.
    pub fn coboundary_solve(&self, c: &Cochain) -> Result<CoboundaryOutcome> {
        self.check_cochain(c)?;
        if c.degree != 2 {
            return Err(Error::DegreeOutOfRange(c.degree));
        }
        if !self.is_cocycle(c)? {
            return Err(Error::NotACocycle);
        }
        let d1 = self.delta_matrix(1)?;
        match d1.solve(&c.flatten())? {
            SolveOutcome::Solution(x) => Ok(CoboundaryOutcome::Solved(Cochain::from_flat(
                1,
                self.base_dim(),
                self.value_dim(),
                &x,
            )?)),
            SolveOutcome::Infeasible { row, witness } => {
                Ok(CoboundaryOutcome::Infeasible { row, witness })
            }
        }
    }

    /// `dim ker δⁿ − rank δ^{n−1}` for `n ∈ {0, 1, 2}`.
    pub fn hh_dim(&self, n: usize) -> Result<usize> {
        if n > 2 {
            return Err(Error::DegreeOutOfRange(n));
        }
        let d = self.base_dim();
        let vd = self.value_dim();
        if n == 2 && d > MAX_DEGREE3_DIM {
            return Err(Error::Domain(format!(
                "degree-3 tensors over an algebra of dimension {d} exceed the supported ceiling {MAX_DEGREE3_DIM}"
            )));
        }
        let cn_size = d.pow(n as u32) * vd;
        let rank_n = self.delta_matrix(n)?.rank();
        let ker = cn_size - rank_n;
        let rank_prev = if n == 0 {
            0
        } else {
            self.delta_matrix(n - 1)?.rank()
        };
        Ok(ker - rank_prev)
    }
}

/// Evaluates a cochain on tuples from an embedded basis: the restriction of
/// `c` along `embed` (multilinear extension in every slot).
pub fn restrict_cochain(gf: Gf, c: &Cochain, embed: &[Vec<GfElem>]) -> Cochain {
    let zd = embed.len();
    let n = c.degree;
    let mut out = Cochain::zero(gf, n, zd, c.value_dim);
    if zd == 0 {
        return out;
    }
    let mut tuple = vec![0usize; n];
    loop {
        // Σ over carrier tuples of the product of embedding coordinates
        let mut acc = vec![gf.zero(); c.value_dim];
        let mut inner = vec![0usize; n];
        loop {
            let mut coef = gf.one();
            for (pos, &zi) in tuple.iter().enumerate() {
                coef = gf.mul(coef, embed[zi][inner[pos]]);
                if gf.is_zero(coef) {
                    break;
                }
            }
            if !gf.is_zero(coef) {
                for (a, &v) in acc.iter_mut().zip(c.get(&inner)) {
                    *a = gf.add(*a, gf.mul(coef, v));
                }
            }
            let mut pos = n;
            let mut done = false;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                inner[pos] += 1;
                if inner[pos] < c.base_dim {
                    break;
                }
                inner[pos] = 0;
            }
            if done {
                break;
            }
        }
        out.set(&tuple, acc);
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < zd {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Restriction of a cochain over `a` to a unital multiplicatively closed
/// subspace, with the module unchanged. Returns the restricted cochain and
/// the complex it lives in.
pub fn restrict<'a>(
    a: &'a AlgebraSC<Gf>,
    space: &CochainSpace<'a>,
    c: &Cochain,
    sub: &Subspace,
) -> Result<(Cochain, AlgebraSC<Gf>, Vec<Vec<GfElem>>)> {
    let (balg, embed) = subalgebra_on(a, sub)?;
    let rc = restrict_cochain(a.gf(), c, &embed);
    let _ = space;
    Ok((rc, balg, embed))
}
