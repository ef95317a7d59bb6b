//! Finite-dimensional associative algebras given by structure constants,
//! over a field or over a truncation ring.
//!
//! An algebra is a basis `e_0, …, e_{dim-1}`, a sparse table of products
//! `e_i·e_j`, and a distinguished unit vector. Validation (associativity,
//! unitality, commutativity) is a separate operation so that candidate
//! products — square-zero extensions built from arbitrary 2-cochains, for
//! instance — can be constructed first and judged afterwards.
//!
//! Builders cover the families every example in this crate is assembled
//! from: matrix algebras, truncated polynomial algebras modulo monomial
//! ideals, cyclic group algebras, direct products, and restriction of
//! scalars to the prime field.

use std::collections::BTreeMap;

use crate::coeff::{Gf, GfElem, Ring};
use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, vec_sub, Matrix};

// ---------------------------------------------------------------------------
// linear maps
// ---------------------------------------------------------------------------

/// A square linear map over `R` in basis coordinates; column `j` is the
/// image of `e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap<R: Ring> {
    pub ring: R,
    pub n: usize,
    entries: Vec<R::Elem>, // row-major
}

impl<R: Ring> LinMap<R> {
    pub fn zero(ring: R, n: usize) -> Self {
        LinMap {
            ring,
            n,
            entries: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: R, rows: &[Vec<R::Elem>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("endomorphism matrix must be square".into()));
        }
        Ok(LinMap {
            ring,
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds the map sending `e_j` to `cols[j]`.
    pub fn from_cols(ring: R, cols: &[Vec<R::Elem>]) -> Result<Self> {
        let n = cols.len();
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch("endomorphism matrix must be square".into()));
        }
        let mut m = Self::zero(ring, n);
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn get(&self, i: usize, j: usize) -> R::Elem {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R::Elem) {
        self.entries[i * self.n + j] = x;
    }

    pub fn col(&self, j: usize) -> Vec<R::Elem> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn apply(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        assert_eq!(v.len(), self.n, "vector length must match map size");
        let ring = self.ring;
        let mut out = vec![ring.zero(); self.n];
        for (j, &x) in v.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for i in 0..self.n {
                out[i] = ring.add(out[i], ring.mul(self.get(i, j), x));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap<R>) -> LinMap<R> {
        assert_eq!(self.n, other.n);
        let cols: Vec<Vec<R::Elem>> = (0..self.n).map(|j| self.apply(&other.col(j))).collect();
        LinMap::from_cols(self.ring, &cols).expect("square by construction")
    }

    pub fn add(&self, other: &LinMap<R>) -> LinMap<R> {
        assert_eq!(self.n, other.n);
        let ring = self.ring;
        LinMap {
            ring,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinMap<R>) -> LinMap<R> {
        assert_eq!(self.n, other.n);
        let ring = self.ring;
        LinMap {
            ring,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ring.sub(a, b))
                .collect(),
        }
    }

    /// Entry-wise image under `g`, changing the coefficient ring.
    pub fn map_entries<S: Ring>(&self, ring: S, g: impl Fn(R::Elem) -> S::Elem) -> LinMap<S> {
        LinMap {
            ring,
            n: self.n,
            entries: self.entries.iter().map(|&x| g(x)).collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<R::Elem>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl LinMap<Gf> {
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ring, &self.rows()).expect("square")
    }

    pub fn is_invertible(&self) -> bool {
        self.to_matrix().rank() == self.n
    }

    pub fn inverse(&self) -> Option<LinMap<Gf>> {
        let gf = self.ring;
        let m = self.to_matrix();
        let mut cols = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut b = vec![gf.zero(); self.n];
            b[j] = gf.one();
            match m.solve(&b).ok()? {
                crate::linalg::SolveOutcome::Solution(x) => cols.push(x),
                _ => return None,
            }
        }
        let inv = LinMap::from_cols(gf, &cols).ok()?;
        // solve() finds a preimage per basis vector; verify it is two-sided
        if inv.compose(self) == LinMap::identity(gf, self.n) {
            Some(inv)
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------
// algebras
// ---------------------------------------------------------------------------

/// An associative algebra presented by structure constants over `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSC<R: Ring> {
    ring: R,
    dim: usize,
    /// `sc[i*dim + j]` is the sparse expansion of `e_i · e_j`.
    sc: Vec<Vec<(usize, R::Elem)>>,
    unit: Vec<R::Elem>,
}

/// Outcome of [`AlgebraSC::validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub associative: bool,
    pub unital: bool,
    pub commutative: bool,
}

impl<R: Ring> AlgebraSC<R> {
    /// Builds the algebra without validating the axioms; call
    /// [`AlgebraSC::validate`] to judge the result.
    pub fn new_unchecked(
        ring: R,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Vec<(usize, R::Elem)>)>,
        unit: Vec<R::Elem>,
    ) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit vector has wrong length".into()));
        }
        let mut sc = vec![Vec::new(); dim * dim];
        for (i, j, val) in entries {
            if i >= dim || j >= dim || val.iter().any(|&(k, _)| k >= dim) {
                return Err(Error::DimensionMismatch("structure constant index out of range".into()));
            }
            let mut v: Vec<(usize, R::Elem)> =
                val.into_iter().filter(|&(_, c)| !ring.is_zero(c)).collect();
            v.sort_by_key(|&(k, _)| k);
            sc[i * dim + j] = v;
        }
        Ok(AlgebraSC { ring, dim, sc, unit })
    }

    pub fn ring(&self) -> R {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[R::Elem] {
        &self.unit
    }

    pub fn sc(&self, i: usize, j: usize) -> &[(usize, R::Elem)] {
        &self.sc[i * self.dim + j]
    }

    /// The product `e_i · e_j` as a dense vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<R::Elem> {
        let mut out = vec![self.ring.zero(); self.dim];
        for &(k, c) in self.sc(i, j) {
            out[k] = c;
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.dim];
        v[i] = self.ring.one();
        v
    }

    pub fn zero_vec(&self) -> Vec<R::Elem> {
        vec![self.ring.zero(); self.dim]
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, u: &[R::Elem], v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in an algebra of dimension {}",
                u.len(),
                v.len(),
                self.dim
            )));
        }
        let ring = self.ring;
        let mut out = vec![ring.zero(); self.dim];
        for (i, &ui) in u.iter().enumerate() {
            if ring.is_zero(ui) {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if ring.is_zero(vj) {
                    continue;
                }
                let s = ring.mul(ui, vj);
                for &(k, c) in self.sc(i, j) {
                    out[k] = ring.add(out[k], ring.mul(s, c));
                }
            }
        }
        Ok(out)
    }

    /// Commutator `uv − vu`.
    pub fn commutator(&self, u: &[R::Elem], v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        let ring = self.ring;
        let uv = self.multiply(u, v)?;
        let vu = self.multiply(v, u)?;
        Ok(uv.iter().zip(&vu).map(|(&a, &b)| ring.sub(a, b)).collect())
    }

    /// Checks associativity, unitality, and commutativity on all basis
    /// tuples.
    pub fn validate(&self) -> ValidationReport {
        let ring = self.ring;
        let mut associative = true;
        let mut commutative = true;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let left = self.multiply(&ij, &self.basis_vec(k)).expect("dims fixed");
                    let jk = self.basis_product(j, k);
                    let right = self.multiply(&self.basis_vec(i), &jk).expect("dims fixed");
                    if left != right {
                        associative = false;
                        break 'outer;
                    }
                }
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    commutative = false;
                }
            }
        }
        let mut unital = true;
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            let left = self.multiply(&self.unit, &e).expect("dims fixed");
            let right = self.multiply(&e, &self.unit).expect("dims fixed");
            if left != e || right != e {
                unital = false;
                break;
            }
        }
        let _ = ring;
        ValidationReport {
            associative,
            unital,
            commutative,
        }
    }

    /// `true` iff `f(1) = 1` and `f(e_i e_j) = f(e_i) f(e_j)` for all pairs.
    pub fn is_algebra_morphism(&self, f: &LinMap<R>) -> Result<bool> {
        if f.n != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "map of size {} on an algebra of dimension {}",
                f.n, self.dim
            )));
        }
        if f.apply(&self.unit) != self.unit {
            return Ok(false);
        }
        for i in 0..self.dim {
            let fi = f.col(i);
            for j in 0..self.dim {
                let lhs = f.apply(&self.basis_product(i, j));
                let rhs = self.multiply(&fi, &f.col(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conjugation `x ↦ u x u⁻¹`; `u` must be invertible (checked via the
    /// left-multiplication operator).
    pub fn conjugation(&self, u: &[R::Elem], u_inv: &[R::Elem]) -> Result<LinMap<R>> {
        let prod = self.multiply(u, u_inv)?;
        if prod != self.unit {
            return Err(Error::Domain("u·u_inv is not the unit".into()));
        }
        let cols: Vec<Vec<R::Elem>> = (0..self.dim)
            .map(|i| {
                let xu = self.multiply(&self.basis_vec(i), u_inv)?;
                self.multiply(u, &xu)
            })
            .collect::<Result<_>>()?;
        LinMap::from_cols(self.ring, &cols)
    }
}

impl AlgebraSC<Gf> {
    pub fn gf(&self) -> Gf {
        self.ring
    }

    /// Operator of left multiplication by `v`.
    pub fn left_mult(&self, v: &[GfElem]) -> LinMap<Gf> {
        let cols: Vec<Vec<GfElem>> = (0..self.dim)
            .map(|j| self.multiply(v, &self.basis_vec(j)).expect("dims fixed"))
            .collect();
        LinMap::from_cols(self.ring, &cols).expect("square")
    }

    /// Operator of right multiplication by `v`.
    pub fn right_mult(&self, v: &[GfElem]) -> LinMap<Gf> {
        let cols: Vec<Vec<GfElem>> = (0..self.dim)
            .map(|j| self.multiply(&self.basis_vec(j), v).expect("dims fixed"))
            .collect();
        LinMap::from_cols(self.ring, &cols).expect("square")
    }

    /// The center `{z : z e_i = e_i z for all i}`, computed as the kernel of
    /// the stacked commutator operators. The returned subspace is
    /// echelonized, so membership tests are deterministic.
    pub fn center(&self) -> Subspace {
        let gf = self.ring;
        let mut rows: Vec<Vec<GfElem>> = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            let l = self.left_mult(&e);
            let r = self.right_mult(&e);
            let d = l.sub(&r);
            rows.extend(d.rows());
        }
        let m = Matrix::from_rows(gf, &rows).expect("rectangular");
        Subspace::from_spanning(gf, self.dim, &m.kernel_basis())
    }

    /// Finds an invertible element of the form `unit + nilpotent-ish
    /// combination`, used by random-morphism generators. Returns the pair
    /// `(u, u⁻¹)` or `None`.
    pub fn try_invert(&self, u: &[GfElem]) -> Option<Vec<GfElem>> {
        let l = self.left_mult(u);
        let inv = l.inverse()?;
        let cand = inv.apply(&self.unit);
        // left inverse candidate; confirm two-sided
        let left = self.multiply(&cand, u).ok()?;
        let right = self.multiply(u, &cand).ok()?;
        if left == self.unit && right == self.unit {
            Some(cand)
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------
// subspaces
// ---------------------------------------------------------------------------

/// A subspace of `k^ambient` kept in echelonized (RREF) basis form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub gf: Gf,
    pub ambient: usize,
    basis: Vec<Vec<GfElem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(gf: Gf, ambient: usize, vecs: &[Vec<GfElem>]) -> Self {
        if vecs.is_empty() {
            return Subspace {
                gf,
                ambient,
                basis: vec![],
                pivots: vec![],
            };
        }
        let m = Matrix::from_rows(gf, vecs).expect("rectangular");
        let (rr, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| rr.row(i).to_vec()).collect();
        Subspace {
            gf,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GfElem>] {
        &self.basis
    }

    /// Canonical representative of `v` modulo the subspace: pivot
    /// coordinates eliminated. `v` lies in the subspace iff this is zero.
    pub fn reduce_mod(&self, v: &[GfElem]) -> Vec<GfElem> {
        let gf = self.gf;
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if !gf.is_zero(c) {
                for (x, &b) in r.iter_mut().zip(row) {
                    *x = gf.sub(*x, gf.mul(c, b));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[GfElem]) -> bool {
        vec_is_zero(self.gf, &self.reduce_mod(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[GfElem]) -> Option<Vec<GfElem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Positions of the non-pivot coordinates; the quotient space
    /// `k^ambient / self` is coordinatized by these after `reduce_mod`.
    pub fn copivots(&self) -> Vec<usize> {
        let mut mask = vec![true; self.ambient];
        for &p in &self.pivots {
            mask[p] = false;
        }
        (0..self.ambient).filter(|&i| mask[i]).collect()
    }
}

/// The induced algebra structure on a unital, multiplicatively closed
/// subspace, together with the embedding of its basis into the ambient
/// algebra.
pub fn subalgebra_on(a: &AlgebraSC<Gf>, sub: &Subspace) -> Result<(AlgebraSC<Gf>, Vec<Vec<GfElem>>)> {
    let gf = a.gf();
    let d = sub.dim();
    let embed: Vec<Vec<GfElem>> = sub.basis().to_vec();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = a.multiply(&embed[i], &embed[j])?;
            let coords = sub.coords(&prod).ok_or_else(|| {
                Error::NotASubalgebra(format!("product of basis elements {i} and {j} escapes the span"))
            })?;
            let val: Vec<(usize, GfElem)> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !gf.is_zero(**c))
                .map(|(k, &c)| (k, c))
                .collect();
            entries.push((i, j, val));
        }
    }
    let unit = sub
        .coords(a.unit())
        .ok_or_else(|| Error::NotASubalgebra("the unit does not lie in the subspace".into()))?;
    let b = AlgebraSC::new_unchecked(gf, d, entries, unit)?;
    Ok((b, embed))
}

/// Outcome of restricting an endomorphism to a subspace.
#[derive(Clone, Debug)]
pub enum RestrictOutcome {
    /// The induced map in the subspace basis.
    Restricted(LinMap<Gf>),
    /// A basis vector of the subspace whose image escapes the span.
    NotPreserved { witness: Vec<GfElem> },
}

/// The map induced by `f` on `sub`, or a witness vector with
/// `f(witness) ∉ span(sub)`.
pub fn restrict_endo(f: &LinMap<Gf>, sub: &Subspace) -> RestrictOutcome {
    let mut cols = Vec::with_capacity(sub.dim());
    for b in sub.basis() {
        let fb = f.apply(b);
        match sub.coords(&fb) {
            Some(c) => cols.push(c),
            None => {
                return RestrictOutcome::NotPreserved { witness: b.clone() };
            }
        }
    }
    if sub.dim() == 0 {
        return RestrictOutcome::Restricted(LinMap::zero(f.ring, 0));
    }
    RestrictOutcome::Restricted(LinMap::from_cols(f.ring, &cols).expect("square"))
}

// ---------------------------------------------------------------------------
// twisted bimodules
// ---------------------------------------------------------------------------

/// The carrier algebra viewed as a bimodule via `a·m·b = f(a) m f(b)`.
/// When `f` is an algebra morphism the bimodule axioms hold; they are
/// exercised by tests rather than assumed here.
#[derive(Clone, Debug)]
pub struct TwistedBimodule<'a> {
    pub carrier: &'a AlgebraSC<Gf>,
    pub twist: LinMap<Gf>,
}

impl<'a> TwistedBimodule<'a> {
    pub fn new(carrier: &'a AlgebraSC<Gf>, twist: LinMap<Gf>) -> Result<Self> {
        if twist.n != carrier.dim() {
            return Err(Error::DimensionMismatch("twist size must match the carrier".into()));
        }
        Ok(TwistedBimodule { carrier, twist })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `a · m` for a carrier vector `a`.
    pub fn act_left(&self, a: &[GfElem], m: &[GfElem]) -> Vec<GfElem> {
        self.carrier
            .multiply(&self.twist.apply(a), m)
            .expect("dims fixed")
    }

    /// `m · b` for a carrier vector `b`.
    pub fn act_right(&self, m: &[GfElem], b: &[GfElem]) -> Vec<GfElem> {
        self.carrier
            .multiply(m, &self.twist.apply(b))
            .expect("dims fixed")
    }

    /// `true` iff every element of `b_sub` acts identically from both sides:
    /// `f(b)·m = m·f(b)` for all basis `b` and all basis `m`.
    pub fn is_b_diagonal(&self, b_sub: &Subspace) -> bool {
        let gf = self.carrier.gf();
        for b in b_sub.basis() {
            let fb = self.twist.apply(b);
            for m in 0..self.dim() {
                let mv = self.carrier.basis_vec(m);
                let left = self.carrier.multiply(&fb, &mv).expect("dims fixed");
                let right = self.carrier.multiply(&mv, &fb).expect("dims fixed");
                if !vec_is_zero(gf, &vec_sub(gf, &left, &right)) {
                    return false;
                }
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

/// The full matrix algebra `Mat_n(R)` with basis `E_{rc}` ordered row-major.
pub fn matrix_algebra<R: Ring>(ring: R, n: usize) -> AlgebraSC<R> {
    let dim = n * n;
    let mut entries = Vec::new();
    for r in 0..n {
        for c in 0..n {
            for r2 in 0..n {
                for c2 in 0..n {
                    if c == r2 {
                        entries.push((r * n + c, r2 * n + c2, vec![(r * n + c2, ring.one())]));
                    }
                }
            }
        }
    }
    let mut unit = vec![ring.zero(); dim];
    for i in 0..n {
        unit[i * n + i] = ring.one();
    }
    AlgebraSC::new_unchecked(ring, dim, entries, unit).expect("indices in range")
}

/// The group algebra `R[C_n]` of the cyclic group of order `n`.
pub fn cyclic_group_algebra<R: Ring>(ring: R, n: usize) -> AlgebraSC<R> {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            entries.push((i, j, vec![((i + j) % n, ring.one())]));
        }
    }
    let mut unit = vec![ring.zero(); n];
    unit[0] = ring.one();
    AlgebraSC::new_unchecked(ring, n, entries, unit).expect("indices in range")
}

/// The monomial basis of a truncated polynomial algebra
/// `R[x_1..x_vars] / (monomial ideal)`.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub vars: usize,
    /// Exponent vectors not divisible by any ideal generator, in
    /// degree-lexicographic order.
    pub monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    ideal: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn index_of(&self, mono: &[u32]) -> Option<usize> {
        self.index.get(mono).copied()
    }

    fn divisible(gen: &[u32], mono: &[u32]) -> bool {
        gen.iter().zip(mono).all(|(g, m)| m >= g)
    }

    /// Index of a monomial after reduction: `None` when it falls into the
    /// ideal.
    pub fn reduce(&self, mono: &[u32]) -> Option<usize> {
        if self.ideal.iter().any(|g| Self::divisible(g, mono)) {
            return None;
        }
        self.index_of(mono)
    }
}

fn deglex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// `R[x_1..x_vars]/(ideal)` for a monomial ideal given by exponent-vector
/// generators. The quotient must be finite-dimensional, i.e. every variable
/// needs a pure power among the generators.
pub fn truncated_polynomial<R: Ring>(
    ring: R,
    vars: usize,
    ideal: &[Vec<u32>],
) -> Result<(AlgebraSC<R>, MonomialBasis)> {
    if vars == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    if ideal.iter().any(|g| g.len() != vars) {
        return Err(Error::DimensionMismatch("ideal generator arity mismatch".into()));
    }
    // finiteness: a pure power of each variable must lie in the ideal
    let mut caps = vec![None::<u32>; vars];
    for g in ideal {
        if g.iter().filter(|&&e| e > 0).count() == 1 {
            let v = g.iter().position(|&e| e > 0).unwrap();
            let e = g[v];
            caps[v] = Some(caps[v].map_or(e, |c: u32| c.min(e)));
        }
    }
    let caps: Vec<u32> = caps
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Domain("quotient is infinite-dimensional: missing pure power".into()))?;

    // enumerate basis monomials below the caps, filtering by the full ideal
    let mut monomials = Vec::new();
    let mut cur = vec![0u32; vars];
    'enumerate: loop {
        if !ideal.iter().any(|g| MonomialBasis::divisible(g, &cur)) {
            monomials.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == vars {
                break 'enumerate;
            }
            cur[i] += 1;
            if cur[i] < caps[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
    monomials.sort_by(|a, b| deglex(a, b));
    let index: BTreeMap<Vec<u32>, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let basis = MonomialBasis {
        vars,
        monomials,
        index,
        ideal: ideal.to_vec(),
    };

    let dim = basis.monomials.len();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let sum: Vec<u32> = basis.monomials[i]
                .iter()
                .zip(&basis.monomials[j])
                .map(|(a, b)| a + b)
                .collect();
            if let Some(k) = basis.reduce(&sum) {
                entries.push((i, j, vec![(k, ring.one())]));
            }
        }
    }
    let mut unit = vec![ring.zero(); dim];
    unit[basis.index_of(&vec![0; vars]).expect("1 survives any proper monomial ideal")] = ring.one();
    let alg = AlgebraSC::new_unchecked(ring, dim, entries, unit)?;
    Ok((alg, basis))
}

/// The endomorphism of a truncated polynomial algebra determined by variable
/// substitution `x_v ↦ images[v]`; multiplicativity is not checked here.
pub fn monomial_substitution<R: Ring>(
    alg: &AlgebraSC<R>,
    basis: &MonomialBasis,
    images: &[Vec<R::Elem>],
) -> Result<LinMap<R>> {
    if images.len() != basis.vars {
        return Err(Error::DimensionMismatch("one image per variable required".into()));
    }
    let mut cols = Vec::with_capacity(alg.dim());
    for mono in &basis.monomials {
        let mut acc = alg.unit().to_vec();
        for (v, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                acc = alg.multiply(&acc, &images[v])?;
            }
        }
        cols.push(acc);
    }
    LinMap::from_cols(alg.ring(), &cols)
}

/// Direct product of algebras; returns the product and the starting offset
/// of each factor in the combined basis.
pub fn direct_product<R: Ring>(parts: &[&AlgebraSC<R>]) -> Result<(AlgebraSC<R>, Vec<usize>)> {
    let ring = parts
        .first()
        .ok_or_else(|| Error::Domain("empty product".into()))?
        .ring();
    let dim: usize = parts.iter().map(|a| a.dim()).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut entries = Vec::new();
    let mut unit = vec![ring.zero(); dim];
    let mut off = 0usize;
    for a in parts {
        offsets.push(off);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let val: Vec<(usize, R::Elem)> =
                    a.sc(i, j).iter().map(|&(k, c)| (k + off, c)).collect();
                entries.push((i + off, j + off, val));
            }
        }
        for (i, &c) in a.unit().iter().enumerate() {
            unit[i + off] = c;
        }
        off += a.dim();
    }
    Ok((AlgebraSC::new_unchecked(ring, dim, entries, unit)?, offsets))
}

/// Restriction of scalars to the prime field: an algebra over `F_{p^m}` of
/// dimension `d` becomes an algebra over `F_p` of dimension `d·m`, with
/// basis `e_i·ω^t` at index `i·m + t` (ω the class of x in the modulus
/// presentation).
pub fn restrict_scalars(a: &AlgebraSC<Gf>) -> Result<(AlgebraSC<Gf>, Gf)> {
    let k = a.gf();
    let m = k.degree();
    let fp = Gf::prime(k.p())?;
    if m == 1 {
        return Ok((a.clone(), fp));
    }
    let dim = a.dim() * m;
    // powers of ω as field elements
    let mut omega_pow = Vec::with_capacity(2 * m);
    let mut acc = k.one();
    let omega = {
        let mut coords = vec![0u64; m];
        coords[1] = 1;
        k.elem(&coords)
    };
    for _ in 0..2 * m {
        omega_pow.push(acc);
        acc = k.mul(acc, omega);
    }
    let mut entries = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for s in 0..m {
                for t in 0..m {
                    let scale = omega_pow[s + t];
                    let mut val = Vec::new();
                    for &(kk, c) in a.sc(i, j) {
                        let coeff = k.mul(c, scale);
                        for (u, &cu) in k.coords(&coeff).iter().enumerate() {
                            if cu != 0 {
                                val.push((kk * m + u, fp.from_u64(cu)));
                            }
                        }
                    }
                    entries.push((i * m + s, j * m + t, val));
                }
            }
        }
    }
    let mut unit = vec![fp.zero(); dim];
    for (i, c) in a.unit().iter().enumerate() {
        for (u, &cu) in k.coords(c).iter().enumerate() {
            unit[i * m + u] = fp.from_u64(cu);
        }
    }
    Ok((AlgebraSC::new_unchecked(fp, dim, entries, unit)?, fp))
}
