//! Symbolic Weyl algebras `A_n` over `F_p` and `Z/p²`.
//!
//! Elements are sparse normal-ordered sums `Σ c · x^α ∂^β` with all position
//! generators to the left. Products are rearranged one generator pair at a
//! time by
//!
//! ```text
//! ∂^b x^a = Σ_k  k! · C(a,k) · C(b,k) · x^{a−k} ∂^{b−k}
//! ```
//!
//! with binomials and factorials computed in the coefficient ring.
//!
//! In characteristic `p` the center of `A_n(F_p)` is the polynomial ring in
//! `X_i = x_i^p` and `D_i = ∂_i^p`; a normal-ordered element is central iff
//! every exponent is divisible by `p`. The canonical lift `A_n(Z/p²)`
//! induces a Poisson bracket on the center whose constants on the `X, D`
//! generators are computed — not assumed — by normal-ordered multiplication,
//! and an endomorphism of `A_n(F_p)` lifts to `A_n(Z/p²)` exactly when its
//! restriction to the center preserves that bracket. A bounded-degree
//! explicit lift search complements the decision with a constructive
//! certificate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coeff::Gf;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SolveOutcome};

/// Number of generator pairs, base prime, and coefficient modulus
/// (`q = p` for the algebra over `F_p`, `q = p²` for its lift).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WeylSig {
    pub n: usize,
    pub p: u64,
    pub q: u64,
}

impl WeylSig {
    pub fn fp(n: usize, p: u64) -> Self {
        WeylSig { n, p, q: p }
    }

    pub fn zp2(n: usize, p: u64) -> Self {
        WeylSig { n, p, q: p * p }
    }

    fn check_match(&self, other: &WeylSig) -> Result<()> {
        if self != other {
            return Err(Error::MismatchedSignature(format!(
                "{:?} vs {:?}",
                self, other
            )));
        }
        Ok(())
    }
}

/// A normal-ordered monomial `x^xs ∂^ds`; the ordering is degree-lex, which
/// fixes canonical printing and iteration order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylMono {
    pub xs: Vec<u32>,
    pub ds: Vec<u32>,
}

impl WeylMono {
    pub fn degree(&self) -> u32 {
        self.xs.iter().sum::<u32>() + self.ds.iter().sum::<u32>()
    }
}

impl Ord for WeylMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.xs.cmp(&other.xs))
            .then_with(|| self.ds.cmp(&other.ds))
    }
}

impl PartialOrd for WeylMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse element of `A_n`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElem {
    pub sig: WeylSig,
    terms: BTreeMap<WeylMono, u64>,
}

/// Pascal-triangle cache for binomials modulo `q`.
struct BinomTable {
    q: u64,
    rows: Vec<Vec<u64>>,
}

impl BinomTable {
    fn new(q: u64) -> Self {
        BinomTable {
            q,
            rows: vec![vec![1]],
        }
    }

    fn get(&mut self, n: u32, k: u32) -> u64 {
        if k > n {
            return 0;
        }
        while self.rows.len() <= n as usize {
            let prev = self.rows.last().unwrap();
            let mut row = vec![1u64; prev.len() + 1];
            for i in 1..prev.len() {
                row[i] = (prev[i - 1] + prev[i]) % self.q;
            }
            self.rows.push(row);
        }
        self.rows[n as usize][k as usize]
    }
}

fn factorial_mod(k: u32, q: u64) -> u64 {
    let mut acc = 1u64 % q;
    for i in 2..=k as u64 {
        acc = acc * (i % q) % q;
    }
    acc
}

impl WeylElem {
    pub fn zero(sig: WeylSig) -> Self {
        WeylElem {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sig: WeylSig, c: u64) -> Self {
        let mut e = Self::zero(sig);
        e.insert(
            WeylMono {
                xs: vec![0; sig.n],
                ds: vec![0; sig.n],
            },
            c,
        );
        e
    }

    pub fn one(sig: WeylSig) -> Self {
        Self::constant(sig, 1)
    }

    pub fn gen_x(sig: WeylSig, i: usize) -> Self {
        let mut xs = vec![0; sig.n];
        xs[i] = 1;
        let mut e = Self::zero(sig);
        e.insert(
            WeylMono {
                xs,
                ds: vec![0; sig.n],
            },
            1,
        );
        e
    }

    pub fn gen_d(sig: WeylSig, i: usize) -> Self {
        let mut ds = vec![0; sig.n];
        ds[i] = 1;
        let mut e = Self::zero(sig);
        e.insert(
            WeylMono {
                xs: vec![0; sig.n],
                ds,
            },
            1,
        );
        e
    }

    pub fn monomial(sig: WeylSig, xs: Vec<u32>, ds: Vec<u32>, c: u64) -> Result<Self> {
        if xs.len() != sig.n || ds.len() != sig.n {
            return Err(Error::MismatchedSignature(
                "exponent vectors must have length n".into(),
            ));
        }
        let mut e = Self::zero(sig);
        e.insert(WeylMono { xs, ds }, c % sig.q);
        Ok(e)
    }

    fn insert(&mut self, mono: WeylMono, c: u64) {
        let c = c % self.sig.q;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = (*entry + c) % self.sig.q;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMono, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &WeylElem) -> Result<WeylElem> {
        self.sig.check_match(&other.sig)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> WeylElem {
        let q = self.sig.q;
        WeylElem {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), (q - c) % q))
                .collect(),
        }
    }

    pub fn sub(&self, other: &WeylElem) -> Result<WeylElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: u64) -> WeylElem {
        let q = self.sig.q;
        let s = s % q;
        let mut out = WeylElem::zero(self.sig);
        for (m, c) in self.terms() {
            out.insert(m.clone(), c * s % q);
        }
        out
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &WeylElem) -> Result<WeylElem> {
        self.sig.check_match(&other.sig)?;
        let sig = self.sig;
        let q = sig.q;
        let mut binom = BinomTable::new(q);
        let mut out = WeylElem::zero(sig);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                // (x^α ∂^β)(x^γ ∂^δ): rearrange ∂^β x^γ pairwise
                let base = c1 * c2 % q;
                // iterate over contraction vectors k with k_i ≤ min(β_i, γ_i)
                let kmax: Vec<u32> = (0..sig.n)
                    .map(|i| m1.ds[i].min(m2.xs[i]))
                    .collect();
                let mut k = vec![0u32; sig.n];
                loop {
                    let mut coef = base;
                    for i in 0..sig.n {
                        if k[i] > 0 {
                            coef = coef * factorial_mod(k[i], q) % q;
                            coef = coef * binom.get(m2.xs[i], k[i]) % q;
                            coef = coef * binom.get(m1.ds[i], k[i]) % q;
                        }
                    }
                    if coef != 0 {
                        let xs: Vec<u32> = (0..sig.n)
                            .map(|i| m1.xs[i] + m2.xs[i] - k[i])
                            .collect();
                        let ds: Vec<u32> = (0..sig.n)
                            .map(|i| m1.ds[i] + m2.ds[i] - k[i])
                            .collect();
                        out.insert(WeylMono { xs, ds }, coef);
                    }
                    // advance k
                    let mut pos = 0;
                    loop {
                        if pos == sig.n {
                            break;
                        }
                        k[pos] += 1;
                        if k[pos] <= kmax[pos] {
                            break;
                        }
                        k[pos] = 0;
                        pos += 1;
                    }
                    if pos == sig.n {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &WeylElem) -> Result<WeylElem> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Result<WeylElem> {
        let mut acc = WeylElem::one(self.sig);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reinterprets an `F_p` element inside `A_n(Z/p²)` by the coefficient
    /// section.
    pub fn embed_zp2(&self) -> Result<WeylElem> {
        if self.sig.q != self.sig.p {
            return Err(Error::MismatchedSignature("element is not over F_p".into()));
        }
        Ok(WeylElem {
            sig: WeylSig::zp2(self.sig.n, self.sig.p),
            terms: self.terms.clone(),
        })
    }

    /// Reduction `A_n(Z/p²) → A_n(F_p)`.
    pub fn reduce_mod_p(&self) -> Result<WeylElem> {
        if self.sig.q != self.sig.p * self.sig.p {
            return Err(Error::MismatchedSignature("element is not over Z/p²".into()));
        }
        let p = self.sig.p;
        let mut out = WeylElem::zero(WeylSig::fp(self.sig.n, p));
        for (m, c) in self.terms() {
            out.insert(m.clone(), c % p);
        }
        Ok(out)
    }

    /// Divides an element of `p·A_n(Z/p²)` by `p`; errors unless every
    /// coefficient is divisible.
    pub fn pinv(&self) -> Result<WeylElem> {
        if self.sig.q != self.sig.p * self.sig.p {
            return Err(Error::MismatchedSignature("element is not over Z/p²".into()));
        }
        let p = self.sig.p;
        let mut out = WeylElem::zero(WeylSig::fp(self.sig.n, p));
        for (m, c) in self.terms() {
            if c % p != 0 {
                return Err(Error::Domain(
                    "element does not lie in the ideal p·A_n(Z/p²)".into(),
                ));
            }
            out.insert(m.clone(), c / p);
        }
        Ok(out)
    }

    pub fn fmt_term(sig: &WeylSig, m: &WeylMono, c: u64) -> String {
        let mut parts = Vec::new();
        if c != 1 || (m.xs.iter().all(|&e| e == 0) && m.ds.iter().all(|&e| e == 0)) {
            parts.push(c.to_string());
        }
        for i in 0..sig.n {
            if m.xs[i] > 0 {
                let name = if sig.n == 1 {
                    "x".to_string()
                } else {
                    format!("x{}", i + 1)
                };
                parts.push(if m.xs[i] == 1 {
                    name
                } else {
                    format!("{name}^{}", m.xs[i])
                });
            }
        }
        for i in 0..sig.n {
            if m.ds[i] > 0 {
                let name = if sig.n == 1 {
                    "d".to_string()
                } else {
                    format!("d{}", i + 1)
                };
                parts.push(if m.ds[i] == 1 {
                    name
                } else {
                    format!("{name}^{}", m.ds[i])
                });
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms()
            .map(|(m, c)| WeylElem::fmt_term(&self.sig, m, c))
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// endomorphisms
// ---------------------------------------------------------------------------

/// Generator images of a candidate endomorphism of `A_n`.
#[derive(Clone, Debug)]
pub struct WeylEndo {
    pub sig: WeylSig,
    pub images_x: Vec<WeylElem>,
    pub images_d: Vec<WeylElem>,
}

impl WeylEndo {
    pub fn new(images_x: Vec<WeylElem>, images_d: Vec<WeylElem>) -> Result<Self> {
        let sig = images_x
            .first()
            .or(images_d.first())
            .ok_or_else(|| Error::MismatchedSignature("no generator images".into()))?
            .sig;
        if images_x.len() != sig.n || images_d.len() != sig.n {
            return Err(Error::MismatchedSignature(
                "need exactly n images for x and for ∂".into(),
            ));
        }
        for e in images_x.iter().chain(&images_d) {
            sig.check_match(&e.sig)?;
        }
        Ok(WeylEndo {
            sig,
            images_x,
            images_d,
        })
    }

    pub fn identity(sig: WeylSig) -> Self {
        WeylEndo {
            sig,
            images_x: (0..sig.n).map(|i| WeylElem::gen_x(sig, i)).collect(),
            images_d: (0..sig.n).map(|i| WeylElem::gen_d(sig, i)).collect(),
        }
    }
}

/// All defining relations hold exactly under the generator images:
/// `[f(∂_i), f(x_j)] = δ_ij`, `[f(x_i), f(x_j)] = 0`, `[f(∂_i), f(∂_j)] = 0`.
pub fn is_weyl_endo(f: &WeylEndo) -> Result<bool> {
    let sig = f.sig;
    for i in 0..sig.n {
        for j in 0..sig.n {
            let c = f.images_d[i].commutator(&f.images_x[j])?;
            let target = if i == j {
                WeylElem::one(sig)
            } else {
                WeylElem::zero(sig)
            };
            if c != target {
                return Ok(false);
            }
        }
    }
    for i in 0..sig.n {
        for j in i + 1..sig.n {
            if !f.images_x[i].commutator(&f.images_x[j])?.is_zero() {
                return Ok(false);
            }
            if !f.images_d[i].commutator(&f.images_d[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// the center and its Poisson bracket
// ---------------------------------------------------------------------------

/// A polynomial in the commuting central generators
/// `X_1..X_n, D_1..D_n` over `F_p` (`X_i = x_i^p`, `D_i = ∂_i^p`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CenterPoly {
    pub n: usize,
    pub p: u64,
    terms: BTreeMap<Vec<u32>, u64>, // exponent vector of length 2n
}

impl CenterPoly {
    pub fn zero(n: usize, p: u64) -> Self {
        CenterPoly {
            n,
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, p: u64, c: u64) -> Self {
        let mut out = Self::zero(n, p);
        out.insert(vec![0; 2 * n], c);
        out
    }

    fn insert(&mut self, exps: Vec<u32>, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = (*entry + c) % self.p;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn add(&self, other: &CenterPoly) -> CenterPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &CenterPoly) -> CenterPoly {
        let p = self.p;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), (p - c) % p);
        }
        out
    }

    pub fn mul(&self, other: &CenterPoly) -> CenterPoly {
        let mut out = CenterPoly::zero(self.n, self.p);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let exps: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.insert(exps, c1 * c2 % self.p);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `v` (0..2n).
    pub fn partial(&self, v: usize) -> CenterPoly {
        let mut out = CenterPoly::zero(self.n, self.p);
        for (m, c) in self.terms() {
            if m[v] == 0 {
                continue;
            }
            let mut e = m.clone();
            e[v] -= 1;
            out.insert(e, c * (m[v] as u64 % self.p) % self.p);
        }
        out
    }

    /// Back-substitution `X_i ↦ x_i^p`, `D_i ↦ ∂_i^p`, inverse to
    /// [`central_rewrite`].
    pub fn evaluate(&self) -> WeylElem {
        let sig = WeylSig::fp(self.n, self.p);
        let mut out = WeylElem::zero(sig);
        let p32 = self.p as u32;
        for (m, c) in self.terms() {
            let xs: Vec<u32> = (0..self.n).map(|i| m[i] * p32).collect();
            let ds: Vec<u32> = (0..self.n).map(|i| m[self.n + i] * p32).collect();
            out.insert(WeylMono { xs, ds }, c);
        }
        out
    }

    fn var_name(&self, v: usize) -> String {
        if self.n == 1 {
            if v == 0 { "X".into() } else { "D".into() }
        } else if v < self.n {
            format!("X{}", v + 1)
        } else {
            format!("D{}", v - self.n + 1)
        }
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms() {
            let mut factors = Vec::new();
            if c != 1 || m.iter().all(|&e| e == 0) {
                factors.push(c.to_string());
            }
            for (v, &e) in m.iter().enumerate() {
                if e == 1 {
                    factors.push(self.var_name(v));
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.var_name(v), e));
                }
            }
            parts.push(factors.join("*"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewrites a central normal-ordered element as a polynomial in the `X, D`
/// generators. Errors with the offending monomial if any exponent is not
/// divisible by `p`.
pub fn central_rewrite(w: &WeylElem) -> Result<CenterPoly> {
    if w.sig.q != w.sig.p {
        return Err(Error::MismatchedSignature("central rewrite expects F_p coefficients".into()));
    }
    let p32 = w.sig.p as u32;
    let mut out = CenterPoly::zero(w.sig.n, w.sig.p);
    for (m, c) in w.terms() {
        if m.xs.iter().chain(&m.ds).any(|&e| e % p32 != 0) {
            return Err(Error::NotCentralMonomial(WeylElem::fmt_term(&w.sig, m, c)));
        }
        let mut exps = Vec::with_capacity(2 * w.sig.n);
        exps.extend(m.xs.iter().map(|&e| e / p32));
        exps.extend(m.ds.iter().map(|&e| e / p32));
        out.insert(exps, c);
    }
    Ok(out)
}

/// The bracket constants of the canonical lift: `{X_i, D_j}`, `{X_i, X_j}`,
/// `{D_i, D_j}`, each computed as `pinv` of the corresponding commutator in
/// `A_n(Z/p²)` and checked to be constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketConstants {
    pub p: u64,
    pub n: usize,
    /// `x_d[i][j]` = `{X_i, D_j}`.
    pub x_d: Vec<Vec<u64>>,
    pub x_x: Vec<Vec<u64>>,
    pub d_d: Vec<Vec<u64>>,
}

fn constant_value(poly: &CenterPoly) -> Result<u64> {
    if poly.is_zero() {
        return Ok(0);
    }
    let mut val = None;
    for (m, c) in poly.terms() {
        if m.iter().any(|&e| e != 0) {
            return Err(Error::Internal(
                "generator bracket is not a constant".into(),
            ));
        }
        val = Some(c);
    }
    Ok(val.unwrap_or(0))
}

pub fn bracket_constants(p: u64, n: usize) -> Result<BracketConstants> {
    if n == 0 {
        return Err(Error::Domain("need at least one generator pair".into()));
    }
    crate::coeff::Gf::prime(p)?;
    let sig2 = WeylSig::zp2(n, p);
    let p32 = p as u32;
    let xp: Vec<WeylElem> = (0..n)
        .map(|i| WeylElem::gen_x(sig2, i).pow(p32))
        .collect::<Result<_>>()?;
    let dp: Vec<WeylElem> = (0..n)
        .map(|i| WeylElem::gen_d(sig2, i).pow(p32))
        .collect::<Result<_>>()?;
    let bracket = |a: &WeylElem, b: &WeylElem| -> Result<u64> {
        let c = a.commutator(b)?.pinv()?;
        constant_value(&central_rewrite(&c)?)
    };
    let mut x_d = vec![vec![0u64; n]; n];
    let mut x_x = vec![vec![0u64; n]; n];
    let mut d_d = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            x_d[i][j] = bracket(&xp[i], &dp[j])?;
            x_x[i][j] = bracket(&xp[i], &xp[j])?;
            d_d[i][j] = bracket(&dp[i], &dp[j])?;
        }
    }
    Ok(BracketConstants { p, n, x_d, x_x, d_d })
}

impl BracketConstants {
    /// The full antisymmetric constants matrix over the `2n` generators in
    /// the order `X_1..X_n, D_1..D_n`.
    pub fn full_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let p = self.p as i64;
        let mut c = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                c[i][n + j] = self.x_d[i][j] as i64;
                c[n + j][i] = (p - self.x_d[i][j] as i64) % p;
                c[i][j] = self.x_x[i][j] as i64;
                c[n + i][n + j] = self.d_d[i][j] as i64;
            }
        }
        c
    }

    /// `{u, v} = Σ c_ab · ∂u/∂ζ_a · ∂v/∂ζ_b` extended from the constants by
    /// bilinearity and the Leibniz rule.
    pub fn poisson(&self, u: &CenterPoly, v: &CenterPoly) -> CenterPoly {
        let c = self.full_matrix();
        let mut out = CenterPoly::zero(self.n, self.p);
        for a in 0..2 * self.n {
            let du = u.partial(a);
            if du.is_zero() {
                continue;
            }
            for b in 0..2 * self.n {
                if c[a][b] == 0 {
                    continue;
                }
                let dv = v.partial(b);
                if dv.is_zero() {
                    continue;
                }
                let mut term = du.mul(&dv);
                term = term.mul(&CenterPoly::constant(self.n, self.p, c[a][b] as u64));
                out = out.add(&term);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// the lifting decision
// ---------------------------------------------------------------------------

/// Label of a central generator in mismatch reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CenterGen {
    X(usize),
    D(usize),
}

impl fmt::Display for CenterGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterGen::X(i) => write!(f, "X{}", i + 1),
            CenterGen::D(i) => write!(f, "D{}", i + 1),
        }
    }
}

/// A generator pair whose bracket is not preserved, with both sides.
#[derive(Clone, Debug)]
pub struct BracketViolation {
    pub u: CenterGen,
    pub v: CenterGen,
    /// `{F(u), F(v)}`.
    pub lhs: CenterPoly,
    /// `F({u, v})`, a constant.
    pub rhs: CenterPoly,
}

/// Outcome of the Poisson-preservation check on the center.
#[derive(Clone, Debug)]
pub struct PoissonReport {
    pub preserved: bool,
    /// `F(X_i) = central_rewrite(f(x_i)^p)`.
    pub images_x: Vec<CenterPoly>,
    /// `F(D_i) = central_rewrite(f(∂_i)^p)`.
    pub images_d: Vec<CenterPoly>,
    pub violations: Vec<BracketViolation>,
}

/// Checks whether the endomorphism induced on the center preserves the
/// canonical Poisson bracket: `{F(u), F(v)} = F({u, v})` for all generator
/// pairs. The p-th powers of the generator images are provably central, so
/// a `NotCentralMonomial` error here indicates an engine bug.
pub fn poisson_preserves(f: &WeylEndo) -> Result<PoissonReport> {
    if f.sig.q != f.sig.p {
        return Err(Error::MismatchedSignature("endomorphism must be over F_p".into()));
    }
    if !is_weyl_endo(f)? {
        return Err(Error::NotAnEndo);
    }
    let n = f.sig.n;
    let p = f.sig.p;
    let p32 = p as u32;
    let consts = bracket_constants(p, n)?;
    let images_x: Vec<CenterPoly> = f
        .images_x
        .iter()
        .map(|w| central_rewrite(&w.pow(p32)?))
        .collect::<Result<_>>()?;
    let images_d: Vec<CenterPoly> = f
        .images_d
        .iter()
        .map(|w| central_rewrite(&w.pow(p32)?))
        .collect::<Result<_>>()?;
    let gen_image = |g: CenterGen| -> &CenterPoly {
        match g {
            CenterGen::X(i) => &images_x[i],
            CenterGen::D(i) => &images_d[i],
        }
    };
    let gens: Vec<CenterGen> = (0..n)
        .map(CenterGen::X)
        .chain((0..n).map(CenterGen::D))
        .collect();
    let mut violations = Vec::new();
    for (a, &u) in gens.iter().enumerate() {
        for &v in gens.iter().skip(a + 1) {
            let lhs = consts.poisson(gen_image(u), gen_image(v));
            let target = match (u, v) {
                (CenterGen::X(i), CenterGen::D(j)) => consts.x_d[i][j],
                (CenterGen::X(i), CenterGen::X(j)) => consts.x_x[i][j],
                (CenterGen::D(i), CenterGen::D(j)) => consts.d_d[i][j],
                (CenterGen::D(i), CenterGen::X(j)) => (p - consts.x_d[j][i]) % p,
            };
            let rhs = CenterPoly::constant(n, p, target);
            if lhs != rhs {
                violations.push(BracketViolation { u, v, lhs, rhs });
            }
        }
    }
    Ok(PoissonReport {
        preserved: violations.is_empty(),
        images_x,
        images_d,
        violations,
    })
}

/// The exact lifting decision for `A_n(F_p) → A_n(Z/p²)`: an endomorphism
/// lifts iff it preserves the canonical Poisson bracket on the center.
pub fn decide_weyl_lift(f: &WeylEndo) -> Result<PoissonReport> {
    poisson_preserves(f)
}

// ---------------------------------------------------------------------------
// bounded-degree explicit lift search
// ---------------------------------------------------------------------------

/// Outcome of [`search_lift`].
pub enum SearchOutcome {
    /// Verified generator images over `Z/p²` reducing to `f`.
    Found {
        images_x: Vec<WeylElem>,
        images_d: Vec<WeylElem>,
    },
    /// No lift with corrections supported on monomials of total degree
    /// ≤ the bound. Not a proof of non-liftability; pair with
    /// [`decide_weyl_lift`].
    NotFoundWithinBound,
}

fn monomials_up_to(n: usize, bound: u32) -> Vec<WeylMono> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; 2 * n];
    loop {
        if exps.iter().sum::<u32>() <= bound {
            out.push(WeylMono {
                xs: exps[..n].to_vec(),
                ds: exps[n..].to_vec(),
            });
        }
        let mut pos = 0;
        loop {
            if pos == 2 * n {
                out.sort();
                return out;
            }
            exps[pos] += 1;
            if exps[pos] <= bound {
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
}

/// Seeks `f̂(x_i) = f(x_i) + p·u_i`, `f̂(∂_i) = f(∂_i) + p·v_i` with the
/// corrections supported on monomials of total degree ≤ `degree_bound`,
/// such that all Weyl relations hold exactly over `Z/p²`. The relation
/// residuals are `p`-divisible, so the conditions form one linear system
/// over `F_p`; any solution is re-verified by direct multiplication.
pub fn search_lift(f: &WeylEndo, degree_bound: u32) -> Result<SearchOutcome> {
    if f.sig.q != f.sig.p {
        return Err(Error::MismatchedSignature("endomorphism must be over F_p".into()));
    }
    if !is_weyl_endo(f)? {
        return Err(Error::NotAnEndo);
    }
    let n = f.sig.n;
    let p = f.sig.p;
    let sig_p = f.sig;
    let gf = Gf::prime(p)?;

    let ansatz = monomials_up_to(n, degree_bound);
    let per_gen = ansatz.len();
    let unknowns = 2 * n * per_gen; // u_0..u_{n-1}, then v_0..v_{n-1}

    // relations: (first generator, second generator, target constant)
    #[derive(Clone, Copy)]
    enum G {
        X(usize),
        D(usize),
    }
    let mut relations: Vec<(G, G, u64)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            relations.push((G::D(i), G::X(j), u64::from(i == j)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            relations.push((G::X(i), G::X(j), 0));
            relations.push((G::D(i), G::D(j), 0));
        }
    }

    let image_p = |g: G| -> &WeylElem {
        match g {
            G::X(i) => &f.images_x[i],
            G::D(i) => &f.images_d[i],
        }
    };
    // unknown block index of the correction attached to a generator
    let block = |g: G| -> usize {
        match g {
            G::X(i) => i,
            G::D(i) => n + i,
        }
    };

    // base residuals over Z/p², divided by p
    let mut residuals: Vec<WeylElem> = Vec::new();
    for &(g1, g2, target) in &relations {
        let a = image_p(g1).embed_zp2()?;
        let b = image_p(g2).embed_zp2()?;
        let r = a
            .commutator(&b)?
            .sub(&WeylElem::constant(a.sig, target))?;
        residuals.push(r.pinv().map_err(|_| {
            Error::Internal("relation residual escaped the ideal p·A_n".into())
        })?);
    }

    // row space: every monomial in any residual or any correction bracket
    let mut row_monos: BTreeSet<WeylMono> = BTreeSet::new();
    for r in &residuals {
        for (m, _) in r.terms() {
            row_monos.insert(m.clone());
        }
    }
    // cache the brackets [f(g), μ] for every generator and ansatz monomial
    let gens: Vec<G> = (0..n).map(G::X).chain((0..n).map(G::D)).collect();
    let mut gen_brackets: Vec<Vec<WeylElem>> = Vec::new();
    for &g in &gens {
        let fg = image_p(g);
        let mut per = Vec::with_capacity(per_gen);
        for m in &ansatz {
            let mu = WeylElem::monomial(sig_p, m.xs.clone(), m.ds.clone(), 1)?;
            let br = fg.commutator(&mu)?;
            for (mm, _) in br.terms() {
                row_monos.insert(mm.clone());
            }
            per.push(br);
        }
        gen_brackets.push(per);
    }
    let row_index: BTreeMap<WeylMono, usize> = row_monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let total_rows = row_index.len() * relations.len();

    let mut m = Matrix::zeros(gf, total_rows, unknowns);
    let mut rhs = vec![gf.zero(); total_rows];
    for (ri, (&(g1, g2, _), resid)) in relations.iter().zip(&residuals).enumerate() {
        let row_base = ri * row_index.len();
        for (mono, c) in resid.terms() {
            rhs[row_base + row_index[mono]] = gf.from_i64(-(c as i64));
        }
        // condition: resid + [f(g1), w2] + [w1, f(g2)] = 0
        // contribution of w2 (correction of g2): +[f(g1), μ]
        for (mi, br) in gen_brackets[block(g1)].iter().enumerate() {
            // careful: gen_brackets is indexed by the bracketing generator,
            // not the corrected one; [f(g1), μ] lives at index block(g1)
            let col = block(g2) * per_gen + mi;
            for (mono, c) in br.terms() {
                let row = row_base + row_index[mono];
                m[(row, col)] = gf.add(m[(row, col)], gf.from_u64(c));
            }
        }
        // contribution of w1: [μ, f(g2)] = −[f(g2), μ]
        for (mi, br) in gen_brackets[block(g2)].iter().enumerate() {
            let col = block(g1) * per_gen + mi;
            for (mono, c) in br.terms() {
                let row = row_base + row_index[mono];
                m[(row, col)] = gf.sub(m[(row, col)], gf.from_u64(c));
            }
        }
    }

    let solution = match m.solve(&rhs)? {
        SolveOutcome::Solution(x) => x,
        SolveOutcome::Infeasible { .. } => return Ok(SearchOutcome::NotFoundWithinBound),
    };

    // assemble the corrected images over Z/p²
    let sig2 = WeylSig::zp2(n, p);
    let correction = |blk: usize| -> Result<WeylElem> {
        let mut w = WeylElem::zero(sig2);
        for (mi, mono) in ansatz.iter().enumerate() {
            let c = gf.coords(&solution[blk * per_gen + mi])[0];
            if c != 0 {
                w = w.add(&WeylElem::monomial(
                    sig2,
                    mono.xs.clone(),
                    mono.ds.clone(),
                    p * c,
                )?)?;
            }
        }
        Ok(w)
    };
    let mut images_x = Vec::with_capacity(n);
    let mut images_d = Vec::with_capacity(n);
    for i in 0..n {
        images_x.push(f.images_x[i].embed_zp2()?.add(&correction(i)?)?);
        images_d.push(f.images_d[i].embed_zp2()?.add(&correction(n + i)?)?);
    }
    // re-verify every relation exactly over Z/p²
    let lifted = WeylEndo::new(images_x.clone(), images_d.clone())?;
    if !is_weyl_endo(&lifted)? {
        return Err(Error::Internal(
            "solved correction failed direct re-verification over Z/p²".into(),
        ));
    }
    // and the reduction condition
    for i in 0..n {
        if images_x[i].reduce_mod_p()? != f.images_x[i]
            || images_d[i].reduce_mod_p()? != f.images_d[i]
        {
            return Err(Error::Internal("lift does not reduce to the input".into()));
        }
    }
    Ok(SearchOutcome::Found { images_x, images_d })
}
