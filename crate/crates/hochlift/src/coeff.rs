//! Coefficient arithmetic: finite fields `F_{p^m}` and square-zero
//! truncation rings.
//!
//! A truncation ring `R` here is a commutative local ring whose maximal
//! ideal is principal, generated by an element `ε` with `ε² = 0`, and
//! whose residue field is `k = R/εR`. Two instantiations are provided:
//!
//! * `Z/p²` with `ε = p` and residue field `F_p`,
//! * dual numbers `k[t]/(t²)` with `ε = t` over any supported `k = F_{p^m}`.
//!
//! Both come with the maps of the exact sequence
//! `0 → k → R → k → 0`: the reduction `reduce: R → k`, the additive
//! injection `iota: k → εR`, and `pinv: εR → k` inverting `iota`.
//! Every lifting computation in the crate funnels through these three maps,
//! so that linear algebra only ever happens over the residue field.

use std::fmt;

use crate::error::{Error, Result};

/// Largest prime accepted for a base field. Keeps all products of
/// canonical representatives (bounded by `p⁴`) inside `u64`.
pub const MAX_PRIME: u64 = 46_337;

/// Largest extension degree for `F_{p^m}`.
pub const MAX_EXT_DEGREE: usize = 4;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// polynomial helpers over F_p (dense, low-to-high coefficients)
// ---------------------------------------------------------------------------

fn poly_trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo a monic polynomial `m`.
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for k in 0..=dm {
            let idx = shift + k;
            r[idx] = (r[idx] + (p - lead % p) % p * m[k]) % p;
        }
        poly_trim(&mut r);
        if r.len() > dm && *r.last().unwrap() == 0 {
            poly_trim(&mut r);
        }
    }
    r
}

/// Extended Euclid: returns (g, s) with s·a ≡ g (mod m), g the gcd made monic.
fn poly_half_egcd(p: u64, a: &[u64], m: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    let inv_mod_p = |x: u64| -> u64 {
        // Fermat inverse for prime p.
        let mut acc = 1u64;
        let mut base = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    while !r1.is_empty() {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut q = vec![0u64; rem.len().saturating_sub(r1.len()) + 1];
        let lead_inv = inv_mod_p(*r1.last().unwrap());
        while rem.len() >= r1.len() && !rem.is_empty() {
            let coef = *rem.last().unwrap() * lead_inv % p;
            let shift = rem.len() - r1.len();
            q[shift] = coef;
            for (k, &c) in r1.iter().enumerate() {
                rem[shift + k] = (rem[shift + k] + (p - coef * c % p)) % p;
            }
            poly_trim(&mut rem);
        }
        // s_new = s0 - q * s1
        let qs1 = poly_mul(p, &q, &s1);
        let mut s_new = vec![0u64; s0.len().max(qs1.len())];
        for (i, &c) in s0.iter().enumerate() {
            s_new[i] = c;
        }
        for (i, &c) in qs1.iter().enumerate() {
            s_new[i] = (s_new[i] + p - c) % p;
        }
        poly_trim(&mut s_new);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    // make r0 monic and scale s0 accordingly
    if let Some(&lead) = r0.last() {
        let li = inv_mod_p(lead);
        for c in r0.iter_mut() {
            *c = *c * li % p;
        }
        for c in s0.iter_mut() {
            *c = *c * li % p;
        }
    }
    (r0, s0)
}

/// Irreducibility over F_p by exhaustive root/factor search; sound for
/// degrees up to [`MAX_EXT_DEGREE`].
fn poly_is_irreducible(p: u64, m: &[u64]) -> bool {
    let deg = m.len() - 1;
    if deg == 1 {
        return true;
    }
    // root search kills all linear factors
    for a in 0..p {
        let mut acc = 0u64;
        for &c in m.iter().rev() {
            acc = (acc * a + c) % p;
        }
        if acc == 0 {
            return false;
        }
    }
    if deg <= 3 {
        return true;
    }
    // degree 4: remaining reducible case is a product of two quadratics
    for b in 0..p {
        for c in 0..p {
            let q = vec![c, b, 1];
            if poly_rem(p, m, &q).is_empty() {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// fields
// ---------------------------------------------------------------------------

/// A finite field `F_{p^m}` with `m ≤ 4`, presented as `F_p[x]/(modulus)`.
///
/// The descriptor is `Copy`; elements are coordinate vectors in the power
/// basis of the modulus, always normalized to least nonnegative residues so
/// equality is bit-exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf {
    p: u64,
    m: usize,
    /// Monic modulus, low-to-high, length m+1; `[0, 1]` for prime fields.
    modulus: [u64; MAX_EXT_DEGREE + 1],
}

/// An element of some [`Gf`]; the field descriptor is carried externally.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GfElem([u64; MAX_EXT_DEGREE]);

impl Gf {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::Domain(format!(
                "{p} is not a supported prime (need a prime ≤ {MAX_PRIME})"
            )));
        }
        let mut modulus = [0u64; MAX_EXT_DEGREE + 1];
        modulus[1] = 1;
        Ok(Gf { p, m: 1, modulus })
    }

    /// The extension field `F_p[x]/(modulus)`; `modulus` is monic of degree
    /// `m ≤ 4`, coefficients low-to-high, and must be irreducible over `F_p`
    /// (verified by exhaustive root/quadratic-factor search).
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::Domain(format!(
                "{p} is not a supported prime (need a prime ≤ {MAX_PRIME})"
            )));
        }
        let m = modulus.len().saturating_sub(1);
        if m == 0 || m > MAX_EXT_DEGREE {
            return Err(Error::Domain(format!(
                "extension degree must be between 1 and {MAX_EXT_DEGREE}"
            )));
        }
        let poly: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        if poly[m] != 1 {
            return Err(Error::Domain("modulus must be monic".into()));
        }
        if m > 1 && p > 257 {
            return Err(Error::Domain(
                "extension fields are supported for primes ≤ 257".into(),
            ));
        }
        if !poly_is_irreducible(p, &poly) {
            return Err(Error::Domain("modulus is reducible over F_p".into()));
        }
        let mut fixed = [0u64; MAX_EXT_DEGREE + 1];
        fixed[..=m].copy_from_slice(&poly);
        Ok(Gf { p, m, modulus: fixed })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus[..=self.m]
    }

    pub fn zero(&self) -> GfElem {
        GfElem::default()
    }

    pub fn one(&self) -> GfElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        c[0] = 1;
        GfElem(c)
    }

    /// Element from power-basis coordinates (length ≤ m), reduced mod p.
    pub fn elem(&self, coords: &[u64]) -> GfElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        for (i, &x) in coords.iter().take(self.m).enumerate() {
            c[i] = x % self.p;
        }
        GfElem(c)
    }

    /// Embeds an integer as a constant.
    pub fn from_u64(&self, n: u64) -> GfElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        c[0] = n % self.p;
        GfElem(c)
    }

    pub fn from_i64(&self, n: i64) -> GfElem {
        let p = self.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    pub fn coords<'a>(&self, a: &'a GfElem) -> &'a [u64] {
        &a.0[..self.m]
    }

    pub fn is_zero(&self, a: GfElem) -> bool {
        a.0 == [0; MAX_EXT_DEGREE]
    }

    pub fn add(&self, a: GfElem, b: GfElem) -> GfElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        for i in 0..self.m {
            c[i] = (a.0[i] + b.0[i]) % self.p;
        }
        GfElem(c)
    }

    pub fn neg(&self, a: GfElem) -> GfElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        for i in 0..self.m {
            c[i] = (self.p - a.0[i] % self.p) % self.p;
        }
        GfElem(c)
    }

    pub fn sub(&self, a: GfElem, b: GfElem) -> GfElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: GfElem, b: GfElem) -> GfElem {
        if self.m == 1 {
            let mut c = [0u64; MAX_EXT_DEGREE];
            c[0] = a.0[0] * b.0[0] % self.p;
            return GfElem(c);
        }
        let prod = poly_mul(self.p, &a.0[..self.m], &b.0[..self.m]);
        let rem = poly_rem(self.p, &prod, self.modulus());
        let mut c = [0u64; MAX_EXT_DEGREE];
        for (i, &x) in rem.iter().enumerate() {
            c[i] = x;
        }
        GfElem(c)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: GfElem) -> Option<GfElem> {
        if self.is_zero(a) {
            return None;
        }
        if self.m == 1 {
            let mut acc = 1u64;
            let mut base = a.0[0];
            let mut e = self.p - 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % self.p;
                }
                base = base * base % self.p;
                e >>= 1;
            }
            let mut c = [0u64; MAX_EXT_DEGREE];
            c[0] = acc;
            return Some(GfElem(c));
        }
        let (g, s) = poly_half_egcd(self.p, &a.0[..self.m], self.modulus());
        if g.len() != 1 {
            return None; // cannot happen for an irreducible modulus
        }
        let mut c = [0u64; MAX_EXT_DEGREE];
        for (i, &x) in s.iter().take(self.m).enumerate() {
            c[i] = x;
        }
        Some(GfElem(c))
    }

    pub fn div(&self, a: GfElem, b: GfElem) -> Option<GfElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// All field elements in lexicographic coordinate order. Intended for
    /// exhaustive checks on small fields; guards against misuse.
    pub fn all_elements(&self) -> Vec<GfElem> {
        assert!(self.order() <= 1 << 16, "field too large to enumerate");
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; self.m];
        loop {
            out.push(self.elem(&cur));
            let mut i = 0;
            loop {
                if i == self.m {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.p {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn fmt_elem(&self, a: GfElem) -> String {
        if self.m == 1 {
            format!("{}", a.0[0])
        } else {
            let coords: Vec<String> = a.0[..self.m].iter().map(|c| c.to_string()).collect();
            format!("[{}]", coords.join(","))
        }
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "F{}", self.p)
        } else {
            write!(f, "F{}^{}", self.p, self.m)
        }
    }
}

// ---------------------------------------------------------------------------
// truncation rings
// ---------------------------------------------------------------------------

/// One of the two supported square-zero truncation rings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TruncRing {
    /// `Z/p²` with `ε = p`; residue field `F_p`.
    Zp2 { p: u64 },
    /// Dual numbers `k[t]/(t²)` with `ε = t`; residue field `k`.
    Dual { field: Gf },
}

/// An element of a [`TruncRing`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TruncElem {
    Zp2(u64),
    Dual(GfElem, GfElem),
}

impl TruncRing {
    pub fn zp2(p: u64) -> Result<Self> {
        // validate through the residue field constructor
        Gf::prime(p)?;
        Ok(TruncRing::Zp2 { p })
    }

    pub fn dual(field: Gf) -> Self {
        TruncRing::Dual { field }
    }

    /// The residue field `k = R/εR`.
    pub fn residue_field(&self) -> Gf {
        match self {
            TruncRing::Zp2 { p } => Gf::prime(*p).expect("validated at construction"),
            TruncRing::Dual { field } => *field,
        }
    }

    /// The generator `ε` of the maximal ideal (`p` resp. `t`).
    pub fn epsilon(&self) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => TruncElem::Zp2(*p),
            TruncRing::Dual { field } => TruncElem::Dual(field.zero(), field.one()),
        }
    }

    fn expect_zp2(&self, x: TruncElem) -> u64 {
        match x {
            TruncElem::Zp2(v) => v,
            _ => panic!("element does not belong to Z/p²"),
        }
    }

    fn expect_dual(&self, x: TruncElem) -> (GfElem, GfElem) {
        match x {
            TruncElem::Dual(a, b) => (a, b),
            _ => panic!("element does not belong to k[t]/(t²)"),
        }
    }

    /// Reduction `R → k`; a ring homomorphism with kernel `εR`.
    pub fn reduce(&self, x: TruncElem) -> GfElem {
        match self {
            TruncRing::Zp2 { p } => {
                let v = self.expect_zp2(x);
                let k = self.residue_field();
                k.from_u64(v % p)
            }
            TruncRing::Dual { .. } => self.expect_dual(x).0,
        }
    }

    /// The additive injection `iota: k → εR`, `a ↦ ε·ã`.
    pub fn iota(&self, a: GfElem) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => {
                let k = self.residue_field();
                TruncElem::Zp2(p * k.coords(&a)[0] % (p * p))
            }
            TruncRing::Dual { field } => TruncElem::Dual(field.zero(), a),
        }
    }

    /// Inverse of `iota` on the ideal `εR`; errors unless `reduce(x) = 0`.
    pub fn pinv(&self, x: TruncElem) -> Result<GfElem> {
        let k = self.residue_field();
        if !k.is_zero(self.reduce(x)) {
            return Err(Error::Domain(
                "pinv applied to an element outside the ideal εR".into(),
            ));
        }
        match self {
            TruncRing::Zp2 { p } => Ok(k.from_u64(self.expect_zp2(x) / p)),
            TruncRing::Dual { .. } => Ok(self.expect_dual(x).1),
        }
    }

    /// The canonical set-theoretic section `k → R` (least representative for
    /// `Z/p²`, constant part for dual numbers). A multiplicative splitting in
    /// the dual case, merely a choice of lift in the `Z/p²` case.
    pub fn section(&self, a: GfElem) -> TruncElem {
        match self {
            TruncRing::Zp2 { .. } => {
                let k = self.residue_field();
                TruncElem::Zp2(k.coords(&a)[0])
            }
            TruncRing::Dual { field } => TruncElem::Dual(a, field.zero()),
        }
    }

    pub fn zero(&self) -> TruncElem {
        match self {
            TruncRing::Zp2 { .. } => TruncElem::Zp2(0),
            TruncRing::Dual { field } => TruncElem::Dual(field.zero(), field.zero()),
        }
    }

    pub fn one(&self) -> TruncElem {
        match self {
            TruncRing::Zp2 { .. } => TruncElem::Zp2(1),
            TruncRing::Dual { field } => TruncElem::Dual(field.one(), field.zero()),
        }
    }

    pub fn is_zero(&self, x: TruncElem) -> bool {
        x == self.zero()
    }

    pub fn add(&self, x: TruncElem, y: TruncElem) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => {
                TruncElem::Zp2((self.expect_zp2(x) + self.expect_zp2(y)) % (p * p))
            }
            TruncRing::Dual { field } => {
                let (a0, a1) = self.expect_dual(x);
                let (b0, b1) = self.expect_dual(y);
                TruncElem::Dual(field.add(a0, b0), field.add(a1, b1))
            }
        }
    }

    pub fn neg(&self, x: TruncElem) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => {
                let q = p * p;
                TruncElem::Zp2((q - self.expect_zp2(x) % q) % q)
            }
            TruncRing::Dual { field } => {
                let (a0, a1) = self.expect_dual(x);
                TruncElem::Dual(field.neg(a0), field.neg(a1))
            }
        }
    }

    pub fn sub(&self, x: TruncElem, y: TruncElem) -> TruncElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: TruncElem, y: TruncElem) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => {
                TruncElem::Zp2(self.expect_zp2(x) * self.expect_zp2(y) % (p * p))
            }
            TruncRing::Dual { field } => {
                let (a0, a1) = self.expect_dual(x);
                let (b0, b1) = self.expect_dual(y);
                // (a0 + a1 t)(b0 + b1 t) = a0 b0 + (a0 b1 + a1 b0) t
                TruncElem::Dual(
                    field.mul(a0, b0),
                    field.add(field.mul(a0, b1), field.mul(a1, b0)),
                )
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> TruncElem {
        match self {
            TruncRing::Zp2 { p } => {
                let q = (p * p) as i64;
                TruncElem::Zp2(n.rem_euclid(q) as u64)
            }
            TruncRing::Dual { field } => TruncElem::Dual(field.from_i64(n), field.zero()),
        }
    }

    /// All ring elements; for exhaustive checks on small rings.
    pub fn all_elements(&self) -> Vec<TruncElem> {
        match self {
            TruncRing::Zp2 { p } => (0..p * p).map(TruncElem::Zp2).collect(),
            TruncRing::Dual { field } => {
                let elems = field.all_elements();
                let mut out = Vec::with_capacity(elems.len() * elems.len());
                for &a in &elems {
                    for &b in &elems {
                        out.push(TruncElem::Dual(a, b));
                    }
                }
                out
            }
        }
    }

    pub fn fmt_elem(&self, x: TruncElem) -> String {
        match self {
            TruncRing::Zp2 { .. } => format!("{}", self.expect_zp2(x)),
            TruncRing::Dual { field } => {
                let (a0, a1) = self.expect_dual(x);
                format!("{}+{}t", field.fmt_elem(a0), field.fmt_elem(a1))
            }
        }
    }
}

impl fmt::Display for TruncRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncRing::Zp2 { p } => write!(f, "Z/{}", p * p),
            TruncRing::Dual { field } => write!(f, "{}[t]/(t²)", field),
        }
    }
}

// ---------------------------------------------------------------------------
// a common interface for the two coefficient domains
// ---------------------------------------------------------------------------

/// Ring operations shared by [`Gf`] and [`TruncRing`], so that
/// structure-constant algebras can be defined over either.
pub trait Ring: Copy + Eq + fmt::Debug {
    type Elem: Copy + Eq + std::hash::Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn fmt_elem(&self, a: Self::Elem) -> String;
}

impl Ring for Gf {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        Gf::zero(self)
    }
    fn one(&self) -> GfElem {
        Gf::one(self)
    }
    fn is_zero(&self, a: GfElem) -> bool {
        Gf::is_zero(self, a)
    }
    fn add(&self, a: GfElem, b: GfElem) -> GfElem {
        Gf::add(self, a, b)
    }
    fn sub(&self, a: GfElem, b: GfElem) -> GfElem {
        Gf::sub(self, a, b)
    }
    fn neg(&self, a: GfElem) -> GfElem {
        Gf::neg(self, a)
    }
    fn mul(&self, a: GfElem, b: GfElem) -> GfElem {
        Gf::mul(self, a, b)
    }
    fn from_i64(&self, n: i64) -> GfElem {
        Gf::from_i64(self, n)
    }
    fn fmt_elem(&self, a: GfElem) -> String {
        Gf::fmt_elem(self, a)
    }
}

impl Ring for TruncRing {
    type Elem = TruncElem;

    fn zero(&self) -> TruncElem {
        TruncRing::zero(self)
    }
    fn one(&self) -> TruncElem {
        TruncRing::one(self)
    }
    fn is_zero(&self, a: TruncElem) -> bool {
        TruncRing::is_zero(self, a)
    }
    fn add(&self, a: TruncElem, b: TruncElem) -> TruncElem {
        TruncRing::add(self, a, b)
    }
    fn sub(&self, a: TruncElem, b: TruncElem) -> TruncElem {
        TruncRing::sub(self, a, b)
    }
    fn neg(&self, a: TruncElem) -> TruncElem {
        TruncRing::neg(self, a)
    }
    fn mul(&self, a: TruncElem, b: TruncElem) -> TruncElem {
        TruncRing::mul(self, a, b)
    }
    fn from_i64(&self, n: i64) -> TruncElem {
        TruncRing::from_i64(self, n)
    }
    fn fmt_elem(&self, a: TruncElem) -> String {
        TruncRing::fmt_elem(self, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Gf {
        Gf::extension(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let z4 = TruncRing::zp2(2).unwrap();
        let f2 = z4.residue_field();
        assert_eq!(z4.reduce(TruncElem::Zp2(3)), f2.from_u64(1));

        let d5 = TruncRing::dual(Gf::prime(5).unwrap());
        let f5 = Gf::prime(5).unwrap();
        assert_eq!(
            d5.reduce(TruncElem::Dual(f5.from_u64(2), f5.from_u64(4))),
            f5.from_u64(2)
        );

        let z9 = TruncRing::zp2(3).unwrap();
        let f3 = z9.residue_field();
        assert!(f3.is_zero(z9.reduce(z9.iota(f3.from_u64(2)))));
    }

    #[test]
    fn iota_examples() {
        let z9 = TruncRing::zp2(3).unwrap();
        let f3 = z9.residue_field();
        assert_eq!(z9.iota(f3.from_u64(2)), TruncElem::Zp2(6));

        let d3 = TruncRing::dual(Gf::prime(3).unwrap());
        let f3 = Gf::prime(3).unwrap();
        assert_eq!(
            d3.iota(f3.from_u64(2)),
            TruncElem::Dual(f3.zero(), f3.from_u64(2))
        );

        let z4 = TruncRing::zp2(2).unwrap();
        let f2 = z4.residue_field();
        let i1 = z4.iota(f2.one());
        assert!(z4.is_zero(z4.mul(i1, i1)));
    }

    #[test]
    fn pinv_examples() {
        let z25 = TruncRing::zp2(5).unwrap();
        let f5 = z25.residue_field();
        assert_eq!(z25.pinv(TruncElem::Zp2(10)).unwrap(), f5.from_u64(2));

        let d2 = TruncRing::dual(Gf::prime(2).unwrap());
        let f2 = Gf::prime(2).unwrap();
        assert_eq!(
            d2.pinv(TruncElem::Dual(f2.zero(), f2.one())).unwrap(),
            f2.one()
        );

        let z4 = TruncRing::zp2(2).unwrap();
        assert!(z4.pinv(TruncElem::Zp2(1)).is_err());
    }

    #[test]
    fn epsilon_squares_to_zero() {
        for ring in [
            TruncRing::zp2(2).unwrap(),
            TruncRing::zp2(3).unwrap(),
            TruncRing::zp2(5).unwrap(),
            TruncRing::dual(Gf::prime(2).unwrap()),
            TruncRing::dual(f4()),
        ] {
            let e = ring.epsilon();
            assert!(ring.is_zero(ring.mul(e, e)));
        }
    }

    /// Every element of the kernel of `reduce` has a unique `iota`-preimage,
    /// exhaustively over the small rings.
    #[test]
    fn exact_sequence_exhaustive() {
        let rings = vec![
            TruncRing::zp2(2).unwrap(),
            TruncRing::zp2(3).unwrap(),
            TruncRing::zp2(5).unwrap(),
            TruncRing::dual(Gf::prime(2).unwrap()),
            TruncRing::dual(Gf::prime(3).unwrap()),
            TruncRing::dual(Gf::prime(5).unwrap()),
            TruncRing::dual(f4()),
            TruncRing::dual(Gf::extension(3, &[1, 0, 1]).unwrap()),
            TruncRing::dual(Gf::extension(5, &[2, 0, 1]).unwrap()),
        ];
        for ring in rings {
            let k = ring.residue_field();
            let field_elems = k.all_elements();
            // round trip pinv ∘ iota = id
            for &a in &field_elems {
                assert_eq!(ring.pinv(ring.iota(a)).unwrap(), a);
                assert!(k.is_zero(ring.reduce(ring.iota(a))));
            }
            // kernel of reduce = image of iota, preimages unique
            for x in ring.all_elements() {
                if k.is_zero(ring.reduce(x)) {
                    let count = field_elems
                        .iter()
                        .filter(|&&a| ring.iota(a) == x)
                        .count();
                    assert_eq!(count, 1, "{} in {}", ring.fmt_elem(x), ring);
                }
            }
        }
    }

    /// `reduce` is multiplicative and the bimodule action on the ideal
    /// factors through the residue field: `iota(a)·x = iota(a·reduce(x))`.
    #[test]
    fn reduction_and_ideal_action() {
        for ring in [
            TruncRing::zp2(3).unwrap(),
            TruncRing::zp2(5).unwrap(),
            TruncRing::dual(f4()),
        ] {
            let k = ring.residue_field();
            for x in ring.all_elements() {
                for y in ring.all_elements() {
                    assert_eq!(
                        ring.reduce(ring.mul(x, y)),
                        k.mul(ring.reduce(x), ring.reduce(y))
                    );
                }
                for a in k.all_elements() {
                    assert_eq!(
                        ring.mul(ring.iota(a), x),
                        ring.iota(k.mul(a, ring.reduce(x)))
                    );
                }
            }
        }
    }

    /// Field axioms checked exhaustively for every field of order ≤ 25.
    #[test]
    fn field_axioms_exhaustive() {
        let fields = vec![
            Gf::prime(2).unwrap(),
            Gf::prime(3).unwrap(),
            Gf::prime(5).unwrap(),
            Gf::prime(7).unwrap(),
            Gf::prime(11).unwrap(),
            Gf::prime(13).unwrap(),
            Gf::prime(17).unwrap(),
            Gf::prime(19).unwrap(),
            Gf::prime(23).unwrap(),
            f4(),                                       // F_4
            Gf::extension(2, &[1, 1, 0, 1]).unwrap(),   // F_8
            Gf::extension(2, &[1, 1, 0, 0, 1]).unwrap(),// F_16
            Gf::extension(3, &[1, 0, 1]).unwrap(),      // F_9
            Gf::extension(5, &[2, 0, 1]).unwrap(),      // F_25
        ];
        for k in fields {
            let elems = k.all_elements();
            assert_eq!(elems.len() as u64, k.order());
            for &a in &elems {
                // inverses
                if !k.is_zero(a) {
                    let ai = k.inv(a).expect("nonzero element must be invertible");
                    assert_eq!(k.mul(a, ai), k.one());
                }
                for &b in &elems {
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for &c in &elems {
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(
                            k.mul(a, k.add(b, c)),
                            k.add(k.mul(a, b), k.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Gf::extension(2, &[0, 0, 1]).is_err()); // x², reducible
        assert!(Gf::extension(2, &[1, 0, 1]).is_err()); // x²+1 = (x+1)²
        // x²+2 over F_3 has the root 1, so it must be rejected
        assert!(Gf::extension(3, &[2, 0, 1]).is_err());
        // degree-4 with an irreducible-quadratic factorization:
        // (x²+x+1)² ≡ x⁴+x²+1 mod 2, root-free but reducible
        assert!(Gf::extension(2, &[1, 0, 1, 0, 1]).is_err());
        // x⁴+x+1 is irreducible over F_2
        assert!(Gf::extension(2, &[1, 1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn not_a_prime_rejected() {
        assert!(Gf::prime(1).is_err());
        assert!(Gf::prime(4).is_err());
        assert!(TruncRing::zp2(6).is_err());
    }
}
