//! First-order flat lifts and the lifting decision.
//!
//! A flat lift pairs an algebra `A` over `k` with a basis-aligned algebra
//! `Ã` over a truncation ring `R` whose structure constants reduce to those
//! of `A`. An `R`-linear lift `f̃` of an endomorphism `f` has a
//! multiplicative defect `D(x,y) = f̃(x)f̃(y) − f̃(xy)` landing in the ideal
//! `εÃ`; pushing it down with `pinv` yields a 2-cocycle with values in `A`
//! twisted by `f`. The endomorphism lifts multiplicatively iff that cocycle
//! is a coboundary, in which case `f̂ = f̃ − ι∘h∘π` is a verified lift.
//!
//! The lift also induces a Poisson bracket `{z,w} = pinv([z̃,w̃])` on the
//! center, and the antisymmetrization of the restricted cocycle equals
//! `{f(x),f(y)} − f({x,y})` exactly — the bridge between the linear-algebra
//! decision and the geometry of the center.

use crate::algebra::{
    restrict_endo, truncated_polynomial, AlgebraSC, LinMap, MonomialBasis, RestrictOutcome,
    Subspace,
};
use crate::coeff::{Gf, GfElem, TruncElem, TruncRing};
use crate::error::{Error, Result};
use crate::hochschild::{restrict_cochain, Cochain, CochainSpace, CoboundaryOutcome};
use crate::linalg::{vec_is_zero, vec_sub};

// ---------------------------------------------------------------------------
// flat lifts
// ---------------------------------------------------------------------------

/// A validated basis-aligned first-order flat lift.
#[derive(Clone, Debug)]
pub struct FlatLift {
    base: AlgebraSC<Gf>,
    lift: AlgebraSC<TruncRing>,
}

impl FlatLift {
    /// Validates alignment (structure constants and unit reduce to the
    /// base), and associativity and unitality of the lifted product.
    pub fn new(base: AlgebraSC<Gf>, lift: AlgebraSC<TruncRing>) -> Result<Self> {
        let ring = lift.ring();
        let k = ring.residue_field();
        if k != base.gf() {
            return Err(Error::NotALift(
                "residue field of the lift ring differs from the base field".into(),
            ));
        }
        if base.dim() != lift.dim() {
            return Err(Error::NotALift("dimension mismatch".into()));
        }
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                let reduced: Vec<GfElem> = lift
                    .basis_product(i, j)
                    .iter()
                    .map(|&x| ring.reduce(x))
                    .collect();
                if reduced != base.basis_product(i, j) {
                    return Err(Error::NotALift(format!(
                        "structure constant ({i},{j}) does not reduce to the base"
                    )));
                }
            }
        }
        let reduced_unit: Vec<GfElem> = lift.unit().iter().map(|&x| ring.reduce(x)).collect();
        if reduced_unit != base.unit() {
            return Err(Error::NotALift("unit does not reduce to the base unit".into()));
        }
        let report = lift.validate();
        if !report.associative {
            return Err(Error::NotAssociative);
        }
        if !report.unital {
            return Err(Error::NotALift("lifted unit fails over the truncation ring".into()));
        }
        Ok(FlatLift { base, lift })
    }

    pub fn base(&self) -> &AlgebraSC<Gf> {
        &self.base
    }

    pub fn lift(&self) -> &AlgebraSC<TruncRing> {
        &self.lift
    }

    pub fn ring(&self) -> TruncRing {
        self.lift.ring()
    }

    pub fn gf(&self) -> Gf {
        self.base.gf()
    }

    pub fn section_vec(&self, v: &[GfElem]) -> Vec<TruncElem> {
        let r = self.ring();
        v.iter().map(|&x| r.section(x)).collect()
    }

    pub fn iota_vec(&self, v: &[GfElem]) -> Vec<TruncElem> {
        let r = self.ring();
        v.iter().map(|&x| r.iota(x)).collect()
    }

    pub fn reduce_vec(&self, v: &[TruncElem]) -> Vec<GfElem> {
        let r = self.ring();
        v.iter().map(|&x| r.reduce(x)).collect()
    }

    pub fn pinv_vec(&self, v: &[TruncElem]) -> Result<Vec<GfElem>> {
        let r = self.ring();
        v.iter().map(|&x| r.pinv(x)).collect()
    }

    /// The default `R`-linear lift of `f`: entrywise canonical section of
    /// its matrix. The obstruction class does not depend on this choice.
    pub fn default_linear_lift(&self, f: &LinMap<Gf>) -> LinMap<TruncRing> {
        let r = self.ring();
        f.map_entries(r, |x| r.section(x))
    }

    /// `default + ι∘h`, which ranges over all `R`-linear lifts of `f` as
    /// `h` ranges over linear maps `A → A`.
    pub fn perturbed_linear_lift(&self, f: &LinMap<Gf>, h: &LinMap<Gf>) -> LinMap<TruncRing> {
        let r = self.ring();
        self.default_linear_lift(f)
            .add(&h.map_entries(r, |x| r.iota(x)))
    }

    /// Checks `π ∘ f̃ = f ∘ π` entrywise.
    pub fn is_linear_lift_of(&self, f_tilde: &LinMap<TruncRing>, f: &LinMap<Gf>) -> bool {
        let r = self.ring();
        f_tilde.n == f.n && f_tilde.map_entries(self.gf(), |x| r.reduce(x)) == *f
    }
}

// ---------------------------------------------------------------------------
// the obstruction cocycle and the decision
// ---------------------------------------------------------------------------

/// The defect 2-cocycle of an `R`-linear lift:
/// `C(e_i ⊗ e_j) = pinv( f̃(ẽ_i)·f̃(ẽ_j) − f̃(ẽ_i·ẽ_j) )`,
/// a cochain with values in `A` twisted by `f` on both sides.
pub fn defect_cocycle(
    l: &FlatLift,
    f: &LinMap<Gf>,
    f_tilde: &LinMap<TruncRing>,
) -> Result<Cochain> {
    if !l.base.is_algebra_morphism(f)? {
        return Err(Error::NotAMorphism("twist map is not an algebra morphism".into()));
    }
    if !l.is_linear_lift_of(f_tilde, f) {
        return Err(Error::NotALinearLift);
    }
    let dim = l.base.dim();
    let mut c = Cochain::zero(l.gf(), 2, dim, dim);
    for i in 0..dim {
        let fi = f_tilde.col(i);
        for j in 0..dim {
            let prod = l.lift.multiply(&fi, &f_tilde.col(j))?;
            let image = f_tilde.apply(&l.lift.basis_product(i, j));
            let defect: Vec<TruncElem> = prod
                .iter()
                .zip(&image)
                .map(|(&a, &b)| l.ring().sub(a, b))
                .collect();
            let value = l.pinv_vec(&defect).map_err(|_| {
                Error::Internal("multiplicative defect escaped the ideal εÃ".into())
            })?;
            c.set(&[i, j], value);
        }
    }
    Ok(c)
}

/// Result of [`decide_lift`].
#[derive(Clone, Debug)]
pub enum LiftDecision {
    /// A verified multiplicative lift `f̂ = f̃ − ι∘h∘π` together with the
    /// primitive `h` that was solved for.
    Lifts {
        corrected: LinMap<TruncRing>,
        primitive: Cochain,
    },
    /// The obstruction cocycle with the infeasibility certificate of the
    /// coboundary solve (`witness · δ¹ = 0`, `witness · cocycle ≠ 0`).
    Obstructed {
        cocycle: Cochain,
        row: usize,
        witness: Vec<GfElem>,
    },
}

/// Decides whether `f` lifts to an `R`-algebra endomorphism of the lifted
/// algebra, constructing and verifying the corrected lift when it does.
pub fn decide_lift(l: &FlatLift, f: &LinMap<Gf>) -> Result<LiftDecision> {
    let f_tilde = l.default_linear_lift(f);
    let cocycle = defect_cocycle(l, f, &f_tilde)?;
    let space = CochainSpace::full(&l.base, f.clone())?;
    match space.coboundary_solve(&cocycle)? {
        CoboundaryOutcome::Solved(h) => {
            let hmap = h.to_linmap(l.gf())?;
            let r = l.ring();
            let corrected = f_tilde.sub(&hmap.map_entries(r, |x| r.iota(x)));
            // re-verify multiplicativity and unitality over R directly
            if !l.lift.is_algebra_morphism(&corrected)? {
                return Err(Error::Internal(
                    "corrected lift failed re-verification over the truncation ring".into(),
                ));
            }
            Ok(LiftDecision::Lifts {
                corrected,
                primitive: h,
            })
        }
        CoboundaryOutcome::Infeasible { row, witness } => Ok(LiftDecision::Obstructed {
            cocycle,
            row,
            witness,
        }),
    }
}

// ---------------------------------------------------------------------------
// the Poisson bracket on the center
// ---------------------------------------------------------------------------

/// `{z, w} = pinv([z̃, w̃])` for central `z, w`, computed from the canonical
/// sections. Adding elements of `εÃ` to the lifts does not change the value.
pub fn poisson_bracket(l: &FlatLift, z: &[GfElem], w: &[GfElem]) -> Result<Vec<GfElem>> {
    let center = l.base.center();
    poisson_bracket_in(l, &center, z, w)
}

/// Same as [`poisson_bracket`] with a precomputed center.
pub fn poisson_bracket_in(
    l: &FlatLift,
    center: &Subspace,
    z: &[GfElem],
    w: &[GfElem],
) -> Result<Vec<GfElem>> {
    if !center.contains(z) || !center.contains(w) {
        return Err(Error::NotCentral);
    }
    let comm = l.lift.commutator(&l.section_vec(z), &l.section_vec(w))?;
    let value = l
        .pinv_vec(&comm)
        .map_err(|_| Error::Internal("central commutator escaped the ideal εÃ".into()))?;
    if !center.contains(&value) {
        return Err(Error::Internal("Poisson bracket left the center".into()));
    }
    Ok(value)
}

/// The center with its bracket table, plus the three axiom checks.
#[derive(Clone, Debug)]
pub struct PoissonCenter {
    pub center: Subspace,
    /// `table[i][j]` = `{z_i, z_j}` in center coordinates.
    pub table: Vec<Vec<Vec<GfElem>>>,
}

impl PoissonCenter {
    pub fn new(l: &FlatLift) -> Result<Self> {
        let center = l.base.center();
        let d = center.dim();
        let mut table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let b = poisson_bracket_in(l, &center, &center.basis()[i], &center.basis()[j])?;
                table[i][j] = center
                    .coords(&b)
                    .ok_or_else(|| Error::Internal("bracket value outside the center".into()))?;
            }
        }
        Ok(PoissonCenter { center, table })
    }

    /// Antisymmetry including `{z,z} = 0`, on all basis pairs.
    pub fn antisymmetric(&self, l: &FlatLift) -> Result<bool> {
        let gf = l.gf();
        for zi in self.center.basis() {
            if !vec_is_zero(gf, &poisson_bracket_in(l, &self.center, zi, zi)?) {
                return Ok(false);
            }
            for zj in self.center.basis() {
                let bij = poisson_bracket_in(l, &self.center, zi, zj)?;
                let bji = poisson_bracket_in(l, &self.center, zj, zi)?;
                let sum = crate::linalg::vec_add(gf, &bij, &bji);
                if !vec_is_zero(gf, &sum) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Jacobi identity `{{x,y},z} + {{y,z},x} + {{z,x},y} = 0` on basis
    /// triples.
    pub fn jacobi(&self, l: &FlatLift) -> Result<bool> {
        let gf = l.gf();
        let basis = self.center.basis();
        for x in basis {
            for y in basis {
                for z in basis {
                    let a = poisson_bracket_in(l, &self.center, &poisson_bracket_in(l, &self.center, x, y)?, z)?;
                    let b = poisson_bracket_in(l, &self.center, &poisson_bracket_in(l, &self.center, y, z)?, x)?;
                    let c = poisson_bracket_in(l, &self.center, &poisson_bracket_in(l, &self.center, z, x)?, y)?;
                    let sum = crate::linalg::vec_add(gf, &crate::linalg::vec_add(gf, &a, &b), &c);
                    if !vec_is_zero(gf, &sum) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Leibniz rule `{x, y·z} = {x,y}·z + y·{x,z}` on basis triples.
    pub fn leibniz(&self, l: &FlatLift) -> Result<bool> {
        let gf = l.gf();
        let basis = self.center.basis();
        for x in basis {
            for y in basis {
                for z in basis {
                    let yz = l.base.multiply(y, z)?;
                    let lhs = poisson_bracket_in(l, &self.center, x, &yz)?;
                    let xy = poisson_bracket_in(l, &self.center, x, y)?;
                    let xz = poisson_bracket_in(l, &self.center, x, z)?;
                    let rhs = crate::linalg::vec_add(
                        gf,
                        &l.base.multiply(&xy, z)?,
                        &l.base.multiply(y, &xz)?,
                    );
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

// ---------------------------------------------------------------------------
// the antisymmetrization identity on the center
// ---------------------------------------------------------------------------

/// Report of [`antisym_check`]: for all center-basis pairs `(x, y)`,
/// compares `c(x⊗y) − c(y⊗x)` with `{f(x), f(y)} − f({x, y})` for the
/// restricted defect cocycle `c`.
#[derive(Clone, Debug)]
pub struct AntisymReport {
    /// The displayed identity holds exactly on every pair.
    pub identity_holds: bool,
    /// `c(x⊗y) = c(y⊗x)` for all pairs.
    pub symmetric: bool,
    /// `{f(x), f(y)} = f({x, y})` for all pairs.
    pub bracket_preserved: bool,
    /// First pair where the bracket is not preserved, with both sides.
    pub mismatch: Option<BracketMismatch>,
}

#[derive(Clone, Debug)]
pub struct BracketMismatch {
    pub i: usize,
    pub j: usize,
    /// `{f(z_i), f(z_j)}` in ambient coordinates.
    pub lhs: Vec<GfElem>,
    /// `f({z_i, z_j})` in ambient coordinates.
    pub rhs: Vec<GfElem>,
}

/// Runs the antisymmetrization comparison with the default linear lift.
/// Errors with [`Error::CenterNotPreserved`] unless `f(Z) ⊆ Z`.
pub fn antisym_check(l: &FlatLift, f: &LinMap<Gf>) -> Result<AntisymReport> {
    let f_tilde = l.default_linear_lift(f);
    antisym_check_with_lift(l, f, &f_tilde)
}

/// Same with a caller-supplied linear lift: the report must not depend on
/// the choice.
pub fn antisym_check_with_lift(
    l: &FlatLift,
    f: &LinMap<Gf>,
    f_tilde: &LinMap<TruncRing>,
) -> Result<AntisymReport> {
    let gf = l.gf();
    let center = l.base.center();
    if !matches!(restrict_endo(f, &center), RestrictOutcome::Restricted(_)) {
        return Err(Error::CenterNotPreserved);
    }
    let cocycle = defect_cocycle(l, f, f_tilde)?;
    let c = restrict_cochain(gf, &cocycle, center.basis());

    let mut identity_holds = true;
    let mut symmetric = true;
    let mut bracket_preserved = true;
    let mut mismatch = None;
    for i in 0..center.dim() {
        for j in 0..center.dim() {
            let zi = &center.basis()[i];
            let zj = &center.basis()[j];
            let anti = vec_sub(gf, c.get(&[i, j]), c.get(&[j, i]));
            let fb = poisson_bracket_in(l, &center, &f.apply(zi), &f.apply(zj))?;
            let bf = f.apply(&poisson_bracket_in(l, &center, zi, zj)?);
            let rhs = vec_sub(gf, &fb, &bf);
            if anti != rhs {
                identity_holds = false;
            }
            if !vec_is_zero(gf, &anti) {
                symmetric = false;
            }
            if fb != bf {
                bracket_preserved = false;
                if mismatch.is_none() {
                    mismatch = Some(BracketMismatch {
                        i,
                        j,
                        lhs: fb.clone(),
                        rhs: bf.clone(),
                    });
                }
            }
        }
    }
    Ok(AntisymReport {
        identity_holds,
        symmetric,
        bracket_preserved,
        mismatch,
    })
}

// ---------------------------------------------------------------------------
// square-zero extensions
// ---------------------------------------------------------------------------

/// Builds `E = Z ⊕ M` with product
/// `(a, m)·(b, n) = (ab, a·n + m·b + φ(a⊗b))`.
///
/// `Z` must be commutative and `M` diagonal over it; `E` is associative
/// exactly when `φ` is a 2-cocycle and commutative exactly when `φ` is
/// symmetric, both judged afterwards by `validate`. The candidate unit is
/// `(1_Z, 0)`.
pub fn build_square_zero_extension(space: &CochainSpace, phi: &Cochain) -> Result<AlgebraSC<Gf>> {
    let gf = space.gf();
    if phi.degree != 2 || phi.base_dim != space.base_dim() || phi.value_dim != space.value_dim() {
        return Err(Error::DimensionMismatch("need a degree-2 cochain over this complex".into()));
    }
    if !space.base.validate().commutative {
        return Err(Error::NotCommutative);
    }
    let embedded = Subspace::from_spanning(gf, space.value_dim(), &space.embed);
    if !space.module.is_b_diagonal(&embedded) {
        return Err(Error::NotDiagonal);
    }
    let zd = space.base_dim();
    let md = space.value_dim();
    let dim = zd + md;
    let mut entries = Vec::new();
    for i in 0..zd {
        for j in 0..zd {
            let mut val: Vec<(usize, GfElem)> =
                space.base.sc(i, j).to_vec();
            for (k, &cphi) in phi.get(&[i, j]).iter().enumerate() {
                if !gf.is_zero(cphi) {
                    val.push((zd + k, cphi));
                }
            }
            entries.push((i, j, val));
        }
    }
    for i in 0..zd {
        for j in 0..md {
            let an = space.module.act_left(&space.embed[i], &basis_of(gf, md, j));
            entries.push((
                i,
                zd + j,
                an.iter()
                    .enumerate()
                    .filter(|(_, c)| !gf.is_zero(**c))
                    .map(|(k, &c)| (zd + k, c))
                    .collect(),
            ));
            let mb = space.module.act_right(&basis_of(gf, md, j), &space.embed[i]);
            entries.push((
                zd + j,
                i,
                mb.iter()
                    .enumerate()
                    .filter(|(_, c)| !gf.is_zero(**c))
                    .map(|(k, &c)| (zd + k, c))
                    .collect(),
            ));
        }
    }
    let mut unit = vec![gf.zero(); dim];
    for (i, &c) in space.base.unit().iter().enumerate() {
        unit[i] = c;
    }
    AlgebraSC::new_unchecked(gf, dim, entries, unit)
}

fn basis_of(gf: Gf, dim: usize, i: usize) -> Vec<GfElem> {
    let mut v = vec![gf.zero(); dim];
    v[i] = gf.one();
    v
}

/// Result of [`symmetric_coboundary_check`].
#[derive(Clone, Debug)]
pub enum SymmetricSolveOutcome {
    /// A primitive `h` with `δ¹h = φ`; equivalently `η = −h` satisfies
    /// `φ(a⊗b) = η(ab) − a·η(b) − η(a)·b` (re-verified).
    Solved { h: Cochain },
    /// No primitive exists. `expectation_violated` is set when the caller
    /// asserted formal smoothness of the base, under which a symmetric
    /// cocycle is guaranteed to be a coboundary.
    Infeasible {
        row: usize,
        witness: Vec<GfElem>,
        expectation_violated: bool,
    },
}

/// Attempts to write a symmetric 2-cocycle as a coboundary; the solve is
/// unconditional ground truth, the `assert_formally_smooth` flag only drives
/// the expectation flag in the outcome.
pub fn symmetric_coboundary_check(
    space: &CochainSpace,
    phi: &Cochain,
    assert_formally_smooth: bool,
) -> Result<SymmetricSolveOutcome> {
    if phi.degree != 2 {
        return Err(Error::DegreeOutOfRange(phi.degree));
    }
    if !phi.is_symmetric() {
        return Err(Error::Domain("expected a symmetric 2-cochain".into()));
    }
    if !space.base.validate().commutative {
        return Err(Error::NotCommutative);
    }
    match space.coboundary_solve(phi)? {
        CoboundaryOutcome::Solved(h) => {
            // re-verify the section relation with η = −h on all basis pairs
            let gf = space.gf();
            for i in 0..space.base_dim() {
                for j in 0..space.base_dim() {
                    let mut eta_ab = space.zero_cochain(0);
                    let _ = &mut eta_ab;
                    let ab = space.base.basis_product(i, j);
                    // η(ab) − a·η(b) − η(a)·b with η = −h
                    let h_ab: Vec<GfElem> = {
                        let mut acc = vec![gf.zero(); space.value_dim()];
                        for (k, &c) in ab.iter().enumerate() {
                            if !gf.is_zero(c) {
                                for (a, &v) in acc.iter_mut().zip(h.get(&[k])) {
                                    *a = gf.add(*a, gf.mul(c, v));
                                }
                            }
                        }
                        acc
                    };
                    let a_hb = space.module.act_left(&space.embed[i], h.get(&[j]));
                    let ha_b = space.module.act_right(h.get(&[i]), &space.embed[j]);
                    // η = −h: η(ab) − a·η(b) − η(a)·b = −h(ab) + a·h(b) + h(a)·b
                    let mut rel = vec_sub(gf, &a_hb, &h_ab);
                    rel = crate::linalg::vec_add(gf, &rel, &ha_b);
                    if rel.as_slice() != phi.get(&[i, j]) {
                        return Err(Error::Internal("primitive failed the section relation".into()));
                    }
                }
            }
            Ok(SymmetricSolveOutcome::Solved { h })
        }
        CoboundaryOutcome::Infeasible { row, witness } => Ok(SymmetricSolveOutcome::Infeasible {
            row,
            witness,
            expectation_violated: assert_formally_smooth,
        }),
    }
}

// ---------------------------------------------------------------------------
// the log-symplectic deformation family
// ---------------------------------------------------------------------------

/// The built-in deformation of `F_q[x,y]/(x^nx, y^ny)` over the dual
/// numbers: `a ⋆ b = ab + ε·xy·(∂_x a ∂_y b − ∂_y a ∂_x b)`.
///
/// On basis monomials both the plain product and the bracket term share the
/// exponent vector, so the deformation descends to the quotient; the flat
/// lift validator re-verifies associativity over `R` rather than assuming
/// it.
pub fn log_symplectic_lift(gf: Gf, nx: u32, ny: u32) -> Result<(FlatLift, MonomialBasis)> {
    if nx < 1 || ny < 1 {
        return Err(Error::Domain("exponent caps must be positive".into()));
    }
    let (base, basis) = truncated_polynomial(gf, 2, &[vec![nx, 0], vec![0, ny]])?;
    let ring = TruncRing::dual(gf);
    let dim = base.dim();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let (a1, b1) = (basis.monomials[i][0], basis.monomials[i][1]);
            let (a2, b2) = (basis.monomials[j][0], basis.monomials[j][1]);
            let sum = vec![a1 + a2, b1 + b2];
            if let Some(k) = basis.reduce(&sum) {
                // xy·Jacobian of two monomials has the same exponent vector
                // as their product, with coefficient a1·b2 − b1·a2
                let jac = gf.sub(
                    gf.mul(gf.from_u64(a1 as u64), gf.from_u64(b2 as u64)),
                    gf.mul(gf.from_u64(b1 as u64), gf.from_u64(a2 as u64)),
                );
                entries.push((i, j, vec![(k, TruncElem::Dual(gf.one(), jac))]));
            }
        }
    }
    let mut unit = vec![ring.zero(); dim];
    unit[basis.index_of(&vec![0, 0]).expect("constant monomial")] = ring.one();
    let lift_alg = AlgebraSC::new_unchecked(ring, dim, entries, unit)?;
    let flat = FlatLift::new(base, lift_alg)?;
    Ok((flat, basis))
}

/// The constant lift of an algebra: same structure constants through the
/// canonical section. Over dual numbers this is the trivial deformation;
/// over `Z/p²` the section of each coefficient.
pub fn constant_lift(base: &AlgebraSC<Gf>, ring: TruncRing) -> Result<FlatLift> {
    if ring.residue_field() != base.gf() {
        return Err(Error::NotALift(
            "residue field of the ring differs from the base field".into(),
        ));
    }
    let dim = base.dim();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let val: Vec<(usize, TruncElem)> = base
                .sc(i, j)
                .iter()
                .map(|&(k, c)| (k, ring.section(c)))
                .collect();
            entries.push((i, j, val));
        }
    }
    let unit = base.unit().iter().map(|&c| ring.section(c)).collect();
    let lift_alg = AlgebraSC::new_unchecked(ring, dim, entries, unit)?;
    FlatLift::new(base.clone(), lift_alg)
}
