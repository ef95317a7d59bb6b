//! Curated example algebras and seeded random generators.
//!
//! The deterministic generators here back the self-test suites and the
//! property checks: algebras are drawn from the builder families (matrix
//! algebras, cyclic group algebras, truncated polynomial algebras, and
//! small products), morphisms from compositions of inner automorphisms and
//! power maps, and flat lifts from constant lifts, coboundary-deformed dual
//! lifts, and the log-symplectic family.

use rand::Rng;

use crate::algebra::{
    cyclic_group_algebra, direct_product, matrix_algebra, restrict_scalars, truncated_polynomial,
    AlgebraSC, LinMap,
};
use crate::coeff::{Gf, GfElem, TruncRing};
use crate::error::Result;
use crate::hochschild::{Cochain, CochainSpace};
use crate::lift::FlatLift;

/// `F_4 × Mat_2(F_4)` as a 10-dimensional algebra over `F_2`; its center
/// `F_4 × F_4·I` is 4-dimensional. The scalar block sits at indices 0..2
/// (basis 1, ω) and the matrix block at 2..10 as `E_rc·ω^t` at index
/// `2 + (2r+c)·2 + t`.
pub fn f4_times_mat2_f4() -> AlgebraSC<Gf> {
    let k4 = Gf::extension(2, &[1, 1, 1]).expect("x²+x+1 is irreducible over F_2");
    let scalars = truncated_polynomial(k4, 1, &[vec![1]]).expect("F_4 as an algebra").0;
    let mat = matrix_algebra(k4, 2);
    let (scalars_f2, _) = restrict_scalars(&scalars).expect("restriction to F_2");
    let (mat_f2, _) = restrict_scalars(&mat).expect("restriction to F_2");
    direct_product(&[&scalars_f2, &mat_f2]).expect("product").0
}

/// The unital ring endomorphism `(a, M) ↦ (a, diag(a, a²))` of
/// [`f4_times_mat2_f4`], additive and multiplicative but killing the matrix
/// block. It maps the central element `(ω, 0)` to the non-central
/// `diag(ω, ω²)`.
pub fn frobenius_diag_endo() -> LinMap<Gf> {
    let gf = Gf::prime(2).expect("2 is prime");
    let mut cols = vec![vec![gf.zero(); 10]; 10];
    // 1 ↦ 1 + E11 + E22
    cols[0][0] = gf.one();
    cols[0][2] = gf.one(); // E11·ω⁰
    cols[0][8] = gf.one(); // E22·ω⁰
    // ω ↦ ω + E11·ω + E22·(ω+1), using ω² = ω + 1 in F_4
    cols[1][1] = gf.one();
    cols[1][3] = gf.one(); // E11·ω
    cols[1][8] = gf.one(); // E22·1
    cols[1][9] = gf.one(); // E22·ω
    LinMap::from_cols(gf, &cols).expect("square")
}

/// A random algebra from the builder families with `dim ≤ max_dim`.
pub fn random_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> AlgebraSC<Gf> {
    let p = [2u64, 3, 5][rng.gen_range(0..3)];
    let gf = Gf::prime(p).expect("small prime");
    let mut candidates: Vec<AlgebraSC<Gf>> = Vec::new();
    if max_dim >= 4 {
        candidates.push(matrix_algebra(gf, 2));
    }
    for n in 2..=max_dim.min(6) {
        candidates.push(cyclic_group_algebra(gf, n));
    }
    if max_dim >= 2 {
        candidates.push(truncated_polynomial(gf, 1, &[vec![2]]).expect("valid ideal").0);
    }
    if max_dim >= 3 {
        candidates.push(truncated_polynomial(gf, 1, &[vec![3]]).expect("valid ideal").0);
    }
    if max_dim >= 4 {
        candidates.push(
            truncated_polynomial(gf, 2, &[vec![2, 0], vec![0, 2]]).expect("valid ideal").0,
        );
    }
    if max_dim >= 6 {
        candidates.push(
            truncated_polynomial(gf, 2, &[vec![2, 0], vec![0, 3]]).expect("valid ideal").0,
        );
        let c2 = cyclic_group_algebra(gf, 2);
        let c3 = cyclic_group_algebra(gf, 3);
        candidates.push(direct_product(&[&c2, &c3]).expect("product").0);
    }
    candidates.swap_remove(rng.gen_range(0..candidates.len()))
}

/// A random endomorphism of `a`: identity, an inner automorphism, a power
/// map on a cyclic group algebra, or a composition — always verified to be
/// an algebra morphism before being returned.
pub fn random_morphism<R: Rng>(a: &AlgebraSC<Gf>, rng: &mut R) -> LinMap<Gf> {
    let gf = a.gf();
    let dim = a.dim();
    let mut result = LinMap::identity(gf, dim);
    for _ in 0..rng.gen_range(0..3) {
        // try an inner automorphism by a random invertible element
        let mut u: Vec<GfElem> = (0..dim)
            .map(|_| gf.from_u64(rng.gen_range(0..gf.p())))
            .collect();
        // bias towards invertibility by adding the unit
        for (x, &e) in u.iter_mut().zip(a.unit()) {
            *x = gf.add(*x, e);
        }
        if let Some(u_inv) = a.try_invert(&u) {
            if let Ok(conj) = a.conjugation(&u, &u_inv) {
                if a.is_algebra_morphism(&conj).unwrap_or(false) {
                    result = conj.compose(&result);
                    continue;
                }
            }
        }
        // fall back to a power map candidate: e_i ↦ e_{(i·k) mod dim} only
        // makes sense for cyclic group algebras; verify before use
        let k = rng.gen_range(0..dim);
        let cols: Vec<Vec<GfElem>> = (0..dim).map(|i| a.basis_vec((i * k) % dim)).collect();
        if let Ok(cand) = LinMap::from_cols(gf, &cols) {
            if a.is_algebra_morphism(&cand).unwrap_or(false) {
                result = cand.compose(&result);
            }
        }
    }
    result
}

/// A random flat lift of `a`: the constant lift over `Z/p²` or the dual
/// numbers, or a coboundary-deformed dual lift `sc + ε·δ¹ψ` with `ψ(1) = 0`
/// (which keeps the section of the unit a unit).
pub fn random_flat_lift<R: Rng>(a: &AlgebraSC<Gf>, rng: &mut R) -> Result<FlatLift> {
    let gf = a.gf();
    match rng.gen_range(0..3) {
        0 => crate::lift::constant_lift(a, TruncRing::zp2(gf.p())?),
        1 => crate::lift::constant_lift(a, TruncRing::dual(gf)),
        _ => {
            // deform by the coboundary of a random ψ with ψ(1) = 0
            let space = CochainSpace::full(a, LinMap::identity(gf, a.dim()))?;
            let mut psi = space.zero_cochain(1);
            let unit_support: Vec<usize> = a
                .unit()
                .iter()
                .enumerate()
                .filter(|(_, c)| !gf.is_zero(**c))
                .map(|(i, _)| i)
                .collect();
            for j in 0..a.dim() {
                // zeroing ψ on every basis vector supporting the unit keeps
                // ψ(1) = 0 for the builder families (unit = e_0 there)
                if unit_support.contains(&j) {
                    continue;
                }
                let v: Vec<GfElem> = (0..a.dim())
                    .map(|_| gf.from_u64(rng.gen_range(0..gf.p())))
                    .collect();
                psi.set(&[j], v);
            }
            let phi = space.delta(&psi)?;
            deformed_dual_lift(a, &phi)
        }
    }
}

/// The dual-number lift with structure constants `sc + ε·φ(i⊗j)` for an
/// untwisted 2-cochain `φ`; a flat lift exactly when `φ` is a cocycle with
/// `φ(1,·) = φ(·,1) = 0`, which the validator checks.
pub fn deformed_dual_lift(a: &AlgebraSC<Gf>, phi: &Cochain) -> Result<FlatLift> {
    let gf = a.gf();
    let ring = TruncRing::dual(gf);
    let dim = a.dim();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let plain = a.basis_product(i, j);
            let eps = phi.get(&[i, j]);
            let val: Vec<(usize, crate::coeff::TruncElem)> = (0..dim)
                .filter_map(|k| {
                    if gf.is_zero(plain[k]) && gf.is_zero(eps[k]) {
                        None
                    } else {
                        Some((k, crate::coeff::TruncElem::Dual(plain[k], eps[k])))
                    }
                })
                .collect();
            entries.push((i, j, val));
        }
    }
    let unit = a.unit().iter().map(|&c| ring.section(c)).collect();
    let lift_alg = AlgebraSC::new_unchecked(ring, dim, entries, unit)?;
    FlatLift::new(a.clone(), lift_alg)
}
