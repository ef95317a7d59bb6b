//! Seeded, deterministic invariant suites.
//!
//! Each suite runs a fixed number of cases from a seed-derived RNG stream
//! and reports its pass/fail state with any failure messages. Identical
//! seeds produce byte-identical reports: all iteration is over ordered
//! structures and the report serializer has a fixed field order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::LinMap;
use crate::coeff::{Gf, TruncRing};
use crate::families::{random_algebra, random_flat_lift, random_morphism};
use crate::hochschild::{Cochain, CochainSpace};
use crate::lift::{
    build_square_zero_extension, defect_cocycle, PoissonCenter,
};
use crate::weyl::{bracket_constants, WeylElem, WeylSig};

#[derive(Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct SelfTestReport {
    pub seed: u64,
    pub all_passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn suite(name: &str, cases: usize, failures: Vec<String>) -> SuiteReport {
    SuiteReport {
        name: name.to_string(),
        cases,
        passed: failures.is_empty(),
        failures,
    }
}

fn coeff_exact_sequence() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut rings = vec![];
    for p in [2u64, 3, 5] {
        rings.push(TruncRing::zp2(p).expect("prime"));
        rings.push(TruncRing::dual(Gf::prime(p).expect("prime")));
    }
    rings.push(TruncRing::dual(Gf::extension(2, &[1, 1, 1]).expect("irreducible")));
    rings.push(TruncRing::dual(Gf::extension(3, &[1, 0, 1]).expect("irreducible")));
    for ring in rings {
        let k = ring.residue_field();
        for x in ring.all_elements() {
            cases += 1;
            if k.is_zero(ring.reduce(x)) {
                let preimages = k
                    .all_elements()
                    .into_iter()
                    .filter(|&a| ring.iota(a) == x)
                    .count();
                if preimages != 1 {
                    failures.push(format!(
                        "{}: kernel element {} has {} iota-preimages",
                        ring,
                        ring.fmt_elem(x),
                        preimages
                    ));
                }
            }
            for y in ring.all_elements() {
                if ring.reduce(ring.mul(x, y)) != k.mul(ring.reduce(x), ring.reduce(y)) {
                    failures.push(format!("{}: reduce not multiplicative", ring));
                }
            }
        }
    }
    suite("coeff-exact-sequence", cases, failures)
}

fn field_axioms() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let fields = vec![
        Gf::prime(2).expect("prime"),
        Gf::prime(3).expect("prime"),
        Gf::prime(5).expect("prime"),
        Gf::extension(2, &[1, 1, 1]).expect("irreducible"),
        Gf::extension(3, &[1, 0, 1]).expect("irreducible"),
        Gf::extension(5, &[2, 0, 1]).expect("irreducible"),
    ];
    for k in fields {
        let elems = k.all_elements();
        for &a in &elems {
            cases += 1;
            if !k.is_zero(a) {
                match k.inv(a) {
                    Some(ai) if k.mul(a, ai) == k.one() => {}
                    _ => failures.push(format!("{k}: bad inverse for {}", k.fmt_elem(a))),
                }
            }
            for &b in &elems {
                for &c in &elems {
                    if k.mul(k.mul(a, b), c) != k.mul(a, k.mul(b, c)) {
                        failures.push(format!("{k}: associativity fails"));
                    }
                    if k.mul(a, k.add(b, c)) != k.add(k.mul(a, b), k.mul(a, c)) {
                        failures.push(format!("{k}: distributivity fails"));
                    }
                }
            }
        }
    }
    suite("field-axioms", cases, failures)
}

fn linalg_rank_nullity(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for &p in &[2u64, 3, 5] {
        let gf = Gf::prime(p).expect("prime");
        for _ in 0..40 {
            cases += 1;
            let rows = rng.gen_range(1..=10);
            let cols = rng.gen_range(1..=10);
            let mut m = crate::linalg::Matrix::zeros(gf, rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m[(i, j)] = gf.from_u64(rng.gen_range(0..p));
                }
            }
            let rank = m.rank();
            let kernel = m.kernel_basis();
            if rank + kernel.len() != cols {
                failures.push(format!("rank {} + nullity {} ≠ {}", rank, kernel.len(), cols));
            }
            for v in &kernel {
                if !crate::linalg::vec_is_zero(gf, &m.mat_vec(v).expect("dims")) {
                    failures.push("kernel vector does not annihilate".into());
                }
            }
        }
    }
    suite("linalg-rank-nullity", cases, failures)
}

fn delta_squared(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for _ in 0..40 {
        let a = random_algebra(rng, 6);
        let gf = a.gf();
        let f = random_morphism(&a, rng);
        let space = match CochainSpace::full(&a, f) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("space construction failed: {e}"));
                continue;
            }
        };
        for deg in 0..=1usize {
            cases += 1;
            let mut c = space.zero_cochain(deg);
            let len = a.dim().pow(deg as u32);
            for t in 0..len {
                let mut tuple = Vec::with_capacity(deg);
                let mut idx = t;
                for _ in 0..deg {
                    tuple.push(idx % a.dim());
                    idx /= a.dim();
                }
                let v: Vec<_> = (0..a.dim())
                    .map(|_| gf.from_u64(rng.gen_range(0..gf.p())))
                    .collect();
                c.set(&tuple, v);
            }
            let dd = space
                .delta(&c)
                .and_then(|dc| space.delta(&dc))
                .map(|ddc| ddc.is_zero(gf));
            if !matches!(dd, Ok(true)) {
                failures.push("δ∘δ ≠ 0".into());
            }
        }
    }
    suite("delta-squared-zero", cases, failures)
}

fn defect_cocycle_law(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for _ in 0..30 {
        let a = random_algebra(rng, 6);
        let gf = a.gf();
        let f = random_morphism(&a, rng);
        let l = match random_flat_lift(&a, rng) {
            Ok(l) => l,
            Err(e) => {
                failures.push(format!("lift construction failed: {e}"));
                continue;
            }
        };
        let mut h = LinMap::zero(gf, a.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                h.set(i, j, gf.from_u64(rng.gen_range(0..gf.p())));
            }
        }
        let f_tilde = l.perturbed_linear_lift(&f, &h);
        cases += 1;
        match defect_cocycle(&l, &f, &f_tilde) {
            Ok(c) => {
                let space = CochainSpace::full(&a, f.clone()).expect("dims");
                if !matches!(space.is_cocycle(&c), Ok(true)) {
                    failures.push("defect is not a cocycle".into());
                }
            }
            Err(e) => failures.push(format!("defect computation failed: {e}")),
        }
    }
    suite("defect-cocycle-law", cases, failures)
}

fn lift_independence(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for _ in 0..20 {
        let a = random_algebra(rng, 6);
        let gf = a.gf();
        let f = random_morphism(&a, rng);
        let l = match random_flat_lift(&a, rng) {
            Ok(l) => l,
            Err(e) => {
                failures.push(format!("lift construction failed: {e}"));
                continue;
            }
        };
        let mut rand_map = || {
            let mut h = LinMap::zero(gf, a.dim());
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    h.set(i, j, gf.from_u64(rng.gen_range(0..gf.p())));
                }
            }
            h
        };
        let h1 = rand_map();
        let h2 = rand_map();
        cases += 1;
        let c1 = defect_cocycle(&l, &f, &l.perturbed_linear_lift(&f, &h1));
        let c2 = defect_cocycle(&l, &f, &l.perturbed_linear_lift(&f, &h2));
        match (c1, c2) {
            (Ok(c1), Ok(c2)) => {
                let space = CochainSpace::full(&a, f.clone()).expect("dims");
                let expected = space
                    .delta(&Cochain::from_linmap(&h2.sub(&h1)))
                    .expect("degree in range");
                if c2.sub(gf, &c1) != expected {
                    failures.push("cocycle difference is not δ of the lift difference".into());
                }
            }
            _ => failures.push("defect computation failed".into()),
        }
    }
    suite("lift-independence", cases, failures)
}

fn poisson_axioms(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut lifts = vec![
        crate::lift::log_symplectic_lift(Gf::prime(5).expect("prime"), 2, 3)
            .expect("family")
            .0,
        crate::lift::log_symplectic_lift(Gf::prime(3).expect("prime"), 2, 2)
            .expect("family")
            .0,
    ];
    for _ in 0..6 {
        let a = random_algebra(rng, 6);
        if let Ok(l) = random_flat_lift(&a, rng) {
            lifts.push(l);
        }
    }
    for l in &lifts {
        cases += 1;
        match PoissonCenter::new(l) {
            Ok(pc) => {
                if !matches!(pc.antisymmetric(l), Ok(true)) {
                    failures.push("antisymmetry fails".into());
                }
                if !matches!(pc.jacobi(l), Ok(true)) {
                    failures.push("Jacobi fails".into());
                }
                if !matches!(pc.leibniz(l), Ok(true)) {
                    failures.push("Leibniz fails".into());
                }
            }
            Err(e) => failures.push(format!("bracket table failed: {e}")),
        }
    }
    suite("poisson-axioms", cases, failures)
}

fn weyl_associativity(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for &p in &[2u64, 3, 5] {
        for sig in [WeylSig::fp(1, p), WeylSig::zp2(1, p)] {
            for _ in 0..20 {
                cases += 1;
                let mut rand_elem = || {
                    let mut e = WeylElem::zero(sig);
                    for _ in 0..rng.gen_range(1..4) {
                        let xs = vec![rng.gen_range(0..4u32)];
                        let ds = vec![rng.gen_range(0..4u32)];
                        let c = rng.gen_range(1..sig.q);
                        e = e
                            .add(&WeylElem::monomial(sig, xs, ds, c).expect("arity"))
                            .expect("signature");
                    }
                    e
                };
                let a = rand_elem();
                let b = rand_elem();
                let c = rand_elem();
                let lhs = a.mul(&b).and_then(|ab| ab.mul(&c));
                let rhs = b.mul(&c).and_then(|bc| a.mul(&bc));
                if lhs.ok() != rhs.ok() {
                    failures.push(format!("associativity fails over q={}", sig.q));
                }
            }
        }
    }
    suite("weyl-associativity", cases, failures)
}

fn weyl_bracket_constants() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for &p in &[2u64, 3, 5] {
        cases += 1;
        match bracket_constants(p, 1) {
            Ok(c) => {
                if c.x_d[0][0] != 1 || c.x_x[0][0] != 0 || c.d_d[0][0] != 0 {
                    failures.push(format!("unexpected constants for p={p}"));
                }
            }
            Err(e) => failures.push(format!("constants failed for p={p}: {e}")),
        }
    }
    match bracket_constants(2, 2) {
        Ok(c) => {
            cases += 1;
            if c.x_d[0][1] != 0 || c.x_d[1][0] != 0 {
                failures.push("cross-pair brackets must vanish".into());
            }
        }
        Err(e) => failures.push(format!("n=2 constants failed: {e}")),
    }
    suite("weyl-bracket-constants", cases, failures)
}

fn square_zero_truth_table(rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for _ in 0..30 {
        // commutative bases of dimension ≤ 4 with the identity twist
        let gf = Gf::prime([2u64, 3, 5][rng.gen_range(0..3)]).expect("prime");
        let (z, _) = match rng.gen_range(0..3) {
            0 => crate::algebra::truncated_polynomial(gf, 1, &[vec![2]]).expect("ideal"),
            1 => crate::algebra::truncated_polynomial(gf, 1, &[vec![4]]).expect("ideal"),
            _ => crate::algebra::truncated_polynomial(gf, 2, &[vec![2, 0], vec![0, 2]])
                .expect("ideal"),
        };
        let space = CochainSpace::full(&z, LinMap::identity(gf, z.dim())).expect("dims");
        let mut phi = space.zero_cochain(2);
        for i in 0..z.dim() {
            for j in 0..z.dim() {
                let v: Vec<_> = (0..z.dim())
                    .map(|_| gf.from_u64(rng.gen_range(0..gf.p())))
                    .collect();
                phi.set(&[i, j], v);
            }
        }
        // half the time, symmetrize towards the commutative corner
        if rng.gen_bool(0.5) {
            let mut sym = space.zero_cochain(2);
            for i in 0..z.dim() {
                for j in 0..z.dim() {
                    sym.set(&[i, j], phi.get(&[j.min(i), j.max(i)]).to_vec());
                }
            }
            phi = sym;
        }
        cases += 1;
        let is_cocycle = space.is_cocycle(&phi).expect("degree in range");
        let symmetric = phi.is_symmetric();
        match build_square_zero_extension(&space, &phi) {
            Ok(e) => {
                let rep = e.validate();
                if rep.associative != is_cocycle {
                    failures.push("associativity ⇎ cocycle".into());
                }
                if rep.commutative != symmetric {
                    failures.push("commutativity ⇎ symmetry".into());
                }
            }
            Err(e) => failures.push(format!("extension construction failed: {e}")),
        }
    }
    suite("square-zero-extension", cases, failures)
}

/// Runs every suite from one seed.
pub fn run(seed: u64) -> SelfTestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suites = vec![
        coeff_exact_sequence(),
        field_axioms(),
        linalg_rank_nullity(&mut rng),
        delta_squared(&mut rng),
        defect_cocycle_law(&mut rng),
        lift_independence(&mut rng),
        poisson_axioms(&mut rng),
        weyl_associativity(&mut rng),
        weyl_bracket_constants(),
        square_zero_truth_table(&mut rng),
    ];
    SelfTestReport {
        seed,
        all_passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
