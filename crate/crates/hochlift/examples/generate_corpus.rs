//! Regenerates the JSON corpus under `corpus/` at the repository root.
//!
//! The files are committed; this tool exists so they can be rebuilt from
//! the library constructors instead of being edited by hand. Run with
//! `cargo run -p hochlift --example generate_corpus`.

use std::fs;
use std::path::PathBuf;

use hochlift::algebra::{matrix_algebra, monomial_substitution, truncated_polynomial};
use hochlift::coeff::{Gf, TruncRing};
use hochlift::families::{f4_times_mat2_f4, frobenius_diag_endo};
use hochlift::json as hj;
use hochlift::lift::{constant_lift, log_symplectic_lift};
use hochlift::weyl::{bracket_constants, WeylElem, WeylEndo, WeylSig};
use serde_json::{json, Value};

fn write(dir: &PathBuf, name: &str, v: &Value) {
    let path = dir.join(name);
    let mut text = serde_json::to_string_pretty(v).expect("serializable");
    text.push('\n');
    fs::write(&path, text).unwrap_or_else(|e| panic!("writing {}: {e}", path.display()));
    println!("wrote {}", path.display());
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    fs::create_dir_all(&dir).expect("corpus directory");

    let f2 = Gf::prime(2).unwrap();
    let f3 = Gf::prime(3).unwrap();
    let f5 = Gf::prime(5).unwrap();

    // Mat_2(F_3) with its lift Mat_2(Z/9), plus conjugation by [[1,1],[0,1]]
    let mat2 = matrix_algebra(f3, 2);
    let lift = constant_lift(&mat2, TruncRing::zp2(3).unwrap()).unwrap();
    write(&dir, "mat2_f3.json", &hj::flat_lift_to_json(&lift));
    write(&dir, "mat2_f3_algebra.json", &hj::algebra_to_json(&mat2));
    let u = vec![f3.one(), f3.one(), f3.zero(), f3.one()];
    let u_inv = vec![f3.one(), f3.from_i64(-1), f3.zero(), f3.one()];
    let conj = mat2.conjugation(&u, &u_inv).unwrap();
    write(&dir, "conj.json", &hj::lin_map_to_json(&conj));

    // Mat_3(F_2) and a conjugation by I + E12 (self-inverse in char 2)
    let mat3 = matrix_algebra(f2, 3);
    write(&dir, "mat3_f2_algebra.json", &hj::algebra_to_json(&mat3));
    let mut v = mat3.unit().to_vec();
    v[1] = f2.one(); // I + E12
    let conj3 = mat3.conjugation(&v, &v).unwrap();
    write(&dir, "conj3_f2.json", &hj::lin_map_to_json(&conj3));

    // the deformed commutative example over F_5 and its bracket-breaking
    // endomorphism x ↦ x, y ↦ y²
    let (logsymp, basis) = log_symplectic_lift(f5, 2, 3).unwrap();
    write(&dir, "logsymp_5_2_3.json", &hj::flat_lift_to_json(&logsymp));
    let x = logsymp.base().basis_vec(basis.index_of(&[1, 0]).unwrap());
    let ysq = logsymp.base().basis_vec(basis.index_of(&[0, 2]).unwrap());
    let endo = monomial_substitution(logsymp.base(), &basis, &[x, ysq]).unwrap();
    write(&dir, "y_to_ysq.json", &hj::lin_map_to_json(&endo));

    // the product counterexample and its Frobenius-diagonal ring endo
    let prod = f4_times_mat2_f4();
    write(&dir, "f4xmat2.json", &hj::algebra_to_json(&prod));
    write(&dir, "frob_diag.json", &hj::lin_map_to_json(&frobenius_diag_endo()));

    // F_2[x]/(x²): separable over itself, not over F_2
    let (nilp, _) = truncated_polynomial(f2, 1, &[vec![2]]).unwrap();
    write(&dir, "f2x_sq.json", &hj::algebra_to_json(&nilp));

    // Weyl endomorphisms over F_2: the liftable cubic-quartic example and the
    // engine-verified bracket-breaking one
    let sig = WeylSig::fp(1, 2);
    let d_plus = WeylElem::gen_d(sig, 0)
        .add(&WeylElem::monomial(sig, vec![3], vec![4], 1).unwrap())
        .unwrap();
    let p2 = WeylEndo::new(vec![WeylElem::gen_x(sig, 0)], vec![d_plus]).unwrap();
    write(&dir, "p2_example.json", &hj::weyl_endo_to_json(&p2));

    let d_bad = WeylElem::gen_d(sig, 0)
        .add(&WeylElem::monomial(sig, vec![1], vec![2], 1).unwrap())
        .unwrap();
    let nonpres = WeylEndo::new(vec![WeylElem::gen_x(sig, 0)], vec![d_bad]).unwrap();
    write(&dir, "weyl_nonpreserving.json", &hj::weyl_endo_to_json(&nonpres));

    // oracle transcript: bracket constants computed by the normal-ordering
    // engine, committed and compared by the acceptance suite
    let mut transcript = Vec::new();
    for p in [2u64, 3, 5] {
        transcript.push(hj::bracket_constants_to_json(&bracket_constants(p, 1).unwrap()));
    }
    transcript.push(hj::bracket_constants_to_json(&bracket_constants(2, 2).unwrap()));
    write(
        &dir,
        "bracket_constants_transcript.json",
        &json!({"constants": transcript}),
    );
}
