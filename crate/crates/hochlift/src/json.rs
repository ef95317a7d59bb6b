//! JSON wire formats.
//!
//! Coefficient descriptors:
//! `{"field": {"p": 2, "m": 2, "modulus": [1,1,1]}}` (modulus low-to-high,
//! required for `m > 1`) and `{"ring": {"kind": "zp2", "p": 2}}` or
//! `{"ring": {"kind": "dual", "field": {...}}}`.
//!
//! Algebras: `{"dim": n, "coeffs": <descriptor>, "unit": [..],
//! "sc": [{"i": 0, "j": 1, "val": [[k, c], ..]}, ..]}` with zero products
//! omitted. Endomorphisms: `{"matrix": [[..], ..]}`, column `j` = image of
//! `e_j`. Cochains: `{"degree": n, "tensor": [{"idx": [i,j], "val": [..]},
//! ..]}` with zero entries omitted. Flat lifts: `{"base": <algebra>,
//! "lift": <algebra>}`.
//!
//! Weyl elements: `{"n": 1, "p": 2, "terms": [{"x": [3], "d": [4], "c": 1},
//! ..]}` with an optional `"modulus"` of `p²` for lifted elements;
//! endomorphisms: `{"images_x": [..], "images_d": [..]}`.
//!
//! Scalars are numbers over prime fields and `Z/p²`, arrays of `m` numbers
//! over `F_{p^m}`, and two-element arrays `[a0, a1]` over dual numbers; a
//! bare number is accepted anywhere and embedded as a constant.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraSC, LinMap, Subspace};
use crate::coeff::{Gf, GfElem, Ring, TruncElem, TruncRing};
use crate::error::{Error, Result};
use crate::hochschild::Cochain;
use crate::lift::{AntisymReport, FlatLift, LiftDecision};
use crate::weyl::{BracketConstants, CenterPoly, WeylElem, WeylEndo, WeylSig};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{what} must be a nonnegative integer")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    Ok(as_u64(v, what)? as usize)
}

fn field_member<'a>(v: &'a Value, key: &str, what: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("{what} is missing \"{key}\"")))
}

// ---------------------------------------------------------------------------
// coefficient descriptors
// ---------------------------------------------------------------------------

pub fn field_to_json(gf: &Gf) -> Value {
    if gf.degree() == 1 {
        json!({"p": gf.p(), "m": 1})
    } else {
        json!({"p": gf.p(), "m": gf.degree(), "modulus": gf.modulus()})
    }
}

pub fn field_from_json(v: &Value) -> Result<Gf> {
    let p = as_u64(field_member(v, "p", "field descriptor")?, "p")?;
    let m = match v.get("m") {
        Some(mv) => as_usize(mv, "m")?,
        None => 1,
    };
    if m == 1 {
        Gf::prime(p)
    } else {
        let modulus = field_member(v, "modulus", "extension field descriptor")?
            .as_array()
            .ok_or_else(|| bad("modulus must be an array"))?
            .iter()
            .map(|c| as_u64(c, "modulus coefficient"))
            .collect::<Result<Vec<_>>>()?;
        if modulus.len() != m + 1 {
            return Err(bad("modulus must have m+1 coefficients (low to high)"));
        }
        Gf::extension(p, &modulus)
    }
}

pub fn ring_to_json(r: &TruncRing) -> Value {
    match r {
        TruncRing::Zp2 { p } => json!({"kind": "zp2", "p": p}),
        TruncRing::Dual { field } => json!({"kind": "dual", "field": field_to_json(field)}),
    }
}

pub fn ring_from_json(v: &Value) -> Result<TruncRing> {
    let kind = field_member(v, "kind", "ring descriptor")?
        .as_str()
        .ok_or_else(|| bad("ring kind must be a string"))?;
    match kind {
        "zp2" => TruncRing::zp2(as_u64(field_member(v, "p", "zp2 descriptor")?, "p")?),
        "dual" => Ok(TruncRing::dual(field_from_json(field_member(
            v, "field", "dual descriptor",
        )?)?)),
        other => Err(bad(format!("unknown ring kind {other:?}"))),
    }
}

/// Either coefficient domain, as it appears under an algebra's `"coeffs"`.
#[derive(Clone, Copy, Debug)]
pub enum Coefficients {
    Field(Gf),
    Ring(TruncRing),
}

pub fn coeffs_to_json(c: &Coefficients) -> Value {
    match c {
        Coefficients::Field(gf) => json!({"field": field_to_json(gf)}),
        Coefficients::Ring(r) => json!({"ring": ring_to_json(r)}),
    }
}

pub fn coeffs_from_json(v: &Value) -> Result<Coefficients> {
    if let Some(fv) = v.get("field") {
        return Ok(Coefficients::Field(field_from_json(fv)?));
    }
    if let Some(rv) = v.get("ring") {
        return Ok(Coefficients::Ring(ring_from_json(rv)?));
    }
    Err(bad("coefficient descriptor needs \"field\" or \"ring\""))
}

// ---------------------------------------------------------------------------
// scalars
// ---------------------------------------------------------------------------

/// Ring-aware scalar (de)serialization.
pub trait JsonRing: Ring {
    fn elem_to_json(&self, e: Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn descriptor(&self) -> Coefficients;
}

impl JsonRing for Gf {
    fn elem_to_json(&self, e: GfElem) -> Value {
        if self.degree() == 1 {
            json!(self.coords(&e)[0])
        } else {
            json!(self.coords(&e))
        }
    }

    fn elem_from_json(&self, v: &Value) -> Result<GfElem> {
        if let Some(n) = v.as_u64() {
            return Ok(self.from_u64(n));
        }
        if let Some(n) = v.as_i64() {
            return Ok(self.from_i64(n));
        }
        let arr = v
            .as_array()
            .ok_or_else(|| bad("field element must be a number or coordinate array"))?;
        if arr.len() > self.degree() {
            return Err(bad(format!(
                "too many coordinates for a degree-{} field element",
                self.degree()
            )));
        }
        let coords = arr
            .iter()
            .map(|c| as_u64(c, "field element coordinate"))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.elem(&coords))
    }

    fn descriptor(&self) -> Coefficients {
        Coefficients::Field(*self)
    }
}

impl JsonRing for TruncRing {
    fn elem_to_json(&self, e: TruncElem) -> Value {
        match (self, e) {
            (TruncRing::Zp2 { .. }, TruncElem::Zp2(v)) => json!(v),
            (TruncRing::Dual { field }, TruncElem::Dual(a0, a1)) => {
                json!([field.elem_to_json(a0), field.elem_to_json(a1)])
            }
            _ => unreachable!("ring/element mismatch"),
        }
    }

    fn elem_from_json(&self, v: &Value) -> Result<TruncElem> {
        match self {
            TruncRing::Zp2 { p } => {
                if let Some(n) = v.as_u64() {
                    let q = p * p;
                    return Ok(TruncElem::Zp2(n % q));
                }
                if let Some(n) = v.as_i64() {
                    let q = (p * p) as i64;
                    return Ok(TruncElem::Zp2(n.rem_euclid(q) as u64));
                }
                Err(bad("Z/p² element must be a number"))
            }
            TruncRing::Dual { field } => {
                if v.is_number() {
                    return Ok(self.section(field.elem_from_json(v)?));
                }
                let arr = v
                    .as_array()
                    .ok_or_else(|| bad("dual-number element must be a number or a pair"))?;
                if arr.len() != 2 {
                    return Err(bad("dual-number element must be a pair [a0, a1]"));
                }
                Ok(TruncElem::Dual(
                    field.elem_from_json(&arr[0])?,
                    field.elem_from_json(&arr[1])?,
                ))
            }
        }
    }

    fn descriptor(&self) -> Coefficients {
        Coefficients::Ring(*self)
    }
}

// ---------------------------------------------------------------------------
// algebras, maps, cochains
// ---------------------------------------------------------------------------

pub fn algebra_to_json<R: JsonRing>(a: &AlgebraSC<R>) -> Value {
    let ring = a.ring();
    let mut sc = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let entries = a.sc(i, j);
            if entries.is_empty() {
                continue;
            }
            let val: Vec<Value> = entries
                .iter()
                .map(|&(k, c)| json!([k, ring.elem_to_json(c)]))
                .collect();
            sc.push(json!({"i": i, "j": j, "val": val}));
        }
    }
    json!({
        "dim": a.dim(),
        "coeffs": coeffs_to_json(&ring.descriptor()),
        "unit": a.unit().iter().map(|&c| ring.elem_to_json(c)).collect::<Vec<_>>(),
        "sc": sc,
    })
}

fn algebra_body_from_json<R: JsonRing>(ring: R, v: &Value) -> Result<AlgebraSC<R>> {
    let dim = as_usize(field_member(v, "dim", "algebra")?, "dim")?;
    let unit = field_member(v, "unit", "algebra")?
        .as_array()
        .ok_or_else(|| bad("unit must be an array"))?
        .iter()
        .map(|c| ring.elem_from_json(c))
        .collect::<Result<Vec<_>>>()?;
    let sc_entries = field_member(v, "sc", "algebra")?
        .as_array()
        .ok_or_else(|| bad("sc must be an array"))?;
    let mut entries = Vec::with_capacity(sc_entries.len());
    for e in sc_entries {
        let i = as_usize(field_member(e, "i", "sc entry")?, "i")?;
        let j = as_usize(field_member(e, "j", "sc entry")?, "j")?;
        let val = field_member(e, "val", "sc entry")?
            .as_array()
            .ok_or_else(|| bad("sc val must be an array"))?
            .iter()
            .map(|pair| {
                let pair = pair
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| bad("sc val entries must be [index, coeff] pairs"))?;
                Ok((as_usize(&pair[0], "sc index")?, ring.elem_from_json(&pair[1])?))
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push((i, j, val));
    }
    AlgebraSC::new_unchecked(ring, dim, entries, unit)
}

/// An algebra over either coefficient domain, as parsed from JSON.
pub enum ParsedAlgebra {
    Field(AlgebraSC<Gf>),
    Ring(AlgebraSC<TruncRing>),
}

pub fn algebra_from_json(v: &Value) -> Result<ParsedAlgebra> {
    match coeffs_from_json(field_member(v, "coeffs", "algebra")?)? {
        Coefficients::Field(gf) => Ok(ParsedAlgebra::Field(algebra_body_from_json(gf, v)?)),
        Coefficients::Ring(r) => Ok(ParsedAlgebra::Ring(algebra_body_from_json(r, v)?)),
    }
}

pub fn field_algebra_from_json(v: &Value) -> Result<AlgebraSC<Gf>> {
    match algebra_from_json(v)? {
        ParsedAlgebra::Field(a) => Ok(a),
        ParsedAlgebra::Ring(_) => Err(bad("expected an algebra over a field")),
    }
}

pub fn lin_map_to_json<R: JsonRing>(m: &LinMap<R>) -> Value {
    let ring = m.ring;
    let rows: Vec<Vec<Value>> = m
        .rows()
        .into_iter()
        .map(|row| row.into_iter().map(|c| ring.elem_to_json(c)).collect())
        .collect();
    json!({"matrix": rows})
}

pub fn lin_map_from_json<R: JsonRing>(ring: R, v: &Value) -> Result<LinMap<R>> {
    let rows = field_member(v, "matrix", "endomorphism")?
        .as_array()
        .ok_or_else(|| bad("matrix must be an array of rows"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("matrix rows must be arrays"))?
                .iter()
                .map(|c| ring.elem_from_json(c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_rows(ring, &rows)
}

pub fn cochain_to_json(gf: Gf, c: &Cochain) -> Value {
    let mut tensor = Vec::new();
    for (idx, val) in c.entries() {
        if val.iter().all(|&x| gf.is_zero(x)) {
            continue;
        }
        tensor.push(json!({
            "idx": idx,
            "val": val.iter().map(|&x| gf.elem_to_json(x)).collect::<Vec<_>>(),
        }));
    }
    json!({"degree": c.degree, "tensor": tensor})
}

pub fn cochain_from_json(gf: Gf, base_dim: usize, value_dim: usize, v: &Value) -> Result<Cochain> {
    let degree = as_usize(field_member(v, "degree", "cochain")?, "degree")?;
    if degree > 3 {
        return Err(bad("cochain degree must be at most 3"));
    }
    let mut c = Cochain::zero(gf, degree, base_dim, value_dim);
    for entry in field_member(v, "tensor", "cochain")?
        .as_array()
        .ok_or_else(|| bad("tensor must be an array"))?
    {
        let idx = field_member(entry, "idx", "tensor entry")?
            .as_array()
            .ok_or_else(|| bad("idx must be an array"))?
            .iter()
            .map(|i| as_usize(i, "tensor index"))
            .collect::<Result<Vec<_>>>()?;
        if idx.len() != degree || idx.iter().any(|&i| i >= base_dim) {
            return Err(bad("tensor index has wrong arity or out-of-range entry"));
        }
        let val = field_member(entry, "val", "tensor entry")?
            .as_array()
            .ok_or_else(|| bad("val must be an array"))?
            .iter()
            .map(|x| gf.elem_from_json(x))
            .collect::<Result<Vec<_>>>()?;
        if val.len() != value_dim {
            return Err(bad("tensor value has wrong length"));
        }
        c.set(&idx, val);
    }
    Ok(c)
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    let gf = s.gf;
    json!({
        "dim": s.dim(),
        "basis": s
            .basis()
            .iter()
            .map(|v| v.iter().map(|&x| gf.elem_to_json(x)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// flat lifts and decisions
// ---------------------------------------------------------------------------

pub fn flat_lift_to_json(l: &FlatLift) -> Value {
    json!({
        "base": algebra_to_json(l.base()),
        "lift": algebra_to_json(l.lift()),
    })
}

pub fn flat_lift_from_json(v: &Value) -> Result<FlatLift> {
    let base = field_algebra_from_json(field_member(v, "base", "flat lift")?)?;
    let lift = match algebra_from_json(field_member(v, "lift", "flat lift")?)? {
        ParsedAlgebra::Ring(a) => a,
        ParsedAlgebra::Field(_) => {
            return Err(bad("the lifted algebra must be over a truncation ring"))
        }
    };
    FlatLift::new(base, lift)
}

/// The value of `"poisson_preserved"` in a decision report.
pub fn poisson_preserved_value(report: Result<AntisymReport>) -> Value {
    match report {
        Ok(rep) => json!(rep.bracket_preserved),
        Err(Error::CenterNotPreserved) => json!("center-not-preserved"),
        Err(_) => Value::Null,
    }
}

/// The decision report:
/// `{"liftable", "lift_matrix", "obstruction", "poisson_preserved"}`.
pub fn decision_to_json(l: &FlatLift, f: &LinMap<Gf>, d: &LiftDecision) -> Value {
    let gf = l.gf();
    let poisson = poisson_preserved_value(crate::lift::antisym_check(l, f));
    match d {
        LiftDecision::Lifts { corrected, .. } => json!({
            "liftable": true,
            "lift_matrix": lin_map_to_json(corrected)["matrix"],
            "obstruction": Value::Null,
            "poisson_preserved": poisson,
        }),
        LiftDecision::Obstructed { cocycle, row, witness } => json!({
            "liftable": false,
            "lift_matrix": Value::Null,
            "obstruction": cochain_to_json(gf, cocycle),
            "infeasible_row": row,
            "infeasibility_witness": witness
                .iter()
                .map(|&x| gf.elem_to_json(x))
                .collect::<Vec<_>>(),
            "poisson_preserved": poisson,
        }),
    }
}

// ---------------------------------------------------------------------------
// Weyl elements
// ---------------------------------------------------------------------------

pub fn weyl_elem_to_json(w: &WeylElem) -> Value {
    let mut terms = Vec::new();
    for (m, c) in w.terms() {
        terms.push(json!({"x": m.xs, "d": m.ds, "c": c}));
    }
    let mut obj = Map::new();
    obj.insert("n".into(), json!(w.sig.n));
    obj.insert("p".into(), json!(w.sig.p));
    if w.sig.q != w.sig.p {
        obj.insert("modulus".into(), json!(w.sig.q));
    }
    obj.insert("terms".into(), json!(terms));
    Value::Object(obj)
}

pub fn weyl_elem_from_json(v: &Value) -> Result<WeylElem> {
    let n = as_usize(field_member(v, "n", "Weyl element")?, "n")?;
    let p = as_u64(field_member(v, "p", "Weyl element")?, "p")?;
    let sig = match v.get("modulus") {
        None => WeylSig::fp(n, p),
        Some(m) => {
            let q = as_u64(m, "modulus")?;
            if q == p {
                WeylSig::fp(n, p)
            } else if q == p * p {
                WeylSig::zp2(n, p)
            } else {
                return Err(bad("modulus must be p or p²"));
            }
        }
    };
    crate::coeff::Gf::prime(p)?;
    let mut w = WeylElem::zero(sig);
    for t in field_member(v, "terms", "Weyl element")?
        .as_array()
        .ok_or_else(|| bad("terms must be an array"))?
    {
        let xs = field_member(t, "x", "Weyl term")?
            .as_array()
            .ok_or_else(|| bad("x exponents must be an array"))?
            .iter()
            .map(|e| Ok(as_u64(e, "exponent")? as u32))
            .collect::<Result<Vec<_>>>()?;
        let ds = field_member(t, "d", "Weyl term")?
            .as_array()
            .ok_or_else(|| bad("d exponents must be an array"))?
            .iter()
            .map(|e| Ok(as_u64(e, "exponent")? as u32))
            .collect::<Result<Vec<_>>>()?;
        let c = as_u64(field_member(t, "c", "Weyl term")?, "coefficient")?;
        w = w.add(&WeylElem::monomial(sig, xs, ds, c)?)?;
    }
    Ok(w)
}

pub fn weyl_endo_to_json(f: &WeylEndo) -> Value {
    json!({
        "images_x": f.images_x.iter().map(weyl_elem_to_json).collect::<Vec<_>>(),
        "images_d": f.images_d.iter().map(weyl_elem_to_json).collect::<Vec<_>>(),
    })
}

pub fn weyl_endo_from_json(v: &Value) -> Result<WeylEndo> {
    let images_x = field_member(v, "images_x", "Weyl endomorphism")?
        .as_array()
        .ok_or_else(|| bad("images_x must be an array"))?
        .iter()
        .map(weyl_elem_from_json)
        .collect::<Result<Vec<_>>>()?;
    let images_d = field_member(v, "images_d", "Weyl endomorphism")?
        .as_array()
        .ok_or_else(|| bad("images_d must be an array"))?
        .iter()
        .map(weyl_elem_from_json)
        .collect::<Result<Vec<_>>>()?;
    WeylEndo::new(images_x, images_d)
}

pub fn center_poly_to_json(p: &CenterPoly) -> Value {
    let n = p.n;
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"X": &m[..n], "D": &m[n..], "c": c}))
        .collect();
    json!({"n": n, "p": p.p, "terms": terms, "display": p.to_string()})
}

pub fn bracket_constants_to_json(b: &BracketConstants) -> Value {
    json!({
        "p": b.p,
        "n": b.n,
        "x_d": b.x_d,
        "x_x": b.x_x,
        "d_d": b.d_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, truncated_polynomial};
    use crate::lift::log_symplectic_lift;

    #[test]
    fn field_round_trip() {
        for gf in [
            Gf::prime(5).unwrap(),
            Gf::extension(2, &[1, 1, 1]).unwrap(),
            Gf::extension(3, &[1, 0, 1]).unwrap(),
        ] {
            let v = field_to_json(&gf);
            assert_eq!(field_from_json(&v).unwrap(), gf);
        }
    }

    #[test]
    fn ring_round_trip() {
        for r in [
            TruncRing::zp2(3).unwrap(),
            TruncRing::dual(Gf::extension(2, &[1, 1, 1]).unwrap()),
        ] {
            let v = ring_to_json(&r);
            assert_eq!(ring_from_json(&v).unwrap(), r);
        }
    }

    #[test]
    fn algebra_round_trip_over_field_and_ring() {
        let a = matrix_algebra(Gf::prime(3).unwrap(), 2);
        let v = algebra_to_json(&a);
        match algebra_from_json(&v).unwrap() {
            ParsedAlgebra::Field(b) => assert_eq!(a, b),
            _ => panic!("field algebra expected"),
        }

        let r = TruncRing::zp2(3).unwrap();
        let al = matrix_algebra(r, 2);
        let v = algebra_to_json(&al);
        match algebra_from_json(&v).unwrap() {
            ParsedAlgebra::Ring(b) => assert_eq!(al, b),
            _ => panic!("ring algebra expected"),
        }
    }

    #[test]
    fn flat_lift_round_trip() {
        let (l, _) = log_symplectic_lift(Gf::prime(5).unwrap(), 2, 3).unwrap();
        let v = flat_lift_to_json(&l);
        let l2 = flat_lift_from_json(&v).unwrap();
        assert_eq!(l.base(), l2.base());
        assert_eq!(l.lift(), l2.lift());
    }

    #[test]
    fn scalar_parsing_accepts_constants() {
        let f4 = Gf::extension(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.elem_from_json(&json!(1)).unwrap(), f4.one());
        assert_eq!(
            f4.elem_from_json(&json!([0, 1])).unwrap(),
            f4.elem(&[0, 1])
        );
        let dual = TruncRing::dual(f4);
        assert_eq!(dual.elem_from_json(&json!(1)).unwrap(), dual.one());
    }

    #[test]
    fn cochain_round_trip_drops_zeros() {
        let gf = Gf::prime(5).unwrap();
        let (a, _) = truncated_polynomial(gf, 1, &[vec![2]]).unwrap();
        let mut c = Cochain::zero(gf, 2, a.dim(), a.dim());
        c.set(&[1, 1], a.unit().to_vec());
        let v = cochain_to_json(gf, &c);
        assert_eq!(v["tensor"].as_array().unwrap().len(), 1);
        let c2 = cochain_from_json(gf, a.dim(), a.dim(), &v).unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn weyl_round_trip() {
        let sig = WeylSig::fp(1, 2);
        let w = WeylElem::monomial(sig, vec![3], vec![4], 1)
            .unwrap()
            .add(&WeylElem::gen_d(sig, 0))
            .unwrap();
        let v = weyl_elem_to_json(&w);
        assert_eq!(weyl_elem_from_json(&v).unwrap(), w);

        let f = WeylEndo::new(vec![WeylElem::gen_x(sig, 0)], vec![w]).unwrap();
        let v = weyl_endo_to_json(&f);
        let f2 = weyl_endo_from_json(&v).unwrap();
        assert_eq!(f2.images_x, f.images_x);
        assert_eq!(f2.images_d, f.images_d);

        // a lifted element carries its modulus
        let sig2 = WeylSig::zp2(1, 2);
        let w2 = WeylElem::monomial(sig2, vec![0], vec![1], 3).unwrap();
        let v = weyl_elem_to_json(&w2);
        assert_eq!(v["modulus"], json!(4));
        assert_eq!(weyl_elem_from_json(&v).unwrap(), w2);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(field_from_json(&json!({"p": 4})).is_err());
        assert!(ring_from_json(&json!({"kind": "w3", "p": 2})).is_err());
        assert!(weyl_elem_from_json(&json!({"n": 1, "p": 2, "modulus": 8, "terms": []})).is_err());
        assert!(cochain_from_json(
            Gf::prime(2).unwrap(),
            2,
            2,
            &json!({"degree": 2, "tensor": [{"idx": [5, 0], "val": [0, 0]}]})
        )
        .is_err());
    }
}
