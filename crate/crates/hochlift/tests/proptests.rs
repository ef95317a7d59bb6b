//! Property tests for the arithmetic substrate.

use proptest::prelude::*;

use hochlift::coeff::{Gf, TruncRing};
use hochlift::linalg::Matrix;
use hochlift::weyl::{WeylElem, WeylSig};

fn small_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)]
}

fn field() -> impl Strategy<Value = Gf> {
    prop_oneof![
        small_prime().prop_map(|p| Gf::prime(p).unwrap()),
        Just(Gf::extension(2, &[1, 1, 1]).unwrap()),
        Just(Gf::extension(3, &[1, 0, 1]).unwrap()),
    ]
}

proptest! {
    #[test]
    fn field_ring_axioms(gf in field(), seeds in proptest::collection::vec(0u64..10_000, 3)) {
        let elems: Vec<_> = seeds
            .iter()
            .map(|&s| {
                let coords: Vec<u64> = (0..gf.degree() as u64).map(|i| s.wrapping_mul(31).wrapping_add(i * 7)).collect();
                gf.elem(&coords)
            })
            .collect();
        let (a, b, c) = (elems[0], elems[1], elems[2]);
        prop_assert_eq!(gf.add(gf.add(a, b), c), gf.add(a, gf.add(b, c)));
        prop_assert_eq!(gf.mul(gf.mul(a, b), c), gf.mul(a, gf.mul(b, c)));
        prop_assert_eq!(gf.mul(a, gf.add(b, c)), gf.add(gf.mul(a, b), gf.mul(a, c)));
        prop_assert_eq!(gf.mul(a, b), gf.mul(b, a));
        if !gf.is_zero(a) {
            let ai = gf.inv(a).unwrap();
            prop_assert_eq!(gf.mul(a, ai), gf.one());
        }
    }

    #[test]
    fn truncation_ring_exact_sequence(p in small_prime(), s in 0u64..10_000, t in 0u64..10_000) {
        for ring in [TruncRing::zp2(p).unwrap(), TruncRing::dual(Gf::prime(p).unwrap())] {
            let k = ring.residue_field();
            let x = ring.from_i64(s as i64);
            let y = ring.from_i64(t as i64);
            let a = k.from_u64(s);
            prop_assert_eq!(ring.reduce(ring.mul(x, y)), k.mul(ring.reduce(x), ring.reduce(y)));
            prop_assert_eq!(ring.mul(ring.iota(a), x), ring.iota(k.mul(a, ring.reduce(x))));
            prop_assert_eq!(ring.pinv(ring.iota(a)).unwrap(), a);
            let e = ring.epsilon();
            prop_assert!(ring.is_zero(ring.mul(e, e)));
        }
    }

    #[test]
    fn rref_is_idempotent(p in small_prime(), entries in proptest::collection::vec(0u64..100, 12)) {
        let gf = Gf::prime(p).unwrap();
        let mut m = Matrix::zeros(gf, 3, 4);
        for i in 0..3 {
            for j in 0..4 {
                m[(i, j)] = gf.from_u64(entries[i * 4 + j]);
            }
        }
        let (r1, piv1) = m.rref();
        let (r2, piv2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(piv1.len() + m.kernel_basis().len(), 4);
        prop_assert_eq!(piv1, piv2);
    }

    #[test]
    fn weyl_product_is_associative_and_bilinear(
        p in prop_oneof![Just(2u64), Just(3), Just(5)],
        lift in any::<bool>(),
        spec in proptest::collection::vec((0u32..4, 0u32..4, 1u64..25), 3..9),
    ) {
        let sig = if lift { WeylSig::zp2(1, p) } else { WeylSig::fp(1, p) };
        let chunks: Vec<WeylElem> = spec
            .chunks(3)
            .map(|ch| {
                let mut e = WeylElem::zero(sig);
                for &(x, d, c) in ch {
                    e = e.add(&WeylElem::monomial(sig, vec![x], vec![d], c).unwrap()).unwrap();
                }
                e
            })
            .collect();
        if chunks.len() >= 3 {
            let (a, b, c) = (&chunks[0], &chunks[1], &chunks[2]);
            let lhs = a.mul(b).unwrap().mul(c).unwrap();
            let rhs = a.mul(&b.mul(c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            // (a + b)·c = a·c + b·c
            let sum_first = a.add(b).unwrap().mul(c).unwrap();
            let dist = a.mul(c).unwrap().add(&b.mul(c).unwrap()).unwrap();
            prop_assert_eq!(sum_first, dist);
        }
    }
}
