use std::sync::OnceLock;

use aydc::dg::TwoTermDga;
use aydc::hopf::{DualityFormula, HopfData};
use aydc::linalg::Matrix;
use aydc::taft_double::{SweedlerBlock, TaftDouble};
use aydc::{AlgebraElement, Cyclotomic, StructureAlgebra};
use proptest::prelude::*;

/// `(name, R, σ)` for the Sweedler blocks and the double of `kZ/3`.
fn instances() -> &'static [(String, StructureAlgebra, AlgebraElement)] {
    static CELL: OnceLock<Vec<(String, StructureAlgebra, AlgebraElement)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let d = TaftDouble::new(2, 1, DualityFormula::Displayed).unwrap();
        let mut out: Vec<_> = (0..2)
            .map(|s| {
                let b = SweedlerBlock::new(&d, s).unwrap();
                (format!("D{s}"), b.algebra().clone(), b.sigma.clone())
            })
            .collect();
        let z3 = aydc::double::TwistedDouble::build(&HopfData::group_algebra(3).unwrap()).unwrap();
        out.push(("kZ/3".into(), z3.algebra().clone(), z3.sigma().clone()));
        out
    })
}

fn small_int() -> impl Strategy<Value = Cyclotomic> {
    (-2i64..=2).prop_map(Cyclotomic::from_integer)
}

/// Unitriangular matrices times a permutation: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(small_int(), n * n),
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(move |(v, perm)| {
            let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => v[i * n + j].clone(),
                std::cmp::Ordering::Equal => Cyclotomic::one(),
                std::cmp::Ordering::Greater => Cyclotomic::zero(),
            });
            let lower = Matrix::from_fn(n, n, |i, j| {
                if i > j {
                    v[j * n + i].clone()
                } else if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                }
            });
            let p = Matrix::from_fn(n, n, |i, j| {
                if perm[i] == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                }
            });
            lower.mul(&upper).unwrap().mul(&p).unwrap()
        })
}

fn instance_and_basis() -> impl Strategy<Value = (usize, Matrix)> {
    (0..instances().len()).prop_flat_map(|k| (Just(k), invertible(instances()[k].1.dim())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hh_dimension_is_basis_independent((k, p) in instance_and_basis()) {
        let (_, r, sigma) = &instances()[k];
        let z = sigma.sub(&r.one());
        let moved = r.change_basis(&p).unwrap();
        let z_moved = AlgebraElement::from_coords(p.inverse().unwrap().mul_vec(z.coords()).unwrap());
        let before = TwoTermDga::new(r.clone(), z).unwrap().hh_minus_one().dim();
        let after = TwoTermDga::new(moved, z_moved).unwrap().hh_minus_one().dim();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn hh_inside_center_and_euler_zero(
        k in 0..3usize,
        coeffs in prop::collection::vec(small_int(), 8),
    ) {
        let (_, r, _) = &instances()[k];
        let center = r.center();
        let mut z = r.zero();
        for (c, v) in coeffs.iter().zip(center.basis()) {
            z = z.add(&AlgebraElement::from_coords(v.clone()).scale(c));
        }
        let c = TwoTermDga::new(r.clone(), z.clone()).unwrap();
        let hh = c.hh_minus_one();
        prop_assert!(hh.is_subspace_of(&center));
        if z.is_zero() {
            prop_assert_eq!(&hh, &center);
        }
        let profile = c.complex_cohomology();
        prop_assert_eq!(profile.dim_h_minus1, profile.dim_h0);
    }

    #[test]
    fn quotient_projection_is_an_algebra_map(
        k in 0..3usize,
        coeffs in prop::collection::vec(small_int(), 9),
    ) {
        let (_, r, _) = &instances()[k];
        let gen = AlgebraElement::from_coords(coeffs.iter().cloned().cycle().take(r.dim()).collect());
        let q = r.quotient(std::slice::from_ref(&gen)).unwrap();
        prop_assert!(q.project(&gen).is_zero());
        let b = &q.algebra;
        prop_assert_eq!(q.project(&r.one()), b.one());
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let (x, y) = (r.basis_element(i), r.basis_element(j));
                prop_assert_eq!(q.project(&r.mul(&x, &y)), b.mul(&q.project(&x), &q.project(&y)));
            }
        }
        prop_assert_eq!(q.algebra.dim() + q.ideal.dim(), r.dim());
    }
}
