use aydc::linalg::{self, kernel, minimal_polynomial, solve, Matrix};
use aydc::poly::evaluate_at_matrix;
use aydc::Cyclotomic;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Cyclotomic> {
    // mostly small integers, sometimes a cube root of unity, often zero
    prop_oneof![
        3 => Just(Cyclotomic::zero()),
        4 => (-3i64..=3).prop_map(Cyclotomic::from_integer),
        1 => (0i64..3).prop_map(|k| Cyclotomic::root_of_unity(3, k)),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(entry(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis() {
            prop_assert!(linalg::is_zero_vector(&m.mul_vec(v).unwrap()));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_is_consistent(m in matrix(5), seed in prop::collection::vec(entry(), 5)) {
        let x0: Vec<Cyclotomic> = seed.into_iter().cycle().take(m.cols()).collect();
        let b = m.mul_vec(&x0).unwrap();
        let x = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn inverse_when_full_rank(m in square(5)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.rank(), m.rows());
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn minimal_polynomial_annihilates(m in square(5)) {
        let p = minimal_polynomial(&m).unwrap();
        prop_assert!(evaluate_at_matrix(&p, &m).unwrap().is_zero());
        prop_assert!(p.last().unwrap().is_one());
        // no monic polynomial of smaller degree annihilates: the powers
        // I, M, …, M^{d−1} are linearly independent
        let d = p.len() - 1;
        let n = m.rows();
        let powers: Vec<Vec<Cyclotomic>> = (0..d)
            .map(|k| {
                let pk = m.pow(k as u32).unwrap();
                (0..n * n).map(|i| pk.get(i / n, i % n).clone()).collect()
            })
            .collect();
        if d > 0 {
            prop_assert_eq!(Matrix::from_rows(powers).unwrap().rank(), d);
        }
    }
}
