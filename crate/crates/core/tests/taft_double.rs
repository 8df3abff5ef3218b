use aydc::double::endomorphism_coords;
use aydc::hopf::DualityFormula;
use aydc::linalg::Matrix;
use aydc::taft_double::TaftDouble;
use aydc::{AlgebraElement, Cyclotomic};

fn double(p: usize) -> TaftDouble {
    TaftDouble::new(p, 1, DualityFormula::Displayed).unwrap()
}

/// `e_ij = p⁻² Σ_{a,b} ξ^{−ia−jb} g′^a g^b` projects onto `V_ij`, so the rank
/// of left multiplication by it is `dim V_ij`.
#[test]
fn graded_components_match_idempotent_ranks() {
    for p in [2usize, 3] {
        let d = double(p);
        let alg = d.algebra();
        let scale = Cyclotomic::from_fraction(1, (p * p) as i64).unwrap();
        let mut total = 0;
        for i in 0..p as i64 {
            for j in 0..p as i64 {
                let mut e = alg.zero();
                for a in 0..p as i64 {
                    for b in 0..p as i64 {
                        let term = alg.mul(&alg.pow(&d.g_prime, a as u32), &alg.pow(&d.g, b as u32));
                        e = e.add(&term.scale(&d.xi_pow(-i * a - j * b)));
                    }
                }
                let e = e.scale(&scale);
                assert_eq!(alg.mul(&e, &e), e, "idempotent for p={p}, ({i},{j})");
                let rank = alg.left_mult_matrix(&e).rank();
                assert_eq!(d.graded_component(i, j).dim(), rank);
                total += rank;
            }
        }
        assert_eq!(total, p.pow(4));
    }
}

/// The block of `gg′` for `ξ^s` is cut out by `p⁻¹ Σ_a ξ^{−sa} (gg′)^a`.
#[test]
fn block_dims_match_central_idempotents() {
    for p in [2usize, 3] {
        let d = double(p);
        let alg = d.algebra();
        let z = d.gg_prime();
        let inv_p = Cyclotomic::from_fraction(1, p as i64).unwrap();
        for s in 0..p as i64 {
            let mut e = alg.zero();
            for a in 0..p as i64 {
                e = e.add(&alg.pow(&z, a as u32).scale(&d.xi_pow(-s * a)));
            }
            let e = e.scale(&inv_p);
            assert!(alg.is_central(&e));
            assert_eq!(alg.left_mult_matrix(&e).rank(), p.pow(3));
            assert_eq!(d.block_quotient(s).unwrap().algebra.dim(), p.pow(3));
        }
    }
}

/// For `p = 2`, `x′` is the map sending `x` and `gx` to `1` and killing `1`, `g`.
#[test]
fn sweedler_generators_by_hand() {
    let d = double(2);
    let one = Cyclotomic::one();
    let zero = Cyclotomic::zero();
    // columns are images of 1, x, g, gx
    let x_prime = Matrix::from_fn(4, 4, |r, c| {
        if r == 0 && (c == 1 || c == 3) {
            one.clone()
        } else {
            zero.clone()
        }
    });
    assert_eq!(d.x_prime, AlgebraElement::from_coords(endomorphism_coords(&x_prime)));
    // g′ = φ(g) ⊗ 1 with φ(g) = 1* − g*
    let g_prime = Matrix::from_fn(4, 4, |r, c| match (r, c) {
        (0, 0) => one.clone(),
        (0, 2) => -&one,
        _ => zero.clone(),
    });
    assert_eq!(d.g_prime, AlgebraElement::from_coords(endomorphism_coords(&g_prime)));
    // x = ε ⊗ x sends 1 and g to x
    let x = Matrix::from_fn(4, 4, |r, c| {
        if r == 1 && (c == 0 || c == 2) {
            one.clone()
        } else {
            zero.clone()
        }
    });
    assert_eq!(d.x, AlgebraElement::from_coords(endomorphism_coords(&x)));
}

#[test]
fn q_is_a_power_of_xi() {
    // (ξ^{(p−1)/2})² = ξ^{p−1} = ξ⁻¹
    let d = double(3);
    assert_eq!(d.q().unwrap(), d.xi_pow(1));
    let xi = Cyclotomic::root_of_unity(5, 1);
    let q = xi.pow(2).unwrap();
    assert_eq!(&q * &q, xi.inverse().unwrap());
}

#[test]
fn other_primitive_root() {
    let d = TaftDouble::new(3, 2, DualityFormula::Displayed).unwrap();
    assert!(d.check_relations().passed());
    assert!(d.check_sigma_action().passed());
    for s in 0..3 {
        assert!(d.check_uqsl2(s).passed());
    }
}
