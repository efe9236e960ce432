mod common;

use common::{e, lr_oracle};
use lralg::catalog;
use lralg::construct::{complete_any, lr_for_g3, two_generator_basis, two_generator_lr, BasisTerm};
use lralg::lie::{ad, bracket_of_subspaces, split_metabelian};
use lralg::linalg::{fitting_split_family, int, rat, vector_from_ints};
use lralg::lr::{check_lr, opposite, quotient_product};
use lralg::{LieAlgebra, Matrix, Rational, Subspace, Vector};
use proptest::prelude::*;

/// Free metabelian algebra on two generators truncated at class 4:
/// `[x,y]=z, [x,z]=u, [y,z]=v, [x,v]=t, [y,u]=t`.
fn metabelian_class4() -> LieAlgebra {
    LieAlgebra::from_brackets(
        6,
        [
            (0, 1, e(6, 2)),
            (0, 2, e(6, 3)),
            (1, 2, e(6, 4)),
            (0, 4, e(6, 5)),
            (1, 3, e(6, 5)),
        ],
    )
    .unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_rational(), n)
}

/// Upper triangular integer matrix, optionally with a zero diagonal.
fn upper(n: usize) -> impl Strategy<Value = Matrix> {
    (proptest::collection::vec(-2i64..=2, n * n), any::<bool>()).prop_map(move |(xs, strict)| {
        Matrix::from_fn(n, n, |r, c| {
            if c < r || (strict && c == r) {
                int(0)
            } else {
                int(xs[r * n + c])
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fitting_split_of_polynomials(a in (1usize..=6).prop_flat_map(upper), c in proptest::collection::vec(-2i64..=2, 6)) {
        let n = a.rows();
        let mut ms = vec![a.clone()];
        let mut p = Matrix::zeros(n, n);
        p.add_scaled(&int(c[0]), &a);
        p.add_scaled(&int(c[1]), &a.pow(2));
        p.add_scaled(&int(c[2]), &Matrix::identity(n));
        ms.push(p);
        let split = fitting_split_family(&ms).unwrap();
        prop_assert_eq!(split.v_n.dim() + split.v_0.dim(), n);
        for m in &ms {
            let r = split.v_n.restrict(m).unwrap();
            prop_assert!(r.pow(r.rows()).is_zero());
            prop_assert!(split.v_0.is_invariant_under(m));
        }
        // no common nilpotent direction in V_0
        let on_v0: Vec<Matrix> = ms.iter().map(|m| split.v_0.restrict(m).unwrap()).collect();
        if !on_v0.is_empty() && split.v_0.dim() > 0 {
            prop_assert!(fitting_split_family(&on_v0).unwrap().v_n.is_zero());
        }
        prop_assert_eq!(&(&split.proj_n * &split.proj_n), &split.proj_n);
    }

    /// ad-operators commute on the derived algebra of a two-step solvable algebra.
    #[test]
    fn ad_commutes_on_derived_algebra(x in vector(6), y in vector(6), w in vector(6)) {
        let g = metabelian_class4();
        let whole = Subspace::full(6);
        let derived = bracket_of_subspaces(&g, &whole, &whole).unwrap();
        let a = g.bracket(&w, &x).unwrap();
        prop_assert!(derived.contains(&a));
        let (ax, ay) = (ad(&g, &x).unwrap(), ad(&g, &y).unwrap());
        prop_assert_eq!(ax.apply(&ay.apply(&a)), ay.apply(&ax.apply(&a)));
    }

    /// Any two generators of filiform(5) whose span meets g \ [g,g] properly.
    #[test]
    fn two_generator_on_generic_pairs(a in small_rational(), b in small_rational(), t in vector(3)) {
        prop_assume!(a != int(0) || b != int(0));
        let g = catalog::filiform(5).unwrap();
        let x = vec![int(1), int(0), t[0].clone(), int(0), int(0)];
        let y = vec![a.clone(), int(1) + b.clone(), int(0), t[1].clone(), t[2].clone()];
        match two_generator_lr(&g, &x, &y) {
            Ok(p) => {
                prop_assert!(lr_oracle(&g, &p).clean());
                let c = complete_any(&g, &p).unwrap();
                prop_assert!(common::all_right_nilpotent(&c.completed));
            }
            Err(err) => prop_assert_eq!(err, lralg::Error::NotGenerating),
        }
    }
}

#[test]
fn two_generator_on_class_four_metabelian() {
    let g = metabelian_class4();
    let (x, y) = (e(6, 0), e(6, 1));
    let p = two_generator_lr(&g, &x, &y).unwrap();
    assert!(lr_oracle(&g, &p).clean());
    let basis = two_generator_basis(&g, &x, &y).unwrap();
    let words: Vec<&Vector> = basis
        .terms
        .iter()
        .zip(&basis.vectors)
        .filter(|(t, _)| matches!(t, BasisTerm::Word { .. }))
        .map(|(_, v)| v)
        .collect();
    assert_eq!(words.len(), 4);
    let mut nonzero = false;
    for a in &words {
        for b in &words {
            let ab = p.mul(a, b).unwrap();
            assert_eq!(ab, p.mul(b, a).unwrap());
            assert!(g.bracket(a, b).unwrap().iter().all(|c| *c == int(0)));
            nonzero |= ab.iter().any(|c| *c != int(0));
        }
    }
    // z·z = [x,[y,z]] = t: products of words need not vanish
    assert!(nonzero);
    assert_eq!(p.mul(&e(6, 2), &e(6, 2)).unwrap(), e(6, 5));
    let c = complete_any(&g, &p).unwrap();
    assert!(common::all_right_nilpotent(&c.completed));
}

#[test]
fn words_multiply_to_zero_on_filiform() {
    for n in 3..=9 {
        let g = catalog::filiform(n).unwrap();
        let (x, y) = (e(n, 0), e(n, 1));
        let p = two_generator_lr(&g, &x, &y).unwrap();
        // already complete: R(e1) is a shift, the other R(e_j) vanish
        assert!(common::all_right_nilpotent(&p));
        let basis = two_generator_basis(&g, &x, &y).unwrap();
        for (ta, a) in basis.terms.iter().zip(&basis.vectors) {
            for (tb, b) in basis.terms.iter().zip(&basis.vectors) {
                if matches!(ta, BasisTerm::Word { .. }) && matches!(tb, BasisTerm::Word { .. }) {
                    assert!(p.mul(a, b).unwrap().iter().all(|c| *c == int(0)));
                }
            }
        }
    }
}

#[test]
fn opposite_swaps_left_and_right() {
    let f = catalog::known_lr("r2-complete").unwrap();
    let q = opposite(&f.product);
    // x∘y − y∘x = x·y − y·x: same algebra
    assert!(check_lr(&f.algebra, &q).unwrap().is_structure());
    assert_eq!(opposite(&q), f.product);
    assert_eq!(
        common::all_left_nilpotent(&q),
        common::all_right_nilpotent(&f.product)
    );
}

#[test]
fn g3_construction_on_diagonal_families() {
    for w in [
        vec![int(1)],
        vec![int(1), int(2)],
        vec![rat(1, 2), int(-3), int(5)],
    ] {
        let g = catalog::diag_solvable(&w).unwrap();
        let p = lr_for_g3(&g).unwrap();
        assert!(lr_oracle(&g, &p).clean());
        assert!(common::all_right_nilpotent(&p));
        let split = split_metabelian(&g).unwrap();
        assert!(quotient_product(&g, &p, &split.g_infinity)
            .unwrap()
            .is_zero());
    }
    let g = LieAlgebra::from_brackets(
        3,
        [
            (0, 1, vector_from_ints(&[0, 0, 1])),
            (0, 2, vector_from_ints(&[0, 0, 1])),
        ],
    )
    .unwrap();
    let p = lr_for_g3(&g).unwrap();
    assert!(lr_oracle(&g, &p).clean());
}
