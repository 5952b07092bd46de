use proptest::prelude::*;

use liemult::catalog::{self, Group};
use liemult::invariants::{s_invariant, t_invariant};
use liemult::linalg::{int, Matrix};
use liemult::multiplier::{dim_multiplier, dim_multiplier_cover, is_cocycle, CochainComplexSlice};
use liemult::presentation::Presentation;
use liemult::{LieAlgebra, Scalar};

fn small_algebras() -> Vec<LieAlgebra> {
    catalog::entries()
        .iter()
        .filter(|e| e.group != Group::Fixture)
        .map(|e| e.build(None).unwrap())
        .filter(|l| l.dim() <= 7)
        .collect()
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(move |rows| {
            Matrix::from_rows(
                c,
                rows.into_iter()
                    .map(|row| row.into_iter().map(int).collect())
                    .collect(),
            )
            .unwrap()
        })
    })
}

/// Rewrite `l` in the basis `y_a = x_a + c x_b`, other vectors unchanged.
fn shear(l: &LieAlgebra, a: usize, b: usize, c: i64) -> LieAlgebra {
    let n = l.dim();
    let c = int(c);
    let y = |i: usize| -> Vec<Scalar> {
        let mut v = liemult::linalg::unit(n, i);
        if i == a {
            v[b] = c.clone();
        }
        v
    };
    LieAlgebra::from_fn(n, |i, j| {
        let mut w = l.bracket(&y(i), &y(j)).unwrap();
        let t = w[a].clone() * &c;
        w[b] -= t;
        w
    })
    .unwrap()
}

fn sheared() -> impl Strategy<Value = LieAlgebra> {
    let algebras = small_algebras();
    (
        0..algebras.len(),
        prop::collection::vec((0usize..7, 0usize..7, -2i64..=2), 1..4),
    )
        .prop_map(move |(k, ops)| {
            let mut l = algebras[k].clone();
            for (a, b, c) in ops {
                let (a, b) = (a % l.dim(), b % l.dim());
                if a != b {
                    l = shear(&l, a, b, c);
                }
            }
            l
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(m.rank() + m.nullspace_basis().len(), m.cols());
        for v in m.nullspace_basis() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn transpose_rank(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_idempotent(m in matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coboundary_squares_to_zero(l in sheared()) {
        let cx = CochainComplexSlice::new(&l);
        prop_assert!(cx.d2.mul(&cx.d1).unwrap().is_zero());
        for f in cx.cohomology_representatives() {
            prop_assert!(is_cocycle(&l, &f));
        }
    }

    #[test]
    fn invariants_survive_basis_change(k in 0usize..64, ops in prop::collection::vec((0usize..7, 0usize..7, -2i64..=2), 1..4)) {
        let algebras = small_algebras();
        let l0 = &algebras[k % algebras.len()];
        let mut l = l0.clone();
        for (a, b, c) in ops {
            let (a, b) = (a % l.dim(), b % l.dim());
            if a != b {
                l = shear(&l, a, b, c);
            }
        }
        prop_assert_eq!(dim_multiplier(&l), dim_multiplier(l0));
        prop_assert_eq!(dim_multiplier_cover(&l).dim_m, dim_multiplier(&l));
        prop_assert_eq!(l.derived().dim(), l0.derived().dim());
        prop_assert_eq!(l.center().dim(), l0.center().dim());
    }

    #[test]
    fn direct_sum_rule(i in 0usize..64, j in 0usize..64) {
        let algebras: Vec<LieAlgebra> = small_algebras().into_iter().filter(|l| l.dim() <= 5).collect();
        let a = &algebras[i % algebras.len()];
        let b = &algebras[j % algebras.len()];
        let ab = |l: &LieAlgebra| l.dim() - l.derived().dim();
        prop_assert_eq!(
            dim_multiplier(&LieAlgebra::direct_sum(a, b)),
            dim_multiplier(a) + dim_multiplier(b) + ab(a) * ab(b)
        );
    }

    #[test]
    fn s_and_t_differ_by_n_minus_2(l in sheared()) {
        let s = s_invariant(&l).unwrap();
        prop_assert_eq!(t_invariant(&l) - s, l.dim() as i64 - 2);
    }

    #[test]
    fn presentation_round_trip(l in sheared()) {
        let text = Presentation::from_algebra(&l).to_json();
        let back = Presentation::parse(&text).unwrap().load().unwrap();
        prop_assert_eq!(back.brackets(), l.brackets());
    }
}

#[test]
fn catalog_satisfies_jacobi_at_every_sample() {
    for e in catalog::entries() {
        let params: Vec<Option<Scalar>> = if e.is_parameterized() {
            e.param.samples().into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        for p in params {
            let l = e.build(p.as_ref()).unwrap();
            assert!(l.jacobi_defect().is_none(), "{}", e.name);
        }
    }
}
