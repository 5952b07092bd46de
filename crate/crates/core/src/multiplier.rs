//! Dimension of the Schur multiplier, a maximal stem extension, the
//! epicenter, and dimensions of the exterior and tensor squares.
//!
//! Two independent rank computations give the multiplier dimension: the
//! cochain route `C(n,2) - rank d1 - rank d2` and the chain route
//! `C(n,2) - dim L^2 - rank ∂3`. The epicenter is computed from the cover and,
//! separately, from the exterior center `{x : x ∧ y = 0 in L ∧ L for all y}`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{
    binomial, pair_index, pairs, triples, LieAlgebra, QuotientMap, Subspace, Vector,
};
use crate::error::{Error, Result};
use crate::linalg::{extend_basis, is_zero_vec, Matrix, Scalar};

/// Value of an alternating form on the basis pair `(i, j)`, any order.
fn form_at(f: &[Scalar], n: usize, i: usize, j: usize) -> Scalar {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => f[pair_index(n, i, j)].clone(),
        Greater => -f[pair_index(n, j, i)].clone(),
        Equal => Scalar::zero(),
    }
}

/// The maps `L* -> Λ²L* -> Λ³L*` of the trivial-coefficient cochain complex.
#[derive(Clone, Debug)]
pub struct CochainComplexSlice {
    /// `C(n,2) x n`: `(d1 g)(x_i, x_j) = -g([x_i, x_j])`.
    pub d1: Matrix,
    /// `C(n,3) x C(n,2)`: `(d2 f)(x,y,z) = -f([x,y],z) + f([x,z],y) - f([y,z],x)`.
    pub d2: Matrix,
    pub pair_index: Vec<(usize, usize)>,
    pub triple_index: Vec<(usize, usize, usize)>,
}

impl CochainComplexSlice {
    pub fn new(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let pair_list = pairs(n);
        let triple_list = triples(n);

        let mut d1 = Matrix::zeros(pair_list.len(), n);
        for (p, &(i, j)) in pair_list.iter().enumerate() {
            for (k, c) in l.basis_bracket(i, j).into_iter().enumerate() {
                d1[(p, k)] = -c;
            }
        }

        let mut d2 = Matrix::zeros(triple_list.len(), pair_list.len());
        for (t, &(a, b, c)) in triple_list.iter().enumerate() {
            // Each term is sign * f([x_u, x_v], x_w).
            for (sign, u, v, w) in [(-1, a, b, c), (1, a, c, b), (-1, b, c, a)] {
                for (k, coeff) in l.basis_bracket(u, v).into_iter().enumerate() {
                    if coeff.is_zero() || k == w {
                        continue;
                    }
                    let (p, flip) = if k < w {
                        (pair_index(n, k, w), 1)
                    } else {
                        (pair_index(n, w, k), -1)
                    };
                    let delta = coeff * Scalar::from_integer((sign * flip).into());
                    d2[(t, p)] += delta;
                }
            }
        }

        CochainComplexSlice {
            d1,
            d2,
            pair_index: pair_list,
            triple_index: triple_list,
        }
    }

    /// Basis of the 2-cocycles, one alternating form per vector, indexed by
    /// [`pair_index`].
    pub fn cocycles(&self) -> Vec<Vector> {
        self.d2.nullspace_basis()
    }

    /// Column space of `d1`.
    pub fn coboundaries(&self) -> Vec<Vector> {
        self.d1
            .transpose()
            .echelon()
            .basis()
            .iter_rows()
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    /// Cocycles completing the coboundaries to all of `ker d2`, chosen
    /// greedily in nullspace order.
    pub fn cohomology_representatives(&self) -> Vec<Vector> {
        extend_basis(
            self.pair_index.len(),
            &self.coboundaries(),
            &self.cocycles(),
        )
    }
}

/// `dim H²(L)` by cochain ranks.
pub fn dim_multiplier(l: &LieAlgebra) -> usize {
    let cx = CochainComplexSlice::new(l);
    binomial(l.dim(), 2) - cx.d1.rank() - cx.d2.rank()
}

/// Boundary map `∂3: Λ³L -> Λ²L`, `C(n,2) x C(n,3)`, with
/// `∂3(x∧y∧z) = [x,y]∧z - [x,z]∧y + [y,z]∧x`.
pub fn boundary3(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let triple_list = triples(n);
    let mut m = Matrix::zeros(binomial(n, 2), triple_list.len());
    for (t, &(a, b, c)) in triple_list.iter().enumerate() {
        for (sign, u, v, w) in [(1i64, a, b, c), (-1, a, c, b), (1, b, c, a)] {
            for (k, coeff) in l.basis_bracket(u, v).into_iter().enumerate() {
                if coeff.is_zero() || k == w {
                    continue;
                }
                let (p, flip) = if k < w {
                    (pair_index(n, k, w), 1)
                } else {
                    (pair_index(n, w, k), -1)
                };
                m[(p, t)] += coeff * Scalar::from_integer((sign * flip).into());
            }
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cohomology,
    Cover,
}

#[derive(Clone, Debug)]
pub struct MultiplierResult {
    pub dim_m: usize,
    /// Alternating forms indexed by [`pair_index`], representing a basis of
    /// `H²(L)`.
    pub cocycle_basis: Vec<Vector>,
    pub method: Method,
}

/// `dim H_2(L) = C(n,2) - dim L² - rank ∂3`, with cocycle representatives
/// attached for building the cover.
pub fn dim_multiplier_cover(l: &LieAlgebra) -> MultiplierResult {
    let n = l.dim();
    let dim_m = binomial(n, 2) - l.derived().dim() - boundary3(l).rank();
    let reps = CochainComplexSlice::new(l).cohomology_representatives();
    assert_eq!(
        reps.len(),
        dim_m,
        "chain and cochain multiplier dimensions disagree"
    );
    MultiplierResult {
        dim_m,
        cocycle_basis: reps,
        method: Method::Cover,
    }
}

/// `f([x,y],z) + f([y,z],x) + f([z,x],y)` on every basis triple is zero.
pub fn is_cocycle(l: &LieAlgebra, f: &[Scalar]) -> bool {
    let n = l.dim();
    let eval = |u: &[Scalar], w: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                acc += c * form_at(f, n, k, w);
            }
        }
        acc
    };
    triples(n).into_iter().all(|(a, b, c)| {
        let s = eval(&l.basis_bracket(a, b), c)
            + eval(&l.basis_bracket(b, c), a)
            + eval(&l.basis_bracket(c, a), b);
        s.is_zero()
    })
}

#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: LieAlgebra,
    pub projection: QuotientMap,
    pub kernel: Subspace,
}

/// `E = L ⊕ Q^m` with `[x_i, x_j]_E = [x_i, x_j] + Σ_r f_r(x_i, x_j) z_r`.
pub fn cover(l: &LieAlgebra) -> CentralExtension {
    let n = l.dim();
    let reps = dim_multiplier_cover(l).cocycle_basis;
    let m = reps.len();
    let total = LieAlgebra::from_fn(n + m, |i, j| {
        let mut v = vec![Scalar::zero(); n + m];
        if j < n {
            for (k, c) in l.basis_bracket(i, j).into_iter().enumerate() {
                v[k] = c;
            }
            let p = pair_index(n, i, j);
            for (r, f) in reps.iter().enumerate() {
                v[n + r] = f[p].clone();
            }
        }
        v
    })
    .expect("central extension by cocycles is a nilpotent Lie algebra");

    let mut proj = Matrix::zeros(n, n + m);
    for i in 0..n {
        proj[(i, i)] = Scalar::from_integer(1.into());
    }
    let kernel = Subspace::span(
        n + m,
        (n..n + m).map(|k| crate::linalg::unit(n + m, k)).collect(),
    );
    let stem = total.center().intersection(&total.derived());
    assert!(
        kernel.is_subspace_of(&stem),
        "cover is not a stem extension"
    );

    let projection = QuotientMap {
        source: total.clone(),
        target: l.clone(),
        matrix: proj,
    };
    CentralExtension {
        total,
        projection,
        kernel,
    }
}

/// Image of the cover's center in `L`; zero exactly when `L` is capable.
pub fn epicenter(l: &LieAlgebra) -> Subspace {
    let e = cover(l);
    let z = e.total.center().image(&e.projection.matrix);
    if !l.is_abelian() {
        let bound = l.center().intersection(&l.derived());
        assert!(z.is_subspace_of(&bound), "epicenter escapes Z(L) ∩ L²");
    }
    z
}

pub fn is_capable(l: &LieAlgebra) -> bool {
    epicenter(l).dim() == 0
}

/// `{x : x ∧ y ∈ im ∂3 for every y}`, computed from the forms annihilating
/// `im ∂3` without building a cover.
pub fn exterior_center(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let annihilator = boundary3(l).transpose().nullspace_basis();
    let mut rows = Vec::with_capacity(annihilator.len() * n);
    for w in &annihilator {
        for j in 0..n {
            rows.push((0..n).map(|i| form_at(w, n, i, j)).collect());
        }
    }
    let system = Matrix::from_rows(n, rows).expect("rows have length n");
    Subspace::span(n, system.nullspace_basis())
}

pub fn dim_exterior_square(l: &LieAlgebra) -> usize {
    l.derived().dim() + dim_multiplier(l)
}

pub fn dim_square_part(l: &LieAlgebra) -> usize {
    let d = l.dim() - l.derived().dim();
    d * (d + 1) / 2
}

pub fn dim_tensor_square(l: &LieAlgebra) -> usize {
    dim_exterior_square(l) + dim_square_part(l)
}

/// Whether `dim L∧L = dim (L/Z*)∧(L/Z*)`.
pub fn quotient_exterior_check(l: &LieAlgebra) -> Result<bool> {
    if l.is_abelian() {
        return Err(Error::PreconditionNotMet(
            "quotient exterior check needs a non-abelian algebra".into(),
        ));
    }
    let (q, _) = l.quotient(&epicenter(l))?;
    Ok(dim_exterior_square(l) == dim_exterior_square(&q))
}

/// `true` when `d2 * d1 = 0` exactly.
pub fn complex_is_exact_at_degree_one(cx: &CochainComplexSlice) -> bool {
    cx.d2.mul(&cx.d1).map(|p| p.is_zero()).unwrap_or(false)
}

/// Every form annihilates `im ∂3`, checked column by column.
pub fn forms_vanish_on_boundaries(l: &LieAlgebra, forms: &[Vector]) -> bool {
    let b = boundary3(l).transpose();
    forms
        .iter()
        .all(|f| is_zero_vec(&b.mul_vec(f).expect("form length C(n,2)")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bracket;
    use crate::linalg::{int, unit};

    fn alg(dim: usize, br: &[(usize, usize, usize)]) -> LieAlgebra {
        let brackets: Vec<Bracket> = br
            .iter()
            .map(|&(i, j, k)| Bracket::new(i, j, vec![(k, int(1))]))
            .collect();
        LieAlgebra::from_brackets(dim, &brackets).unwrap()
    }

    fn both(l: &LieAlgebra) -> usize {
        let a = dim_multiplier(l);
        assert_eq!(a, dim_multiplier_cover(l).dim_m);
        a
    }

    #[test]
    fn small_multipliers() {
        assert_eq!(both(&LieAlgebra::abelian(4)), 6);
        assert_eq!(both(&LieAlgebra::abelian(0)), 0);
        assert_eq!(both(&LieAlgebra::heisenberg(1)), 2);
        assert_eq!(both(&LieAlgebra::heisenberg(2)), 5);
        assert_eq!(both(&alg(5, &[(1, 2, 4), (1, 3, 5)])), 6);
        assert_eq!(both(&alg(6, &[(1, 2, 4), (1, 3, 5), (2, 3, 6)])), 8);
        assert_eq!(both(&alg(4, &[(1, 2, 3), (1, 3, 4)])), 2);
    }

    #[test]
    fn stem_extensions_of_37a() {
        // x7 acts on the 37A relations with [x2,x4] moved to x8.
        for extra in [(1, 7, 8), (3, 7, 8), (4, 7, 8)] {
            assert_eq!(both(&alg(8, &[(1, 2, 5), (2, 3, 6), (2, 4, 8), extra])), 14);
        }
        for extra in [(1, 3, 8), (1, 4, 8), (3, 4, 8)] {
            assert_eq!(both(&alg(8, &[(1, 2, 5), (2, 3, 6), (2, 4, 7), extra])), 14);
        }
    }

    #[test]
    fn cochain_slice_is_a_complex() {
        let l = alg(6, &[(1, 2, 3), (1, 3, 6), (4, 5, 6)]);
        let cx = CochainComplexSlice::new(&l);
        assert!(complex_is_exact_at_degree_one(&cx));
        assert_eq!(cx.d1.rank(), l.derived().dim());
        let reps = cx.cohomology_representatives();
        assert!(reps.iter().all(|f| is_cocycle(&l, f)));
        assert!(forms_vanish_on_boundaries(&l, &cx.cocycles()));
    }

    #[test]
    fn cover_examples() {
        let a1 = cover(&LieAlgebra::abelian(1));
        assert_eq!(a1.total.dim(), 1);
        assert_eq!(a1.kernel.dim(), 0);

        let h = cover(&LieAlgebra::heisenberg(1));
        assert_eq!(h.total.dim(), 5);
        assert_eq!(h.kernel.dim(), 2);
        assert!(h.projection.is_compatible());
        assert_eq!(h.projection.kernel(), h.kernel);

        let l58 = cover(&alg(5, &[(1, 2, 4), (1, 3, 5)]));
        assert_eq!(l58.total.dim(), 11);
        assert_eq!(l58.kernel.dim(), 6);
    }

    #[test]
    fn capability_examples() {
        let l610 = alg(6, &[(1, 2, 3), (1, 3, 6), (4, 5, 6)]);
        assert_eq!(epicenter(&l610), Subspace::span(6, vec![unit(6, 5)]));
        assert_eq!(exterior_center(&l610), epicenter(&l610));
        let a27 = alg(7, &[(1, 2, 6), (1, 4, 7), (3, 5, 7)]);
        let b27 = alg(7, &[(1, 2, 6), (3, 4, 6), (1, 5, 7), (2, 3, 7)]);
        assert!(!is_capable(&a27));
        assert!(is_capable(&b27));
        assert!(is_capable(&LieAlgebra::heisenberg(1)));
        assert!(!is_capable(&LieAlgebra::heisenberg(2)));
        assert!(is_capable(&LieAlgebra::abelian(3)));
    }

    #[test]
    fn square_dimensions() {
        assert_eq!(dim_exterior_square(&LieAlgebra::abelian(6)), 15);
        let h1a4 = LieAlgebra::direct_sum(&LieAlgebra::heisenberg(1), &LieAlgebra::abelian(4));
        assert_eq!(dim_exterior_square(&h1a4), 17);
        assert_eq!(dim_exterior_square(&LieAlgebra::heisenberg(1)), 3);
        for n in 0..5 {
            let a = LieAlgebra::abelian(n);
            assert_eq!(dim_tensor_square(&a), n * n);
            assert_eq!(dim_square_part(&a), n * (n + 1) / 2);
        }
        assert_eq!(dim_tensor_square(&LieAlgebra::heisenberg(1)), 6);
        assert_eq!(dim_tensor_square(&alg(5, &[(1, 2, 4), (1, 3, 5)])), 14);
    }

    #[test]
    fn quotient_exterior_examples() {
        let l610 = alg(6, &[(1, 2, 3), (1, 3, 6), (4, 5, 6)]);
        assert_eq!(dim_exterior_square(&l610), 8);
        assert!(quotient_exterior_check(&l610).unwrap());
        let l157 = alg(7, &[(1, 2, 3), (1, 3, 7), (2, 4, 7), (5, 6, 7)]);
        assert!(quotient_exterior_check(&l157).unwrap());
        assert!(quotient_exterior_check(&LieAlgebra::heisenberg(1)).unwrap());
        assert!(quotient_exterior_check(&LieAlgebra::abelian(2)).is_err());
    }
}
