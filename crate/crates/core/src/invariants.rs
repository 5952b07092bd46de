//! The `s` and `t` invariants and instance checks of the known multiplier
//! bounds.

use serde::Serialize;

use crate::algebra::{binomial, LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::unit;
use crate::multiplier::{dim_multiplier, is_capable};

/// `s(L) = (n-1)(n-2)/2 + 1 - dim M(L)`; only defined for non-abelian `L`.
pub fn s_invariant(l: &LieAlgebra) -> Result<i64> {
    if l.is_abelian() {
        return Err(Error::AbelianInput);
    }
    Ok(s_from(l.dim(), dim_multiplier(l)))
}

pub fn s_from(n: usize, dim_m: usize) -> i64 {
    let n = n as i64;
    (n - 1) * (n - 2) / 2 + 1 - dim_m as i64
}

/// `t(L) = n(n-1)/2 - dim M(L)`.
pub fn t_invariant(l: &LieAlgebra) -> i64 {
    binomial(l.dim(), 2) as i64 - dim_multiplier(l) as i64
}

/// One instance of an inequality `lhs <= rhs` (or `lhs < rhs` when
/// `strict`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub id: String,
    pub lhs: i64,
    pub rhs: i64,
    pub strict: bool,
    pub holds: bool,
    pub tight: bool,
}

impl BoundCheck {
    fn le(id: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        BoundCheck {
            id: id.into(),
            lhs,
            rhs,
            strict: false,
            holds: lhs <= rhs,
            tight: lhs == rhs,
        }
    }

    fn lt(id: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        BoundCheck {
            id: id.into(),
            lhs,
            rhs,
            strict: true,
            holds: lhs < rhs,
            tight: lhs + 1 == rhs,
        }
    }
}

/// `dim M(L) <= (n+m-2)(n-m-1)/2 + 1` for `m = dim L² >= 1`.
pub fn multiplier_upper_bound(l: &LieAlgebra) -> Result<BoundCheck> {
    let m = l.derived().dim() as i64;
    if m == 0 {
        return Err(Error::PreconditionNotMet(
            "multiplier upper bound needs dim L² >= 1".into(),
        ));
    }
    let n = l.dim() as i64;
    let rhs = (n + m - 2) * (n - m - 1) / 2 + 1;
    Ok(BoundCheck::le(
        "multiplier-upper-bound",
        dim_multiplier(l) as i64,
        rhs,
    ))
}

/// `dim M(L) + dim(L² ∩ K) <= dim M(L/K) + dim M(K) + dim(L/K)^ab · dim K`
/// for a central ideal `K`.
pub fn central_ideal_bound(l: &LieAlgebra, k: &Subspace) -> Result<BoundCheck> {
    if k.ambient() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: k.ambient(),
            context: "central ideal".into(),
        });
    }
    if !l.is_central(k) {
        return Err(Error::NotCentralIdeal);
    }
    let (q, _) = l.quotient(k)?;
    let kd = k.dim();
    let lhs = dim_multiplier(l) + l.derived().intersection(k).dim();
    let q_ab = q.dim() - q.derived().dim();
    let rhs = dim_multiplier(&q) + binomial(kd, 2) + q_ab * kd;
    Ok(BoundCheck::le(
        "central-ideal-bound",
        lhs as i64,
        rhs as i64,
    ))
}

/// `n - 3 < s(L)` for non-capable `L` with `dim L² >= 2`.
pub fn noncapable_s_bound(l: &LieAlgebra) -> Result<BoundCheck> {
    if l.derived().dim() < 2 {
        return Err(Error::PreconditionNotMet("needs dim L² >= 2".into()));
    }
    if is_capable(l) {
        return Err(Error::PreconditionNotMet(
            "needs a non-capable algebra".into(),
        ));
    }
    Ok(BoundCheck::lt(
        "noncapable-s-bound",
        l.dim() as i64 - 3,
        s_invariant(l)?,
    ))
}

fn require_class3(l: &LieAlgebra, what: &str) -> Result<Vec<Subspace>> {
    let lcs = l.lower_central_series();
    if lcs.len() < 4 {
        return Err(Error::PreconditionNotMet(format!(
            "{what} needs class >= 3"
        )));
    }
    Ok(lcs)
}

/// `n - m - c <= dim M(L/γ3) - dim γ3 + dim L^ab · dim γ3 - dim M(L)`; the
/// right side is reported as `rhs`.
pub fn gamma3_defect(l: &LieAlgebra) -> Result<BoundCheck> {
    let lcs = require_class3(l, "gamma3 defect")?;
    let n = l.dim() as i64;
    let m = lcs[1].dim() as i64;
    let c = (lcs.len() - 1) as i64;
    let g3 = &lcs[2];
    let (q, _) = l.quotient(g3)?;
    let g = g3.dim() as i64;
    let defect = dim_multiplier(&q) as i64 - g + (n - m) * g - dim_multiplier(l) as i64;
    Ok(BoundCheck::le("gamma3-defect", n - m - c, defect))
}

/// `dim L³ + dim M(L) <= dim M(L/L³) + dim(L/Z2) · dim L³`.
pub fn cube_quotient_bound(l: &LieAlgebra) -> Result<BoundCheck> {
    let lcs = require_class3(l, "cube quotient bound")?;
    let l3 = &lcs[2];
    let z2 = &l.upper_central_series()[1];
    let (q, _) = l.quotient(l3)?;
    let lhs = l3.dim() + dim_multiplier(l);
    let rhs = dim_multiplier(&q) + (l.dim() - z2.dim()) * l3.dim();
    Ok(BoundCheck::le(
        "cube-quotient-bound",
        lhs as i64,
        rhs as i64,
    ))
}

/// Central ideals `⟨x_i⟩` for each basis vector lying in the center.
pub fn central_basis_lines(l: &LieAlgebra) -> Vec<(usize, Subspace)> {
    let z = l.center();
    (0..l.dim())
        .filter_map(|i| {
            let v = unit(l.dim(), i);
            z.contains(&v)
                .then(|| (i + 1, Subspace::span(l.dim(), vec![v])))
        })
        .collect()
}

/// Every bound whose preconditions hold for `l`.
pub fn bound_suite(l: &LieAlgebra) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    out.extend(multiplier_upper_bound(l).ok());
    for (i, k) in central_basis_lines(l) {
        if let Ok(mut b) = central_ideal_bound(l, &k) {
            b.id = format!("{}[x{i}]", b.id);
            out.push(b);
        }
    }
    out.extend(noncapable_s_bound(l).ok());
    out.extend(gamma3_defect(l).ok());
    out.extend(cube_quotient_bound(l).ok());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub n: usize,
    pub dim_derived: usize,
    pub class: usize,
    pub dim_m: usize,
    pub s: Option<i64>,
    pub t: i64,
    pub capable: bool,
    pub lower_central_dims: Vec<usize>,
    pub upper_central_dims: Vec<usize>,
    pub bound_checks: Vec<BoundCheck>,
}

pub fn report(l: &LieAlgebra) -> InvariantReport {
    let lcs = l.lower_central_series();
    InvariantReport {
        name: l.name().unwrap_or("unnamed").to_owned(),
        n: l.dim(),
        dim_derived: l.derived().dim(),
        class: lcs.len() - 1,
        dim_m: dim_multiplier(l),
        s: s_invariant(l).ok(),
        t: t_invariant(l),
        capable: is_capable(l),
        lower_central_dims: lcs.iter().map(Subspace::dim).collect(),
        upper_central_dims: l.upper_central_series().iter().map(Subspace::dim).collect(),
        bound_checks: bound_suite(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bracket;
    use crate::linalg::int;

    fn alg(dim: usize, br: &[(usize, usize, usize)]) -> LieAlgebra {
        let brackets: Vec<Bracket> = br
            .iter()
            .map(|&(i, j, k)| Bracket::new(i, j, vec![(k, int(1))]))
            .collect();
        LieAlgebra::from_brackets(dim, &brackets).unwrap()
    }

    fn l43() -> LieAlgebra {
        alg(4, &[(1, 2, 3), (1, 3, 4)])
    }

    fn l610() -> LieAlgebra {
        alg(6, &[(1, 2, 3), (1, 3, 6), (4, 5, 6)])
    }

    fn l618() -> LieAlgebra {
        alg(6, &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6)])
    }

    fn l626() -> LieAlgebra {
        alg(6, &[(1, 2, 4), (1, 3, 5), (2, 3, 6)])
    }

    fn line(n: usize, i: usize) -> Subspace {
        Subspace::span(n, vec![unit(n, i - 1)])
    }

    #[test]
    fn s_and_t_examples() {
        let h1a2 = LieAlgebra::direct_sum(&LieAlgebra::heisenberg(1), &LieAlgebra::abelian(2));
        assert_eq!(s_invariant(&h1a2).unwrap(), 0);
        assert_eq!(s_invariant(&alg(5, &[(1, 2, 4), (1, 3, 5)])).unwrap(), 1);
        assert_eq!(
            s_invariant(&LieAlgebra::abelian(4)),
            Err(Error::AbelianInput)
        );
        assert_eq!(t_invariant(&LieAlgebra::abelian(5)), 0);
        assert_eq!(t_invariant(&LieAlgebra::heisenberg(1)), 1);
        assert_eq!(t_invariant(&l626()), 7);
    }

    #[test]
    fn multiplier_upper_bound_examples() {
        let h1a2 = LieAlgebra::direct_sum(&LieAlgebra::heisenberg(1), &LieAlgebra::abelian(2));
        let b = multiplier_upper_bound(&h1a2).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds, b.tight), (7, 7, true, true));
        let b = multiplier_upper_bound(&alg(5, &[(1, 2, 4), (1, 3, 5)])).unwrap();
        assert_eq!((b.lhs, b.rhs, b.tight), (6, 6, true));
        let l614 = LieAlgebra::from_brackets(
            6,
            &[
                Bracket::new(1, 2, vec![(3, int(1))]),
                Bracket::new(1, 3, vec![(4, int(1))]),
                Bracket::new(1, 4, vec![(5, int(1))]),
                Bracket::new(2, 3, vec![(5, int(1))]),
                Bracket::new(2, 5, vec![(6, int(1))]),
                Bracket::new(3, 4, vec![(6, int(-1))]),
            ],
        )
        .unwrap();
        let b = multiplier_upper_bound(&l614).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds, b.tight), (2, 5, true, false));
        assert!(multiplier_upper_bound(&LieAlgebra::abelian(3)).is_err());
    }

    #[test]
    fn central_ideal_bound_examples() {
        let b = central_ideal_bound(&l626(), &line(6, 6)).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds, b.tight), (9, 9, true, true));
        let b = central_ideal_bound(&l43(), &line(4, 4)).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (3, 4, true));
        let b = central_ideal_bound(&l610(), &Subspace::zero(6)).unwrap();
        assert_eq!((b.lhs, b.rhs), (6, 6));
        assert_eq!(
            central_ideal_bound(&l43(), &line(4, 3)).unwrap_err(),
            Error::NotCentralIdeal
        );
    }

    #[test]
    fn noncapable_s_bound_examples() {
        let a27 = alg(7, &[(1, 2, 6), (1, 4, 7), (3, 5, 7)]);
        let b = noncapable_s_bound(&a27).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (4, 6, true));
        let b = noncapable_s_bound(&l610()).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (3, 5, true));
        let glued = LieAlgebra::central_product(
            &l610(),
            &LieAlgebra::heisenberg(1),
            &[(unit(6, 5), unit(3, 2))],
        )
        .unwrap();
        let b = noncapable_s_bound(&glued).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (5, 7, true));
        assert!(noncapable_s_bound(&l626()).is_err());
    }

    #[test]
    fn gamma3_defect_examples() {
        let b = gamma3_defect(&l43()).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (-1, 1, true));
        let b = gamma3_defect(&l610()).unwrap();
        assert_eq!(b.lhs, 1);
        assert!(b.holds);
        let b = gamma3_defect(&l618()).unwrap();
        assert_eq!(b.lhs, -3);
        assert!(b.holds);
        assert!(gamma3_defect(&l626()).is_err());
    }

    #[test]
    fn cube_quotient_bound_examples() {
        let b = cube_quotient_bound(&l43()).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (3, 4, true));
        let b = cube_quotient_bound(&l610()).unwrap();
        assert_eq!(b.lhs, 7);
        assert!(b.holds);
        assert!(cube_quotient_bound(&l618()).unwrap().holds);
    }

    #[test]
    fn report_fields() {
        let r = report(&l626());
        assert_eq!((r.n, r.dim_derived, r.class, r.dim_m), (6, 3, 2, 8));
        assert_eq!(r.s, Some(3));
        assert!(r.capable);
        assert!(r.bound_checks.iter().all(|b| b.holds));
        let a = report(&LieAlgebra::abelian(3));
        assert_eq!((a.s, a.t), (None, 0));
    }
}
