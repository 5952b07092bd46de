//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Brackets are stored for basis pairs `i < j` only; antisymmetry is
//! synthesised on lookup. Every constructor that takes outside data checks
//! the Jacobi identity on all basis triples and that the lower central series
//! reaches zero.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, is_zero_vec, unit, Matrix, Scalar};

pub type Vector = Vec<Scalar>;

/// Position of the pair `(i, j)`, `i < j < n`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `i < j < n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// All triples `i < j < k < n` in lexicographic order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// One printed bracket `[x_i, x_j] = sum c_k x_k`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Scalar)>,
}

impl Bracket {
    pub fn new(i: usize, j: usize, terms: Vec<(usize, Scalar)>) -> Self {
        Bracket { i, j, terms }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Sparse `[x_i, x_j]` for `i < j`, indexed by [`pair_index`]; terms are
    /// sorted by basis index and carry nonzero coefficients.
    table: Vec<Vec<(usize, Scalar)>>,
    name: Option<String>,
}

impl LieAlgebra {
    /// Validate a 1-based presentation and build the algebra.
    pub fn from_brackets(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let mut table = vec![Vec::new(); dim * dim.saturating_sub(1) / 2];
        let mut seen = vec![false; table.len()];
        for b in brackets {
            for &idx in [b.i, b.j].iter() {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if b.i >= b.j {
                return Err(Error::BadPair { i: b.i, j: b.j });
            }
            let p = pair_index(dim, b.i - 1, b.j - 1);
            if seen[p] {
                return Err(Error::DuplicatePair { i: b.i, j: b.j });
            }
            seen[p] = true;
            let mut dense = vec![Scalar::zero(); dim];
            for (k, c) in &b.terms {
                if *k == 0 || *k > dim {
                    return Err(Error::IndexOutOfRange { index: *k, dim });
                }
                dense[k - 1] += c;
            }
            table[p] = sparse(&dense);
        }
        let alg = LieAlgebra {
            dim,
            table,
            name: None,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Build from a dense 0-based bracket function and validate.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let table = pairs(dim)
            .into_iter()
            .map(|(i, j)| sparse(&f(i, j)))
            .collect();
        let alg = LieAlgebra {
            dim,
            table,
            name: None,
        };
        alg.validate()?;
        Ok(alg)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            dim: n,
            table: vec![Vec::new(); n * n.saturating_sub(1) / 2],
            name: Some(format!("A({n})")),
        }
    }

    /// `H(m)`: basis `x_1..x_{2m}, z` with `[x_{2i-1}, x_{2i}] = z`.
    pub fn heisenberg(m: usize) -> Self {
        assert!(m >= 1, "H(m) needs m >= 1");
        let n = 2 * m + 1;
        let brackets: Vec<Bracket> = (1..=m)
            .map(|i| Bracket::new(2 * i - 1, 2 * i, vec![(n, Scalar::one())]))
            .collect();
        LieAlgebra::from_brackets(n, &brackets)
            .expect("Heisenberg presentation is valid")
            .with_name(format!("H({m})"))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn validate(&self) -> Result<()> {
        if let Some((triple, defect)) = self.jacobi_defect() {
            return Err(Error::JacobiViolation {
                triple: (triple.0 + 1, triple.1 + 1, triple.2 + 1),
                defect: render_vector(&defect),
            });
        }
        self.check_nilpotent()
    }

    fn check_nilpotent(&self) -> Result<()> {
        let mut term = Subspace::full(self.dim);
        while term.dim() > 0 {
            let next = self.bracket_with_algebra(&term);
            if next.dim() == term.dim() {
                return Err(Error::NotNilpotent {
                    stable_dim: next.dim(),
                });
            }
            term = next;
        }
        Ok(())
    }

    /// First basis triple (0-based) whose Jacobi sum is nonzero, if any.
    pub fn jacobi_defect(&self) -> Option<((usize, usize, usize), Vector)> {
        for (a, b, c) in triples(self.dim) {
            let ea = unit(self.dim, a);
            let eb = unit(self.dim, b);
            let ec = unit(self.dim, c);
            let t1 = self.bracket_unchecked(&ea, &self.basis_bracket(b, c));
            let t2 = self.bracket_unchecked(&eb, &self.basis_bracket(c, a));
            let t3 = self.bracket_unchecked(&ec, &self.basis_bracket(a, b));
            let sum: Vector = (0..self.dim).map(|k| &t1[k] + &t2[k] + &t3[k]).collect();
            if !is_zero_vec(&sum) {
                return Some(((a, b, c), sum));
            }
        }
        None
    }

    fn terms(&self, i: usize, j: usize) -> (&[(usize, Scalar)], bool) {
        if i < j {
            (&self.table[pair_index(self.dim, i, j)], false)
        } else {
            (&self.table[pair_index(self.dim, j, i)], true)
        }
    }

    /// `[x_i, x_j]` as a dense vector (0-based indices).
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim];
        if i != j {
            let (terms, negate) = self.terms(i, j);
            for (k, c) in terms {
                v[*k] = if negate { -c.clone() } else { c.clone() };
            }
        }
        v
    }

    /// Nonzero structure constants as 1-based brackets.
    pub fn brackets(&self) -> Vec<Bracket> {
        pairs(self.dim)
            .into_iter()
            .zip(&self.table)
            .filter(|(_, t)| !t.is_empty())
            .map(|((i, j), t)| {
                Bracket::new(
                    i + 1,
                    j + 1,
                    t.iter().map(|(k, c)| (k + 1, c.clone())).collect(),
                )
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Bilinear extension of the basis brackets.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: w.len(),
                    context: "bracket argument".into(),
                });
            }
        }
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let (terms, negate) = self.terms(i, j);
                if terms.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in terms {
                    let t = &ab * c;
                    if negate {
                        out[*k] -= t;
                    } else {
                        out[*k] += t;
                    }
                }
            }
        }
        out
    }

    /// `ad(x_i)` as a matrix acting on column vectors: column `j` is `[x_i, x_j]`.
    pub fn adjoint(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_bracket(i, j).into_iter().enumerate() {
                m[(k, j)] = c;
            }
        }
        m
    }

    /// `[U, V]`, the span of brackets of basis vectors.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        for s in [u, v] {
            if s.ambient() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: s.ambient(),
                    context: "product_space subspace".into(),
                });
            }
        }
        let mut vecs = Vec::new();
        for a in u.basis().iter_rows() {
            for b in v.basis().iter_rows() {
                vecs.push(self.bracket_unchecked(a, b));
            }
        }
        Ok(Subspace::span(self.dim, vecs))
    }

    fn bracket_with_algebra(&self, u: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in u.basis().iter_rows() {
            for i in 0..self.dim {
                vecs.push(self.bracket_unchecked(a, &unit(self.dim, i)));
            }
        }
        Subspace::span(self.dim, vecs)
    }

    /// `L^2 = [L, L]`.
    pub fn derived(&self) -> Subspace {
        let vecs = pairs(self.dim)
            .into_iter()
            .map(|(i, j)| self.basis_bracket(i, j))
            .collect();
        Subspace::span(self.dim, vecs)
    }

    /// `gamma_1 = L, gamma_{i+1} = [gamma_i, L]`, ending with the zero term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("series is nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = self.bracket_with_algebra(last);
            assert!(next.dim() < last.dim(), "validated algebra is nilpotent");
            series.push(next);
        }
        series
    }

    /// Nilpotency class: the last index `c` with `gamma_c != 0` (0 for the
    /// zero algebra).
    pub fn class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    /// Elements `v` with `[v, x_i]` in `modulo` for every basis vector.
    fn centralizer_mod(&self, modulo: &Subspace) -> Subspace {
        let n = self.dim;
        let free = modulo.non_pivot_columns();
        // Linear map v -> (reduce([v, x_i]) restricted to non-pivot coords)_i.
        let mut rows = Vec::with_capacity(n * free.len());
        for i in 0..n {
            let images: Vec<Vector> = (0..n)
                .map(|j| modulo.reduce(&self.basis_bracket(j, i)))
                .collect();
            for &k in &free {
                rows.push((0..n).map(|j| images[j][k].clone()).collect());
            }
        }
        let m = Matrix::from_rows(n, rows).expect("rows have ambient length");
        Subspace::span(n, m.nullspace_basis())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_mod(&Subspace::zero(self.dim))
    }

    /// `Z_0 = 0, Z_{k+1}/Z_k = Z(L/Z_k)`, starting at `Z_1` and ending at `L`.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = Vec::new();
        let mut current = Subspace::zero(self.dim);
        while current.dim() < self.dim {
            let next = self.centralizer_mod(&current);
            assert!(next.dim() > current.dim(), "validated algebra is nilpotent");
            series.push(next.clone());
            current = next;
        }
        series
    }

    pub fn is_ideal(&self, i: &Subspace) -> bool {
        self.bracket_with_algebra(i).is_subspace_of(i)
    }

    pub fn is_central(&self, i: &Subspace) -> bool {
        self.bracket_with_algebra(i).dim() == 0
    }

    /// `L / I` on the standard basis vectors at the non-pivot columns of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, QuotientMap)> {
        if ideal.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient(),
                context: "quotient ideal".into(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let keep = ideal.non_pivot_columns();
        let m = keep.len();
        let mut proj = Matrix::zeros(m, self.dim);
        for j in 0..self.dim {
            let r = ideal.reduce(&unit(self.dim, j));
            for (a, &k) in keep.iter().enumerate() {
                proj[(a, j)] = r[k].clone();
            }
        }
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.reduce(v);
            keep.iter().map(|&k| r[k].clone()).collect()
        };
        let target = LieAlgebra {
            dim: m,
            table: pairs(m)
                .into_iter()
                .map(|(a, b)| sparse(&project(&self.basis_bracket(keep[a], keep[b]))))
                .collect(),
            name: None,
        };
        let map = QuotientMap {
            source: self.clone(),
            target: target.clone(),
            matrix: proj,
        };
        Ok((target, map))
    }

    /// Block-diagonal sum; the basis of `b` follows the basis of `a`.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let n = a.dim + b.dim;
        let mut table = vec![Vec::new(); n * n.saturating_sub(1) / 2];
        for (p, (i, j)) in pairs(a.dim).into_iter().enumerate() {
            table[pair_index(n, i, j)] = a.table[p].clone();
        }
        for (p, (i, j)) in pairs(b.dim).into_iter().enumerate() {
            table[pair_index(n, i + a.dim, j + a.dim)] = b.table[p]
                .iter()
                .map(|(k, c)| (k + a.dim, c.clone()))
                .collect();
        }
        let name = match (a.name(), b.name()) {
            (Some(x), Some(y)) => Some(format!("{x}⊕{y}")),
            _ => None,
        };
        LieAlgebra {
            dim: n,
            table,
            name,
        }
    }

    /// Quotient of `a ⊕ b` by `span{(u, -v)}` over the identified pairs.
    pub fn central_product(
        a: &LieAlgebra,
        b: &LieAlgebra,
        identify: &[(Vector, Vector)],
    ) -> Result<LieAlgebra> {
        let za = a.center();
        let zb = b.center();
        let mut gens = Vec::with_capacity(identify.len());
        for (u, v) in identify {
            if u.len() != a.dim || v.len() != b.dim {
                return Err(Error::DimensionMismatch {
                    expected: a.dim + b.dim,
                    found: u.len() + v.len(),
                    context: "central product identification".into(),
                });
            }
            if !za.contains(u) || !zb.contains(v) {
                return Err(Error::NotCentral);
            }
            let mut w = u.clone();
            w.extend(v.iter().map(|x| -x.clone()));
            gens.push(w);
        }
        let us: Vec<Vector> = identify.iter().map(|(u, _)| u.clone()).collect();
        let vs: Vec<Vector> = identify.iter().map(|(_, v)| v.clone()).collect();
        if Subspace::span(a.dim, us).dim() != identify.len()
            || Subspace::span(b.dim, vs).dim() != identify.len()
        {
            return Err(Error::DependentIdentification);
        }
        let sum = LieAlgebra::direct_sum(a, b);
        let kernel = Subspace::span(sum.dim, gens);
        let (q, _) = sum.quotient(&kernel)?;
        let name = match (a.name(), b.name()) {
            (Some(x), Some(y)) if !identify.is_empty() => Some(format!("{x}∔{y}")),
            (Some(x), Some(y)) => Some(format!("{x}⊕{y}")),
            _ => None,
        };
        Ok(LieAlgebra { name, ..q })
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}", self.name.as_deref().unwrap_or("?"))?;
        write!(f, ", dim {}", self.dim)?;
        for b in self.brackets() {
            let terms: Vec<String> = b
                .terms
                .iter()
                .map(|(k, c)| format!("{}*x{k}", format_rational(c)))
                .collect();
            write!(f, ", [x{},x{}]={}", b.i, b.j, terms.join("+"))?;
        }
        write!(f, ")")
    }
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

pub fn render_vector(v: &[Scalar]) -> String {
    let cells: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", cells.join(", "))
}

/// A subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Self {
        let m = Matrix::from_rows(ambient, vectors).expect("vectors have ambient length");
        let e = m.echelon();
        Subspace {
            basis: e.basis(),
            pivots: e.pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.iter_rows().map(<[Scalar]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&j| !is_pivot[j]).collect()
    }

    /// `v` minus the combination of basis rows that clears every pivot
    /// column; zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter_rows().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient() && is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter_rows().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Subspace::span(self.ambient(), vecs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.ambient();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(n);
        }
        // Solve sum_r s_r u_r - sum_t t_t v_t = 0 for (s, t).
        let mut m = Matrix::zeros(n, a + b);
        for (r, row) in self.basis.iter_rows().enumerate() {
            for k in 0..n {
                m[(k, r)] = row[k].clone();
            }
        }
        for (t, row) in other.basis.iter_rows().enumerate() {
            for k in 0..n {
                m[(k, a + t)] = -row[k].clone();
            }
        }
        let vecs = m
            .nullspace_basis()
            .into_iter()
            .map(|sol| {
                let mut v = vec![Scalar::zero(); n];
                for (r, row) in self.basis.iter_rows().enumerate() {
                    if sol[r].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        v[k] += &sol[r] * &row[k];
                    }
                }
                v
            })
            .collect();
        Subspace::span(n, vecs)
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vecs = self
            .basis
            .iter_rows()
            .map(|r| map.mul_vec(r).expect("map width matches ambient"))
            .collect();
        Subspace::span(map.rows(), vecs)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.iter_rows().map(render_vector).collect();
        write!(f, "Subspace<{}>[{}]", self.ambient(), rows.join(", "))
    }
}

/// A surjective bracket-preserving linear map `source -> target`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source: LieAlgebra,
    pub target: LieAlgebra,
    /// `dim(target) x dim(source)`, acting on column vectors.
    pub matrix: Matrix,
}

impl QuotientMap {
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v).expect("vector has source dimension")
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.source.dim(), self.matrix.nullspace_basis())
    }

    /// `pi[x_i, x_j] = [pi x_i, pi x_j]` on every basis pair, and full row rank.
    pub fn is_compatible(&self) -> bool {
        let n = self.source.dim();
        if self.matrix.rank() != self.target.dim() {
            return false;
        }
        pairs(n).into_iter().all(|(i, j)| {
            let lhs = self.apply(&self.source.basis_bracket(i, j));
            let rhs = self
                .target
                .bracket_unchecked(&self.apply(&unit(n, i)), &self.apply(&unit(n, j)));
            lhs == rhs
        })
    }
}

/// Isomorphism-invariant data used to match algebras without an isomorphism
/// test. Equal fingerprints are necessary, not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub lower_central_dims: Vec<usize>,
    pub upper_central_dims: Vec<usize>,
    pub dim_multiplier: usize,
    pub dim_center_in_derived: usize,
}

pub fn structural_invariants(l: &LieAlgebra) -> Fingerprint {
    let lcs = l.lower_central_series();
    let ucs = l.upper_central_series();
    Fingerprint {
        dim: l.dim(),
        lower_central_dims: lcs.iter().map(Subspace::dim).collect(),
        upper_central_dims: ucs.iter().map(Subspace::dim).collect(),
        dim_multiplier: crate::multiplier::dim_multiplier(l),
        dim_center_in_derived: l.center().intersection(&l.derived()).dim(),
    }
}
