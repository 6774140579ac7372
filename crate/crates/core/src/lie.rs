//! Nilpotent Lie algebras given by rational structure constants.
//!
//! Basis indices are 1-based in everything a user sees (constructors, JSON,
//! violation witnesses) and 0-based in vector/matrix storage.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{dot, unit, Matrix, Subspace};
use crate::rational::{self, format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("algebra dimension must be positive")]
    ZeroDimension,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra is invalid: {0}")]
    Invalid(ValidationReport),
    #[error("malformed algebra JSON: {0}")]
    Json(String),
}

/// A point of `g*` in the basis dual to `X_1, ..., X_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Functional(#[serde(with = "rational::json_vec")] Vec<Rational>);

impl Functional {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zero(m: usize) -> Self {
        Self(vec![Rational::zero(); m])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `<ξ, x>`.
    pub fn pair(&self, x: &[Rational]) -> Rational {
        dot(&self.0, x)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self(self.0.iter().map(|c| c * t).collect())
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational::DisplayList(&self.0))
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational::DisplayList(&self.0))
    }
}

/// Structure constants `c_{ij}^k` with `[X_i, X_j] = Σ_k c_{ij}^k X_k`.
///
/// Construction does not enforce the Lie axioms; [`NilpotentAlgebra::validate`]
/// reports violations as data.
#[derive(Clone, PartialEq, Eq)]
pub struct NilpotentAlgebra {
    dim: usize,
    c: Vec<Rational>,
}

/// One violated standing assumption. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize },
    Nilpotency,
    Adaptedness { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry fails at (i,j,k) = ({i},{j},{k})")
            }
            Violation::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails for basis triple ({i},{j},{k})")
            }
            Violation::Nilpotency => write!(f, "lower central series does not reach 0"),
            Violation::Adaptedness { i, j, k } => write!(
                f,
                "span of X_1..X_{j} is not an ideal: [X_{i}, X_{j}] has X_{k} component"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when everything except possibly adaptedness holds.
    pub fn is_lie_nilpotent(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::Adaptedness { .. }))
    }

    pub fn is_adapted(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Adaptedness { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl NilpotentAlgebra {
    pub fn abelian(dim: usize) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        Ok(Self {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        })
    }

    /// Builds an algebra from generator brackets `[X_i, X_j] = Σ coeff X_k`
    /// (1-based). The mirrored bracket `[X_j, X_i]` is filled in by
    /// antisymmetry; listing a pair twice adds the contributions.
    pub fn from_brackets<I>(dim: usize, brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    {
        let mut alg = Self::abelian(dim)?;
        for (i, j, coeffs) in brackets {
            for idx in [i, j] {
                if idx == 0 || idx > dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            for (k, q) in coeffs {
                if k == 0 || k > dim {
                    return Err(LieError::IndexOutOfRange { index: k, dim });
                }
                let (a, b, k) = (i - 1, j - 1, k - 1);
                let cur = alg.coeff(a, b, k).clone();
                alg.set_raw(a, b, k, cur + &q);
                if a != b {
                    let cur = alg.coeff(b, a, k).clone();
                    alg.set_raw(b, a, k, cur - &q);
                }
            }
        }
        Ok(alg)
    }

    /// Raw dense constants, `c[i][j][k]` 0-based, no symmetrization.
    pub fn from_dense(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        if c.len() != dim {
            return Err(LieError::DimensionMismatch {
                expected: dim,
                found: c.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in c {
            if plane.len() != dim {
                return Err(LieError::DimensionMismatch {
                    expected: dim,
                    found: plane.len(),
                });
            }
            for row in plane {
                if row.len() != dim {
                    return Err(LieError::DimensionMismatch {
                        expected: dim,
                        found: row.len(),
                    });
                }
                flat.extend(row);
            }
        }
        Ok(Self { dim, c: flat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_{ij}^k`, 0-based.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Overwrites a single constant without touching its mirror.
    pub fn set_raw(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let m = self.dim;
        self.c[(i * m + j) * m + k] = v;
    }

    /// `[X_i, X_j]` as a coordinate vector, 0-based.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let m = self.dim;
        let mut out = vec![Rational::zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *o += c * &w;
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let m = self.dim;
        let mut violations = Vec::new();
        for i in 0..m {
            for j in i..m {
                for k in 0..m {
                    if *self.coeff(i, j, k) != -self.coeff(j, i, k).clone() {
                        violations.push(Violation::Antisymmetry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                for l in j + 1..m {
                    let (xi, xj, xl) = (unit(m, i), unit(m, j), unit(m, l));
                    let a = self.bracket_unchecked(&xi, &self.basis_bracket(j, l));
                    let b = self.bracket_unchecked(&xj, &self.basis_bracket(l, i));
                    let c = self.bracket_unchecked(&xl, &self.basis_bracket(i, j));
                    if a.iter()
                        .zip(&b)
                        .zip(&c)
                        .any(|((a, b), c)| !(a + b + c).is_zero())
                    {
                        violations.push(Violation::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            k: l + 1,
                        });
                    }
                }
            }
        }
        if !self
            .lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
        {
            violations.push(Violation::Nilpotency);
        }
        for i in 0..m {
            for j in 0..m {
                for k in j + 1..m {
                    if !self.coeff(i, j, k).is_zero() {
                        violations.push(Violation::Adaptedness {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Fails with the full report unless every invariant holds.
    pub fn ensure_valid(&self) -> Result<(), LieError> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(LieError::Invalid(report))
        }
    }

    /// `[A, B]` for subspaces.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                vs.push(self.bracket_unchecked(u, v));
            }
        }
        Subspace::span(self.dim, vs)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let m = self.dim;
        let mut vs = Vec::new();
        for i in 0..m {
            for j in 0..i {
                vs.push(self.basis_bracket(i, j));
            }
        }
        Subspace::span(m, vs)
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`, stopping at the first repeated term.
    /// Ends with `{0}` exactly when the algebra is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_spaces(&full, last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `{x | [x, y] ∈ below for all y}`.
    fn central_preimage(&self, below: &Subspace) -> Subspace {
        let m = self.dim;
        // columns i of block j: reduce([X_i, X_j]) modulo `below`
        let mut equations = Vec::with_capacity(m * m);
        let images: Vec<Vec<Vec<Rational>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| below.reduce(&self.basis_bracket(i, j)))
                    .collect()
            })
            .collect();
        for j in 0..m {
            for k in 0..m {
                equations.push((0..m).map(|i| images[i][j][k].clone()).collect());
            }
        }
        Subspace::solutions(m, &equations)
    }

    pub fn center(&self) -> Subspace {
        self.central_preimage(&Subspace::zero(self.dim))
    }

    /// `{0} ⊆ z(g) ⊆ z_2(g) ⊆ ...`, stopping at the first repeated term.
    /// Ends with `g` exactly when the algebra is nilpotent.
    pub fn ascending_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.dim)];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_full() {
                break;
            }
            let next = self.central_preimage(last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Change of basis: the new `X'_a` is `basis[a]` in old coordinates.
    pub fn rebase(&self, basis: &[Vec<Rational>]) -> Result<NilpotentAlgebra, LieError> {
        let m = self.dim;
        if basis.len() != m {
            return Err(LieError::DimensionMismatch {
                expected: m,
                found: basis.len(),
            });
        }
        for b in basis {
            self.check_len(b)?;
        }
        let p = Matrix::from_rows(basis.to_vec()).transpose();
        let p_inv = p.inverse().ok_or(LieError::DimensionMismatch {
            expected: m,
            found: p.rank(),
        })?;
        let mut out = NilpotentAlgebra::abelian(m)?;
        for a in 0..m {
            for b in 0..m {
                let coords = p_inv.mul_vec(&self.bracket_unchecked(&basis[a], &basis[b]));
                for (k, v) in coords.into_iter().enumerate() {
                    out.set_raw(a, b, k, v);
                }
            }
        }
        Ok(out)
    }

    /// A basis (old coordinates) refining the ascending central series:
    /// inside each layer the old basis vectors lying in the layer come first,
    /// in input order, then the layer's echelon basis.
    pub fn adapted_basis(&self) -> Result<Vec<Vec<Rational>>, LieError> {
        let series = self.ascending_central_series();
        if !series.last().is_some_and(Subspace::is_full) {
            return Err(LieError::NotNilpotent);
        }
        let m = self.dim;
        let mut chosen: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut span = Subspace::zero(m);
        for layer in &series[1..] {
            let candidates = (0..m)
                .map(|i| unit(m, i))
                .filter(|v| layer.contains(v))
                .chain(layer.basis().iter().cloned());
            for v in candidates {
                if span.dim() == layer.dim() {
                    break;
                }
                if !span.contains(&v) {
                    span = span.with_vector(v.clone());
                    chosen.push(v);
                }
            }
        }
        Ok(chosen)
    }

    /// Returns a copy whose prefix spans form a Jordan–Hölder flag of ideals.
    /// Already-adapted input comes back unchanged.
    pub fn jordan_holder_basis(&self) -> Result<NilpotentAlgebra, LieError> {
        let report = self.validate();
        if report.violations.contains(&Violation::Nilpotency) {
            return Err(LieError::NotNilpotent);
        }
        if report.is_adapted() {
            return Ok(self.clone());
        }
        let basis = self.adapted_basis()?;
        self.rebase(&basis)
    }

    /// `B_ξ(X_i, X_j) = <ξ, [X_i, X_j]>`.
    pub fn b_matrix(&self, xi: &Functional) -> Result<Matrix, LieError> {
        self.check_len(xi.coords())?;
        Ok(self.b_matrix_unchecked(xi))
    }

    pub(crate) fn b_matrix_unchecked(&self, xi: &Functional) -> Matrix {
        let m = self.dim;
        let mut b = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let start = (i * m + j) * m;
                let v = dot(&self.c[start..start + m], xi.coords());
                if !v.is_zero() {
                    b.set(i, j, v);
                }
            }
        }
        b
    }

    /// `g(ξ) = ker B_ξ`.
    pub fn stabilizer(&self, xi: &Functional) -> Result<Subspace, LieError> {
        Ok(self.b_matrix(xi)?.kernel())
    }

    /// Matrix of `ad x`: column `j` is `[x, X_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        let m = self.dim;
        let mut a = Matrix::zeros(m, m);
        for j in 0..m {
            let col = self.bracket_unchecked(x, &unit(m, j));
            for (k, v) in col.into_iter().enumerate() {
                a.set(k, j, v);
            }
        }
        Ok(a)
    }

    /// `Ad*(exp x) ξ = ξ ∘ exp(-ad x)`; `ad x` is nilpotent so the series is
    /// a finite sum.
    pub fn coadjoint_act(&self, x: &[Rational], xi: &Functional) -> Result<Functional, LieError> {
        self.check_len(xi.coords())?;
        let neg_ad = self.ad_matrix(x)?.scale(&-Rational::one());
        let m = self.dim;
        let mut exp = Matrix::identity(m);
        let mut term = Matrix::identity(m);
        for n in 1..=m {
            term = term.mul(&neg_ad).scale(&rational::ratio(1, n as i64));
            if term.is_zero() {
                break;
            }
            exp = exp.add(&term);
        }
        let coords = (0..m).map(|j| dot(xi.coords(), &exp.column(j))).collect();
        Ok(Functional::new(coords))
    }

    /// Derivative at `t = 0` of `t ↦ Ad*(exp t x) ξ`, i.e. `-ξ ∘ ad x`.
    pub fn coadjoint_tangent(
        &self,
        x: &[Rational],
        xi: &Functional,
    ) -> Result<Functional, LieError> {
        self.check_len(xi.coords())?;
        let ad = self.ad_matrix(x)?;
        let m = self.dim;
        Ok(Functional::new(
            (0..m).map(|j| -dot(xi.coords(), &ad.column(j))).collect(),
        ))
    }

    /// Tangent space of the coadjoint orbit through `ξ`, spanned by the
    /// infinitesimal action of the basis.
    pub fn orbit_tangent_space(&self, xi: &Functional) -> Result<Subspace, LieError> {
        let m = self.dim;
        let vs = (0..m)
            .map(|i| {
                self.coadjoint_tangent(&unit(m, i), xi)
                    .map(Functional::into_coords)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(m, vs))
    }

    pub fn from_json_str(s: &str) -> Result<Self, LieError> {
        let doc: AlgebraJson =
            serde_json::from_str(s).map_err(|e| LieError::Json(e.to_string()))?;
        doc.into_algebra()
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson::from_algebra(self)
    }
}

impl fmt::Debug for NilpotentAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NilpotentAlgebra(dim {}", self.dim)?;
        for i in 0..self.dim {
            for j in 0..i {
                let v = self.basis_bracket(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    write!(f, ", [X{},X{}]=", i + 1, j + 1)?;
                    let terms: Vec<String> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, q)| !q.is_zero())
                        .map(|(k, q)| format!("{}·X{}", format_rational(q), k + 1))
                        .collect();
                    write!(f, "{}", terms.join("+"))?;
                }
            }
        }
        write!(f, ")")
    }
}

/// On-disk algebra description:
/// `{"dim": m, "brackets": [{"i": i, "j": j, "coeffs": {"k": "p/q"}}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, RationalJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalJson(#[serde(with = "rational::json")] pub Rational);

impl AlgebraJson {
    pub fn into_algebra(self) -> Result<NilpotentAlgebra, LieError> {
        let dim = self.dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in self.brackets {
            if b.i == b.j {
                return Err(LieError::Json(format!(
                    "bracket [X{0}, X{0}] must be omitted",
                    b.i
                )));
            }
            let mut coeffs = Vec::with_capacity(b.coeffs.len());
            for (k, q) in b.coeffs {
                let k: usize = k.trim().parse().map_err(|_| {
                    LieError::Json(format!("coefficient key `{k}` is not an index"))
                })?;
                coeffs.push((k, q.0));
            }
            brackets.push((b.i, b.j, coeffs));
        }
        NilpotentAlgebra::from_brackets(dim, brackets)
    }

    /// Lists every nonzero `[X_i, X_j]` with `i > j`.
    pub fn from_algebra(alg: &NilpotentAlgebra) -> Self {
        let m = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in 0..i {
                let coeffs: BTreeMap<String, RationalJson> = alg
                    .basis_bracket(i, j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(k, q)| ((k + 1).to_string(), RationalJson(q)))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketJson {
                        i: i + 1,
                        j: j + 1,
                        coeffs,
                    });
                }
            }
        }
        Self { dim: m, brackets }
    }
}
