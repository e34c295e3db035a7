//! Structure tensors, ω-forms and the two algebra kinds built from them.
//!
//! An ω-Lie algebra is an antisymmetric bracket whose Jacobiator equals
//! `ω(x,y)z + ω(y,z)x + ω(z,x)y`. An ω-left-symmetric algebra is a
//! product with `(xy)z - x(yz) - (yx)z + y(xz) = ω(x,y)z`. The checkers
//! here return full residual reports so that a failing input can be traced
//! to the offending basis triple or pair.

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldKind};
use crate::linalg::{dot, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("omega form is not antisymmetric at ({0}, {1})")]
    OmegaNotAntisymmetric(usize, usize),
    #[error("bracket fails the omega-Lie axioms: {0}")]
    NotOmegaLie(Box<LieReport>),
    #[error("product fails the omega-left-symmetric identity: {0}")]
    NotOmegaLsa(Box<LsaReport>),
    #[error("basis change matrix is singular")]
    SingularBasisChange,
}

/// Coefficients `c[i][j][k]`: the coordinate of `e_k` in `e_i ∘ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    kind: FieldKind,
    coeffs: Vec<FieldElement>,
}

impl StructureTensor {
    pub fn zero(dim: usize, kind: FieldKind) -> Self {
        StructureTensor {
            dim,
            kind,
            coeffs: vec![FieldElement::zero(kind); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.coeffs[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: FieldElement) {
        let at = self.idx(i, j, k);
        self.kind = self.kind.join(value.kind());
        self.coeffs[at] = value;
    }

    /// `e_i ∘ e_j` in coordinates.
    pub fn pair(&self, i: usize, j: usize) -> Vec<FieldElement> {
        let at = self.idx(i, j, 0);
        self.coeffs[at..at + self.dim].to_vec()
    }

    pub fn set_pair(&mut self, i: usize, j: usize, v: &[FieldElement]) {
        for (k, x) in v.iter().enumerate() {
            self.set(i, j, k, x.clone());
        }
    }

    /// Bilinear extension: `u ∘ v` for coordinate vectors.
    pub fn apply(&self, u: &[FieldElement], v: &[FieldElement]) -> Vec<FieldElement> {
        let n = self.dim;
        let mut out = vec![FieldElement::zero(self.kind); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// `c[i][j][k] - c[j][i][k]`
    pub fn antisymmetrized(&self) -> StructureTensor {
        let n = self.dim;
        let mut out = StructureTensor::zero(n, self.kind);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set(i, j, k, self.get(i, j, k) - self.get(j, i, k));
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&FieldElement) -> FieldElement, kind: FieldKind) -> StructureTensor {
        StructureTensor {
            dim: self.dim,
            kind,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.coeffs
    }
}

/// Antisymmetric bilinear form stored as a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaForm {
    entries: Matrix,
}

impl OmegaForm {
    pub fn zero(dim: usize, kind: FieldKind) -> Self {
        OmegaForm {
            entries: Matrix::zeros(dim, dim, kind),
        }
    }

    pub fn new(entries: Matrix) -> Result<Self, AlgebraError> {
        if entries.rows() != entries.cols() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "omega form is {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let n = entries.rows();
        for i in 0..n {
            for j in i..n {
                if entries[(i, j)] != -&entries[(j, i)] {
                    return Err(AlgebraError::OmegaNotAntisymmetric(i, j));
                }
            }
        }
        Ok(OmegaForm { entries })
    }

    /// Set `ω(e_i, e_j) = value` and `ω(e_j, e_i) = -value`.
    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        self.entries[(j, i)] = -&value;
        self.entries[(i, j)] = value;
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[(i, j)]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn eval(&self, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        let wv = self.entries.mul_vec(v);
        dot(u, &wv, self.entries.kind().join(wv.first().map_or(FieldKind::Rational, |x| x.kind())))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }
}

/// Residual of one basis triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleResidual {
    pub triple: (usize, usize, usize),
    pub residual: Vec<FieldElement>,
}

impl TripleResidual {
    pub fn is_zero(&self) -> bool {
        self.residual.iter().all(FieldElement::is_zero)
    }
}

/// Outcome of [`OmegaLieAlgebra::check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieReport {
    /// Pairs `(i, j)`, `i <= j`, where `[e_i, e_j] != -[e_j, e_i]`.
    pub antisymmetry_violations: Vec<(usize, usize)>,
    /// One entry per unordered triple `i < j < k`.
    pub triples: Vec<TripleResidual>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry_violations.is_empty() && self.triples.iter().all(TripleResidual::is_zero)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TripleResidual> {
        self.triples.iter().filter(|t| !t.is_zero())
    }
}

impl std::fmt::Display for LieReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some((i, j)) = self.antisymmetry_violations.first() {
            return write!(f, "bracket not antisymmetric at ({i}, {j})");
        }
        match self.failures().next() {
            Some(t) => write!(f, "nonzero residual on triple {:?}", t.triple),
            None => write!(f, "passed"),
        }
    }
}

/// Outcome of [`OmegaLsaAlgebra::check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LsaReport {
    /// Entries for ordered triples `(i, j, k)` with `i < j`.
    pub triples: Vec<TripleResidual>,
}

impl LsaReport {
    pub fn passed(&self) -> bool {
        self.triples.iter().all(TripleResidual::is_zero)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TripleResidual> {
        self.triples.iter().filter(|t| !t.is_zero())
    }
}

impl std::fmt::Display for LsaReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.failures().next() {
            Some(t) => write!(f, "nonzero residual on triple {:?}", t.triple),
            None => write!(f, "passed"),
        }
    }
}

/// Residual matrix of the module identity on one basis pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairResidual {
    pub pair: (usize, usize),
    pub residual: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub pairs: Vec<PairResidual>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.residual.is_zero())
    }
}

fn unit(n: usize, i: usize, kind: FieldKind) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::zero(kind); n];
    v[i] = FieldElement::one(kind);
    v
}

fn axpy(acc: &mut [FieldElement], s: &FieldElement, v: &[FieldElement]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

fn check_dims(dim: usize, names: usize, tensor: &StructureTensor, omega: &OmegaForm) -> Result<(), AlgebraError> {
    if tensor.dim() != dim || omega.dim() != dim || names != dim {
        return Err(AlgebraError::DimensionMismatch(format!(
            "dim {dim}, {names} basis names, tensor dim {}, omega dim {}",
            tensor.dim(),
            omega.dim()
        )));
    }
    Ok(())
}

/// A vector space with an antisymmetric bracket and an ω form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaLieAlgebra {
    basis_names: Vec<String>,
    bracket: StructureTensor,
    omega: OmegaForm,
}

impl OmegaLieAlgebra {
    /// Build and validate; an axiom failure comes back with its report.
    pub fn new(basis_names: Vec<String>, bracket: StructureTensor, omega: OmegaForm) -> Result<Self, AlgebraError> {
        let candidate = Self::unchecked(basis_names, bracket, omega)?;
        let report = candidate.check()?;
        if !report.passed() {
            return Err(AlgebraError::NotOmegaLie(Box::new(report)));
        }
        Ok(candidate)
    }

    /// Build without running the axiom checker (dimensions still checked).
    pub fn unchecked(basis_names: Vec<String>, bracket: StructureTensor, omega: OmegaForm) -> Result<Self, AlgebraError> {
        check_dims(bracket.dim(), basis_names.len(), &bracket, &omega)?;
        Ok(OmegaLieAlgebra {
            basis_names,
            bracket,
            omega,
        })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn kind(&self) -> FieldKind {
        self.bracket.kind().join(self.omega.matrix().kind())
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket(&self) -> &StructureTensor {
        &self.bracket
    }

    pub fn omega(&self) -> &OmegaForm {
        &self.omega
    }

    /// `[e_i, e_j]`
    pub fn bracket_of(&self, i: usize, j: usize) -> Vec<FieldElement> {
        self.bracket.pair(i, j)
    }

    /// Antisymmetry plus the ω-Jacobi residual of every unordered triple.
    ///
    /// Both sides of the ω-Jacobi identity alternate in `(x, y, z)` once
    /// the bracket is antisymmetric, so triples with `i < j < k` suffice.
    pub fn check(&self) -> Result<LieReport, AlgebraError> {
        check_dims(self.dim(), self.basis_names.len(), &self.bracket, &self.omega)?;
        let n = self.dim();
        let kind = self.kind();
        let mut antisymmetry_violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ok = (0..n).all(|k| *self.bracket.get(i, j, k) == -self.bracket.get(j, i, k));
                if !ok {
                    antisymmetry_violations.push((i, j));
                }
            }
        }
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = self.jacobi_residual(i, j, k, kind);
                    triples.push(TripleResidual {
                        triple: (i, j, k),
                        residual,
                    });
                }
            }
        }
        Ok(LieReport {
            antisymmetry_violations,
            triples,
        })
    }

    fn jacobi_residual(&self, i: usize, j: usize, k: usize, kind: FieldKind) -> Vec<FieldElement> {
        let n = self.dim();
        let (ei, ej, ek) = (unit(n, i, kind), unit(n, j, kind), unit(n, k, kind));
        let b = &self.bracket;
        let mut res = b.apply(&b.pair(i, j), &ek);
        for (x, y) in res.iter_mut().zip(b.apply(&b.pair(j, k), &ei)) {
            *x += &y;
        }
        for (x, y) in res.iter_mut().zip(b.apply(&b.pair(k, i), &ej)) {
            *x += &y;
        }
        let w = &self.omega;
        axpy(&mut res, &-w.get(i, j), &ek);
        axpy(&mut res, &-w.get(j, k), &ei);
        axpy(&mut res, &-w.get(k, i), &ej);
        res
    }

    /// RREF basis of `span{[e_i, e_j] : i < j}`.
    pub fn derived_subalgebra(&self) -> Vec<Vec<FieldElement>> {
        let n = self.dim();
        let kind = self.kind();
        let rows: Vec<Vec<FieldElement>> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_of(i, j))
            .collect();
        if rows.is_empty() {
            return Vec::new();
        }
        let red = Matrix::from_rows(rows, n, kind).rref();
        (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect()
    }

    /// `[L, L] = L`
    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().len() == self.dim()
    }

    /// Transport to the basis `e'_i = sum_r t[r][i] e_r` (columns of `t`).
    pub fn basis_change(&self, t: &Matrix, new_names: Option<Vec<String>>) -> Result<OmegaLieAlgebra, AlgebraError> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "basis change is {}x{}, algebra has dimension {n}",
                t.rows(),
                t.cols()
            )));
        }
        let inv = t.inverse().ok_or(AlgebraError::SingularBasisChange)?;
        let kind = self.kind().join(t.kind());
        let cols: Vec<Vec<FieldElement>> = (0..n).map(|i| t.column(i)).collect();
        let mut bracket = StructureTensor::zero(n, kind);
        let mut omega = OmegaForm::zero(n, kind);
        for i in 0..n {
            for j in 0..n {
                let old = self.bracket.apply(&cols[i], &cols[j]);
                bracket.set_pair(i, j, &inv.mul_vec(&old));
                if i < j {
                    omega.set(i, j, self.omega.eval(&cols[i], &cols[j]));
                }
            }
        }
        let names = new_names.unwrap_or_else(|| self.basis_names.clone());
        OmegaLieAlgebra::new(names, bracket, omega)
    }

    /// Substitute `alpha = at` in every coefficient.
    pub fn specialize(&self, at: &num_rational::BigRational) -> Result<OmegaLieAlgebra, crate::field::FieldError> {
        let kind = FieldKind::Rational;
        let n = self.dim();
        let mut bracket = StructureTensor::zero(n, kind);
        let mut omega = OmegaForm::zero(n, kind);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    bracket.set(i, j, k, self.bracket.get(i, j, k).specialize(at)?);
                }
                if i < j {
                    omega.set(i, j, self.omega.get(i, j).specialize(at)?);
                }
            }
        }
        Ok(OmegaLieAlgebra {
            basis_names: self.basis_names.clone(),
            bracket,
            omega,
        })
    }
}

/// A vector space with a product satisfying the ω-left-symmetric identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaLsaAlgebra {
    basis_names: Vec<String>,
    product: StructureTensor,
    omega: OmegaForm,
}

impl OmegaLsaAlgebra {
    pub fn new(basis_names: Vec<String>, product: StructureTensor, omega: OmegaForm) -> Result<Self, AlgebraError> {
        let candidate = Self::unchecked(basis_names, product, omega)?;
        let report = candidate.check()?;
        if !report.passed() {
            return Err(AlgebraError::NotOmegaLsa(Box::new(report)));
        }
        Ok(candidate)
    }

    pub fn unchecked(basis_names: Vec<String>, product: StructureTensor, omega: OmegaForm) -> Result<Self, AlgebraError> {
        check_dims(product.dim(), basis_names.len(), &product, &omega)?;
        Ok(OmegaLsaAlgebra {
            basis_names,
            product,
            omega,
        })
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn kind(&self) -> FieldKind {
        self.product.kind().join(self.omega.matrix().kind())
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn product(&self) -> &StructureTensor {
        &self.product
    }

    pub fn omega(&self) -> &OmegaForm {
        &self.omega
    }

    /// Residual of `(xy)z - x(yz) - (yx)z + y(xz) - ω(x,y)z` on basis triples.
    ///
    /// The left side is antisymmetric in `(x, y)`, so ordered triples with
    /// `i < j` and any `k` are enough.
    pub fn check(&self) -> Result<LsaReport, AlgebraError> {
        check_dims(self.dim(), self.basis_names.len(), &self.product, &self.omega)?;
        let n = self.dim();
        let kind = self.kind();
        let p = &self.product;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xy = p.pair(i, j);
                let yx = p.pair(j, i);
                for k in 0..n {
                    let ek = unit(n, k, kind);
                    let mut res = p.apply(&xy, &ek);
                    let x_yz = p.apply(&unit(n, i, kind), &p.pair(j, k));
                    let yx_z = p.apply(&yx, &ek);
                    let y_xz = p.apply(&unit(n, j, kind), &p.pair(i, k));
                    for (r, ((a, b), c)) in res.iter_mut().zip(x_yz.iter().zip(&yx_z).zip(&y_xz)) {
                        *r -= a;
                        *r -= b;
                        *r += c;
                    }
                    axpy(&mut res, &-self.omega.get(i, j), &ek);
                    triples.push(TripleResidual {
                        triple: (i, j, k),
                        residual: res,
                    });
                }
            }
        }
        Ok(LsaReport { triples })
    }

    /// The ω-Lie algebra with bracket `xy - yx` and the same ω.
    pub fn commutator_algebra(&self) -> Result<OmegaLieAlgebra, AlgebraError> {
        let report = self.check()?;
        if !report.passed() {
            return Err(AlgebraError::NotOmegaLsa(Box::new(report)));
        }
        Ok(OmegaLieAlgebra {
            basis_names: self.basis_names.clone(),
            bracket: self.product.antisymmetrized(),
            omega: self.omega.clone(),
        })
    }

    /// Matrix of `v -> e_i v`; column `j` holds `e_i e_j`.
    pub fn left_mult(&self, i: usize) -> Result<Matrix, AlgebraError> {
        let n = self.dim();
        if i >= n {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim: n });
        }
        Ok(left_mult_matrix(&self.product, i))
    }

    /// `l_[e_i,e_j] - [l_i, l_j] - ω(e_i,e_j) id` for every pair `i < j`.
    pub fn check_module_identity(&self) -> ModuleReport {
        let n = self.dim();
        let kind = self.kind();
        let ls: Vec<Matrix> = (0..n).map(|i| left_mult_matrix(&self.product, i)).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let br: Vec<FieldElement> = (0..n)
                    .map(|k| self.product.get(i, j, k) - self.product.get(j, i, k))
                    .collect();
                let mut l_br = Matrix::zeros(n, n, kind);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        l_br = l_br.add(&ls[k].scale(c));
                    }
                }
                let residual = l_br
                    .sub(&ls[i].commutator(&ls[j]))
                    .sub(&Matrix::scalar(n, self.omega.get(i, j).clone()).scale(&FieldElement::one(kind)));
                pairs.push(PairResidual {
                    pair: (i, j),
                    residual,
                });
            }
        }
        ModuleReport { pairs }
    }
}

pub(crate) fn left_mult_matrix(product: &StructureTensor, i: usize) -> Matrix {
    let n = product.dim();
    let mut m = Matrix::zeros(n, n, product.kind());
    for j in 0..n {
        for k in 0..n {
            m[(k, j)] = product.get(i, j, k).clone();
        }
    }
    m
}

/// Whether `product` (with `lie`'s ω) is an ω-left-symmetric structure whose
/// commutator is exactly `lie`'s bracket.
pub fn verify_witness(lie: &OmegaLieAlgebra, product: &StructureTensor) -> bool {
    if product.dim() != lie.dim() {
        return false;
    }
    let Ok(lsa) = OmegaLsaAlgebra::new(lie.basis_names().to_vec(), product.clone(), lie.omega().clone()) else {
        return false;
    };
    match lsa.commutator_algebra() {
        Ok(c) => c.bracket().values() == lie.bracket().values(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn a_alpha(omega_yz: FieldElement) -> OmegaLieAlgebra {
        let k = FieldKind::RationalFunction;
        let one = FieldElement::one(k);
        let z = FieldElement::zero(k);
        let mut b = StructureTensor::zero(3, k);
        let mut put = |i: usize, j: usize, v: Vec<FieldElement>| {
            b.set_pair(i, j, &v);
            let neg: Vec<FieldElement> = v.iter().map(|x| -x).collect();
            b.set_pair(j, i, &neg);
        };
        put(0, 1, vec![one.clone(), z.clone(), z.clone()]);
        put(0, 2, vec![one.clone(), one.clone(), z.clone()]);
        put(1, 2, vec![FieldElement::alpha(), z.clone(), one.clone()]);
        let mut w = OmegaForm::zero(3, k);
        w.set(1, 2, omega_yz);
        OmegaLieAlgebra::unchecked(names(&["x", "y", "z"]), b, w).unwrap()
    }

    #[test]
    fn a_alpha_passes() {
        let l = a_alpha(FieldElement::from_int(FieldKind::RationalFunction, -1));
        let r = l.check().unwrap();
        assert!(r.passed());
        assert_eq!(r.triples.len(), 1);
        assert!(l.is_perfect());
    }

    #[test]
    fn a_alpha_with_flipped_omega_fails_with_minus_two_x() {
        let k = FieldKind::RationalFunction;
        let l = a_alpha(FieldElement::from_int(k, 1));
        let r = l.check().unwrap();
        assert!(!r.passed());
        let t = &r.triples[0];
        assert_eq!(t.triple, (0, 1, 2));
        assert_eq!(
            t.residual,
            vec![FieldElement::from_int(k, -2), FieldElement::zero(k), FieldElement::zero(k)]
        );
        assert!(matches!(
            OmegaLieAlgebra::new(l.basis_names().to_vec(), l.bracket().clone(), l.omega().clone()),
            Err(AlgebraError::NotOmegaLie(_))
        ));
    }

    #[test]
    fn abelian_is_lie_but_not_perfect() {
        let k = FieldKind::Rational;
        for n in 0..4 {
            let l = OmegaLieAlgebra::new(
                (0..n).map(|i| format!("e{i}")).collect(),
                StructureTensor::zero(n, k),
                OmegaForm::zero(n, k),
            )
            .unwrap();
            assert!(l.derived_subalgebra().is_empty());
            assert_eq!(l.is_perfect(), n == 0);
        }
    }

    #[test]
    fn zero_product_lsa() {
        let k = FieldKind::Rational;
        let a = OmegaLsaAlgebra::new(names(&["a", "b"]), StructureTensor::zero(2, k), OmegaForm::zero(2, k)).unwrap();
        assert!(a.check_module_identity().passed());
        assert!(a.left_mult(1).unwrap().is_zero());
        assert!(matches!(a.left_mult(2), Err(AlgebraError::IndexOutOfRange { .. })));
        let c = a.commutator_algebra().unwrap();
        assert!(c.bracket().values().iter().all(FieldElement::is_zero));

        let mut w = OmegaForm::zero(2, k);
        w.set(0, 1, FieldElement::one(k));
        let bad = OmegaLsaAlgebra::unchecked(names(&["a", "b"]), StructureTensor::zero(2, k), w).unwrap();
        let r = bad.check().unwrap();
        assert!(!r.passed());
        // (e0, e1, e0): residual is -ω(e0,e1) e0
        assert_eq!(r.triples[0].residual[0], FieldElement::from_int(k, -1));
        assert!(!bad.check_module_identity().passed());
        assert!(bad.commutator_algebra().is_err());
    }

    #[test]
    fn omega_must_be_antisymmetric() {
        let m = Matrix::from_ints(&[&[0, 1], &[1, 0]], FieldKind::Rational);
        assert_eq!(OmegaForm::new(m), Err(AlgebraError::OmegaNotAntisymmetric(0, 1)));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let k = FieldKind::Rational;
        let err = OmegaLieAlgebra::unchecked(names(&["x"]), StructureTensor::zero(2, k), OmegaForm::zero(2, k));
        assert!(matches!(err, Err(AlgebraError::DimensionMismatch(_))));
    }

    #[test]
    fn identity_basis_change_is_noop() {
        let l = a_alpha(FieldElement::from_int(FieldKind::RationalFunction, -1));
        let same = l
            .basis_change(&Matrix::identity(3, FieldKind::RationalFunction), None)
            .unwrap();
        assert_eq!(same, l);
        let singular = Matrix::zeros(3, 3, FieldKind::Rational);
        assert_eq!(l.basis_change(&singular, None), Err(AlgebraError::SingularBasisChange));
    }
}
