//! Left coideal subalgebras `B ⊆ H`, the quotient `C = H/B⁺H` and the actions ◁, ▷.

use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, HopfError, LinMap};
use crate::linalg::{rref, Field, Matrix, Tensor3, Vector};
use crate::report::{first_witness, Report};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoidealError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inclusion is not injective")]
    NotInjective,
    #[error("image is not a unital subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("image is not a left coideal: {0}")]
    NotCoideal(String),
    #[error("dim H = {h} but dim B · dim C = {b} · {c}")]
    DimensionLaw { h: usize, b: usize, c: usize },
    #[error("quotient certification failed: {0}")]
    Quotient(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Certified left coideal subalgebra given by its inclusion `ι: B → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    parent: HopfAlgebra,
    iota: LinMap,
    left_inverse: Matrix,
    algebra: Algebra,
    counit: Vector,
    coaction: Tensor3,
}

impl CoidealSubalgebra {
    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn iota(&self) -> &LinMap {
        &self.iota
    }

    pub fn dim(&self) -> usize {
        self.iota.cols()
    }

    pub fn field(&self) -> Field {
        self.parent.field()
    }

    /// Induced algebra structure on `B`.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// `ε|_B` in `B`-coordinates.
    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    /// `c(i, k, j)` with `Δ(ι(b_i)) = Σ c(i,k,j) e_k ⊗ ι(b_j)`.
    pub fn coaction(&self) -> &Tensor3 {
        &self.coaction
    }

    /// `Σ b₍₁₎ ⊗ b₍₂₎ ∈ H ⊗ B` as an `n × m` matrix.
    pub fn coact(&self, b: &Vector) -> Matrix {
        let (_, n, m) = self.coaction.shape();
        let mut out = Matrix::zeros(self.field(), n, m);
        for ((i, k, j), c) in self.coaction.entries() {
            out[(k, j)].add_product(c, &b[i]);
        }
        out
    }

    /// Coordinates in `B` of an element of `ι(B)`, if it lies there.
    pub fn coordinates(&self, h: &Vector) -> Option<Vector> {
        let b = self.left_inverse.apply(h);
        (self.iota.apply(&b) == *h).then_some(b)
    }

    pub fn one(&self) -> Vector {
        self.algebra.unit().clone()
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field(), self.dim(), i)
    }
}

/// Left inverse of an injective matrix, built from a maximal set of independent rows.
fn left_inverse(m: &Matrix) -> Option<Matrix> {
    let (_, rows) = rref(&m.transpose());
    if rows.len() < m.cols() {
        return None;
    }
    let picked: Vec<Vector> = rows.iter().map(|&r| m.row(r)).collect();
    let square = Matrix::from_rows(m.field(), m.cols(), &picked);
    let inv = square.inverse()?;
    let mut select = Matrix::zeros(m.field(), m.cols(), m.rows());
    for (t, &r) in rows.iter().enumerate() {
        select[(t, r)] = m.field().one();
    }
    Some(inv.mul(&select))
}

/// Verifies injectivity, the unital-subalgebra property and the left-coideal property,
/// and computes the induced structure on `B`.
pub fn certify_coideal(h: &HopfAlgebra, iota: &LinMap) -> Result<CoidealSubalgebra, CoidealError> {
    let n = h.dim();
    if iota.rows() != n {
        return Err(CoidealError::Shape(format!("ι has {} rows but dim H = {n}", iota.rows())));
    }
    if iota.field() != h.field() {
        return Err(CoidealError::Hopf(HopfError::FieldMismatch));
    }
    let m = iota.cols();
    let left_inv = left_inverse(iota).ok_or(CoidealError::NotInjective)?;
    let coords = |v: &Vector| {
        let b = left_inv.apply(v);
        (iota.apply(&b) == *v).then_some(b)
    };
    let field = h.field();
    let unit = coords(&h.one()).ok_or_else(|| CoidealError::NotSubalgebra("1 ∉ ι(B)".into()))?;
    let cols = iota.columns();
    let mut mult = Tensor3::zeros(field, (m, m, m));
    for i in 0..m {
        for j in 0..m {
            let prod = h.mul(&cols[i], &cols[j]);
            let c = coords(&prod).ok_or_else(|| CoidealError::NotSubalgebra(format!("b_{i} b_{j} ∉ ι(B)")))?;
            for (k, s) in c.support() {
                mult[(i, j, k)] = s.clone();
            }
        }
    }
    let mut coaction = Tensor3::zeros(field, (m, n, m));
    let lt = left_inv.transpose();
    for i in 0..m {
        let d = h.comul(&cols[i]);
        let x = d.mul(&lt);
        if x.mul(&iota.transpose()) != d {
            return Err(CoidealError::NotCoideal(format!("Δ(ι(b_{i})) ∉ H ⊗ ι(B)")));
        }
        for k in 0..n {
            for j in 0..m {
                coaction[(i, k, j)] = x[(k, j)].clone();
            }
        }
    }
    let counit = Vector::from_vec(field, cols.iter().map(|c| h.eps(c)).collect());
    Ok(CoidealSubalgebra {
        parent: h.clone(),
        iota: iota.clone(),
        left_inverse: left_inv,
        algebra: Algebra::new(mult, unit)?,
        counit,
        coaction,
    })
}

/// `C = H/B⁺H` with its canonical complement basis and projection `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealQuotient {
    coideal: CoidealSubalgebra,
    pi: LinMap,
    complement: Vec<usize>,
    coalgebra: Coalgebra,
    kernel_basis: Matrix,
    report: Report,
}

impl CoidealQuotient {
    pub fn coideal(&self) -> &CoidealSubalgebra {
        &self.coideal
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.coideal.parent
    }

    pub fn pi(&self) -> &LinMap {
        &self.pi
    }

    /// Standard basis indices of `H` whose classes form the basis of `C`.
    pub fn complement_columns(&self) -> &[usize] {
        &self.complement
    }

    pub fn quotient_coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    /// RREF basis of `B⁺H` as rows.
    pub fn kernel_basis(&self) -> &Matrix {
        &self.kernel_basis
    }

    pub fn report(&self) -> &Report {
        &self.report
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn field(&self) -> Field {
        self.coideal.field()
    }

    /// Canonical lift `C → H`, `c_t ↦ e_{complement[t]}`.
    pub fn lift_map(&self) -> LinMap {
        let mut m = Matrix::zeros(self.field(), self.parent().dim(), self.dim());
        for (t, &k) in self.complement.iter().enumerate() {
            m[(k, t)] = self.field().one();
        }
        m
    }

    pub fn lift(&self, x: &Vector) -> Vector {
        self.lift_map().apply(x)
    }

    pub fn project(&self, h: &Vector) -> Vector {
        self.pi.apply(h)
    }

    /// `π(1_H)`
    pub fn one(&self) -> Vector {
        self.project(&self.parent().one())
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field(), self.dim(), i)
    }

    /// `C*` with the convolution product dual to `Δ_C`.
    pub fn dual_algebra(&self) -> Algebra {
        Algebra::new(self.coalgebra.comult().permute([1, 2, 0]), self.coalgebra.counit().clone()).unwrap()
    }

    /// `x◁e_k` for all basis pairs, indexed `[t][k]`.
    pub fn action_table(&self) -> Vec<Vec<Vector>> {
        let h = self.parent();
        (0..self.dim()).map(|t| (0..h.dim()).map(|k| action_btl(self, &self.basis(t), &h.basis(k))).collect()).collect()
    }
}

/// Builds `π: H → H/B⁺H` along the canonical complement of `RREF(B⁺H)`.
pub fn build_quotient(b: &CoidealSubalgebra) -> Result<CoidealQuotient, CoidealError> {
    let h = &b.parent;
    let field = h.field();
    let n = h.dim();
    let eps_b = Matrix::from_rows(field, b.dim(), std::slice::from_ref(&b.counit));
    let bplus: Vec<Vector> = eps_b.kernel().iter().map(|v| b.iota.apply(v)).collect();
    let mut spanning = Vec::new();
    for v in &bplus {
        for k in 0..n {
            spanning.push(h.mul(v, &h.basis(k)));
        }
    }
    let (reduced, pivots) = rref(&Matrix::from_rows(field, n, &spanning));
    let rows: Vec<Vector> = (0..pivots.len()).map(|r| reduced.row(r)).collect();
    let kernel_basis = Matrix::from_rows(field, n, &rows);
    let complement: Vec<usize> = (0..n).filter(|k| !pivots.contains(k)).collect();
    let c = complement.len();
    if n != b.dim() * c {
        return Err(CoidealError::DimensionLaw { h: n, b: b.dim(), c });
    }
    let mut pi = Matrix::zeros(field, c, n);
    for (t, &k) in complement.iter().enumerate() {
        pi[(t, k)] = field.one();
    }
    for (r, &p) in pivots.iter().enumerate() {
        for (t, &k) in complement.iter().enumerate() {
            pi[(t, p)] = -&kernel_basis[(r, k)];
        }
    }
    let mut comult = Tensor3::zeros(field, (c, c, c));
    let mut counit = Vector::zeros(field, c);
    for (t, &k) in complement.iter().enumerate() {
        let d = pi.mul(&h.comul(&h.basis(k))).mul(&pi.transpose());
        for i in 0..c {
            for j in 0..c {
                comult[(t, i, j)] = d[(i, j)].clone();
            }
        }
        counit[t] = h.eps(&h.basis(k));
    }
    let coalgebra = Coalgebra::new(comult, counit)?;
    let mut q = CoidealQuotient { coideal: b.clone(), pi, complement, coalgebra, kernel_basis, report: Report::new() };
    q.report = certify_quotient(&q);
    match q.report.first_failure() {
        None => Ok(q),
        Some(f) => Err(CoidealError::Quotient(format!("{} at {}", f.name, f.witness.clone().unwrap_or_default()))),
    }
}

fn certify_quotient(q: &CoidealQuotient) -> Report {
    let h = q.parent();
    let n = h.dim();
    let pi = &q.pi;
    let mut r = Report::new();
    r.record("π kills B⁺H", first_witness(0..q.kernel_basis.rows(), |&i| pi.apply(&q.kernel_basis.row(i)).is_zero()));
    r.record("π surjective", (pi.rank() != q.dim()).then(|| format!("rank {}", pi.rank())));
    r.extend("quotient ", q.coalgebra.verify());
    r.record(
        "π coalgebra map",
        first_witness(0..n, |&k| {
            let e = h.basis(k);
            let lhs = pi.mul(&h.comul(&e)).mul(&pi.transpose());
            lhs == q.coalgebra.comul(&pi.apply(&e)) && q.coalgebra.eps(&pi.apply(&e)) == h.eps(&e)
        }),
    );
    let one = q.one();
    r.record(
        "π∘ι = ε_B π(1)",
        first_witness(0..q.coideal.dim(), |&i| pi.apply(&q.coideal.iota.column(i)) == one.scale(&q.coideal.counit[i])),
    );
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    r.record(
        "◁ well defined",
        first_witness((0..q.kernel_basis.rows()).flat_map(|i| (0..n).map(move |k| (i, k))), |&(i, k)| {
            pi.apply(&h.mul(&q.kernel_basis.row(i), &h.basis(k))).is_zero()
        }),
    );
    r.record(
        "◁ right module",
        first_witness((0..q.dim()).flat_map(|t| pairs().map(move |p| (t, p))), |&(t, (i, j))| {
            let x = q.basis(t);
            let (hi, hj) = (h.basis(i), h.basis(j));
            action_btl(q, &action_btl(q, &x, &hi), &hj) == action_btl(q, &x, &h.mul(&hi, &hj))
                && action_btl(q, &x, &h.one()) == x
        }),
    );
    r
}

/// `x◁h = π(x̃ h)` for the canonical lift `x̃`.
pub fn action_btl(q: &CoidealQuotient, x: &Vector, h: &Vector) -> Vector {
    let hopf = q.parent();
    q.pi.apply(&hopf.mul(&q.lift(x), h))
}

/// `h*▷b*`, the left `H*`-action on `B*` induced by `ι*`: `(h*▷b*)(b) = Σ h*(b₍₁₎) b*(b₍₂₎)`.
pub fn action_btr(b: &CoidealSubalgebra, hs: &Vector, bs: &Vector) -> Vector {
    let m = b.dim();
    let mut out = Vector::zeros(b.field(), m);
    for ((i, k, j), c) in b.coaction.entries() {
        let w = &hs[k] * &bs[j];
        out[i].add_product(c, &w);
    }
    out
}

/// `C* ⊆ H*` via `π*`, certified as a left coideal subalgebra of the coopposite dual.
pub fn dual_coideal(q: &CoidealQuotient) -> Result<CoidealSubalgebra, CoidealError> {
    let hs = q.parent().dual_unchecked().coopposite_unchecked()?;
    certify_coideal(&hs, &q.pi.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{group_algebra, taft4_hopf, FiniteGroup};

    const Q: Field = Field::Rational;

    #[test]
    fn taft_quotient_is_grouplike_pair() {
        let h = taft4_hopf(Q).unwrap();
        let iota = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
        let b = certify_coideal(&h, &iota).unwrap();
        let q = build_quotient(&b).unwrap();
        assert!(q.report().all_passed());
        assert_eq!(q.complement_columns(), &[0, 1]);
        assert_eq!(q.dim(), 2);
        let one = q.basis(0);
        let gbar = q.basis(1);
        assert_eq!(action_btl(&q, &gbar, &h.basis(1)), one);
        assert!(action_btl(&q, &one, &h.basis(2)).is_zero());
        assert_eq!(q.quotient_coalgebra().comul(&gbar), Matrix::from_i64(Q, &[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn non_coideal_subspace_is_rejected() {
        let h = taft4_hopf(Q).unwrap();
        // span{1, xg}: Δ(xg) has the term xg ⊗ g
        let iota = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
        assert!(matches!(certify_coideal(&h, &iota), Err(CoidealError::NotCoideal(_))));
    }

    #[test]
    fn twisted_grouplike_span_is_a_coideal() {
        let h = taft4_hopf(Q).unwrap();
        // (g + x)² = 1 and Δ(g + x) = g ⊗ (g + x) + x ⊗ 1
        let iota = Matrix::from_i64(Q, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
        let q = build_quotient(&certify_coideal(&h, &iota).unwrap()).unwrap();
        assert_eq!(q.dim(), 2);
    }

    #[test]
    fn trivial_coideals_of_s3() {
        let h = group_algebra(&FiniteGroup::symmetric3(), Q);
        let whole = build_quotient(&certify_coideal(&h, &Matrix::identity(Q, 6)).unwrap()).unwrap();
        assert_eq!(whole.dim(), 1);
        let unit = Matrix::from_columns(Q, 6, &[h.one()]);
        let trivial = build_quotient(&certify_coideal(&h, &unit).unwrap()).unwrap();
        assert_eq!(trivial.dim(), 6);
        assert_eq!(*trivial.pi(), Matrix::identity(Q, 6));
    }

    #[test]
    fn dual_coideal_of_taft_quotient() {
        let h = taft4_hopf(Q).unwrap();
        let iota = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
        let q = build_quotient(&certify_coideal(&h, &iota).unwrap()).unwrap();
        let d = dual_coideal(&q).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(build_quotient(&d).is_ok());
    }

    #[test]
    fn non_injective_inclusion() {
        let h = taft4_hopf(Q).unwrap();
        let iota = Matrix::from_i64(Q, &[&[1, 1], &[0, 0], &[0, 0], &[0, 0]]);
        assert_eq!(certify_coideal(&h, &iota), Err(CoidealError::NotInjective));
    }
}
