use crate::hopf::{hit_left_dual, hit_right, Algebra, TensorElem};
use crate::linalg::{Matrix, Scalar, Tensor3, Vector};
use crate::pams::{Frame, Pams};
use crate::report::{first_witness, Report};

use super::quasi::{antipodes_from_preantipode, QuasiHopfAlgebra};
use super::PartialDualError;

/// Above this dimension the preantipode uniqueness solve is skipped.
pub const UNIQUENESS_DIM_LIMIT: usize = 12;

/// `Σ c · v₁ ⊗ … ⊗ v_k` accumulated into `out`.
pub(crate) fn add_pure(out: &mut TensorElem, c: &Scalar, vecs: &[&Vector]) {
    if c.is_zero() {
        return;
    }
    let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(vecs.len()), c.clone())];
    for v in vecs {
        let mut next = Vec::new();
        for (idx, s) in &partial {
            for (i, x) in v.support() {
                let mut idx = idx.clone();
                idx.push(i);
                next.push((idx, s * x));
            }
        }
        partial = next;
    }
    for (idx, s) in partial {
        out.add_term(idx, &s);
    }
}

/// Data of the smash product `C* # B` shared by all structure maps.
pub(crate) struct Smash<'a> {
    pub fr: Frame<'a>,
    pub p: &'a Pams,
    pub c: usize,
    pub m: usize,
    pub n: usize,
    /// Unit of `C*`.
    pub eps_c: Vector,
    pub one_b: Vector,
    /// `coact[β]` lists `(l, t, coef)` with `δ(b_β) = Σ coef e_l ⊗ b_t`.
    pub coact: Vec<Vec<(usize, usize, Scalar)>>,
    pub rho: Vec<Matrix>,
    pub alg: Algebra,
}

impl<'a> Smash<'a> {
    pub fn new(p: &'a Pams) -> Smash<'a> {
        let q = p.quotient();
        let fr = Frame::new(q);
        let (c, m, n) = (q.dim(), q.coideal().dim(), q.parent().dim());
        let mut coact = vec![Vec::new(); m];
        for ((b, l, t), s) in q.coideal().coaction().entries() {
            coact[b].push((l, t, s.clone()));
        }
        let rho: Vec<Matrix> = (0..c).map(|a| fr.rho(&fr.cs.basis(a))).collect();
        let eps_c = q.quotient_coalgebra().counit().clone();
        let one_b = q.coideal().one();
        let alg = smash_algebra(&fr, &rho, &coact, &eps_c, &one_b);
        Smash { fr, p, c, m, n, eps_c, one_b, coact, rho, alg }
    }

    pub fn dim(&self) -> usize {
        self.c * self.m
    }

    /// `f # b`
    pub fn elem(&self, f: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zeros(self.fr.field(), self.dim());
        for (i, x) in f.support() {
            for (j, y) in b.support() {
                out[i * self.m + j] = x * y;
            }
        }
        out
    }

    pub fn f(&self, i: usize) -> Vector {
        self.fr.cs.basis(i)
    }

    pub fn b(&self, j: usize) -> Vector {
        self.fr.e_b(j)
    }

    fn zeta(&self, h: &Vector) -> Vector {
        self.p.zeta().apply(h)
    }

    fn zeta_star(&self, i: usize) -> Vector {
        self.p.zeta().row(i)
    }

    fn zeta_bar_star(&self, i: usize) -> Vector {
        self.p.zeta_bar().row(i)
    }

    fn gamma_col(&self, j: usize) -> Vector {
        self.p.gamma().column(j)
    }

    fn gamma_star(&self, hs: &Vector) -> Vector {
        self.p.gamma().transpose().apply(hs)
    }

    fn gamma_bar_star(&self, hs: &Vector) -> Vector {
        self.p.gamma_bar().transpose().apply(hs)
    }

    fn s_inv_dual(&self, hs: &Vector) -> Vector {
        self.fr.s_inv.transpose().apply(hs)
    }

    fn hs_mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.fr.hs.mul(x, y)
    }

    fn e_hs(&self, k: usize) -> Vector {
        self.fr.hs.basis(k)
    }

    fn b_mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.fr.b.algebra().mul(x, y)
    }

    fn zero2(&self) -> TensorElem {
        TensorElem::zero(self.fr.field(), self.dim(), 2)
    }

    /// `Δ(f_a # b_β) = Σ (f₁ # b_i ζ[γ(c_j) β₁]) ⊗ (γ*[f₂ ζ*(b*_i)] f_j # β₂)`.
    pub fn delta_full(&self, a: usize, beta: usize) -> TensorElem {
        let (c, m) = (self.c, self.m);
        let h = self.fr.h;
        let mut out = self.zero2();
        // z[i][j][pos] = b_i ζ(γ(c_j) e_l) for the pos-th coaction term (l, t)
        let mut z = vec![vec![Vec::new(); c]; m];
        for (i, zi) in z.iter_mut().enumerate() {
            for (j, zij) in zi.iter_mut().enumerate() {
                for &(l, _, _) in &self.coact[beta] {
                    let v = self.b_mul(&self.b(i), &self.zeta(&h.mul(&self.gamma_col(j), &h.basis(l))));
                    zij.push(v);
                }
            }
        }
        let rho = &self.rho[a];
        for (s, k) in nonzero(rho) {
            let r = &rho[(s, k)];
            let fs = self.f(s);
            for i in 0..m {
                let gk = self.gamma_star(&self.hs_mul(&self.e_hs(k), &self.zeta_star(i)));
                for j in 0..c {
                    let right_f = self.fr.cs.mul(&gk, &self.f(j));
                    if right_f.is_zero() {
                        continue;
                    }
                    for (pos, (_, t, coef)) in self.coact[beta].iter().enumerate() {
                        let left = self.elem(&fs, &z[i][j][pos]);
                        let right = self.elem(&right_f, &self.b(*t));
                        add_pure(&mut out, &(r * coef), &[&left, &right]);
                    }
                }
            }
        }
        out
    }

    /// `Σ_i (f₁ # ζ(h_i b₁)) ⊗ (γ*(f₂ h*_i) # b₂)` over the basis of `H`.
    fn delta_h_basis(&self, a: usize, beta: usize) -> TensorElem {
        let h = self.fr.h;
        let mut out = self.zero2();
        for (s, k) in nonzero(&self.rho[a]) {
            let r = &self.rho[a][(s, k)];
            for i in 0..self.n {
                let g = self.gamma_star(&self.hs_mul(&self.e_hs(k), &self.e_hs(i)));
                if g.is_zero() {
                    continue;
                }
                for (l, t, coef) in &self.coact[beta] {
                    let left = self.elem(&self.f(s), &self.zeta(&h.mul(&h.basis(i), &h.basis(*l))));
                    let right = self.elem(&g, &self.b(*t));
                    add_pure(&mut out, &(r * coef), &[&left, &right]);
                }
            }
        }
        out
    }

    /// `Δ(f # 1) = Σ_i (f₁ # b_i) ⊗ (γ*[f₂ ζ*(b*_i)] # 1)`.
    fn delta_f(&self, a: usize) -> TensorElem {
        let mut out = self.zero2();
        for (s, k) in nonzero(&self.rho[a]) {
            let r = &self.rho[a][(s, k)];
            for i in 0..self.m {
                let left = self.elem(&self.f(s), &self.b(i));
                let right = self.elem(&self.gamma_star(&self.hs_mul(&self.e_hs(k), &self.zeta_star(i))), &self.one_b);
                add_pure(&mut out, r, &[&left, &right]);
            }
        }
        out
    }

    /// `Δ(ε # b) = Σ_i (ε # ζ[γ(c_i) b₁]) ⊗ (f_i # b₂)`.
    fn delta_b(&self, beta: usize) -> TensorElem {
        let h = self.fr.h;
        let mut out = self.zero2();
        for i in 0..self.c {
            for (l, t, coef) in &self.coact[beta] {
                let left = self.elem(&self.eps_c, &self.zeta(&h.mul(&self.gamma_col(i), &h.basis(*l))));
                let right = self.elem(&self.f(i), &self.b(*t));
                add_pure(&mut out, coef, &[&left, &right]);
            }
        }
        out
    }

    /// `Δ(f # 1) = Σ_i (f₁ # ζ[γ(c_i) ↼ f₂]) ⊗ (f_i # 1)`.
    fn delta_f_hit(&self, a: usize) -> TensorElem {
        let h = self.fr.h;
        let mut out = self.zero2();
        for (s, k) in nonzero(&self.rho[a]) {
            let r = &self.rho[a][(s, k)];
            for i in 0..self.c {
                let left = self.elem(&self.f(s), &self.zeta(&hit_right(h, &self.gamma_col(i), &self.e_hs(k))));
                let right = self.elem(&self.f(i), &self.one_b);
                add_pure(&mut out, r, &[&left, &right]);
            }
        }
        out
    }

    /// `Δ(ε # b) = Σ_i (ε # b_i) ⊗ (γ*[b₁ ⇀ ζ*(b*_i)] # b₂)`.
    fn delta_b_hit(&self, beta: usize) -> TensorElem {
        let h = self.fr.h;
        let mut out = self.zero2();
        for i in 0..self.m {
            let left = self.elem(&self.eps_c, &self.b(i));
            for (l, t, coef) in &self.coact[beta] {
                let g = self.gamma_star(&hit_left_dual(h, &h.basis(*l), &self.zeta_star(i)));
                let right = self.elem(&g, &self.b(*t));
                add_pure(&mut out, coef, &[&left, &right]);
            }
        }
        out
    }

    /// `φ = Σ (ε#b_i) ⊗ (ε#b_j)(γ̄*[S⁻¹(ζ̄*(b*_i)₁)]#1) ⊗ (γ̄*[S⁻¹(ζ̄*(b*_j) ζ̄*(b*_i)₂)]#1)`.
    pub fn phi(&self) -> TensorElem {
        let mut out = TensorElem::zero(self.fr.field(), self.dim(), 3);
        for i in 0..self.m {
            let d = self.fr.hs.comul(&self.zeta_bar_star(i));
            let first = self.elem(&self.eps_c, &self.b(i));
            for j in 0..self.m {
                let ej = self.elem(&self.eps_c, &self.b(j));
                let zbj = self.zeta_bar_star(j);
                for (k, k2) in nonzero(&d) {
                    let mid = self
                        .alg
                        .mul(&ej, &self.elem(&self.gamma_bar_star(&self.s_inv_dual(&self.e_hs(k))), &self.one_b));
                    let third = self
                        .elem(&self.gamma_bar_star(&self.s_inv_dual(&self.hs_mul(&zbj, &self.e_hs(k2)))), &self.one_b);
                    add_pure(&mut out, &d[(k, k2)], &[&first, &mid, &third]);
                }
            }
        }
        out
    }

    /// `φ⁻¹ = Σ (ε#b_i) ⊗ (γ*[ζ*(b*_i)₁]#b_j) ⊗ (γ*[ζ*(b*_i)₂ ζ*(b*_j)]#1)`.
    pub fn phi_inv(&self) -> TensorElem {
        let mut out = TensorElem::zero(self.fr.field(), self.dim(), 3);
        for i in 0..self.m {
            let d = self.fr.hs.comul(&self.zeta_star(i));
            let first = self.elem(&self.eps_c, &self.b(i));
            for j in 0..self.m {
                let zj = self.zeta_star(j);
                for (k, k2) in nonzero(&d) {
                    let mid = self.elem(&self.gamma_star(&self.e_hs(k)), &self.b(j));
                    let third = self.elem(&self.gamma_star(&self.hs_mul(&self.e_hs(k2), &zj)), &self.one_b);
                    add_pure(&mut out, &d[(k, k2)], &[&first, &mid, &third]);
                }
            }
        }
        out
    }

    /// `φ⁻¹ = Σ (ε#ζ[γ(c_i)γ(c_j)₁]) ⊗ (f_i#ζ[γ(c_j)₂]) ⊗ (f_j#1)`.
    fn phi_inv_alt(&self) -> TensorElem {
        let h = self.fr.h;
        let mut out = TensorElem::zero(self.fr.field(), self.dim(), 3);
        for j in 0..self.c {
            let d = h.comul(&self.gamma_col(j));
            let third = self.elem(&self.f(j), &self.one_b);
            for (u, v) in nonzero(&d) {
                let mid_b = self.zeta(&h.basis(v));
                for i in 0..self.c {
                    let first = self.elem(&self.eps_c, &self.zeta(&h.mul(&self.gamma_col(i), &h.basis(u))));
                    let mid = self.elem(&self.f(i), &mid_b);
                    add_pure(&mut out, &d[(u, v)], &[&first, &mid, &third]);
                }
            }
        }
        out
    }

    /// `T(f # b) = Σ_i (ε # b_i)(γ̄*[π*(f)(ι(b) ⇀ ζ̄*(b*_i))] # 1)`.
    pub fn preantipode(&self) -> Matrix {
        let h = self.fr.h;
        let pi_t = self.fr.q.pi().transpose();
        let iota = self.fr.b.iota();
        let mut cols = Vec::with_capacity(self.dim());
        for a in 0..self.c {
            let pf = pi_t.apply(&self.f(a));
            for beta in 0..self.m {
                let ib = iota.apply(&self.b(beta));
                let mut col = Vector::zeros(self.fr.field(), self.dim());
                for i in 0..self.m {
                    let hs = self.hs_mul(&pf, &hit_left_dual(h, &ib, &self.zeta_bar_star(i)));
                    let x = self
                        .alg
                        .mul(&self.elem(&self.eps_c, &self.b(i)), &self.elem(&self.gamma_bar_star(&hs), &self.one_b));
                    col = col.add(&x);
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(self.fr.field(), self.dim(), &cols)
    }

    pub fn counit(&self) -> Vector {
        let one_c = self.fr.q.one();
        let eps_b = self.fr.b.counit();
        self.elem(&one_c, eps_b)
    }

    pub(crate) fn carrier_pairs(&self) -> impl Iterator<Item = (usize, usize)> + Clone {
        let m = self.m;
        (0..self.c).flat_map(move |a| (0..m).map(move |b| (a, b)))
    }
}

/// `b_j ↼ e*_k = Σ_t coact(j,k,t) b_t`.
fn hit_b(coact: &[(usize, usize, Scalar)], k: usize, m: usize, field: crate::linalg::Field) -> Vector {
    let mut out = Vector::zeros(field, m);
    for (l, t, s) in coact {
        if *l == k {
            out[*t] += s;
        }
    }
    out
}

/// `(f # b)(g # d) = Σ f g₁ # (b ↼ g₂) d`.
fn smash_algebra(
    fr: &Frame<'_>,
    rho: &[Matrix],
    coact: &[Vec<(usize, usize, Scalar)>],
    eps_c: &Vector,
    one_b: &Vector,
) -> Algebra {
    let (c, m) = (fr.q.dim(), fr.b.dim());
    let field = fr.field();
    let dim = c * m;
    let mut mult = Tensor3::zeros(field, (dim, dim, dim));
    let b_alg = fr.b.algebra();
    for a2 in 0..c {
        for (s, k) in nonzero(&rho[a2]) {
            let r = &rho[a2][(s, k)];
            for (j, cj) in coact.iter().enumerate() {
                let hb = hit_b(cj, k, m, field);
                if hb.is_zero() {
                    continue;
                }
                for j2 in 0..m {
                    let bd = b_alg.mul(&hb, &fr.e_b(j2));
                    for a in 0..c {
                        let ff = fr.cs.mul(&fr.cs.basis(a), &fr.cs.basis(s));
                        for (u, x) in ff.support() {
                            let rx = r * x;
                            for (t, y) in bd.support() {
                                mult[(a * m + j, a2 * m + j2, u * m + t)].add_product(&rx, y);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = Vector::zeros(field, dim);
    for (i, x) in eps_c.support() {
        for (j, y) in one_b.support() {
            unit[i * m + j] = x * y;
        }
    }
    Algebra::new(mult, unit).expect("smash product has consistent shape")
}

pub(crate) fn nonzero(m: &Matrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

fn tensor3_from(deltas: &[TensorElem], field: crate::linalg::Field) -> Tensor3 {
    let n = deltas.len();
    let mut t = Tensor3::zeros(field, (n, n, n));
    for (a, d) in deltas.iter().enumerate() {
        for (idx, c) in d.terms() {
            t[(a, idx[0], idx[1])] = c.clone();
        }
    }
    t
}

/// Builds `(H/B⁺H)* # B` with its quasi-Hopf structure and verifies every axiom.
pub fn left_partial_dual(p: &Pams) -> Result<QuasiHopfAlgebra, PartialDualError> {
    let q = build_left(p)?;
    if let Some(f) = q.report.first_failure() {
        return Err(PartialDualError::Axiom { name: f.name.clone(), witness: f.witness.clone().unwrap_or_default() });
    }
    Ok(q)
}

/// Builds the left partial dual and attaches the full report without enforcing it.
pub fn build_left(p: &Pams) -> Result<QuasiHopfAlgebra, PartialDualError> {
    let sm = Smash::new(p);
    let field = sm.fr.field();
    let deltas: Vec<TensorElem> = sm.carrier_pairs().map(|(a, b)| sm.delta_full(a, b)).collect();
    let comult = tensor3_from(&deltas, field);
    let t = sm.preantipode();
    let antipodes = antipodes_from_preantipode(&sm.alg, &t);
    let mut q = QuasiHopfAlgebra::from_parts(
        sm.alg.clone(),
        comult,
        sm.counit(),
        sm.phi(),
        sm.phi_inv(),
        t,
        antipodes,
        (sm.c, sm.m),
    )?;
    let cross = cross_checks(&sm, &q, &deltas);
    q.report.extend("", cross);
    Ok(q)
}

fn cross_checks(sm: &Smash<'_>, q: &QuasiHopfAlgebra, deltas: &[TensorElem]) -> Report {
    let mut r = Report::new();
    let alg = &sm.alg;
    let pairs = sm.carrier_pairs();
    let at = |a: usize, b: usize| a * sm.m + b;
    r.record("dim = dim H", (sm.dim() != sm.n).then(|| format!("{} ≠ {}", sm.dim(), sm.n)));
    r.record(
        "Δ(f#b) = Δ(f#1)Δ(ε#b)",
        first_witness(pairs.clone(), |&(a, b)| sm.delta_f(a).mul(&sm.delta_b(b), alg) == deltas[at(a, b)]),
    );
    r.record(
        "Δ(f#b) in the basis of H",
        first_witness(pairs.clone(), |&(a, b)| sm.delta_h_basis(a, b) == deltas[at(a, b)]),
    );
    r.record(
        "Δ(f#1) forms agree",
        first_witness(0..sm.c, |&a| {
            let via_full = q.delta(&sm.elem(&sm.f(a), &sm.one_b));
            sm.delta_f(a) == via_full && sm.delta_f_hit(a) == via_full
        }),
    );
    r.record(
        "Δ(ε#b) forms agree",
        first_witness(0..sm.m, |&b| {
            let via_full = q.delta(&sm.elem(&sm.eps_c, &sm.b(b)));
            sm.delta_b(b) == via_full && sm.delta_b_hit(b) == via_full
        }),
    );
    r.record("φ⁻¹ forms agree", (sm.phi_inv_alt() != q.phi_inv).then(|| "φ⁻¹".to_string()));
    if sm.dim() <= UNIQUENESS_DIM_LIMIT {
        r.record(
            "preantipode unique",
            (!preantipode_is_unique(q)).then(|| "solution space has positive dimension".to_string()),
        );
    }
    r
}

/// Whether the homogeneous system `Σ T(p₁q)p₂ = 0 = Σ p₁T(qp₂)`, `Σ φ¹T(φ²)φ³ = 0` forces `T = 0`.
pub fn preantipode_is_unique(q: &QuasiHopfAlgebra) -> bool {
    let n = q.dim();
    let field = q.field();
    let alg = q.algebra();
    let mut ech = crate::linalg::Echelon::new(field, n * n);
    let var = |s: usize, r: usize| s * n + r;
    let deltas: Vec<TensorElem> = (0..n).map(|a| q.delta(&q.basis(a))).collect();
    for p in 0..n {
        let ep = q.eps(&q.basis(p));
        for qq in 0..n {
            for side in 0..2 {
                let mut rows = vec![Vector::zeros(field, n * n); n];
                for (idx, c) in deltas[p].terms() {
                    let (u, v) = (idx[0], idx[1]);
                    if side == 0 {
                        // Σ T(e_u e_q) e_v
                        for (r, x) in alg.product_of(u, qq) {
                            let cx = c * x;
                            for s in 0..n {
                                for (w, y) in alg.product_of(s, v) {
                                    rows[*w][var(s, *r)].add_product(&cx, y);
                                }
                            }
                        }
                    } else {
                        // Σ e_u T(e_q e_v)
                        for (r, x) in alg.product_of(qq, v) {
                            let cx = c * x;
                            for s in 0..n {
                                for (w, y) in alg.product_of(u, s) {
                                    rows[*w][var(s, *r)].add_product(&cx, y);
                                }
                            }
                        }
                    }
                }
                for (w, row) in rows.iter_mut().enumerate() {
                    row[var(w, qq)] -= &ep;
                }
                for row in rows {
                    ech.insert(row);
                    if ech.is_full() {
                        return true;
                    }
                }
            }
        }
    }
    let mut rows = vec![Vector::zeros(field, n * n); n];
    for (idx, c) in q.phi().terms() {
        // φ¹ T(φ²) φ³ with T(φ²) = Σ_s T[s][φ²] e_s
        for s in 0..n {
            let x = alg.mul_many(&[&q.basis(idx[0]), &q.basis(s), &q.basis(idx[2])]);
            for (w, y) in x.support() {
                rows[w][var(s, idx[1])].add_product(c, y);
            }
        }
    }
    for row in rows {
        ech.insert(row);
    }
    ech.is_full()
}
