use crate::coideal::{action_btr, CoidealQuotient, CoidealSubalgebra};
use crate::hopf::{convolution_inverse, convolution_product, Algebra, HopfAlgebra, LinMap};
use crate::linalg::{Field, Matrix, Vector};
use crate::report::{first_witness, Report};

use super::{Pams, PamsError};

pub(crate) fn outer(u: &Vector, v: &Vector) -> Matrix {
    let f = u.field();
    Matrix::from_columns(f, u.len(), std::slice::from_ref(u)).mul(&Matrix::from_rows(
        f,
        v.len(),
        std::slice::from_ref(v),
    ))
}

fn pairs(a: usize, b: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..a).flat_map(move |i| (0..b).map(move |j| (i, j)))
}

/// Shared data for the dual-side identities: `H*`, `C*` and the action tables.
pub(crate) struct Frame<'a> {
    pub h: &'a HopfAlgebra,
    pub hs: HopfAlgebra,
    pub s_inv: Matrix,
    pub b: &'a CoidealSubalgebra,
    pub q: &'a CoidealQuotient,
    pub cs: Algebra,
    act: Vec<Vec<Vector>>,
}

impl<'a> Frame<'a> {
    pub fn new(q: &'a CoidealQuotient) -> Frame<'a> {
        let h = q.parent();
        Frame {
            h,
            hs: h.dual_unchecked(),
            s_inv: h.antipode_inverse().expect("certified Hopf algebra has invertible antipode"),
            b: q.coideal(),
            q,
            cs: q.dual_algebra(),
            act: q.action_table(),
        }
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    pub fn e_h(&self, i: usize) -> Vector {
        self.h.basis(i)
    }

    pub fn e_b(&self, i: usize) -> Vector {
        self.b.basis(i)
    }

    pub fn e_c(&self, i: usize) -> Vector {
        self.q.basis(i)
    }

    /// `Δ_{B*}(b*)` as `E[p][q] = b*(b_p b_q)`.
    pub fn delta_bs(&self, bs: &Vector) -> Matrix {
        let m = self.b.dim();
        let mut e = Matrix::zeros(self.field(), m, m);
        for ((p, q, j), c) in self.b.algebra().mult().entries() {
            e[(p, q)].add_product(c, &bs[j]);
        }
        e
    }

    /// `Σ f₁ ⊗ f₂ ∈ C* ⊗ H*` with `ρ(f)[i][k] = f(c_i ◁ e_k)`.
    pub fn rho(&self, f: &Vector) -> Matrix {
        let (c, n) = (self.q.dim(), self.h.dim());
        let mut out = Matrix::zeros(self.field(), c, n);
        for i in 0..c {
            for k in 0..n {
                out[(i, k)] = f.dot(&self.act[i][k]);
            }
        }
        out
    }

    pub fn btr(&self, hs: &Vector, bs: &Vector) -> Vector {
        action_btr(self.b, hs, bs)
    }
}

struct Maps<'a> {
    zeta: &'a LinMap,
    gamma: &'a LinMap,
    zeta_bar: LinMap,
    gamma_bar: LinMap,
}

fn check_shapes(q: &CoidealQuotient, zeta: &LinMap, gamma: &LinMap) -> Result<(), PamsError> {
    let (n, m, c) = (q.parent().dim(), q.coideal().dim(), q.dim());
    if zeta.rows() != m || zeta.cols() != n {
        return Err(PamsError::Shape(format!("ζ is {}×{}, expected {m}×{n}", zeta.rows(), zeta.cols())));
    }
    if gamma.rows() != n || gamma.cols() != c {
        return Err(PamsError::Shape(format!("γ is {}×{}, expected {n}×{c}", gamma.rows(), gamma.cols())));
    }
    if zeta.field() != q.field() || gamma.field() != q.field() {
        return Err(PamsError::Hopf(crate::hopf::HopfError::FieldMismatch));
    }
    Ok(())
}

/// Evaluates every identity of a mapping system on the full basis.
pub fn pams_report(q: &CoidealQuotient, zeta: &LinMap, gamma: &LinMap) -> Result<Report, PamsError> {
    check_shapes(q, zeta, gamma)?;
    Ok(full_report(q, zeta, gamma).0)
}

/// Certifies `(ζ, γ*)` against the whole identity suite.
pub fn certify_pams(q: &CoidealQuotient, zeta: &LinMap, gamma: &LinMap) -> Result<Pams, PamsError> {
    check_shapes(q, zeta, gamma)?;
    let (report, maps) = full_report(q, zeta, gamma);
    if let Some(f) = report.first_failure() {
        return Err(PamsError::Identity { name: f.name.clone(), witness: f.witness.clone().unwrap_or_default() });
    }
    let maps = maps.expect("inverses exist when every check passes");
    Ok(Pams {
        quotient: q.clone(),
        zeta: zeta.clone(),
        gamma: gamma.clone(),
        zeta_bar: maps.zeta_bar,
        gamma_bar: maps.gamma_bar,
        report,
    })
}

fn full_report<'a>(q: &CoidealQuotient, zeta: &'a LinMap, gamma: &'a LinMap) -> (Report, Option<Maps<'a>>) {
    let h = q.parent();
    let mut r = Report::new();
    let zeta_bar = convolution_inverse(zeta, h.coalgebra(), q.coideal().algebra());
    r.record("ζ convolution invertible", zeta_bar.is_err().then(|| "no inverse in Hom(H, B)".to_string()));
    let gamma_bar = convolution_inverse(gamma, q.quotient_coalgebra(), h.algebra());
    r.record("γ convolution invertible", gamma_bar.is_err().then(|| "no inverse in Hom(C, H)".to_string()));
    let (Ok(zeta_bar), Ok(gamma_bar)) = (zeta_bar, gamma_bar) else {
        return (r, None);
    };
    let maps = Maps { zeta, gamma, zeta_bar, gamma_bar };
    let frame = Frame::new(q);
    r.extend("", primal_identities(&frame, &maps));
    r.extend("", dual_identities(&frame, &maps));
    r.extend("", workhorse_identities(&frame, &maps));
    (r, Some(maps))
}

fn primal_identities(fr: &Frame, mp: &Maps) -> Report {
    let (h, b, q) = (fr.h, fr.b, fr.q);
    let (n, m, c) = (h.dim(), b.dim(), q.dim());
    let f = fr.field();
    let iota = b.iota();
    let pi = q.pi();
    let (zeta, gamma, zb, gb) = (mp.zeta, mp.gamma, &mp.zeta_bar, &mp.gamma_bar);
    let eps_c = q.quotient_coalgebra().counit();
    let mut r = Report::new();

    r.record(
        "ζ left B-module map",
        first_witness(pairs(m, n), |&(i, k)| {
            zeta.apply(&h.mul(&iota.column(i), &fr.e_h(k))) == b.algebra().mul(&fr.e_b(i), &zeta.column(k))
        }),
    );
    r.record(
        "γ right C-comodule map",
        first_witness(0..c, |&t| {
            h.comul(&gamma.column(t)).mul(&pi.transpose()) == gamma.mul(&q.quotient_coalgebra().comul(&fr.e_c(t)))
        }),
    );
    for (name, map) in [("ζ", zeta), ("ζ̄", zb)] {
        r.record(format!("{name} unitary"), (map.apply(&h.one()) != b.one()).then(|| "1_H".to_string()));
        r.record(
            format!("{name} counitary"),
            first_witness(0..n, |&k| b.counit().dot(&map.column(k)) == h.coalgebra().counit()[k]),
        );
    }
    for (name, map) in [("γ", gamma), ("γ̄", gb)] {
        r.record(format!("{name} unitary"), (map.apply(&q.one()) != h.one()).then(|| "π(1)".to_string()));
        r.record(
            format!("{name} counitary"),
            first_witness(0..c, |&t| h.coalgebra().counit().dot(&map.column(t)) == eps_c[t]),
        );
    }
    let conv = |a: &Matrix, b: &Matrix| convolution_product(a, b, h.coalgebra(), h.algebra()).unwrap();
    let id = Matrix::identity(f, n);
    let cols_differ = |lhs: &Matrix, rhs: &Matrix| first_witness(0..lhs.cols(), |&k| lhs.column(k) == rhs.column(k));
    r.record("ιζ ∗ γπ = id_H", cols_differ(&conv(&iota.mul(zeta), &gamma.mul(pi)), &id));
    r.record("γπ = ιζ̄ ∗ id_H", cols_differ(&gamma.mul(pi), &conv(&iota.mul(zb), &id)));
    r.record("γ̄π = S ∗ ιζ", cols_differ(&gb.mul(pi), &conv(h.antipode(), &iota.mul(zeta))));
    r.record("ζι = id_B", cols_differ(&zeta.mul(iota), &Matrix::identity(f, m)));
    r.record("πγ = id_C", cols_differ(&pi.mul(gamma), &Matrix::identity(f, c)));
    r.record("ζγ = 1_B ε_C", cols_differ(&zeta.mul(gamma), &outer(&b.one(), eps_c)));
    r.record("πS⁻¹ι = π(1) ε_B", cols_differ(&pi.mul(&fr.s_inv).mul(iota), &outer(&q.one(), b.counit())));

    // ι(B) is the space of coinvariants of (id ⊗ π)Δ.
    let mut coinv = Matrix::zeros(f, n * c, n);
    let one_c = q.one();
    for k in 0..n {
        let e = fr.e_h(k);
        let d = h.comul(&e).mul(&pi.transpose()).sub(&outer(&e, &one_c));
        for i in 0..n {
            for t in 0..c {
                coinv[(i * c + t, k)] = d[(i, t)].clone();
            }
        }
    }
    let w = first_witness(0..m, |&i| coinv.apply(&iota.column(i)).is_zero())
        .or_else(|| (n - coinv.rank() != m).then(|| format!("coinvariants have dimension {}", n - coinv.rank())));
    r.record("ι(B) = coinvariants of (id⊗π)Δ", w);
    r
}

fn dual_identities(fr: &Frame, mp: &Maps) -> Report {
    let (h, hs, b, q, cs) = (fr.h, &fr.hs, fr.b, fr.q, &fr.cs);
    let (n, m, c) = (h.dim(), b.dim(), q.dim());
    let f = fr.field();
    let zs = mp.zeta.transpose();
    let gs = mp.gamma.transpose();
    let zbs = mp.zeta_bar.transpose();
    let gbs = mp.gamma_bar.transpose();
    let is = b.iota().transpose();
    let ps = q.pi().transpose();
    let s = hs.antipode().clone();
    let s_inv = fr.s_inv.transpose();
    let mut r = Report::new();

    r.record(
        "ι* left H*-module map",
        first_witness(pairs(n, n), |&(a, k)| {
            is.apply(&hs.mul(&fr.e_h(a), &fr.e_h(k))) == fr.btr(&fr.e_h(a), &is.column(k))
        }),
    );
    r.record(
        "ζ* left B*-comodule map",
        first_witness(0..m, |&p| is.mul(&hs.comul(&zs.column(p))) == fr.delta_bs(&fr.e_b(p)).mul(mp.zeta)),
    );
    r.record(
        "π* right H*-comodule map",
        first_witness(0..c, |&t| hs.comul(&ps.column(t)) == ps.mul(&fr.rho(&fr.e_c(t)))),
    );
    r.record(
        "π* algebra map",
        first_witness(pairs(c, c), |&(i, j)| {
            ps.apply(&cs.mul(&fr.e_c(i), &fr.e_c(j))) == hs.mul(&ps.column(i), &ps.column(j))
        })
        .or_else(|| (ps.apply(cs.unit()) != hs.one()).then(|| "unit".to_string())),
    );
    r.record(
        "γ* right C*-module map",
        first_witness(pairs(n, c), |&(a, t)| {
            gs.apply(&hs.mul(&fr.e_h(a), &ps.column(t))) == cs.mul(&gs.column(a), &fr.e_c(t))
        }),
    );
    let conv = |x: &Matrix, y: &Matrix| convolution_product(x, y, hs.coalgebra(), hs.algebra()).unwrap();
    let same = |lhs: Matrix, rhs: &Matrix| first_witness(0..lhs.cols(), |&k| lhs.column(k) == rhs.column(k));
    let id = Matrix::identity(f, n);
    let zi = zs.mul(&is);
    let pg = ps.mul(&gs);
    let pgb = ps.mul(&gbs);
    let zbi = zbs.mul(&is);
    r.record("ζ*ι* ∗ π*γ* = id_H*", same(conv(&zi, &pg), &id));
    r.record("γ*ζ* = ε_C ⟨−,1_B⟩", same(gs.mul(&zs), &outer(q.quotient_coalgebra().counit(), &b.one())));
    r.record(
        "h*▷b* = ι*(h* ζ*(b*))",
        first_witness(pairs(n, m), |&(a, p)| {
            fr.btr(&fr.e_h(a), &fr.e_b(p)) == is.apply(&hs.mul(&fr.e_h(a), &zs.column(p)))
        }),
    );
    r.record("ζ*ι* = id ∗ π*γ̄*", same(conv(&id, &pgb), &zi));
    r.record("π*γ̄* = S ∗ ζ*ι*", same(conv(&s, &zi), &pgb));
    r.record("ζ̄*ι* = π*γ* ∗ S", same(conv(&pg, &s), &zbi));
    r.record("π*γ̄* ∗ ζ̄*ι* = S", same(conv(&pgb, &zbi), &s));

    let one = q.one();
    r.record(
        "Σ f₁ γ̄*(h* f₂) = ⟨f,1⟩ γ̄*(h*)",
        first_witness(pairs(c, n), |&(t, a)| {
            let rho = fr.rho(&fr.e_c(t));
            let mut lhs = Vector::zeros(f, c);
            for i in 0..c {
                for k in 0..n {
                    if !rho[(i, k)].is_zero() {
                        let g = gbs.apply(&hs.mul(&fr.e_h(a), &fr.e_h(k)));
                        lhs.axpy(&rho[(i, k)], &cs.mul(&fr.e_c(i), &g));
                    }
                }
            }
            lhs == gbs.column(a).scale(&one[t])
        }),
    );
    r.record(
        "Σ (ζ̄*(b*₁)₁ ▷ b*₂) ⊗ ζ̄*(b*₁)₂ = ε ⊗ ζ̄*(b*)",
        first_witness(0..m, |&p| {
            let e = fr.delta_bs(&fr.e_b(p));
            let mut lhs = Matrix::zeros(f, m, n);
            for u in 0..m {
                for v in 0..m {
                    if e[(u, v)].is_zero() {
                        continue;
                    }
                    let mz = hs.comul(&zbs.column(u));
                    for k in 0..n {
                        for l in 0..n {
                            if mz[(k, l)].is_zero() {
                                continue;
                            }
                            let coef = &e[(u, v)] * &mz[(k, l)];
                            let x = fr.btr(&fr.e_h(k), &fr.e_b(v));
                            for (i, s) in x.support() {
                                lhs[(i, l)].add_product(&coef, s);
                            }
                        }
                    }
                }
            }
            lhs == outer(b.counit(), &zbs.column(p))
        }),
    );
    r.record(
        "f γ̄*(h*) = γ̄*(h* S⁻¹(π*f))",
        first_witness(pairs(c, n), |&(t, a)| {
            cs.mul(&fr.e_c(t), &gbs.column(a)) == gbs.apply(&hs.mul(&fr.e_h(a), &s_inv.apply(&ps.column(t))))
        }),
    );
    r.record(
        "Σ ζ̄*(b*₁) ⊗ b*₂ = Σ ζ̄*(b*)₂ ⊗ ι*S⁻¹(ζ̄*(b*)₁)",
        first_witness(0..m, |&p| {
            let lhs = zbs.mul(&fr.delta_bs(&fr.e_b(p)));
            let rhs = hs.comul(&zbs.column(p)).transpose().mul(&fr.s_inv.mul(b.iota()));
            lhs == rhs
        }),
    );
    r
}

/// The coproduct and `γ*γ*` identities used throughout the quasi-Hopf verification.
fn workhorse_identities(fr: &Frame, mp: &Maps) -> Report {
    let (h, hs, b, q, cs) = (fr.h, &fr.hs, fr.b, fr.q, &fr.cs);
    let (n, m, c) = (h.dim(), b.dim(), q.dim());
    let f = fr.field();
    let zs = mp.zeta.transpose();
    let gs = mp.gamma.transpose();
    let ps = q.pi().transpose();
    let dz: Vec<Matrix> = (0..m).map(|p| hs.comul(&zs.column(p))).collect();
    let db: Vec<Matrix> = (0..m).map(|p| fr.delta_bs(&fr.e_b(p))).collect();
    let nz = |mat: &Matrix| {
        let mut v = Vec::new();
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                if !mat[(i, j)].is_zero() {
                    v.push((i, j, mat[(i, j)].clone()));
                }
            }
        }
        v
    };
    let dz_nz: Vec<_> = dz.iter().map(nz).collect();
    let db_nz: Vec<_> = db.iter().map(nz).collect();

    // Σ ζ*(h*₁ ▷ b*₁) π*γ*(h*₂ ζ*(b*₂)₁) ⊗ ζ*(b*₂)₂ as an n × n matrix.
    let coproduct_lhs = |hstar: &Vector, p: usize| {
        let mut lhs = Matrix::zeros(f, n, n);
        for (k, l, x) in nz(&hs.comul(hstar)) {
            for (u, v, y) in &db_nz[p] {
                let left = zs.apply(&fr.btr(&fr.e_h(k), &fr.e_b(*u)));
                if left.is_zero() {
                    continue;
                }
                let xy = &x * y;
                for (s, t, z) in &dz_nz[*v] {
                    let g = ps.apply(&gs.apply(&hs.mul(&fr.e_h(l), &fr.e_h(*s))));
                    let prod = hs.mul(&left, &g);
                    let coef = &xy * z;
                    for (i, w) in prod.support() {
                        lhs[(i, *t)].add_product(&coef, w);
                    }
                }
            }
        }
        lhs
    };
    let coproduct_rhs = |hstar: &Vector, p: usize| {
        let mut rhs = Matrix::zeros(f, n, n);
        for (s, t, z) in &dz_nz[p] {
            for (i, w) in hs.mul(hstar, &fr.e_h(*s)).support() {
                rhs[(i, *t)].add_product(z, w);
            }
        }
        rhs
    };
    let mut r = Report::new();
    r.record(
        "Σ ζ*(h*₁▷b*₁) π*γ*(h*₂ζ*(b*₂)₁) ⊗ ζ*(b*₂)₂ = Σ h*ζ*(b*)₁ ⊗ ζ*(b*)₂",
        first_witness(pairs(n, m), |&(a, p)| coproduct_lhs(&fr.e_h(a), p) == coproduct_rhs(&fr.e_h(a), p)),
    );
    let eps = hs.one();
    r.record(
        "Σ ζ*(b*₁) π*γ*(ζ*(b*₂)₁) ⊗ ζ*(b*₂)₂ = Δ(ζ*(b*))",
        first_witness(0..m, |&p| coproduct_lhs(&eps, p) == dz[p]),
    );
    r.record(
        "Σ ζ*(h*₁▷b*₁) π*γ*(h*₂ζ*(b*₂)) = h*ζ*(b*)",
        first_witness(pairs(n, m), |&(a, p)| {
            let mut lhs = Vector::zeros(f, n);
            for (k, l, x) in nz(&hs.comul(&fr.e_h(a))) {
                for (u, v, y) in &db_nz[p] {
                    let left = zs.apply(&fr.btr(&fr.e_h(k), &fr.e_b(*u)));
                    let g = ps.apply(&gs.apply(&hs.mul(&fr.e_h(l), &zs.column(*v))));
                    lhs.axpy(&(&x * y), &hs.mul(&left, &g));
                }
            }
            lhs == hs.mul(&fr.e_h(a), &zs.column(p))
        }),
    );
    r.record(
        "Σ γ*(h*ζ*(b*₁)) γ*(ζ*(b*₂)₁) ⊗ ζ*(b*₂)₂ = Σ γ*(h*ζ*(b*)₁) ⊗ ζ*(b*)₂",
        first_witness(pairs(n, m), |&(a, p)| {
            let ea = fr.e_h(a);
            let mut lhs = Matrix::zeros(f, c, n);
            for (u, v, y) in &db_nz[p] {
                let left = gs.apply(&hs.mul(&ea, &zs.column(*u)));
                for (s, t, z) in &dz_nz[*v] {
                    let prod = cs.mul(&left, &gs.column(*s));
                    let coef = y * z;
                    for (i, w) in prod.support() {
                        lhs[(i, *t)].add_product(&coef, w);
                    }
                }
            }
            let mut rhs = Matrix::zeros(f, c, n);
            for (s, t, z) in &dz_nz[p] {
                for (i, w) in gs.apply(&hs.mul(&ea, &fr.e_h(*s))).support() {
                    rhs[(i, *t)].add_product(z, w);
                }
            }
            lhs == rhs
        }),
    );
    let triples = (0..n).flat_map(move |k| (0..n).flat_map(move |a| (0..m).map(move |p| (k, a, p))));
    r.record(
        "Σ γ*(k*ζ*(h*₁▷b*₁)) γ*(h*₂ζ*(b*₂)) = γ*(k*h*ζ*(b*))",
        first_witness(triples, |&(kk, a, p)| {
            let ek = fr.e_h(kk);
            let mut lhs = Vector::zeros(f, c);
            for (k, l, x) in nz(&hs.comul(&fr.e_h(a))) {
                for (u, v, y) in &db_nz[p] {
                    let left = gs.apply(&hs.mul(&ek, &zs.apply(&fr.btr(&fr.e_h(k), &fr.e_b(*u)))));
                    let right = gs.apply(&hs.mul(&fr.e_h(l), &zs.column(*v)));
                    lhs.axpy(&(&x * y), &cs.mul(&left, &right));
                }
            }
            lhs == gs.apply(&hs.mul(&hs.mul(&ek, &fr.e_h(a)), &zs.column(p)))
        }),
    );
    r
}
