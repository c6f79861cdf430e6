use crate::hopf::TensorElem;
use crate::linalg::{Matrix, Vector};
use crate::pams::{induced_pams, InducedKind, InducedPams, Pams};
use crate::report::{first_witness, Report};

use super::left::{build_left, Smash};
use super::quasi::{antipode_report, AntipodeTriple, QuasiHopfAlgebra};
use super::PartialDualError;

/// Checks that `map: src → dst` is a (possibly anti-) multiplicative, (possibly
/// co-opposite) comultiplicative, unital and counital map carrying `phi`/`phi_inv` to those of `dst`.
pub fn transport_report(
    map: &Matrix,
    src: &QuasiHopfAlgebra,
    dst: &QuasiHopfAlgebra,
    anti: bool,
    flip: bool,
    phi: &TensorElem,
    phi_inv: &TensorElem,
) -> Report {
    let mut r = Report::new();
    let n = src.dim();
    if map.rows() != dst.dim() || map.cols() != n {
        r.fail("shape", format!("{}×{} map between dimensions {n} and {}", map.rows(), map.cols(), dst.dim()));
        return r;
    }
    r.record("invertible", map.inverse().is_none().then(|| "singular".to_string()));
    let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let img: Vec<Vector> = map.columns();
    r.record(
        if anti { "anti-multiplicative" } else { "multiplicative" },
        first_witness(pairs, |&(i, j)| {
            let lhs = map.apply(&src.mul(&src.basis(i), &src.basis(j)));
            let rhs = if anti { dst.mul(&img[j], &img[i]) } else { dst.mul(&img[i], &img[j]) };
            lhs == rhs
        }),
    );
    r.record(
        if flip { "carries Δ^cop to Δ" } else { "comultiplicative" },
        first_witness(0..n, |&a| {
            let mut d = src.delta(&src.basis(a));
            if flip {
                d = d.permute(&[1, 0]);
            }
            d.map_each(map) == dst.delta(&img[a])
        }),
    );
    r.record("unit", (map.apply(&src.one()) != dst.one()).then(|| "e".to_string()));
    r.record("counit", first_witness(0..n, |&a| dst.eps(&img[a]) == src.eps(&src.basis(a))));
    r.record("associator", (phi.map_each(map) != *dst.phi()).then(|| "φ".to_string()));
    r.record("inverse associator", (phi_inv.map_each(map) != *dst.phi_inv()).then(|| "φ⁻¹".to_string()));
    r
}

/// `(map S map⁻¹, map(α), map(β))` checked as an antipode of `dst`.
fn transported_antipode(map: &Matrix, triple: &AntipodeTriple, dst: &QuasiHopfAlgebra) -> Report {
    let Some(inv) = map.inverse() else {
        let mut r = Report::new();
        r.fail("transport", "map is singular");
        return r;
    };
    let moved = AntipodeTriple {
        s: map.mul(&triple.s).mul(&inv),
        alpha: map.apply(&triple.alpha),
        beta: map.apply(&triple.beta),
    };
    let deltas: Vec<TensorElem> = (0..dst.dim()).map(|a| dst.delta(&dst.basis(a))).collect();
    antipode_report(dst, &deltas, &moved)
}

/// `ϑ(f # b) = b # f`, with `B` read inside `C'*` through the identification of quotients.
pub fn biop_map(q: &QuasiHopfAlgebra, dual_row: &InducedPams) -> Matrix {
    let (c, m) = q.factors();
    let field = q.field();
    let ident = &dual_row.identification;
    let mut cols = Vec::with_capacity(c * m);
    for a in 0..c {
        for j in 0..m {
            let mut v = Vector::zeros(field, c * m);
            for k in 0..m {
                // f'_k # f_a sits at k·c + a in C'* # C*
                v[k * c + a] = ident[(j, k)].clone();
            }
            cols.push(v);
        }
    }
    Matrix::from_columns(field, c * m, &cols)
}

/// Compares `Q^biop` with the partial dual built from the dual system on `H*^biop`.
pub fn biop_iso_report(q: &QuasiHopfAlgebra, dual_row: &InducedPams, q_dual: &QuasiHopfAlgebra) -> Report {
    let theta = biop_map(q, dual_row);
    let flip3 = [2, 1, 0];
    let mut r = Report::new();
    r.extend(
        "ϑ ",
        transport_report(&theta, q, q_dual, true, true, &q.phi().permute(&flip3), &q.phi_inv().permute(&flip3)),
    );
    if let Some([s1, s2]) = q.antipodes() {
        // the biopposite of (S, α, β) is (S, β, α)
        for (k, t) in [s1, s2].into_iter().enumerate() {
            let swapped = AntipodeTriple { s: t.s.clone(), alpha: t.beta.clone(), beta: t.alpha.clone() };
            r.extend(&format!("ϑ antipode S{} ", k + 1), transported_antipode(&theta, &swapped, q_dual));
        }
    }
    r
}

/// Builds both sides of the biopposite isomorphism and compares them.
pub fn biop_iso_check(p: &Pams) -> Result<Report, PartialDualError> {
    let q = build_left(p)?;
    let row = induced_pams(p, InducedKind::DualBiop)?;
    let q_dual = build_left(&row.pams)?;
    Ok(biop_iso_report(&q, &row, &q_dual))
}

/// `f # b ↦ Σ f₁ # (b ↼ S⁻¹(f₂))` (or `Σ f₁ # (b ↼ f₂)` for the stated inverse), both on `C* # B`.
fn op_maps(p: &Pams) -> (Matrix, Matrix) {
    let sm = Smash::new(p);
    let field = sm.fr.field();
    let dim = sm.dim();
    let s_inv = &sm.fr.s_inv;
    let mut fwd = Vec::with_capacity(dim);
    let mut back = Vec::with_capacity(dim);
    for (a, j) in sm.carrier_pairs() {
        let mut x = Vector::zeros(field, dim);
        let mut y = Vector::zeros(field, dim);
        for (s, k) in super::left::nonzero(&sm.rho[a]) {
            let r = &sm.rho[a][(s, k)];
            let mut hit_s = Vector::zeros(field, sm.m);
            let mut hit = Vector::zeros(field, sm.m);
            for (l, t, coef) in &sm.coact[j] {
                // (S⁻¹)ᵀ e*_k evaluated at e_l is S⁻¹[k][l]
                hit_s[*t].add_product(coef, &s_inv[(k, *l)]);
                if *l == k {
                    hit[*t] += coef;
                }
            }
            x = x.add(&sm.elem(&sm.f(s), &hit_s).scale(r));
            y = y.add(&sm.elem(&sm.f(s), &hit).scale(r));
        }
        fwd.push(x);
        back.push(y);
    }
    (Matrix::from_columns(field, dim, &fwd), Matrix::from_columns(field, dim, &back))
}

/// `C* # B → C₁* # B` induced by the identification `C₁ → C` of an induced row.
fn quotient_transport(row: &InducedPams, m: usize) -> Matrix {
    row.identification.transpose().kron(&Matrix::identity(row.identification.field(), m))
}

/// Compares `Q^op` with the op-row build `K₁`, and `K₁` with the cop-row build `K₂`.
pub fn op_iso_report(
    p: &Pams,
    q: &QuasiHopfAlgebra,
    op_row: &InducedPams,
    k1: &QuasiHopfAlgebra,
    cop_row: &InducedPams,
    k2: &QuasiHopfAlgebra,
) -> Report {
    let (_, m) = q.factors();
    let mut r = Report::new();
    let (fwd, back) = op_maps(p);
    let psi1 = quotient_transport(op_row, m);
    let map = psi1.mul(&fwd);
    let stated_inverse = psi1.inverse().map(|pi| back.mul(&pi));
    let id = Matrix::identity(q.field(), q.dim());
    r.record(
        "stated inverse",
        match &stated_inverse {
            None => Some("identification is singular".to_string()),
            Some(w) => (map.mul(w) != id || w.mul(&map) != id).then(|| "composites differ from identity".to_string()),
        },
    );
    r.extend("φ-map ", transport_report(&map, q, k1, true, false, q.phi_inv(), q.phi()));
    if let (Some([s1, s2]), Some(_)) = (q.antipodes(), map.inverse()) {
        // the opposite of (S, α, β) is (S⁻¹, S⁻¹β, S⁻¹α)
        for (k, t) in [s1, s2].into_iter().enumerate() {
            let name = format!("φ-map antipode S{} ", k + 1);
            match t.s.inverse() {
                None => r.fail(name + "invertible", "S is singular"),
                Some(si) => {
                    let op = AntipodeTriple { alpha: si.apply(&t.beta), beta: si.apply(&t.alpha), s: si };
                    r.extend(&name, transported_antipode(&map, &op, k1));
                }
            }
        }
    }
    // K₂ lives on C₂* # B; move it onto C₁* # B through C.
    let psi2 = quotient_transport(cop_row, m);
    match psi2.inverse() {
        None => r.fail("op builds agree", "cop identification is singular"),
        Some(psi2_inv) => {
            let mv = psi1.mul(&psi2_inv);
            r.extend("op builds agree ", transport_report(&mv, k2, k1, false, false, k2.phi(), k2.phi_inv()));
            let moved_t = mv.mul(k2.preantipode()).mul(&mv.inverse().expect("composite of invertibles"));
            r.record("op builds agree preantipode", (&moved_t != k1.preantipode()).then(|| "T".to_string()));
        }
    }
    r
}

/// Builds `Q`, both op-side partial duals, and compares all three.
pub fn op_iso_check(p: &Pams) -> Result<Report, PartialDualError> {
    let q = build_left(p)?;
    let op_row = induced_pams(p, InducedKind::Op)?;
    let k1 = build_left(&op_row.pams)?;
    let cop_row = induced_pams(p, InducedKind::Cop)?;
    let k2 = build_left(&cop_row.pams)?;
    Ok(op_iso_report(p, &q, &op_row, &k1, &cop_row, &k2))
}
