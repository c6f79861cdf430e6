use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coideal::{build_quotient, certify_coideal, CoidealQuotient};
use crate::hopf::{convolution_inverse, convolution_product, HopfError, LinMap};
use crate::linalg::{solve, Field, Matrix, Scalar, Vector};
use crate::report::first_witness;

use super::certify::outer;
use super::PamsError;

/// Default seed for the pseudorandom stage of the cointegral search.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    UserSupplied(LinMap),
    Deterministic { seed: u64, bound: u64, max_attempts: usize },
}

impl Default for SearchStrategy {
    fn default() -> SearchStrategy {
        SearchStrategy::Deterministic { seed: DEFAULT_SEED, bound: 2, max_attempts: 512 }
    }
}

/// `particular + span(directions)`, all as `m × n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: LinMap,
    pub directions: Vec<LinMap>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn point(&self, coefficients: &[Scalar]) -> LinMap {
        let mut out = self.particular.clone();
        for (c, d) in coefficients.iter().zip(&self.directions) {
            if !c.is_zero() {
                out = out.add(&d.scale(c));
            }
        }
        out
    }
}

fn module_map_witness(q: &CoidealQuotient, zeta: &LinMap) -> Option<String> {
    let h = q.parent();
    let b = q.coideal();
    first_witness((0..b.dim()).flat_map(|i| (0..h.dim()).map(move |k| (i, k))), |&(i, k)| {
        zeta.apply(&h.mul(&b.iota().column(i), &h.basis(k))) == b.algebra().mul(&b.basis(i), &zeta.column(k))
    })
}

fn check_zeta_shape(q: &CoidealQuotient, zeta: &LinMap) -> Result<(), PamsError> {
    let (n, m) = (q.parent().dim(), q.coideal().dim());
    if zeta.rows() != m || zeta.cols() != n {
        return Err(PamsError::Shape(format!("ζ is {}×{}, expected {m}×{n}", zeta.rows(), zeta.cols())));
    }
    if zeta.field() != q.field() {
        return Err(PamsError::Hopf(HopfError::FieldMismatch));
    }
    Ok(())
}

fn invert_zeta(q: &CoidealQuotient, zeta: &LinMap) -> Result<LinMap, PamsError> {
    convolution_inverse(zeta, q.parent().coalgebra(), q.coideal().algebra()).map_err(|e| match e {
        HopfError::NotInvertible => PamsError::ZetaNotInvertible,
        other => PamsError::Hopf(other),
    })
}

/// `γ(π(h)) = Σ ι(ζ̄(h₁)) h₂` and `γ̄(π(h)) = Σ S(h₁) ι(ζ(h₂))`, evaluated on canonical lifts.
pub fn gamma_from_zeta(q: &CoidealQuotient, zeta: &LinMap) -> Result<(LinMap, LinMap), PamsError> {
    check_zeta_shape(q, zeta)?;
    if let Some(w) = module_map_witness(q, zeta) {
        return Err(PamsError::ZetaNotModuleMap(w));
    }
    let h = q.parent();
    let b = q.coideal();
    if zeta.apply(&h.one()) != b.one() {
        return Err(PamsError::ZetaNotBiunitary("ζ(1) ≠ 1".into()));
    }
    if let Some(w) = first_witness(0..h.dim(), |&k| b.counit().dot(&zeta.column(k)) == h.coalgebra().counit()[k]) {
        return Err(PamsError::ZetaNotBiunitary(format!("ε∘ζ ≠ ε at e_{w}")));
    }
    let zeta_bar = invert_zeta(q, zeta)?;
    let conv = |x: &Matrix, y: &Matrix| convolution_product(x, y, h.coalgebra(), h.algebra()).unwrap();
    let g_full = conv(&b.iota().mul(&zeta_bar), &Matrix::identity(h.field(), h.dim()));
    let gb_full = conv(h.antipode(), &b.iota().mul(zeta));
    let kernel = q.kernel_basis();
    for (name, full) in [("γ", &g_full), ("γ̄", &gb_full)] {
        if let Some(w) = first_witness(0..kernel.rows(), |&r| full.apply(&kernel.row(r)).is_zero()) {
            return Err(PamsError::GammaNotWellDefined(format!("{name} on B⁺H row {w}")));
        }
    }
    let lift = q.lift_map();
    let gamma = g_full.mul(&lift);
    let gamma_bar = gb_full.mul(&lift);
    match convolution_inverse(&gamma, q.quotient_coalgebra(), h.algebra()) {
        Ok(inv) if inv == gamma_bar => Ok((gamma, gamma_bar)),
        _ => {
            Err(PamsError::Identity { name: "γ̄ = convolution inverse of γ".into(), witness: "closed form".into() })
        }
    }
}

/// Recovers `ζ` from `γ` through the system `(γ*, ζ)` on `H*^biop`.
pub fn zeta_from_gamma(q: &CoidealQuotient, gamma: &LinMap) -> Result<LinMap, PamsError> {
    let h = q.parent();
    let hp = h.dual_unchecked().biopposite_unchecked();
    let bp = certify_coideal(&hp, &q.pi().transpose())?;
    let qp = build_quotient(&bp)?;
    let (gamma_p, _) = gamma_from_zeta(&qp, &gamma.transpose())?;
    let iso = q.coideal().iota().transpose().mul(&qp.lift_map());
    let inv = iso.inverse().ok_or_else(|| PamsError::Shape("C' is not identified with B*".into()))?;
    Ok(gamma_p.mul(&inv).transpose())
}

/// Normalizes a cointegral to be unitary and counitary.
pub fn biunitarize(q: &CoidealQuotient, zeta0: &LinMap) -> Result<LinMap, PamsError> {
    check_zeta_shape(q, zeta0)?;
    if let Some(w) = module_map_witness(q, zeta0) {
        return Err(PamsError::ZetaNotModuleMap(w));
    }
    let h = q.parent();
    let b = q.coideal();
    let ba = b.algebra();
    let zb0 = invert_zeta(q, zeta0)?;
    let one = h.one();
    let zb0_one = zb0.apply(&one);
    let z0_one = zeta0.apply(&one);
    let n = h.dim();
    let cols1: Vec<Vector> = (0..n).map(|k| ba.mul(&zeta0.column(k), &zb0_one)).collect();
    let zeta1 = Matrix::from_columns(h.field(), b.dim(), &cols1);
    let bar_cols: Vec<Vector> = (0..n).map(|k| ba.mul(&z0_one, &zb0.column(k))).collect();
    let zeta1_bar = Matrix::from_columns(h.field(), b.dim(), &bar_cols);
    let eps_bar = b.counit().clone();
    let weights = Vector::from_vec(h.field(), (0..n).map(|k| eps_bar.dot(&zeta1_bar.column(k))).collect());
    let mut cols2 = Vec::with_capacity(n);
    for k in 0..n {
        let mut col = Vector::zeros(h.field(), b.dim());
        for (i, j, d) in h.coalgebra().coproduct_of(k) {
            col.axpy(&(d * &weights[*j]), &zeta1.column(*i));
        }
        cols2.push(col);
    }
    Ok(Matrix::from_columns(h.field(), b.dim(), &cols2))
}

/// Solutions of {left B-module map, ζ(1) = 1, ε∘ζ = ε}; unknown `ζ[r][k]` sits at `r·n + k`.
pub fn cointegral_solution_space(q: &CoidealQuotient) -> AffineSpace {
    let h = q.parent();
    let b = q.coideal();
    let f = h.field();
    let (n, m) = (h.dim(), b.dim());
    let var = |r: usize, k: usize| r * n + k;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for i in 0..m {
        let bi = b.iota().column(i);
        for k in 0..n {
            let v = h.mul(&bi, &h.basis(k));
            for r in 0..m {
                let mut row = Vector::zeros(f, m * n);
                for (l, s) in v.support() {
                    row[var(r, l)] += s;
                }
                for s in 0..m {
                    for (rr, c) in b.algebra().product_of(i, s) {
                        if *rr == r {
                            row[var(s, k)] -= c;
                        }
                    }
                }
                if !row.is_zero() {
                    rows.push(row);
                    rhs.push(f.zero());
                }
            }
        }
    }
    let one = h.one();
    let one_b = b.one();
    for r in 0..m {
        let mut row = Vector::zeros(f, m * n);
        for (l, s) in one.support() {
            row[var(r, l)] = s.clone();
        }
        rows.push(row);
        rhs.push(one_b[r].clone());
    }
    for k in 0..n {
        let mut row = Vector::zeros(f, m * n);
        for (r, s) in b.counit().support() {
            row[var(r, k)] = s.clone();
        }
        rows.push(row);
        rhs.push(h.coalgebra().counit()[k].clone());
    }
    let a = Matrix::from_rows(f, m * n, &rows);
    let x = solve(&a, &Vector::from_vec(f, rhs)).unwrap().expect("ε·1_B-type constraints are consistent for a coideal");
    let unflat = |v: &Vector| {
        let mut z = Matrix::zeros(f, m, n);
        for r in 0..m {
            for k in 0..n {
                z[(r, k)] = v[var(r, k)].clone();
            }
        }
        z
    };
    AffineSpace { particular: unflat(&x), directions: a.kernel().iter().map(unflat).collect() }
}

/// Coefficient values tried by the enumeration stage, smallest magnitude first.
fn box_values(field: Field, bound: u64) -> Vec<Scalar> {
    let mut vals = vec![field.zero()];
    for k in 1..=bound as i64 {
        vals.push(field.from_i64(k));
        vals.push(field.from_i64(-k));
    }
    let mut seen = Vec::new();
    for v in vals {
        if !seen.contains(&v) {
            seen.push(v);
        }
    }
    seen
}

/// Returns a biunitary convolution-invertible left `B`-module map `ζ: H → B`.
pub fn find_cointegral(q: &CoidealQuotient, strategy: &SearchStrategy) -> Result<LinMap, PamsError> {
    let h = q.parent();
    let b = q.coideal();
    let f = h.field();
    let (seed, bound, max_attempts) = match strategy {
        SearchStrategy::UserSupplied(z) => return biunitarize(q, z),
        SearchStrategy::Deterministic { seed, bound, max_attempts } => (*seed, *bound, *max_attempts),
    };
    if b.dim() == h.dim() {
        return Ok(b.iota().inverse().expect("injective square inclusion"));
    }
    if b.dim() == 1 {
        return Ok(outer(&b.one(), h.coalgebra().counit()));
    }
    let space = cointegral_solution_space(q);
    let d = space.dim();
    let mut attempts = 0;
    let try_point = |coeffs: &[Scalar], attempts: &mut usize| -> Option<LinMap> {
        *attempts += 1;
        let z = space.point(coeffs);
        invert_zeta(q, &z).ok().map(|_| z)
    };
    if let Some(z) = try_point(&[], &mut attempts) {
        return biunitarize(q, &z);
    }
    if d > 0 {
        let vals = box_values(f, bound);
        let mut digits = vec![0usize; d];
        loop {
            // odometer over vals^d, last coordinate fastest
            let mut t = d;
            loop {
                if t == 0 {
                    break;
                }
                t -= 1;
                digits[t] += 1;
                if digits[t] < vals.len() {
                    break;
                }
                digits[t] = 0;
            }
            if digits.iter().all(|&x| x == 0) || attempts >= max_attempts {
                break;
            }
            let coeffs: Vec<Scalar> = digits.iter().map(|&i| vals[i].clone()).collect();
            if let Some(z) = try_point(&coeffs, &mut attempts) {
                return biunitarize(q, &z);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while attempts < max_attempts {
            let coeffs: Vec<Scalar> = (0..d)
                .map(|_| match f {
                    Field::Rational => {
                        let b = bound.max(1) as i64;
                        f.from_i64(rng.gen_range(-b..=b))
                    }
                    Field::Prime(p) => f.from_i64(rng.gen_range(0..p) as i64),
                })
                .collect();
            if let Some(z) = try_point(&coeffs, &mut attempts) {
                return biunitarize(q, &z);
            }
        }
    }
    Err(PamsError::SearchExhausted { attempts })
}
