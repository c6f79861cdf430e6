use serde::Deserialize;

use crate::coideal::{build_quotient, certify_coideal, CoidealSubalgebra};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Field, Matrix, Tensor3, Vector};
use crate::pams::{certify_pams, Pams, PamsError};

use super::{group_algebra, ExampleError, FiniteGroup};

const S3_FIXTURE: &str = include_str!("../../fixtures/s3_matched_pair.json");

/// Raw tables: `act_left[x][b] = x ▷ b ∈ F`, `act_right[x][b] = x ◁ b ∈ G`.
#[derive(Clone, Debug, Deserialize)]
pub struct MatchedPairTables {
    #[serde(rename = "F")]
    pub f: Vec<Vec<usize>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<usize>>,
    pub act_left: Vec<Vec<usize>>,
    pub act_right: Vec<Vec<usize>>,
}

/// Matched pair `(F, G)` with `▷: G × F → F`, `◁: G × F → G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    f: FiniteGroup,
    g: FiniteGroup,
    act_left: Vec<Vec<usize>>,
    act_right: Vec<Vec<usize>>,
    product: FiniteGroup,
}

impl MatchedPair {
    /// Validates both actions, both compatibility laws and the product group.
    pub fn new(
        f: FiniteGroup,
        g: FiniteGroup,
        act_left: Vec<Vec<usize>>,
        act_right: Vec<Vec<usize>>,
    ) -> Result<MatchedPair, ExampleError> {
        let (nf, ng) = (f.order(), g.order());
        let bad = |msg: String| Err(ExampleError::NotAMatchedPair(msg));
        let shaped = |t: &Vec<Vec<usize>>, bound: usize| {
            t.len() == ng && t.iter().all(|row| row.len() == nf && row.iter().all(|&v| v < bound))
        };
        if !shaped(&act_left, nf) || !shaped(&act_right, ng) {
            return bad(format!("action tables must be {ng}×{nf} with values in range"));
        }
        let tri = |x: usize, b: usize| act_left[x][b];
        let tle = |x: usize, b: usize| act_right[x][b];
        for b in 0..nf {
            if tri(g.identity(), b) != b {
                return bad(format!("1 ▷ {b} ≠ {b}"));
            }
        }
        for x in 0..ng {
            if tle(x, f.identity()) != x {
                return bad(format!("{x} ◁ 1 ≠ {x}"));
            }
        }
        for x in 0..ng {
            for y in 0..ng {
                for b in 0..nf {
                    if tri(x, tri(y, b)) != tri(g.mul(x, y), b) {
                        return bad(format!("▷ is not an action at {:?}", (x, y, b)));
                    }
                    // xy ◁ b = (x ◁ (y ▷ b))(y ◁ b)
                    if tle(g.mul(x, y), b) != g.mul(tle(x, tri(y, b)), tle(y, b)) {
                        return bad(format!("xy ◁ b fails at {:?}", (x, y, b)));
                    }
                }
            }
        }
        for x in 0..ng {
            for b in 0..nf {
                for c in 0..nf {
                    if tle(tle(x, b), c) != tle(x, f.mul(b, c)) {
                        return bad(format!("◁ is not an action at {:?}", (x, b, c)));
                    }
                    // x ▷ bc = (x ▷ b)((x ◁ b) ▷ c)
                    if tri(x, f.mul(b, c)) != f.mul(tri(x, b), tri(tle(x, b), c)) {
                        return bad(format!("x ▷ bc fails at {:?}", (x, b, c)));
                    }
                }
            }
        }
        let idx = |b: usize, x: usize| b * ng + x;
        let mut table = vec![vec![0; nf * ng]; nf * ng];
        for b in 0..nf {
            for x in 0..ng {
                for c in 0..nf {
                    for y in 0..ng {
                        table[idx(b, x)][idx(c, y)] = idx(f.mul(b, tri(x, c)), g.mul(tle(x, c), y));
                    }
                }
            }
        }
        let product = FiniteGroup::from_table(table).map_err(|e| ExampleError::NotAMatchedPair(e.to_string()))?;
        Ok(MatchedPair { f, g, act_left, act_right, product })
    }

    pub fn from_tables(t: MatchedPairTables) -> Result<MatchedPair, ExampleError> {
        MatchedPair::new(FiniteGroup::from_table(t.f)?, FiniteGroup::from_table(t.g)?, t.act_left, t.act_right)
    }

    pub fn from_json(text: &str) -> Result<MatchedPair, ExampleError> {
        let t: MatchedPairTables =
            serde_json::from_str(text).map_err(|e| ExampleError::NotAMatchedPair(e.to_string()))?;
        MatchedPair::from_tables(t)
    }

    /// `S₃ = C₂ ⋈ C₃` from `⟨(12)⟩ · ⟨(123)⟩`; `C₃` is normal so `▷` is trivial and `◁` conjugates.
    pub fn s3() -> MatchedPair {
        MatchedPair::from_json(S3_FIXTURE).expect("shipped fixture is valid")
    }

    /// `F × G` with trivial actions.
    pub fn direct_product(f: FiniteGroup, g: FiniteGroup) -> MatchedPair {
        let left = (0..g.order()).map(|_| (0..f.order()).collect()).collect();
        let right = (0..g.order()).map(|x| vec![x; f.order()]).collect();
        MatchedPair::new(f, g, left, right).expect("trivial actions always match")
    }

    pub fn f(&self) -> &FiniteGroup {
        &self.f
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn act_left(&self, x: usize, b: usize) -> usize {
        self.act_left[x][b]
    }

    pub fn act_right(&self, x: usize, b: usize) -> usize {
        self.act_right[x][b]
    }

    /// `F ⋈ G` on indices `b·|G| + x`.
    pub fn product(&self) -> &FiniteGroup {
        &self.product
    }

    pub fn pair_index(&self, b: usize, x: usize) -> usize {
        b * self.g.order() + x
    }
}

/// `k(F ⋈ G)`, the coideal `kF` and the system `(π_F, ι_G*)`.
pub fn matched_pair_hopf(mp: &MatchedPair, field: Field) -> Result<(HopfAlgebra, CoidealSubalgebra, Pams), PamsError> {
    let h = group_algebra(mp.product(), field);
    let (nf, ng) = (mp.f.order(), mp.g.order());
    let n = nf * ng;
    let mut iota = Matrix::zeros(field, n, nf);
    let mut zeta = Matrix::zeros(field, nf, n);
    for b in 0..nf {
        iota[(mp.pair_index(b, mp.g.identity()), b)] = field.one();
        for x in 0..ng {
            zeta[(b, mp.pair_index(b, x))] = field.one();
        }
    }
    let b = certify_coideal(&h, &iota)?;
    let q = build_quotient(&b)?;
    // each canonical class contains exactly one G-coordinate
    let mut gamma = Matrix::zeros(field, n, q.dim());
    for (t, &k) in q.complement_columns().iter().enumerate() {
        gamma[(mp.pair_index(mp.f.identity(), k % ng), t)] = field.one();
    }
    let p = certify_pams(&q, &zeta, &gamma)?;
    Ok((h, b, p))
}

/// `k^G # kF` from the closed formulas, basis `p_x # b ↦ x·|F| + b`.
pub fn bismash_product(mp: &MatchedPair, field: Field) -> Result<HopfAlgebra, ExampleError> {
    let (f, g) = (&mp.f, &mp.g);
    let (nf, ng) = (f.order(), g.order());
    let n = nf * ng;
    let idx = |x: usize, b: usize| x * nf + b;
    let mut mult = Tensor3::zeros(field, (n, n, n));
    let mut comult = Tensor3::zeros(field, (n, n, n));
    let mut antipode = Matrix::zeros(field, n, n);
    let mut unit = Vector::zeros(field, n);
    let mut counit = Vector::zeros(field, n);
    for x in 0..ng {
        unit[idx(x, f.identity())] = field.one();
        for b in 0..nf {
            // (p_x # b)(p_{x◁b} # c) = p_x # bc
            for c in 0..nf {
                mult[(idx(x, b), idx(mp.act_right(x, b), c), idx(x, f.mul(b, c)))] = field.one();
            }
            // Δ(p_x # b) = Σ_y (p_{xy⁻¹} # (y ▷ b)) ⊗ (p_y # b)
            for y in 0..ng {
                comult[(idx(x, b), idx(g.mul(x, g.inv(y)), mp.act_left(y, b)), idx(y, b))] = field.one();
            }
            // S(p_x # b) = p_{(x◁b)⁻¹} # (x▷b)⁻¹
            antipode[(idx(g.inv(mp.act_right(x, b)), f.inv(mp.act_left(x, b))), idx(x, b))] = field.one();
        }
        if x == g.identity() {
            for b in 0..nf {
                counit[idx(x, b)] = field.one();
            }
        }
    }
    let h = HopfAlgebra::from_tensors(mult, unit, comult, counit, antipode)
        .map_err(|e| ExampleError::NotAMatchedPair(e.to_string()))?;
    let report = crate::hopf::verify_hopf(&h);
    match report.first_failure() {
        None => Ok(h),
        Some(c) => Err(ExampleError::NotAMatchedPair(format!("bismash product fails {}", c.name))),
    }
}
