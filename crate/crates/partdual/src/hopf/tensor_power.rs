use std::collections::BTreeMap;

use crate::linalg::{Field, Matrix, Scalar, Tensor3, Vector};

use super::Algebra;

/// Sparse coproduct table: `table[i]` lists `(j, k, d(i,j,k))`.
pub type CoproductTable = Vec<Vec<(usize, usize, Scalar)>>;

pub fn coproduct_table(t: &Tensor3) -> CoproductTable {
    let mut table = vec![Vec::new(); t.shape().0];
    for ((i, j, k), s) in t.entries() {
        table[i].push((j, k, s.clone()));
    }
    table
}

/// Sparse element of `A^{⊗k}`, keyed by multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    field: Field,
    dim: usize,
    order: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl TensorElem {
    pub fn zero(field: Field, dim: usize, order: usize) -> TensorElem {
        TensorElem { field, dim, order, terms: BTreeMap::new() }
    }

    pub fn pure(vectors: &[&Vector]) -> TensorElem {
        let field = vectors[0].field();
        let dim = vectors[0].len();
        let mut out = TensorElem::zero(field, dim, 0);
        out.terms.insert(Vec::new(), field.one());
        for v in vectors {
            out = out.tensor(&TensorElem::from_vector(v));
        }
        out
    }

    pub fn from_vector(v: &Vector) -> TensorElem {
        let mut out = TensorElem::zero(v.field(), v.len(), 1);
        for (i, s) in v.support() {
            out.terms.insert(vec![i], s.clone());
        }
        out
    }

    /// Dense coordinates, index `i₀ n^{k-1} + … + i_{k-1}`.
    pub fn from_dense(field: Field, dim: usize, order: usize, v: &Vector) -> TensorElem {
        let mut out = TensorElem::zero(field, dim, order);
        for (flat, s) in v.support() {
            out.terms.insert(unflatten(flat, dim, order), s.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vector {
        let mut v = Vector::zeros(self.field, self.dim.pow(self.order as u32));
        for (idx, s) in &self.terms {
            v[flatten(idx, self.dim)] = s.clone();
        }
        v
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: &Scalar) {
        debug_assert_eq!(idx.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), &(c * s));
        }
        out
    }

    pub fn tensor(&self, other: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order + other.order);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, &(x * y));
            }
        }
        out
    }

    /// Componentwise product in `A^{⊗k}`.
    pub fn mul(&self, other: &TensorElem, alg: &Algebra) -> TensorElem {
        assert_eq!(self.order, other.order, "tensor order mismatch");
        let mut out = TensorElem::zero(self.field, self.dim, self.order);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(self.order), x * y)];
                for t in 0..self.order {
                    let prod = alg.product_of(a[t], b[t]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (k, m) in prod {
                            let mut idx = idx.clone();
                            idx.push(*k);
                            next.push((idx, c * m));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out.add_term(idx, &c);
                }
            }
        }
        out
    }

    /// Applies a coproduct to tensorand `slot`, raising the order by one.
    pub fn coproduct_at(&self, slot: usize, table: &CoproductTable) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order + 1);
        for (idx, c) in &self.terms {
            for (j, k, d) in &table[idx[slot]] {
                let mut new = Vec::with_capacity(self.order + 1);
                new.extend_from_slice(&idx[..slot]);
                new.push(*j);
                new.push(*k);
                new.extend_from_slice(&idx[slot + 1..]);
                out.add_term(new, &(c * d));
            }
        }
        out
    }

    /// Applies a functional to tensorand `slot`, lowering the order by one.
    pub fn functional_at(&self, slot: usize, f: &Vector) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order - 1);
        for (idx, c) in &self.terms {
            let v = &f[idx[slot]];
            if v.is_zero() {
                continue;
            }
            let mut new = idx.clone();
            new.remove(slot);
            out.add_term(new, &(c * v));
        }
        out
    }

    /// Inserts the vector `v` as a new tensorand at position `slot`.
    pub fn insert_at(&self, slot: usize, v: &Vector) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order + 1);
        for (idx, c) in &self.terms {
            for (i, s) in v.support() {
                let mut new = idx.clone();
                new.insert(slot, i);
                out.add_term(new, &(c * s));
            }
        }
        out
    }

    /// Output tensorand `t` is input tensorand `perm[t]`.
    pub fn permute(&self, perm: &[usize]) -> TensorElem {
        let mut out = TensorElem::zero(self.field, self.dim, self.order);
        for (idx, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| idx[p]).collect(), c);
        }
        out
    }

    /// Applies the same linear map to every tensorand.
    pub fn map_each(&self, m: &Matrix) -> TensorElem {
        let cols = m.columns();
        let mut out = TensorElem::zero(self.field, m.rows(), self.order);
        for (idx, c) in &self.terms {
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c.clone())];
            for &i in idx {
                let mut next = Vec::new();
                for (pidx, pc) in &partial {
                    for (k, s) in cols[i].support() {
                        let mut n = pidx.clone();
                        n.push(k);
                        next.push((n, pc * s));
                    }
                }
                partial = next;
            }
            for (n, s) in partial {
                out.add_term(n, &s);
            }
        }
        out
    }
}

fn flatten(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

fn unflatten(mut flat: usize, dim: usize, order: usize) -> Vec<usize> {
    let mut idx = vec![0; order];
    for t in (0..order).rev() {
        idx[t] = flat % dim;
        flat /= dim;
    }
    idx
}
