use std::ops::{Index, IndexMut};

use super::{Field, LinalgError, Matrix, Scalar, Vector};

/// Dense three-index array `T(i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    shape: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, shape: (usize, usize, usize)) -> Tensor3 {
        Tensor3 { field, shape, data: vec![field.zero(); shape.0 * shape.1 * shape.2] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    /// Nonzero entries in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let (_, b, c) = self.shape;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(idx, s)| ((idx / (b * c), (idx / c) % b, idx % c), s))
    }

    /// Reorders the axes: output axis `t` is input axis `perm[t]`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let dims = [self.shape.0, self.shape.1, self.shape.2];
        let shape = (dims[perm[0]], dims[perm[1]], dims[perm[2]]);
        let mut out = Tensor3::zeros(self.field, shape);
        for ((i, j, k), s) in self.entries() {
            let idx = [i, j, k];
            out[(idx[perm[0]], idx[perm[1]], idx[perm[2]])] = s.clone();
        }
        out
    }

    /// Contracts `axis` against `v`; the remaining two axes keep their order.
    pub fn contract(&self, axis: usize, v: &Vector) -> Result<Matrix, LinalgError> {
        let dims = [self.shape.0, self.shape.1, self.shape.2];
        if axis > 2 || dims[axis] != v.len() {
            return Err(LinalgError::Shape(format!(
                "cannot contract axis {axis} of shape {:?} with a vector of length {}",
                self.shape,
                v.len()
            )));
        }
        let rest: Vec<usize> = (0..3).filter(|&a| a != axis).collect();
        let mut out = Matrix::zeros(self.field, dims[rest[0]], dims[rest[1]]);
        for ((i, j, k), s) in self.entries() {
            let idx = [i, j, k];
            let w = &v[idx[axis]];
            if w.is_zero() {
                continue;
            }
            out[(idx[rest[0]], idx[rest[1]])].add_product(s, w);
        }
        Ok(out)
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        let (_, b, c) = self.shape;
        &self.data[(i * b + j) * c + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        let (_, b, c) = self.shape;
        &mut self.data[(i * b + j) * c + k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn kc2_mult() -> Tensor3 {
        let mut t = Tensor3::zeros(Q, (2, 2, 2));
        for i in 0..2 {
            for j in 0..2 {
                t[(i, j, (i + j) % 2)] = Q.one();
            }
        }
        t
    }

    #[test]
    fn basis_slice() {
        let t = kc2_mult();
        let m = t.contract(0, &Vector::basis(Q, 2, 1)).unwrap();
        assert_eq!(m, Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn zero_tensor_contracts_to_zero() {
        let t = Tensor3::zeros(Q, (2, 3, 4));
        assert!(t.contract(1, &Vector::from_i64(Q, &[1, 2, 3])).unwrap().is_zero());
        assert!(t.contract(1, &Vector::from_i64(Q, &[1, 2])).is_err());
    }

    #[test]
    fn multiply_by_one_plus_g() {
        let m = kc2_mult().contract(0, &Vector::from_i64(Q, &[1, 1])).unwrap();
        assert_eq!(m, Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn permute_round_trip() {
        let mut t = Tensor3::zeros(Q, (2, 3, 4));
        t[(1, 2, 3)] = Q.from_i64(5);
        let p = t.permute([2, 0, 1]);
        assert_eq!(p.shape(), (4, 2, 3));
        assert_eq!(p[(3, 1, 2)], Q.from_i64(5));
        assert_eq!(p.permute([1, 2, 0]), t);
    }
}
