use crate::hopf::HopfAlgebra;
use crate::linalg::{Field, Matrix, Tensor3, Vector};

use super::ExampleError;

/// Finite group as a multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table: closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, ExampleError> {
        let m = table.len();
        if m == 0 || table.iter().any(|row| row.len() != m || row.iter().any(|&v| v >= m)) {
            return Err(ExampleError::NotAGroup("table is not square over 0..order".into()));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(ExampleError::NotAGroup(format!("associativity fails at {:?}", (a, b, c))));
                    }
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| ExampleError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(m);
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| ExampleError::NotAGroup(format!("{a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).unwrap()
    }

    /// Group of bijections listed in `elements`, composed as `(στ)(i) = σ(τ(i))`.
    pub fn from_permutations(elements: &[Vec<usize>]) -> Result<FiniteGroup, ExampleError> {
        let index = |p: &Vec<usize>| elements.iter().position(|q| q == p);
        let mut table = Vec::new();
        for s in elements {
            let mut row = Vec::new();
            for t in elements {
                let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                row.push(index(&st).ok_or_else(|| ExampleError::NotAGroup("not closed".into()))?);
            }
            table.push(row);
        }
        FiniteGroup::from_table(table)
    }

    /// `S₃` on `{0,1,2}` listed as `e, (01), (12), (02), (012), (021)`.
    pub fn symmetric3() -> FiniteGroup {
        FiniteGroup::from_permutations(&s3_permutations()).unwrap()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub(crate) fn s3_permutations() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0], vec![1, 2, 0], vec![2, 0, 1]]
}

/// `kG` with grouplike basis.
pub fn group_algebra(g: &FiniteGroup, field: Field) -> HopfAlgebra {
    let m = g.order();
    let mut mult = Tensor3::zeros(field, (m, m, m));
    let mut comult = Tensor3::zeros(field, (m, m, m));
    let mut antipode = Matrix::zeros(field, m, m);
    for a in 0..m {
        for b in 0..m {
            mult[(a, b, g.mul(a, b))] = field.one();
        }
        comult[(a, a, a)] = field.one();
        antipode[(g.inv(a), a)] = field.one();
    }
    let unit = Vector::basis(field, m, g.identity());
    let counit = Vector::from_vec(field, vec![field.one(); m]);
    HopfAlgebra::from_tensors(mult, unit, comult, counit, antipode).unwrap()
}
