//! JSON documents for every object kind. The grammar is in `docs/format.md` at the repository root.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::examples::{MatchedPair, MatchedPairTables};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, TensorElem};
use crate::linalg::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::pams::Pams;
use crate::partial_dual::{antipodes_from_preantipode, CoquasiHopfAlgebra, QuasiHopfAlgebra};

pub const FORMAT_VERSION: &str = "partdual/1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("malformed document: {0}")]
    Format(String),
    #[error("index {index:?} out of range for `{tensor}` of shape {shape:?}")]
    IndexOutOfRange { tensor: String, index: Vec<usize>, shape: Vec<usize> },
    #[error("scalar {text:?} in `{tensor}` is not an element of {field}")]
    Scalar { tensor: String, text: String, field: String },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("invalid object: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Hopf,
    Coideal,
    Pams,
    QuasiHopf,
    CoquasiHopf,
    MatchedPair,
    LinearMap,
}

/// Sparse tensor: nonzero entries as `[index-tuple, scalar]` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseTensor {
    pub shape: Vec<usize>,
    pub entries: Vec<(Vec<usize>, String)>,
}

/// On-disk form of every object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format: String,
    pub field: String,
    pub kind: Kind,
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, SparseTensor>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

/// Parsed content of a document. Inputs that need certification stay raw.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Hopf(HopfAlgebra),
    Coideal { hopf: HopfAlgebra, iota: Matrix },
    Pams { hopf: HopfAlgebra, iota: Matrix, zeta: Matrix, gamma: Matrix },
    QuasiHopf(QuasiHopfAlgebra),
    CoquasiHopf(CoquasiHopfAlgebra),
    MatchedPair(MatchedPair),
    LinearMap(Matrix),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Hopf(_) => Kind::Hopf,
            Object::Coideal { .. } => Kind::Coideal,
            Object::Pams { .. } => Kind::Pams,
            Object::QuasiHopf(_) => Kind::QuasiHopf,
            Object::CoquasiHopf(_) => Kind::CoquasiHopf,
            Object::MatchedPair(_) => Kind::MatchedPair,
            Object::LinearMap(_) => Kind::LinearMap,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Object::Hopf(h) | Object::Coideal { hopf: h, .. } | Object::Pams { hopf: h, .. } => h.field(),
            Object::QuasiHopf(q) => q.field(),
            Object::CoquasiHopf(r) => r.field(),
            Object::MatchedPair(_) => Field::Rational,
            Object::LinearMap(m) => m.field(),
        }
    }
}

impl From<&Pams> for Object {
    fn from(p: &Pams) -> Object {
        Object::Pams {
            hopf: p.hopf().clone(),
            iota: p.coideal().iota().clone(),
            zeta: p.zeta().clone(),
            gamma: p.gamma().clone(),
        }
    }
}

fn sparse(shape: Vec<usize>, entries: impl Iterator<Item = (Vec<usize>, String)>) -> SparseTensor {
    let mut entries: Vec<_> = entries.collect();
    entries.sort();
    SparseTensor { shape, entries }
}

fn from_tensor3(t: &Tensor3) -> SparseTensor {
    let (a, b, c) = t.shape();
    sparse(vec![a, b, c], t.entries().map(|((i, j, k), s)| (vec![i, j, k], s.to_string())))
}

fn from_matrix(m: &Matrix) -> SparseTensor {
    let entries = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !m[(i, j)].is_zero())
        .map(|(i, j)| (vec![i, j], m[(i, j)].to_string()));
    sparse(vec![m.rows(), m.cols()], entries)
}

fn from_vector(v: &Vector) -> SparseTensor {
    sparse(vec![v.len()], v.support().map(|(i, s)| (vec![i], s.to_string())))
}

fn from_elem(t: &TensorElem) -> SparseTensor {
    sparse(vec![t.dim(); t.order()], t.terms().map(|(i, s)| (i.clone(), s.to_string())))
}

fn hopf_tensors(h: &HopfAlgebra, out: &mut BTreeMap<String, SparseTensor>) {
    out.insert("mult".into(), from_tensor3(h.algebra().mult()));
    out.insert("unit".into(), from_vector(h.algebra().unit()));
    out.insert("comult".into(), from_tensor3(h.coalgebra().comult()));
    out.insert("counit".into(), from_vector(h.coalgebra().counit()));
    out.insert("antipode".into(), from_matrix(h.antipode()));
}

pub fn to_document(obj: &Object) -> Document {
    let mut dims = BTreeMap::new();
    let mut tensors = BTreeMap::new();
    let mut tables = BTreeMap::new();
    match obj {
        Object::Hopf(h) => {
            dims.insert("H".into(), h.dim());
            hopf_tensors(h, &mut tensors);
        }
        Object::Coideal { hopf, iota } => {
            dims.insert("H".into(), hopf.dim());
            dims.insert("B".into(), iota.cols());
            hopf_tensors(hopf, &mut tensors);
            tensors.insert("iota".into(), from_matrix(iota));
        }
        Object::Pams { hopf, iota, zeta, gamma } => {
            dims.insert("H".into(), hopf.dim());
            dims.insert("B".into(), iota.cols());
            dims.insert("C".into(), gamma.cols());
            hopf_tensors(hopf, &mut tensors);
            tensors.insert("iota".into(), from_matrix(iota));
            tensors.insert("zeta".into(), from_matrix(zeta));
            tensors.insert("gamma".into(), from_matrix(gamma));
        }
        Object::QuasiHopf(q) => {
            let (c, m) = q.factors();
            dims.insert("dim".into(), q.dim());
            dims.insert("C".into(), c);
            dims.insert("B".into(), m);
            tensors.insert("mult".into(), from_tensor3(q.algebra().mult()));
            tensors.insert("unit".into(), from_vector(q.algebra().unit()));
            tensors.insert("comult".into(), from_tensor3(q.comult()));
            tensors.insert("counit".into(), from_vector(q.counit()));
            tensors.insert("phi".into(), from_elem(q.phi()));
            tensors.insert("phi_inv".into(), from_elem(q.phi_inv()));
            tensors.insert("preantipode".into(), from_matrix(q.preantipode()));
        }
        Object::CoquasiHopf(r) => {
            let (c, m) = r.factors();
            dims.insert("dim".into(), r.dim());
            dims.insert("C".into(), c);
            dims.insert("B".into(), m);
            tensors.insert("comult".into(), from_tensor3(r.coalgebra().comult()));
            tensors.insert("counit".into(), from_vector(r.coalgebra().counit()));
            tensors.insert("mult".into(), from_tensor3(r.mult()));
            tensors.insert("unit".into(), from_vector(r.unit()));
            tensors.insert("coassociator".into(), from_elem(r.coassociator()));
            tensors.insert("coassociator_inv".into(), from_elem(r.coassociator_inv()));
            tensors.insert("preantipode".into(), from_matrix(r.preantipode()));
        }
        Object::MatchedPair(mp) => {
            dims.insert("F".into(), mp.f().order());
            dims.insert("G".into(), mp.g().order());
            let (nf, ng) = (mp.f().order(), mp.g().order());
            tables.insert("F".into(), mp.f().table().to_vec());
            tables.insert("G".into(), mp.g().table().to_vec());
            tables.insert("act_left".into(), (0..ng).map(|x| (0..nf).map(|b| mp.act_left(x, b)).collect()).collect());
            tables.insert("act_right".into(), (0..ng).map(|x| (0..nf).map(|b| mp.act_right(x, b)).collect()).collect());
        }
        Object::LinearMap(m) => {
            dims.insert("rows".into(), m.rows());
            dims.insert("cols".into(), m.cols());
            tensors.insert("map".into(), from_matrix(m));
        }
    }
    Document {
        format: FORMAT_VERSION.into(),
        field: obj.field().descriptor(),
        kind: obj.kind(),
        dims,
        tensors,
        tables,
        labels: Vec::new(),
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("documents always serialize")
}

/// Canonical text: one line per tensor entry or table row, newline terminated.
pub fn write_document(doc: &Document) -> String {
    let mut out = String::from("{\n");
    out += &format!("  \"format\": {},\n", json(&doc.format));
    out += &format!("  \"field\": {},\n", json(&doc.field));
    out += &format!("  \"kind\": {},\n", json(&doc.kind));
    out += &format!("  \"dims\": {}", json(&doc.dims));
    if !doc.tensors.is_empty() {
        out += ",\n  \"tensors\": {";
        for (n, (name, t)) in doc.tensors.iter().enumerate() {
            out += if n == 0 { "\n" } else { ",\n" };
            out += &format!("    {}: {{\n      \"shape\": {},\n      \"entries\": [", json(name), json(&t.shape));
            for (k, e) in t.entries.iter().enumerate() {
                out += if k == 0 { "\n        " } else { ",\n        " };
                out += &json(e);
            }
            out += if t.entries.is_empty() { "]\n    }" } else { "\n      ]\n    }" };
        }
        out += "\n  }";
    }
    if !doc.tables.is_empty() {
        out += ",\n  \"tables\": {";
        for (n, (name, rows)) in doc.tables.iter().enumerate() {
            out += if n == 0 { "\n" } else { ",\n" };
            out += &format!("    {}: [", json(name));
            for (k, row) in rows.iter().enumerate() {
                out += if k == 0 { "\n      " } else { ",\n      " };
                out += &json(row);
            }
            out += "\n    ]";
        }
        out += "\n  }";
    }
    if !doc.labels.is_empty() {
        out += &format!(",\n  \"labels\": {}", json(&doc.labels));
    }
    out += "\n}\n";
    out
}

pub fn serialize(obj: &Object) -> String {
    write_document(&to_document(obj))
}

pub fn parse(text: &str) -> Result<Object, DocumentError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_document(&doc)
}

/// Typed reader over one document.
struct Reader<'a> {
    doc: &'a Document,
    field: Field,
}

impl Reader<'_> {
    fn dim(&self, name: &str) -> Result<usize, DocumentError> {
        self.doc.dims.get(name).copied().ok_or_else(|| DocumentError::Format(format!("missing dimension `{name}`")))
    }

    /// Entries of `name`, checked against `shape`.
    fn entries(&self, name: &str, shape: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>, DocumentError> {
        let t = self.doc.tensors.get(name).ok_or_else(|| DocumentError::Format(format!("missing tensor `{name}`")))?;
        if t.shape != shape {
            return Err(DocumentError::Format(format!("`{name}` has shape {:?}, expected {shape:?}", t.shape)));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(t.entries.len());
        for (idx, text) in &t.entries {
            if idx.len() != shape.len() || idx.iter().zip(shape).any(|(i, n)| i >= n) {
                return Err(DocumentError::IndexOutOfRange {
                    tensor: name.into(),
                    index: idx.clone(),
                    shape: shape.to_vec(),
                });
            }
            if !seen.insert(idx.clone()) {
                return Err(DocumentError::Format(format!("`{name}` repeats index {idx:?}")));
            }
            let s = self.field.parse(text).map_err(|_| DocumentError::Scalar {
                tensor: name.into(),
                text: text.clone(),
                field: self.field.descriptor(),
            })?;
            out.push((idx.clone(), s));
        }
        Ok(out)
    }

    fn tensor3(&self, name: &str, shape: (usize, usize, usize)) -> Result<Tensor3, DocumentError> {
        let mut t = Tensor3::zeros(self.field, shape);
        for (i, s) in self.entries(name, &[shape.0, shape.1, shape.2])? {
            t[(i[0], i[1], i[2])] = s;
        }
        Ok(t)
    }

    fn matrix(&self, name: &str, rows: usize, cols: usize) -> Result<Matrix, DocumentError> {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for (i, s) in self.entries(name, &[rows, cols])? {
            m[(i[0], i[1])] = s;
        }
        Ok(m)
    }

    fn vector(&self, name: &str, n: usize) -> Result<Vector, DocumentError> {
        let mut v = Vector::zeros(self.field, n);
        for (i, s) in self.entries(name, &[n])? {
            v[i[0]] = s;
        }
        Ok(v)
    }

    fn elem(&self, name: &str, n: usize, order: usize) -> Result<TensorElem, DocumentError> {
        let mut t = TensorElem::zero(self.field, n, order);
        for (i, s) in self.entries(name, &vec![n; order])? {
            t.add_term(i, &s);
        }
        Ok(t)
    }

    fn hopf(&self, n: usize) -> Result<HopfAlgebra, DocumentError> {
        HopfAlgebra::from_tensors(
            self.tensor3("mult", (n, n, n))?,
            self.vector("unit", n)?,
            self.tensor3("comult", (n, n, n))?,
            self.vector("counit", n)?,
            self.matrix("antipode", n, n)?,
        )
        .map_err(invalid)
    }

    fn table(&self, name: &str) -> Result<Vec<Vec<usize>>, DocumentError> {
        self.doc.tables.get(name).cloned().ok_or_else(|| DocumentError::Format(format!("missing table `{name}`")))
    }
}

fn invalid(e: impl std::fmt::Display) -> DocumentError {
    DocumentError::Invalid(e.to_string())
}

pub fn from_document(doc: &Document) -> Result<Object, DocumentError> {
    if doc.format != FORMAT_VERSION {
        return Err(DocumentError::Format(format!("unsupported format {:?}", doc.format)));
    }
    let field = Field::from_descriptor(&doc.field).map_err(|e| DocumentError::Format(e.to_string()))?;
    let r = Reader { doc, field };
    Ok(match doc.kind {
        Kind::Hopf => Object::Hopf(r.hopf(r.dim("H")?)?),
        Kind::Coideal => {
            let (n, m) = (r.dim("H")?, r.dim("B")?);
            Object::Coideal { hopf: r.hopf(n)?, iota: r.matrix("iota", n, m)? }
        }
        Kind::Pams => {
            let (n, m, c) = (r.dim("H")?, r.dim("B")?, r.dim("C")?);
            Object::Pams {
                hopf: r.hopf(n)?,
                iota: r.matrix("iota", n, m)?,
                zeta: r.matrix("zeta", m, n)?,
                gamma: r.matrix("gamma", n, c)?,
            }
        }
        Kind::QuasiHopf => {
            let (n, c, m) = (r.dim("dim")?, r.dim("C")?, r.dim("B")?);
            let alg = Algebra::new(r.tensor3("mult", (n, n, n))?, r.vector("unit", n)?).map_err(invalid)?;
            let t = r.matrix("preantipode", n, n)?;
            let antipodes = antipodes_from_preantipode(&alg, &t);
            Object::QuasiHopf(
                QuasiHopfAlgebra::from_parts(
                    alg,
                    r.tensor3("comult", (n, n, n))?,
                    r.vector("counit", n)?,
                    r.elem("phi", n, 3)?,
                    r.elem("phi_inv", n, 3)?,
                    t,
                    antipodes,
                    (c, m),
                )
                .map_err(invalid)?,
            )
        }
        Kind::CoquasiHopf => {
            let (n, c, m) = (r.dim("dim")?, r.dim("C")?, r.dim("B")?);
            let coalg = Coalgebra::new(r.tensor3("comult", (n, n, n))?, r.vector("counit", n)?).map_err(invalid)?;
            Object::CoquasiHopf(
                CoquasiHopfAlgebra::from_parts(
                    coalg,
                    r.tensor3("mult", (n, n, n))?,
                    r.vector("unit", n)?,
                    r.elem("coassociator", n, 3)?,
                    r.elem("coassociator_inv", n, 3)?,
                    r.matrix("preantipode", n, n)?,
                    (c, m),
                )
                .map_err(invalid)?,
            )
        }
        Kind::MatchedPair => {
            let tables = MatchedPairTables {
                f: r.table("F")?,
                g: r.table("G")?,
                act_left: r.table("act_left")?,
                act_right: r.table("act_right")?,
            };
            if tables.f.len() != r.dim("F")? || tables.g.len() != r.dim("G")? {
                return Err(DocumentError::Format("group tables disagree with dims".into()));
            }
            Object::MatchedPair(MatchedPair::from_tables(tables).map_err(invalid)?)
        }
        Kind::LinearMap => Object::LinearMap(r.matrix("map", r.dim("rows")?, r.dim("cols")?)?),
    })
}

/// Errors unless `found` is `expected`.
pub fn expect_field(expected: Field, found: Field) -> Result<(), DocumentError> {
    if expected == found {
        Ok(())
    } else {
        Err(DocumentError::FieldMismatch { expected: expected.descriptor(), found: found.descriptor() })
    }
}
