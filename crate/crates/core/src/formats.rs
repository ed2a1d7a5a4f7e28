//! JSON documents for every object the CLI reads or writes.
//!
//! Element labels may be given as names or as 0-based indices. Maps keyed by
//! group elements use element names and are written in sorted key order, so
//! output is byte-for-byte deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossed_algebras::{AlgebraError, AlgebraParts, CrossedAlgebra, CrossedAlgebraMorphism};
use crate::crossed_modules::{CrossedModule, CrossedModuleError, CrossedModuleMorphism};
use crate::exact_linalg::{FieldKind, GradedSpace, Matrix, Scalar, ScalarParseError};
use crate::formal_maps::{
    CobordismExpression, ElementaryPiece, FormalBoundary, FormalError, PieceKind,
    SimplicialComplex, SimplicialFormalMap,
};
use crate::groups::{Elem, FiniteGroup, GroupAction, GroupError, GroupHomomorphism};
use crate::hqft::EvaluatedMap;
use crate::report::Report;

/// Primes with a compiled-in field type.
pub const SUPPORTED_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Runs `$body` with `$F` bound to the scalar type of `$kind`; the body must
/// evaluate to a `Result` whose error converts from [`FormatError`].
#[macro_export]
macro_rules! with_field {
    ($kind:expr, $F:ident => $body:expr) => {{
        use $crate::exact_linalg::FieldKind as __Fk;
        match $kind {
            __Fk::Rational => {
                type $F = $crate::Rational;
                $body
            }
            __Fk::Prime(2) => {
                type $F = $crate::Fp<2>;
                $body
            }
            __Fk::Prime(3) => {
                type $F = $crate::Fp<3>;
                $body
            }
            __Fk::Prime(5) => {
                type $F = $crate::Fp<5>;
                $body
            }
            __Fk::Prime(7) => {
                type $F = $crate::Fp<7>;
                $body
            }
            __Fk::Prime(11) => {
                type $F = $crate::Fp<11>;
                $body
            }
            __Fk::Prime(13) => {
                type $F = $crate::Fp<13>;
                $body
            }
            __Fk::Prime(17) => {
                type $F = $crate::Fp<17>;
                $body
            }
            __Fk::Prime(19) => {
                type $F = $crate::Fp<19>;
                $body
            }
            __Fk::Prime(23) => {
                type $F = $crate::Fp<23>;
                $body
            }
            __Fk::Prime(29) => {
                type $F = $crate::Fp<29>;
                $body
            }
            __Fk::Prime(31) => {
                type $F = $crate::Fp<31>;
                $body
            }
            __Fk::Prime(p) => Err($crate::formats::FormatError::UnsupportedField(p).into()),
        }
    }};
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected a {expected} document, found kind {found:?}")]
    WrongKind {
        expected: &'static str,
        found: String,
    },
    #[error("unknown {what} {name:?}")]
    Unresolved { what: &'static str, name: String },
    #[error("{what}: no element {label}")]
    BadElement { what: String, label: String },
    #[error("{0}")]
    Shape(String),
    #[error("field F_{0} is not supported (use Q or one of {SUPPORTED_PRIMES:?})")]
    UnsupportedField(u64),
    #[error("document is over {found}, expected {expected}")]
    FieldMismatch {
        expected: FieldKind,
        found: FieldKind,
    },
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CrossedModule(#[from] CrossedModuleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Formal(#[from] FormalError),
}

/// An element, by name or by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Name(String),
}

impl ElemRef {
    pub fn resolve(&self, g: &FiniteGroup, what: &str) -> Result<Elem, FormatError> {
        let bad = || FormatError::BadElement {
            what: what.to_string(),
            label: match self {
                ElemRef::Index(i) => i.to_string(),
                ElemRef::Name(s) => format!("{s:?}"),
            },
        };
        match self {
            ElemRef::Index(i) if *i < g.order() => Ok(*i),
            ElemRef::Index(_) => Err(bad()),
            ElemRef::Name(s) => g.index_of(s).ok_or_else(bad),
        }
    }
}

/// Map keys: an element name, or its index written in decimal.
fn resolve_key(g: &FiniteGroup, key: &str, what: &str) -> Result<Elem, FormatError> {
    if let Some(i) = g.index_of(key) {
        return Ok(i);
    }
    match key.parse::<usize>() {
        Ok(i) if i < g.order() => Ok(i),
        _ => Err(FormatError::BadElement {
            what: what.to_string(),
            label: format!("{key:?}"),
        }),
    }
}

fn resolve_all(refs: &[ElemRef], g: &FiniteGroup, what: &str) -> Result<Vec<Elem>, FormatError> {
    refs.iter().map(|r| r.resolve(g, what)).collect()
}

fn names_of(g: &FiniteGroup, elems: &[Elem]) -> Vec<ElemRef> {
    elems
        .iter()
        .map(|&e| ElemRef::Name(g.name(e).to_string()))
        .collect()
}

fn check_kind(found: &str, expected: &'static str) -> Result<(), FormatError> {
    if found == expected {
        Ok(())
    } else {
        Err(FormatError::WrongKind {
            expected,
            found: found.to_string(),
        })
    }
}

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldDoc {
    pub fn from_kind(k: FieldKind) -> Self {
        match k {
            FieldKind::Rational => FieldDoc::Named("Q".into()),
            FieldKind::Prime(p) => FieldDoc::Prime { fp: p },
        }
    }

    pub fn kind(&self) -> Result<FieldKind, FormatError> {
        match self {
            FieldDoc::Named(s) if s == "Q" => Ok(FieldKind::Rational),
            FieldDoc::Named(s) => Ok(s.parse::<FieldKind>()?),
            FieldDoc::Prime { fp } if SUPPORTED_PRIMES.contains(fp) => Ok(FieldKind::Prime(*fp)),
            FieldDoc::Prime { fp } => Err(FormatError::UnsupportedField(*fp)),
        }
    }
}

/// A scalar entry: a string such as `"-1/2"` or `"3 mod 5"`, or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Text(String),
}

impl ScalarDoc {
    pub fn encode<F: Scalar>(x: &F) -> Self {
        ScalarDoc::Text(x.encode())
    }

    pub fn decode<F: Scalar>(&self) -> Result<F, FormatError> {
        Ok(match self {
            ScalarDoc::Int(v) => F::from_i64(*v),
            ScalarDoc::Text(s) => F::parse_scalar(s)?,
        })
    }
}

pub type MatrixDoc = Vec<Vec<ScalarDoc>>;

pub fn encode_vec<F: Scalar>(v: &[F]) -> Vec<ScalarDoc> {
    v.iter().map(ScalarDoc::encode).collect()
}

pub fn decode_vec<F: Scalar>(
    v: &[ScalarDoc],
    len: usize,
    what: &str,
) -> Result<Vec<F>, FormatError> {
    if v.len() != len {
        return Err(FormatError::Shape(format!(
            "{what}: expected {len} entries, found {}",
            v.len()
        )));
    }
    v.iter().map(ScalarDoc::decode).collect()
}

pub fn encode_matrix<F: Scalar>(m: &Matrix<F>) -> MatrixDoc {
    m.to_rows().iter().map(|r| encode_vec(r)).collect()
}

/// Shapes come from the caller, so empty blocks need no explicit column count.
pub fn decode_matrix<F: Scalar>(
    m: Option<&MatrixDoc>,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix<F>, FormatError> {
    let Some(m) = m else {
        return Ok(Matrix::zeros(rows, cols));
    };
    if m.len() != rows && !(rows * cols == 0 && m.is_empty()) {
        return Err(FormatError::Shape(format!(
            "{what}: expected {rows} rows, found {}",
            m.len()
        )));
    }
    let mut out = Matrix::zeros(rows, cols);
    for (i, row) in m.iter().enumerate() {
        let row: Vec<F> = decode_vec(row, cols, &format!("{what} row {i}"))?;
        for (j, x) in row.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- groups

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    #[serde(default = "kind_group")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

fn kind_group() -> String {
    "group".into()
}

impl GroupDoc {
    pub fn from_group(name: &str, g: &FiniteGroup) -> Self {
        GroupDoc {
            kind: kind_group(),
            name: name.to_string(),
            names: g.names().to_vec(),
            table: g.table().to_vec(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, FormatError> {
        check_kind(&self.kind, "group")?;
        Ok(FiniteGroup::new(self.names.clone(), self.table.clone())?)
    }
}

/// A group given by the name of a loaded group or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupDoc),
}

// ------------------------------------------------------ crossed modules

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModuleDoc {
    pub kind: String,
    pub name: String,
    pub top: GroupRef,
    pub base: GroupRef,
    pub boundary: Vec<ElemRef>,
    /// `action[p][c]` = ᵖc
    pub action: Vec<Vec<ElemRef>>,
}

impl CrossedModuleDoc {
    pub fn from_crossed_module(name: &str, cm: &CrossedModule) -> Self {
        let idx = |v: &[Elem]| v.iter().map(|&e| ElemRef::Index(e)).collect::<Vec<_>>();
        CrossedModuleDoc {
            kind: "crossed_module".into(),
            name: name.to_string(),
            top: GroupRef::Inline(GroupDoc::from_group("", cm.top())),
            base: GroupRef::Inline(GroupDoc::from_group("", cm.base())),
            boundary: idx(cm.boundary().map()),
            action: cm.action().table().iter().map(|r| idx(r)).collect(),
        }
    }

    /// Assembles the crossed module without checking CM1/CM2; `groups` resolves named groups.
    pub fn to_crossed_module(
        &self,
        groups: impl Fn(&str) -> Option<FiniteGroup>,
    ) -> Result<CrossedModule, FormatError> {
        check_kind(&self.kind, "crossed_module")?;
        let group = |r: &GroupRef| match r {
            GroupRef::Name(n) => groups(n).ok_or_else(|| FormatError::Unresolved {
                what: "group",
                name: n.clone(),
            }),
            GroupRef::Inline(d) => d.to_group(),
        };
        let (top, base) = (group(&self.top)?, group(&self.base)?);
        let boundary = resolve_all(&self.boundary, &base, "boundary value")?;
        let boundary = GroupHomomorphism::from_parts(top.clone(), base.clone(), boundary)?;
        let table = self
            .action
            .iter()
            .map(|row| resolve_all(row, &top, "action value"))
            .collect::<Result<Vec<_>, _>>()?;
        let action = GroupAction::from_parts(base, top, table)?;
        Ok(CrossedModule::from_parts(boundary, action)?)
    }
}

/// A crossed module given by the name of a loaded one or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CrossedModuleRef {
    Name(String),
    Inline(Box<CrossedModuleDoc>),
}

impl CrossedModuleRef {
    pub fn display_name(&self) -> &str {
        match self {
            CrossedModuleRef::Name(n) => n,
            CrossedModuleRef::Inline(d) => &d.name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub kind: String,
    pub name: String,
    pub source: CrossedModuleRef,
    pub target: CrossedModuleRef,
    pub f_top: Vec<ElemRef>,
    pub f_base: Vec<ElemRef>,
}

impl MorphismDoc {
    pub fn from_morphism(
        name: &str,
        source: &str,
        target: &str,
        f: &CrossedModuleMorphism,
    ) -> Self {
        let idx = |v: &[Elem]| v.iter().map(|&e| ElemRef::Index(e)).collect::<Vec<_>>();
        MorphismDoc {
            kind: "morphism".into(),
            name: name.to_string(),
            source: CrossedModuleRef::Name(source.to_string()),
            target: CrossedModuleRef::Name(target.to_string()),
            f_top: idx(f.f_top().map()),
            f_base: idx(f.f_base().map()),
        }
    }

    /// Assembles the morphism without checking its axioms.
    pub fn to_morphism(
        &self,
        source: &CrossedModule,
        target: &CrossedModule,
    ) -> Result<CrossedModuleMorphism, FormatError> {
        check_kind(&self.kind, "morphism")?;
        let f_top = resolve_all(&self.f_top, target.top(), "f_top value")?;
        let f_base = resolve_all(&self.f_base, target.base(), "f_base value")?;
        let f_top =
            GroupHomomorphism::from_parts(source.top().clone(), target.top().clone(), f_top)?;
        let f_base =
            GroupHomomorphism::from_parts(source.base().clone(), target.base().clone(), f_base)?;
        Ok(CrossedModuleMorphism::from_parts(
            source.clone(),
            target.clone(),
            f_top,
            f_base,
        )?)
    }
}

// ------------------------------------------------------------ algebras

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub kind: String,
    pub name: String,
    pub crossed_module: CrossedModuleRef,
    pub field: FieldDoc,
    pub dims: BTreeMap<String, usize>,
    /// Optional basis names per grade; `b0, b1, ...` when absent.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub basis: BTreeMap<String, Vec<String>>,
    /// `mul[g][h]`: L_g ⊗ L_h → L_{gh}; missing blocks are zero.
    #[serde(default)]
    pub mul: BlockMap,
    pub unit: Vec<ScalarDoc>,
    /// `rho[g]`: the pairing L_g × L_{g⁻¹} → K.
    #[serde(default)]
    pub rho: BTreeMap<String, MatrixDoc>,
    /// `phi[h][g]`: φ_h on L_g.
    #[serde(default)]
    pub phi: BlockMap,
    pub tilde: BTreeMap<String, Vec<ScalarDoc>>,
}

impl AlgebraDoc {
    pub fn from_algebra<F: Scalar>(name: &str, cm_name: &str, l: &CrossedAlgebra<F>) -> Self {
        let cm = l.crossed_module();
        let p = cm.base();
        let n = p.order();
        let parts = l.parts();
        let key = |g: Elem| p.name(g).to_string();
        let nonempty = |m: &Matrix<F>| m.rows() * m.cols() > 0;
        let mut mul = BlockMap::new();
        let mut phi = BlockMap::new();
        for a in p.elements() {
            for b in p.elements() {
                let m = &parts.mul[a * n + b];
                if nonempty(m) {
                    mul.entry(key(a))
                        .or_default()
                        .insert(key(b), encode_matrix(m));
                }
                let f = &parts.phi[a * n + b];
                if nonempty(f) {
                    phi.entry(key(a))
                        .or_default()
                        .insert(key(b), encode_matrix(f));
                }
            }
        }
        let default_names = GradedSpace::with_dims(parts.space.dims());
        let basis = if parts.space == default_names {
            BTreeMap::new()
        } else {
            p.elements()
                .filter(|&g| parts.space.dim(g) > 0)
                .map(|g| (key(g), parts.space.basis_names(g).to_vec()))
                .collect()
        };
        AlgebraDoc {
            kind: "algebra".into(),
            name: name.to_string(),
            crossed_module: CrossedModuleRef::Name(cm_name.to_string()),
            field: FieldDoc::from_kind(F::field()),
            dims: p.elements().map(|g| (key(g), parts.space.dim(g))).collect(),
            basis,
            mul,
            unit: encode_vec(&parts.unit),
            rho: p
                .elements()
                .filter(|&g| nonempty(&parts.rho[g]))
                .map(|g| (key(g), encode_matrix(&parts.rho[g])))
                .collect(),
            phi,
            tilde: cm
                .top()
                .elements()
                .map(|c| (cm.top().name(c).to_string(), encode_vec(&parts.tilde[c])))
                .collect(),
        }
    }

    /// Decodes against `cm` without checking the axioms.
    pub fn to_algebra<F: Scalar>(
        &self,
        cm: &CrossedModule,
    ) -> Result<CrossedAlgebra<F>, FormatError> {
        check_kind(&self.kind, "algebra")?;
        let field = self.field.kind()?;
        if field != F::field() {
            return Err(FormatError::FieldMismatch {
                expected: F::field(),
                found: field,
            });
        }
        let p = cm.base();
        let n = p.order();
        let mut dims = vec![None; n];
        for (k, &d) in &self.dims {
            let g = resolve_key(p, k, "dims key")?;
            if dims[g].replace(d).is_some() {
                return Err(FormatError::Shape(format!(
                    "grade {k:?} listed twice in dims"
                )));
            }
        }
        let mut names: Vec<Vec<String>> = Vec::with_capacity(n);
        for g in p.elements() {
            let d = dims[g].unwrap_or(0);
            names.push((0..d).map(|i| format!("b{i}")).collect());
        }
        for (k, b) in &self.basis {
            let g = resolve_key(p, k, "basis key")?;
            if b.len() != names[g].len() {
                return Err(FormatError::Shape(format!(
                    "basis for grade {k:?} has the wrong length"
                )));
            }
            names[g] = b.clone();
        }
        let space = GradedSpace::new(names).map_err(|e| FormatError::Shape(e.to_string()))?;
        let d = |g: Elem| space.dim(g);
        let mul_docs = nested_blocks(p, &self.mul, "mul key")?;
        let phi_docs = nested_blocks(p, &self.phi, "phi key")?;
        let mut mul = Vec::with_capacity(n * n);
        let mut phi = Vec::with_capacity(n * n);
        for a in p.elements() {
            for b in p.elements() {
                let what = format!("mul[{}][{}]", p.name(a), p.name(b));
                mul.push(decode_matrix(
                    mul_docs.get(&(a, b)).copied(),
                    d(p.mul(a, b)),
                    d(a) * d(b),
                    &what,
                )?);
                let what = format!("phi[{}][{}]", p.name(a), p.name(b));
                phi.push(decode_matrix(
                    phi_docs.get(&(a, b)).copied(),
                    d(p.conj(a, b)),
                    d(b),
                    &what,
                )?);
            }
        }
        let mut rho_docs = BTreeMap::new();
        for (k, m) in &self.rho {
            rho_docs.insert(resolve_key(p, k, "rho key")?, m);
        }
        let rho = p
            .elements()
            .map(|g| {
                decode_matrix(
                    rho_docs.get(&g).copied(),
                    d(g),
                    d(p.inv(g)),
                    &format!("rho[{}]", p.name(g)),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        let unit = decode_vec(&self.unit, d(0), "unit")?;
        let c_grp = cm.top();
        let mut tilde: Vec<Option<Vec<F>>> = vec![None; c_grp.order()];
        for (k, v) in &self.tilde {
            let c = resolve_key(c_grp, k, "tilde key")?;
            tilde[c] = Some(decode_vec(v, d(cm.d(c)), &format!("tilde[{k}]"))?);
        }
        let tilde = tilde
            .into_iter()
            .enumerate()
            .map(|(c, t)| {
                t.ok_or_else(|| {
                    FormatError::Shape(format!("tilde of {} is missing", c_grp.name(c)))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let parts = AlgebraParts {
            space,
            mul,
            unit,
            rho,
            phi,
            tilde,
        };
        Ok(CrossedAlgebra::from_parts(cm.clone(), parts)?)
    }
}

type BlockMap = BTreeMap<String, BTreeMap<String, MatrixDoc>>;

fn nested_blocks<'a>(
    p: &FiniteGroup,
    m: &'a BlockMap,
    what: &str,
) -> Result<BTreeMap<(Elem, Elem), &'a MatrixDoc>, FormatError> {
    let mut out = BTreeMap::new();
    for (k1, inner) in m {
        let a = resolve_key(p, k1, what)?;
        for (k2, mat) in inner {
            out.insert((a, resolve_key(p, k2, what)?), mat);
        }
    }
    Ok(out)
}

/// A crossed algebra morphism, one block per source grade.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraMorphismDoc {
    pub kind: String,
    pub name: String,
    pub source: String,
    pub target: String,
    pub field: FieldDoc,
    pub blocks: BTreeMap<String, MatrixDoc>,
}

impl AlgebraMorphismDoc {
    pub fn from_morphism<F: Scalar>(
        name: &str,
        source: &str,
        target: &str,
        m: &CrossedAlgebraMorphism<F>,
    ) -> Self {
        let p = m.over().source().base();
        AlgebraMorphismDoc {
            kind: "algebra_morphism".into(),
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            field: FieldDoc::from_kind(F::field()),
            blocks: p
                .elements()
                .filter(|&g| m.block(g).rows() * m.block(g).cols() > 0)
                .map(|g| (p.name(g).to_string(), encode_matrix(m.block(g))))
                .collect(),
        }
    }

    pub fn to_morphism<F: Scalar>(
        &self,
        over: &CrossedModuleMorphism,
        source: &CrossedAlgebra<F>,
        target: &CrossedAlgebra<F>,
    ) -> Result<CrossedAlgebraMorphism<F>, FormatError> {
        check_kind(&self.kind, "algebra_morphism")?;
        let p = over.source().base();
        let mut docs = BTreeMap::new();
        for (k, m) in &self.blocks {
            docs.insert(resolve_key(p, k, "block key")?, m);
        }
        let blocks = p
            .elements()
            .map(|g| {
                decode_matrix(
                    docs.get(&g).copied(),
                    target.dim(over.f0(g)),
                    source.dim(g),
                    &format!("block[{}]", p.name(g)),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CrossedAlgebraMorphism::from_parts(
            over.clone(),
            blocks,
            source,
            target,
        )?)
    }
}

// ---------------------------------------------------------- expressions

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDoc {
    pub piece: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<ElemRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<ElemRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<ElemRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g1: Option<ElemRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<ElemRef>,
}

impl PieceDoc {
    pub fn from_piece(cm: &CrossedModule, piece: &ElementaryPiece) -> Self {
        let c = |x: Elem| Some(ElemRef::Name(cm.top().name(x).to_string()));
        let p = |x: Elem| Some(ElemRef::Name(cm.base().name(x).to_string()));
        let mut doc = PieceDoc {
            piece: piece.kind().tag().to_string(),
            c: None,
            g: None,
            h: None,
            g1: None,
            g2: None,
        };
        match *piece {
            ElementaryPiece::Disc { c: x } => doc.c = c(x),
            ElementaryPiece::Cyl { c: x, g, h } => {
                doc.c = c(x);
                doc.g = p(g);
                doc.h = p(h);
            }
            ElementaryPiece::Pants { c: x, g1, g2 } => {
                doc.c = c(x);
                doc.g1 = p(g1);
                doc.g2 = p(g2);
            }
            ElementaryPiece::Copants { g1, g2 } | ElementaryPiece::Swap { g1, g2 } => {
                doc.g1 = p(g1);
                doc.g2 = p(g2);
            }
            ElementaryPiece::Cup { g } | ElementaryPiece::Cap { g } | ElementaryPiece::Id { g } => {
                doc.g = p(g)
            }
        }
        doc
    }

    pub fn to_piece(&self, cm: &CrossedModule) -> Result<ElementaryPiece, FormatError> {
        let kind = PieceKind::from_tag(&self.piece).ok_or_else(|| FormatError::Unresolved {
            what: "piece",
            name: self.piece.clone(),
        })?;
        let field =
            |f: &Option<ElemRef>, label: &str, g: &FiniteGroup| -> Result<Elem, FormatError> {
                f.as_ref()
                    .ok_or_else(|| {
                        FormatError::Shape(format!("{} piece needs field {label:?}", self.piece))
                    })?
                    .resolve(g, &format!("{} piece field {label}", self.piece))
            };
        let expected: &[&str] = match kind {
            PieceKind::Disc => &["c"],
            PieceKind::Cyl => &["c", "g", "h"],
            PieceKind::Pants => &["c", "g1", "g2"],
            PieceKind::Copants | PieceKind::Swap => &["g1", "g2"],
            PieceKind::Cup | PieceKind::Cap | PieceKind::Id => &["g"],
        };
        let present = [
            ("c", self.c.is_some()),
            ("g", self.g.is_some()),
            ("h", self.h.is_some()),
            ("g1", self.g1.is_some()),
            ("g2", self.g2.is_some()),
        ];
        if let Some((extra, _)) = present
            .iter()
            .find(|(k, set)| *set && !expected.contains(k))
        {
            return Err(FormatError::Shape(format!(
                "{} piece does not take field {extra:?}",
                self.piece
            )));
        }
        let (cg, pg) = (cm.top(), cm.base());
        Ok(match kind {
            PieceKind::Disc => ElementaryPiece::Disc {
                c: field(&self.c, "c", cg)?,
            },
            PieceKind::Cyl => ElementaryPiece::Cyl {
                c: field(&self.c, "c", cg)?,
                g: field(&self.g, "g", pg)?,
                h: field(&self.h, "h", pg)?,
            },
            PieceKind::Pants => ElementaryPiece::Pants {
                c: field(&self.c, "c", cg)?,
                g1: field(&self.g1, "g1", pg)?,
                g2: field(&self.g2, "g2", pg)?,
            },
            PieceKind::Copants => ElementaryPiece::Copants {
                g1: field(&self.g1, "g1", pg)?,
                g2: field(&self.g2, "g2", pg)?,
            },
            PieceKind::Swap => ElementaryPiece::Swap {
                g1: field(&self.g1, "g1", pg)?,
                g2: field(&self.g2, "g2", pg)?,
            },
            PieceKind::Cup => ElementaryPiece::Cup {
                g: field(&self.g, "g", pg)?,
            },
            PieceKind::Cap => ElementaryPiece::Cap {
                g: field(&self.g, "g", pg)?,
            },
            PieceKind::Id => ElementaryPiece::Id {
                g: field(&self.g, "g", pg)?,
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpressionDoc {
    pub kind: String,
    pub name: String,
    pub crossed_module: CrossedModuleRef,
    /// One label list per circuit.
    pub source: Vec<Vec<ElemRef>>,
    pub layers: Vec<Vec<PieceDoc>>,
    pub target: Vec<Vec<ElemRef>>,
}

fn boundary_doc(cm: &CrossedModule, b: &FormalBoundary) -> Vec<Vec<ElemRef>> {
    b.circuits
        .iter()
        .map(|c| names_of(cm.base(), c.labels()))
        .collect()
}

fn boundary_from_doc(
    cm: &CrossedModule,
    lists: &[Vec<ElemRef>],
    what: &str,
) -> Result<FormalBoundary, FormatError> {
    let lists = lists
        .iter()
        .map(|l| resolve_all(l, cm.base(), what))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FormalBoundary::from_lists(lists)?)
}

impl ExpressionDoc {
    pub fn from_expression(
        name: &str,
        cm_name: &str,
        cm: &CrossedModule,
        e: &CobordismExpression,
    ) -> Self {
        ExpressionDoc {
            kind: "expression".into(),
            name: name.to_string(),
            crossed_module: CrossedModuleRef::Name(cm_name.to_string()),
            source: boundary_doc(cm, &e.source),
            layers: e
                .layers
                .iter()
                .map(|l| l.iter().map(|pc| PieceDoc::from_piece(cm, pc)).collect())
                .collect(),
            target: boundary_doc(cm, &e.target),
        }
    }

    /// Decodes labels; interfaces are not typechecked here.
    pub fn to_expression(&self, cm: &CrossedModule) -> Result<CobordismExpression, FormatError> {
        check_kind(&self.kind, "expression")?;
        let layers = self
            .layers
            .iter()
            .map(|l| {
                l.iter()
                    .map(|pc| pc.to_piece(cm))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CobordismExpression::new(
            boundary_from_doc(cm, &self.source, "source label")?,
            layers,
            boundary_from_doc(cm, &self.target, "target label")?,
        ))
    }
}

// ------------------------------------------------------------ simplicial

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialDoc {
    pub kind: String,
    pub name: String,
    pub crossed_module: CrossedModuleRef,
    pub vertices: usize,
    pub order: Vec<usize>,
    /// Keys `"1"`, `"2"`, `"3"`: edges, triangles, tetrahedra.
    pub simplices: BTreeMap<String, Vec<Vec<usize>>>,
    pub edge_labels: Vec<ElemRef>,
    pub tri_labels: Vec<ElemRef>,
    pub start_vertices: Vec<usize>,
}

impl SimplicialDoc {
    pub fn from_map(
        name: &str,
        cm_name: &str,
        cm: &CrossedModule,
        m: &SimplicialFormalMap,
    ) -> Self {
        let k = &m.complex;
        let mut simplices = BTreeMap::new();
        simplices.insert(
            "1".to_string(),
            k.edges().iter().map(|s| s.to_vec()).collect(),
        );
        simplices.insert(
            "2".to_string(),
            k.triangles().iter().map(|s| s.to_vec()).collect(),
        );
        simplices.insert(
            "3".to_string(),
            k.tetrahedra().iter().map(|s| s.to_vec()).collect(),
        );
        SimplicialDoc {
            kind: "simplicial".into(),
            name: name.to_string(),
            crossed_module: CrossedModuleRef::Name(cm_name.to_string()),
            vertices: k.vertices(),
            order: k.order().to_vec(),
            simplices,
            edge_labels: names_of(cm.base(), &m.edge_labels),
            tri_labels: names_of(cm.top(), &m.tri_labels),
            start_vertices: m.start_vertices.clone(),
        }
    }

    pub fn to_map(&self, cm: &CrossedModule) -> Result<SimplicialFormalMap, FormatError> {
        check_kind(&self.kind, "simplicial")?;
        if let Some(k) = self
            .simplices
            .keys()
            .find(|k| !["1", "2", "3"].contains(&k.as_str()))
        {
            return Err(FormatError::Shape(format!(
                "unknown simplex dimension {k:?}"
            )));
        }
        let get = |k: &str| self.simplices.get(k).cloned().unwrap_or_default();
        let complex = SimplicialComplex::new(
            self.vertices,
            self.order.clone(),
            get("1"),
            get("2"),
            get("3"),
        )?;
        Ok(SimplicialFormalMap::new(
            cm,
            complex,
            resolve_all(&self.edge_labels, cm.base(), "edge label")?,
            resolve_all(&self.tri_labels, cm.top(), "triangle label")?,
            self.start_vertices.clone(),
        )?)
    }
}

// --------------------------------------------------------------- outputs

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluatedDoc {
    pub field: FieldDoc,
    pub source: Vec<Vec<ElemRef>>,
    pub target: Vec<Vec<ElemRef>>,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub matrix: MatrixDoc,
}

impl EvaluatedDoc {
    pub fn from_map<F: Scalar>(cm: &CrossedModule, m: &EvaluatedMap<F>) -> Self {
        EvaluatedDoc {
            field: FieldDoc::from_kind(F::field()),
            source: boundary_doc(cm, &m.source),
            target: boundary_doc(cm, &m.target),
            source_dims: m.source_dims.clone(),
            target_dims: m.target_dims.clone(),
            matrix: encode_matrix(&m.matrix),
        }
    }

    pub fn matrix<F: Scalar>(&self) -> Result<Matrix<F>, FormatError> {
        let rows: usize = self.target_dims.iter().product();
        let cols: usize = self.source_dims.iter().product();
        decode_matrix(Some(&self.matrix), rows, cols, "matrix")
    }
}

/// Output of `build kp_iso`: both algebras, the witness and its verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpIsoDoc {
    pub kind: String,
    pub name: String,
    pub crossed_module: String,
    pub field: FieldDoc,
    /// Chosen representative of each class of P/∂C.
    pub section: Vec<ElemRef>,
    /// `cocycle[g1][g2]` ∈ ∂C, as elements of P.
    pub cocycle: Vec<Vec<ElemRef>>,
    pub kp: AlgebraDoc,
    pub pulled: AlgebraDoc,
    pub morphism: AlgebraMorphismDoc,
    pub report: Report,
}

/// Reads the `kind` field of any document.
pub fn document_kind(value: &serde_json::Value) -> Option<&str> {
    value.get("kind").and_then(|k| k.as_str())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
