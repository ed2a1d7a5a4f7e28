//! A named registry of documents loaded from a fixtures directory.
//!
//! The directory has one subdirectory per kind (`groups/`, `crossed_modules/`,
//! `morphisms/`, `algebras/`, `expressions/`, `simplicial/`) holding one JSON
//! document per file. Names are unique across all kinds, and every reference
//! must resolve when the document is inserted.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::crossed_algebras::{check_crossed_algebra, CrossedAlgebra};
use crate::crossed_modules::{
    check_crossed_module, check_morphism, CrossedModule, CrossedModuleMorphism,
};
use crate::exact_linalg::{FieldKind, Scalar};
use crate::formal_maps::{
    typecheck, validate_simplicial, CobordismExpression, SimplicialFormalMap,
};
use crate::formats::{
    document_kind, to_json, AlgebraDoc, CrossedModuleDoc, CrossedModuleRef, ExpressionDoc,
    FormatError, GroupDoc, MorphismDoc, SimplicialDoc,
};
use crate::groups::{FiniteGroup, GroupError};
use crate::report::Report;
use crate::with_field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectKind {
    Group,
    CrossedModule,
    Morphism,
    Algebra,
    Expression,
    Simplicial,
}

impl ObjectKind {
    /// In dependency order.
    pub const ALL: [ObjectKind; 6] = [
        ObjectKind::Group,
        ObjectKind::CrossedModule,
        ObjectKind::Morphism,
        ObjectKind::Algebra,
        ObjectKind::Expression,
        ObjectKind::Simplicial,
    ];

    /// The `kind` field of documents of this kind.
    pub fn tag(self) -> &'static str {
        match self {
            ObjectKind::Group => "group",
            ObjectKind::CrossedModule => "crossed_module",
            ObjectKind::Morphism => "morphism",
            ObjectKind::Algebra => "algebra",
            ObjectKind::Expression => "expression",
            ObjectKind::Simplicial => "simplicial",
        }
    }

    pub fn dir(self) -> &'static str {
        match self {
            ObjectKind::Group => "groups",
            ObjectKind::CrossedModule => "crossed_modules",
            ObjectKind::Morphism => "morphisms",
            ObjectKind::Algebra => "algebras",
            ObjectKind::Expression => "expressions",
            ObjectKind::Simplicial => "simplicial",
        }
    }

    /// Accepts the tag, with `-` for `_`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.replace('-', "_");
        ObjectKind::ALL.into_iter().find(|k| k.tag() == s)
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Group(GroupDoc),
    CrossedModule(CrossedModuleDoc),
    Morphism(MorphismDoc),
    Algebra(AlgebraDoc),
    Expression(ExpressionDoc),
    Simplicial(SimplicialDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let kind = document_kind(&value).unwrap_or("").to_string();
        let kind = ObjectKind::ALL
            .into_iter()
            .find(|k| k.tag() == kind)
            .ok_or(FormatError::WrongKind {
                expected: "group, crossed_module, morphism, algebra, expression or simplicial",
                found: kind,
            })?;
        Ok(match kind {
            ObjectKind::Group => Document::Group(serde_json::from_value(value)?),
            ObjectKind::CrossedModule => Document::CrossedModule(serde_json::from_value(value)?),
            ObjectKind::Morphism => Document::Morphism(serde_json::from_value(value)?),
            ObjectKind::Algebra => Document::Algebra(serde_json::from_value(value)?),
            ObjectKind::Expression => Document::Expression(serde_json::from_value(value)?),
            ObjectKind::Simplicial => Document::Simplicial(serde_json::from_value(value)?),
        })
    }

    pub fn kind(&self) -> ObjectKind {
        match self {
            Document::Group(_) => ObjectKind::Group,
            Document::CrossedModule(_) => ObjectKind::CrossedModule,
            Document::Morphism(_) => ObjectKind::Morphism,
            Document::Algebra(_) => ObjectKind::Algebra,
            Document::Expression(_) => ObjectKind::Expression,
            Document::Simplicial(_) => ObjectKind::Simplicial,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Group(d) => &d.name,
            Document::CrossedModule(d) => &d.name,
            Document::Morphism(d) => &d.name,
            Document::Algebra(d) => &d.name,
            Document::Expression(d) => &d.name,
            Document::Simplicial(d) => &d.name,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Group(d) => to_json(d),
            Document::CrossedModule(d) => to_json(d),
            Document::Morphism(d) => to_json(d),
            Document::Algebra(d) => to_json(d),
            Document::Expression(d) => to_json(d),
            Document::Simplicial(d) => to_json(d),
        }
    }
}

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{path}: a {found} document does not belong in {dir}/")]
    Misplaced {
        path: PathBuf,
        found: ObjectKind,
        dir: &'static str,
    },
    #[error("name {0:?} is already taken")]
    DuplicateName(String),
    #[error("documents need a name")]
    Unnamed,
    #[error("no {kind} named {name:?}")]
    UnknownObject { kind: ObjectKind, name: String },
    #[error(transparent)]
    Invalid(#[from] FormatError),
}

/// A crossed module morphism with the names of its ends.
#[derive(Clone, Debug)]
pub struct NamedMorphism {
    pub morphism: CrossedModuleMorphism,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Default)]
pub struct Workspace {
    docs: BTreeMap<String, Document>,
    groups: BTreeMap<String, FiniteGroup>,
    crossed_modules: BTreeMap<String, CrossedModule>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads every kind directory that exists under `dir`; other entries are ignored.
    pub fn load_dir(dir: &Path) -> Result<Self, WorkspaceError> {
        if !dir.is_dir() {
            return Err(WorkspaceError::Io {
                path: dir.to_path_buf(),
                source: std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    "fixtures directory not found",
                ),
            });
        }
        let mut ws = Workspace::new();
        for kind in ObjectKind::ALL {
            let sub = dir.join(kind.dir());
            if !sub.is_dir() {
                continue;
            }
            let io = |path: &Path| {
                let path = path.to_path_buf();
                move |source| WorkspaceError::Io { path, source }
            };
            let mut files: Vec<PathBuf> = fs::read_dir(&sub)
                .map_err(io(&sub))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            for path in files {
                let text = fs::read_to_string(&path).map_err(io(&path))?;
                let doc = Document::parse(&text).map_err(|source| WorkspaceError::Format {
                    path: path.clone(),
                    source,
                })?;
                if doc.kind() != kind {
                    return Err(WorkspaceError::Misplaced {
                        path,
                        found: doc.kind(),
                        dir: kind.dir(),
                    });
                }
                ws.insert(doc).map_err(|e| match e {
                    WorkspaceError::Invalid(source) => WorkspaceError::Format { path, source },
                    other => other,
                })?;
            }
        }
        Ok(ws)
    }

    /// Writes one file per document, `<dir>/<kind dir>/<name>.json`.
    pub fn write_dir(&self, dir: &Path) -> Result<(), WorkspaceError> {
        for doc in self.docs.values() {
            let sub = dir.join(doc.kind().dir());
            fs::create_dir_all(&sub).map_err(|source| WorkspaceError::Io {
                path: sub.clone(),
                source,
            })?;
            let path = sub.join(format!("{}.json", doc.name()));
            fs::write(&path, doc.to_json())
                .map_err(|source| WorkspaceError::Io { path, source })?;
        }
        Ok(())
    }

    /// Adds a document after resolving its references; algebras are decoded once
    /// to catch shape errors.
    pub fn insert(&mut self, doc: Document) -> Result<(), WorkspaceError> {
        let name = doc.name().to_string();
        if name.is_empty() {
            return Err(WorkspaceError::Unnamed);
        }
        if self.docs.contains_key(&name) {
            return Err(WorkspaceError::DuplicateName(name));
        }
        self.validate(&doc)?;
        match &doc {
            Document::Group(d) => {
                self.groups.insert(name.clone(), d.to_group()?);
            }
            Document::CrossedModule(d) => {
                let cm = d.to_crossed_module(|n| self.groups.get(n).cloned())?;
                self.crossed_modules.insert(name.clone(), cm);
            }
            _ => {}
        }
        self.docs.insert(name, doc);
        Ok(())
    }

    /// Resolves a standalone document against this workspace without adding it.
    pub fn validate(&self, doc: &Document) -> Result<(), WorkspaceError> {
        match doc {
            Document::Group(d) => {
                d.to_group()?;
            }
            Document::CrossedModule(d) => {
                d.to_crossed_module(|n| self.groups.get(n).cloned())?;
            }
            Document::Morphism(d) => {
                self.morphism_from_doc(d)?;
            }
            Document::Algebra(d) => {
                let cm = self.resolve_crossed_module(&d.crossed_module)?;
                let field = d.field.kind()?;
                with_field!(field, F => d.to_algebra::<F>(&cm).map(|_| ()))?;
            }
            Document::Expression(d) => {
                let cm = self.resolve_crossed_module(&d.crossed_module)?;
                d.to_expression(&cm)?;
            }
            Document::Simplicial(d) => {
                let cm = self.resolve_crossed_module(&d.crossed_module)?;
                d.to_map(&cm)?;
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn documents(&self) -> impl Iterator<Item = &Document> {
        self.docs.values()
    }

    pub fn document(&self, name: &str) -> Option<&Document> {
        self.docs.get(name)
    }

    /// Names of one kind, sorted.
    pub fn names(&self, kind: ObjectKind) -> Vec<&str> {
        self.docs
            .values()
            .filter(|d| d.kind() == kind)
            .map(Document::name)
            .collect()
    }

    fn unknown(kind: ObjectKind, name: &str) -> WorkspaceError {
        WorkspaceError::UnknownObject {
            kind,
            name: name.to_string(),
        }
    }

    pub fn group(&self, name: &str) -> Result<&FiniteGroup, WorkspaceError> {
        self.groups
            .get(name)
            .ok_or_else(|| Self::unknown(ObjectKind::Group, name))
    }

    /// As loaded; CM1 and CM2 are not checked.
    pub fn crossed_module(&self, name: &str) -> Result<&CrossedModule, WorkspaceError> {
        self.crossed_modules
            .get(name)
            .ok_or_else(|| Self::unknown(ObjectKind::CrossedModule, name))
    }

    pub fn resolve_crossed_module(
        &self,
        r: &CrossedModuleRef,
    ) -> Result<CrossedModule, WorkspaceError> {
        match r {
            CrossedModuleRef::Name(n) => self.crossed_module(n).cloned(),
            CrossedModuleRef::Inline(d) => {
                Ok(d.to_crossed_module(|n| self.groups.get(n).cloned())?)
            }
        }
    }

    /// The name under which an equal crossed module is registered.
    pub fn crossed_module_name(&self, cm: &CrossedModule) -> Option<&str> {
        self.crossed_modules
            .iter()
            .find(|(_, c)| *c == cm)
            .map(|(n, _)| n.as_str())
    }

    fn morphism_from_doc(&self, d: &MorphismDoc) -> Result<NamedMorphism, WorkspaceError> {
        let source = self.resolve_crossed_module(&d.source)?;
        let target = self.resolve_crossed_module(&d.target)?;
        Ok(NamedMorphism {
            morphism: d.to_morphism(&source, &target)?,
            source: d.source.display_name().to_string(),
            target: d.target.display_name().to_string(),
        })
    }

    pub fn morphism_doc(&self, name: &str) -> Result<&MorphismDoc, WorkspaceError> {
        match self.docs.get(name) {
            Some(Document::Morphism(d)) => Ok(d),
            _ => Err(Self::unknown(ObjectKind::Morphism, name)),
        }
    }

    pub fn morphism(&self, name: &str) -> Result<NamedMorphism, WorkspaceError> {
        self.morphism_from_doc(self.morphism_doc(name)?)
    }

    pub fn algebra_doc(&self, name: &str) -> Result<&AlgebraDoc, WorkspaceError> {
        match self.docs.get(name) {
            Some(Document::Algebra(d)) => Ok(d),
            _ => Err(Self::unknown(ObjectKind::Algebra, name)),
        }
    }

    pub fn algebra_field(&self, name: &str) -> Result<FieldKind, WorkspaceError> {
        Ok(self.algebra_doc(name)?.field.kind()?)
    }

    /// Decodes without checking the axioms.
    pub fn algebra<F: Scalar>(&self, name: &str) -> Result<CrossedAlgebra<F>, WorkspaceError> {
        self.algebra_from_doc(self.algebra_doc(name)?)
    }

    pub fn algebra_from_doc<F: Scalar>(
        &self,
        d: &AlgebraDoc,
    ) -> Result<CrossedAlgebra<F>, WorkspaceError> {
        let cm = self.resolve_crossed_module(&d.crossed_module)?;
        Ok(d.to_algebra(&cm)?)
    }

    pub fn expression_doc(&self, name: &str) -> Result<&ExpressionDoc, WorkspaceError> {
        match self.docs.get(name) {
            Some(Document::Expression(d)) => Ok(d),
            _ => Err(Self::unknown(ObjectKind::Expression, name)),
        }
    }

    pub fn expression_from_doc(
        &self,
        d: &ExpressionDoc,
    ) -> Result<(CrossedModule, CobordismExpression), WorkspaceError> {
        let cm = self.resolve_crossed_module(&d.crossed_module)?;
        let e = d.to_expression(&cm)?;
        Ok((cm, e))
    }

    pub fn simplicial_doc(&self, name: &str) -> Result<&SimplicialDoc, WorkspaceError> {
        match self.docs.get(name) {
            Some(Document::Simplicial(d)) => Ok(d),
            _ => Err(Self::unknown(ObjectKind::Simplicial, name)),
        }
    }

    pub fn simplicial_from_doc(
        &self,
        d: &SimplicialDoc,
    ) -> Result<(CrossedModule, SimplicialFormalMap), WorkspaceError> {
        let cm = self.resolve_crossed_module(&d.crossed_module)?;
        let m = d.to_map(&cm)?;
        Ok((cm, m))
    }

    /// Runs the checker for the document's kind: group axioms, crossed module
    /// axioms, morphism axioms, crossed algebra axioms, typechecking, or the
    /// boundary and cocycle conditions.
    pub fn check(&self, doc: &Document) -> Result<Report, WorkspaceError> {
        Ok(match doc {
            Document::Group(d) => {
                let mut report = Report::new("group");
                match d.to_group() {
                    Ok(_) => {
                        report
                            .axiom("group", "group axioms")
                            .check(true, || unreachable!());
                    }
                    Err(FormatError::Group(
                        e @ (GroupError::NoIdentityAtZero { .. }
                        | GroupError::NotLatinSquare { .. }
                        | GroupError::MissingInverse { .. }
                        | GroupError::NotAssociative { .. }),
                    )) => report.fail("group", "group axioms", d.name.clone(), e.to_string()),
                    Err(e) => return Err(e.into()),
                }
                report
            }
            Document::CrossedModule(d) => {
                check_crossed_module(&d.to_crossed_module(|n| self.groups.get(n).cloned())?)
            }
            Document::Morphism(d) => check_morphism(&self.morphism_from_doc(d)?.morphism),
            Document::Algebra(d) => {
                let field = d.field.kind()?;
                with_field!(field, F => self.algebra_from_doc::<F>(d).map(|l| check_crossed_algebra(&l)))?
            }
            Document::Expression(d) => {
                let (cm, e) = self.expression_from_doc(d)?;
                typecheck(&cm, &e)
            }
            Document::Simplicial(d) => {
                let (cm, m) = self.simplicial_from_doc(d)?;
                validate_simplicial(&cm, &m)
            }
        })
    }
}
