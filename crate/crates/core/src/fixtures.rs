//! The shipped fixture set and its mutation corpus, both generated from code.
//!
//! `fixtures/` in the repository is the output of [`write_fixtures`]; a test
//! regenerates it and compares byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::crossed_algebras::{group_algebra_c, group_algebra_p, pullback, pushforward};
use crate::crossed_modules::{standard, CrossedModule, CrossedModuleMorphism};
use crate::exact_linalg::{FieldKind, Scalar};
use crate::formal_maps::{
    annulus_falling, annulus_rising, CobordismExpression, ElementaryPiece, SimplicialComplex,
    SimplicialFormalMap,
};
use crate::formats::{
    to_json, AlgebraDoc, CrossedModuleDoc, ElemRef, ExpressionDoc, GroupDoc, MorphismDoc,
    ScalarDoc, SimplicialDoc,
};
use crate::groups::{Elem, FiniteGroup};
use crate::workspace::{Document, ObjectKind, Workspace, WorkspaceError};
use crate::{Rational, F2, F3};

/// `<prefix>-<crossed module>`, with `-F<p>` appended over a prime field.
pub fn algebra_name(prefix: &str, cm: &str, field: FieldKind) -> String {
    match field {
        FieldKind::Rational => format!("{prefix}-{cm}"),
        FieldKind::Prime(p) => format!("{prefix}-{cm}-F{p}"),
    }
}

pub fn quotient_name(cm: &str) -> String {
    format!("Q-{cm}")
}

pub fn quotient_morphism_name(cm: &str) -> String {
    format!("q-{cm}")
}

fn elem(g: &FiniteGroup, name: &str) -> Elem {
    g.index_of(name)
        .unwrap_or_else(|| panic!("no element {name}"))
}

fn push(ws: &mut Workspace, doc: Document) {
    ws.insert(doc).expect("generated fixtures are consistent");
}

fn push_algebra<F: Scalar>(
    ws: &mut Workspace,
    name: &str,
    cm: &str,
    l: &crate::crossed_algebras::CrossedAlgebra<F>,
) {
    push(ws, Document::Algebra(AlgebraDoc::from_algebra(name, cm, l)));
}

fn push_expression(
    ws: &mut Workspace,
    name: &str,
    cm_name: &str,
    cm: &CrossedModule,
    layers: Vec<Vec<ElementaryPiece>>,
) {
    let e = CobordismExpression::from_layers(cm, layers);
    push(
        ws,
        Document::Expression(ExpressionDoc::from_expression(name, cm_name, cm, &e)),
    );
}

fn push_simplicial(
    ws: &mut Workspace,
    name: &str,
    cm_name: &str,
    cm: &CrossedModule,
    m: &SimplicialFormalMap,
) {
    push(
        ws,
        Document::Simplicial(SimplicialDoc::from_map(name, cm_name, cm, m)),
    );
}

fn full_tetrahedron() -> SimplicialComplex {
    let edges = vec![
        vec![0, 1],
        vec![0, 2],
        vec![0, 3],
        vec![1, 2],
        vec![1, 3],
        vec![2, 3],
    ];
    let tris = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    SimplicialComplex::new(4, vec![0, 1, 2, 3], edges, tris, vec![vec![0, 1, 2, 3]])
        .expect("tetrahedron")
}

/// Every shipped fixture.
pub fn standard_workspace() -> Workspace {
    let mut ws = Workspace::new();
    push(
        &mut ws,
        Document::Group(GroupDoc::from_group("Z2", &standard::z2("s"))),
    );
    push(
        &mut ws,
        Document::Group(GroupDoc::from_group("Z3", &FiniteGroup::cyclic(3))),
    );
    push(
        &mut ws,
        Document::Group(GroupDoc::from_group("S3", &standard::s3())),
    );

    let fixtures = standard::all();
    for (name, cm) in &fixtures {
        push(
            &mut ws,
            Document::CrossedModule(CrossedModuleDoc::from_crossed_module(name, cm)),
        );
    }
    for (name, cm) in &fixtures {
        let q = cm.quotient_morphism();
        let qn = quotient_name(name);
        push(
            &mut ws,
            Document::CrossedModule(CrossedModuleDoc::from_crossed_module(&qn, q.target())),
        );
        push(
            &mut ws,
            Document::Morphism(MorphismDoc::from_morphism(
                &quotient_morphism_name(name),
                name,
                &qn,
                &q,
            )),
        );
    }
    let a3s3 = standard::cm_a3s3();
    push(
        &mut ws,
        Document::Morphism(MorphismDoc::from_morphism(
            "id-CM-A3S3",
            "CM-A3S3",
            "CM-A3S3",
            &CrossedModuleMorphism::identity(&a3s3),
        )),
    );

    let q = FieldKind::Rational;
    for (name, cm) in &fixtures {
        push_algebra(
            &mut ws,
            &algebra_name("kC", name, q),
            name,
            &group_algebra_c::<Rational>(cm),
        );
        push_algebra(
            &mut ws,
            &algebra_name("kP", name, q),
            name,
            &group_algebra_p::<Rational>(cm),
        );
    }
    let qa = quotient_name("CM-A3S3");
    let f = a3s3.quotient_morphism();
    let kg = group_algebra_p::<Rational>(f.target());
    push_algebra(&mut ws, &algebra_name("kP", &qa, q), &qa, &kg);
    let pulled = pullback(&f, &kg).expect("pullback along q");
    push_algebra(
        &mut ws,
        &format!("pullback-{}", algebra_name("kP", &qa, q)),
        "CM-A3S3",
        &pulled,
    );
    let pf = pushforward(&f, &group_algebra_p::<Rational>(&a3s3)).expect("pushforward along q");
    push_algebra(
        &mut ws,
        &format!("pushforward-{}", algebra_name("kP", "CM-A3S3", q)),
        &qa,
        &pf.algebra,
    );

    let id2 = standard::cm_id2();
    let qi = quotient_name("CM-Id2");
    let f2 = FieldKind::Prime(2);
    push_algebra(
        &mut ws,
        &algebra_name("kC", "CM-Id2", f2),
        "CM-Id2",
        &group_algebra_c::<F2>(&id2),
    );
    let qid2 = id2.quotient_morphism();
    push_algebra(
        &mut ws,
        &algebra_name("kP", &qi, f2),
        &qi,
        &group_algebra_p::<F2>(qid2.target()),
    );
    let f3 = FieldKind::Prime(3);
    push_algebra(
        &mut ws,
        &algebra_name("kP", "CM-A3S3", f3),
        "CM-A3S3",
        &group_algebra_p::<F3>(&a3s3),
    );
    push_algebra(
        &mut ws,
        &algebra_name("kP", &qa, f3),
        &qa,
        &group_algebra_p::<F3>(f.target()),
    );

    {
        use ElementaryPiece::*;
        let p = id2.base();
        let s = elem(p, "s");
        push_expression(
            &mut ws,
            "disc-s",
            "CM-Id2",
            &id2,
            vec![vec![Disc {
                c: elem(id2.top(), "s"),
            }]],
        );
        push(
            &mut ws,
            Document::Expression(ExpressionDoc::from_expression(
                "identity-s",
                "CM-Id2",
                &id2,
                &CobordismExpression::identity(crate::formal_maps::FormalBoundary::from_grades(&[
                    s,
                ])),
            )),
        );
        push_expression(
            &mut ws,
            "cup-cap-s",
            "CM-Id2",
            &id2,
            vec![vec![Cup { g: s }], vec![Cap { g: s }]],
        );

        let p = a3s3.base();
        let (r, t12, t13) = (elem(p, "(123)"), elem(p, "(12)"), elem(p, "(13)"));
        let c = elem(a3s3.top(), "(123)");
        push_expression(
            &mut ws,
            "snake-CM-A3S3",
            "CM-A3S3",
            &a3s3,
            vec![
                vec![Id { g: r }, Cup { g: p.inv(r) }],
                vec![Cap { g: r }, Id { g: r }],
            ],
        );
        push_expression(
            &mut ws,
            "cylinder-pants-CM-A3S3",
            "CM-A3S3",
            &a3s3,
            vec![
                vec![Cyl { c, g: t12, h: t13 }, Id { g: t13 }],
                vec![Pants {
                    c: 0,
                    g1: p.product(&[a3s3.d(c), p.inv(t13), t12, t13]),
                    g2: t13,
                }],
            ],
        );
        let m = standard::cm_mod();
        let t = elem(m.base(), "t");
        push_expression(
            &mut ws,
            "cup-swap-cap-CM-Mod",
            "CM-Mod",
            &m,
            vec![
                vec![Cup { g: t }],
                vec![Swap { g1: t, g2: t }],
                vec![Cap { g: t }],
            ],
        );
        push_expression(
            &mut ws,
            "copants-pants-CM-Mod",
            "CM-Mod",
            &m,
            vec![
                vec![Copants { g1: t, g2: t }],
                vec![Pants {
                    c: elem(m.top(), "1"),
                    g1: t,
                    g2: t,
                }],
            ],
        );
    }

    {
        let p = a3s3.base();
        let (t12, t13) = (elem(p, "(12)"), elem(p, "(13)"));
        let c = elem(a3s3.top(), "(123)");
        let tri = SimplicialComplex::new(
            3,
            vec![0, 1, 2],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            vec![vec![0, 1, 2]],
            vec![],
        )
        .expect("triangle");
        let p02 = p.product(&[a3s3.d(c), t12, t13]);
        let m = SimplicialFormalMap::new(&a3s3, tri, vec![t12, t13, p02], vec![c], vec![0])
            .expect("triangle labels");
        push_simplicial(&mut ws, "triangle-CM-A3S3", "CM-A3S3", &a3s3, &m);
        let potential = [0, t12, elem(p, "(123)"), elem(p, "(23)")];
        let m = SimplicialFormalMap::identity_labeled(p, full_tetrahedron(), &potential);
        push_simplicial(&mut ws, "tetrahedron-CM-A3S3", "CM-A3S3", &a3s3, &m);
        let cm = standard::cm_mod();
        let t = elem(cm.base(), "t");
        let m = SimplicialFormalMap::identity_labeled(cm.base(), full_tetrahedron(), &[0, t, 0, t]);
        push_simplicial(&mut ws, "tetrahedron-CM-Mod", "CM-Mod", &cm, &m);
        let c2 = elem(a3s3.top(), "(132)");
        push_simplicial(
            &mut ws,
            "annulus-rising-CM-A3S3",
            "CM-A3S3",
            &a3s3,
            &annulus_rising(&a3s3, t12, t13, c, c2),
        );
        push_simplicial(
            &mut ws,
            "annulus-falling-CM-A3S3",
            "CM-A3S3",
            &a3s3,
            &annulus_falling(&a3s3, t12, t13, c, c2),
        );
    }
    ws
}

/// One single-entry mutation of a passing fixture, aimed at one axiom family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationEntry {
    pub file: String,
    pub kind: String,
    pub family: String,
    pub base: String,
    /// The changed entry, as a path into the base document.
    pub entry: String,
    /// Every family the mutation breaks.
    pub failed_families: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Mutation {
    pub entry: MutationEntry,
    pub document: Document,
}

/// Bases tried, in order, for each kind.
const MUTATION_BASES: [&str; 10] = [
    "CM-A3S3",
    "CM-Mod",
    "id-CM-A3S3",
    "kP-CM-A3S3",
    "kP-CM-Id2",
    "kP-CM-Mod",
    "snake-CM-A3S3",
    "triangle-CM-A3S3",
    "tetrahedron-CM-A3S3",
    "tetrahedron-CM-Mod",
];

fn slug(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_matches('-').to_string()
}

fn next_index(r: &ElemRef, g: &FiniteGroup) -> ElemRef {
    let i = r.resolve(g, "").expect("fixture labels resolve");
    let j = (i + 1) % g.order();
    match r {
        ElemRef::Index(_) => ElemRef::Index(j),
        ElemRef::Name(_) => ElemRef::Name(g.name(j).to_string()),
    }
}

fn bump(x: &ScalarDoc) -> ScalarDoc {
    let v: Rational = x.decode().expect("rational fixture entry");
    ScalarDoc::encode(&(v + Rational::from_i64(1)))
}

/// Every single-entry change of `doc`, labelled by the path of the entry.
fn candidates(ws: &Workspace, doc: &Document) -> Vec<(String, Document)> {
    let mut out = Vec::new();
    match doc {
        Document::CrossedModule(d) => {
            let cm = ws.crossed_module(&d.name).expect("registered");
            for i in 0..d.boundary.len() {
                let mut m = d.clone();
                m.boundary[i] = next_index(&d.boundary[i], cm.base());
                out.push((format!("boundary[{i}]"), Document::CrossedModule(m)));
            }
            for (p, row) in d.action.iter().enumerate() {
                for c in 0..row.len() {
                    let mut m = d.clone();
                    m.action[p][c] = next_index(&row[c], cm.top());
                    out.push((format!("action[{p}][{c}]"), Document::CrossedModule(m)));
                }
            }
        }
        Document::Morphism(d) => {
            let f = ws.morphism(&d.name).expect("registered").morphism;
            for i in 0..d.f_top.len() {
                let mut m = d.clone();
                m.f_top[i] = next_index(&d.f_top[i], f.target().top());
                out.push((format!("f_top[{i}]"), Document::Morphism(m)));
            }
            for i in 0..d.f_base.len() {
                let mut m = d.clone();
                m.f_base[i] = next_index(&d.f_base[i], f.target().base());
                out.push((format!("f_base[{i}]"), Document::Morphism(m)));
            }
        }
        Document::Algebra(d) => {
            for i in 0..d.unit.len() {
                let mut m = d.clone();
                m.unit[i] = bump(&d.unit[i]);
                out.push((format!("unit[{i}]"), Document::Algebra(m)));
            }
            for (k, v) in &d.tilde {
                for i in 0..v.len() {
                    let mut m = d.clone();
                    m.tilde.get_mut(k).expect("key")[i] = bump(&v[i]);
                    out.push((format!("tilde[{k}][{i}]"), Document::Algebra(m)));
                }
            }
            for (k, mat) in &d.rho {
                for (r, row) in mat.iter().enumerate() {
                    for c in 0..row.len() {
                        let mut m = d.clone();
                        m.rho.get_mut(k).expect("key")[r][c] = bump(&row[c]);
                        out.push((format!("rho[{k}][{r}][{c}]"), Document::Algebra(m)));
                    }
                }
            }
            for (field, blocks) in [("mul", &d.mul), ("phi", &d.phi)] {
                for (k1, inner) in blocks {
                    for (k2, mat) in inner {
                        for (r, row) in mat.iter().enumerate() {
                            for c in 0..row.len() {
                                let mut m = d.clone();
                                let target = if field == "mul" {
                                    &mut m.mul
                                } else {
                                    &mut m.phi
                                };
                                let e =
                                    &mut target.get_mut(k1).expect("key").get_mut(k2).expect("key")
                                        [r][c];
                                *e = bump(e);
                                out.push((
                                    format!("{field}[{k1}][{k2}][{r}][{c}]"),
                                    Document::Algebra(m),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Document::Expression(d) => {
            let (cm, _) = ws.expression_from_doc(d).expect("registered");
            for (k, layer) in d.layers.iter().enumerate() {
                for (i, piece) in layer.iter().enumerate() {
                    let slots = [
                        ("c", piece.c.as_ref(), cm.top()),
                        ("g", piece.g.as_ref(), cm.base()),
                        ("h", piece.h.as_ref(), cm.base()),
                        ("g1", piece.g1.as_ref(), cm.base()),
                        ("g2", piece.g2.as_ref(), cm.base()),
                    ];
                    for (label, value, grp) in slots {
                        let Some(value) = value else { continue };
                        let mut m = d.clone();
                        let next = Some(next_index(value, grp));
                        let pc = &mut m.layers[k][i];
                        match label {
                            "c" => pc.c = next,
                            "g" => pc.g = next,
                            "h" => pc.h = next,
                            "g1" => pc.g1 = next,
                            _ => pc.g2 = next,
                        }
                        out.push((format!("layers[{k}][{i}].{label}"), Document::Expression(m)));
                    }
                }
            }
        }
        Document::Simplicial(d) => {
            let (cm, _) = ws.simplicial_from_doc(d).expect("registered");
            for i in 0..d.edge_labels.len() {
                let mut m = d.clone();
                m.edge_labels[i] = next_index(&d.edge_labels[i], cm.base());
                out.push((format!("edge_labels[{i}]"), Document::Simplicial(m)));
            }
            for i in 0..d.tri_labels.len() {
                let mut m = d.clone();
                m.tri_labels[i] = next_index(&d.tri_labels[i], cm.top());
                out.push((format!("tri_labels[{i}]"), Document::Simplicial(m)));
            }
        }
        Document::Group(_) => {}
    }
    out
}

fn rename(doc: &mut Document, name: String) {
    match doc {
        Document::Group(d) => d.name = name,
        Document::CrossedModule(d) => d.name = name,
        Document::Morphism(d) => d.name = name,
        Document::Algebra(d) => d.name = name,
        Document::Expression(d) => d.name = name,
        Document::Simplicial(d) => d.name = name,
    }
}

/// For every axiom family of every kind, the mutation that breaks it while
/// breaking the fewest other families. A family no single-entry change can
/// reach is left out.
pub fn mutation_corpus(ws: &Workspace) -> Vec<Mutation> {
    let mut out: Vec<Mutation> = Vec::new();
    for base in MUTATION_BASES {
        let doc = ws
            .document(base)
            .expect("mutation base is a fixture")
            .clone();
        let report = ws.check(&doc).expect("fixtures check");
        assert!(report.passed, "mutation base {base} must pass");
        let mut found: Vec<(String, Vec<String>, Document)> = Vec::new();
        for (entry, cand) in candidates(ws, &doc) {
            if ws.validate(&cand).is_err() {
                continue;
            }
            let r = ws.check(&cand).expect("validated");
            if !r.passed {
                found.push((entry, r.failed_families(), cand));
            }
        }
        let mut families: Vec<String> = report.results.iter().map(|r| r.family.clone()).collect();
        families.dedup();
        for family in families {
            let kind = doc.kind().tag();
            if out
                .iter()
                .any(|m| m.entry.kind == kind && m.entry.family == family)
            {
                continue;
            }
            let best = found
                .iter()
                .filter(|(_, failed, _)| failed.contains(&family))
                .min_by_key(|(_, failed, _)| failed.len());
            if let Some((entry, failed, cand)) = best {
                let mut document = cand.clone();
                rename(&mut document, format!("{base}-mutant-{}", slug(&family)));
                out.push(Mutation {
                    entry: MutationEntry {
                        file: format!("{}/{}.json", doc.kind().dir(), document.name()),
                        kind: kind.to_string(),
                        family,
                        base: base.to_string(),
                        entry: entry.clone(),
                        failed_families: failed.clone(),
                    },
                    document,
                });
            }
        }
    }
    out
}

/// Writes the standard workspace to `dir` and the mutation corpus to
/// `dir/mutations`, with `mutations/manifest.json` describing each file.
pub fn write_fixtures(dir: &Path) -> Result<(), WorkspaceError> {
    let ws = standard_workspace();
    ws.write_dir(dir)?;
    let corpus = mutation_corpus(&ws);
    let mdir = dir.join("mutations");
    for m in &corpus {
        let path = mdir.join(&m.entry.file);
        let parent = path
            .parent()
            .expect("file in a kind directory")
            .to_path_buf();
        fs::create_dir_all(&parent).map_err(|source| WorkspaceError::Io {
            path: parent,
            source,
        })?;
        fs::write(&path, m.document.to_json())
            .map_err(|source| WorkspaceError::Io { path, source })?;
    }
    let manifest: Vec<&MutationEntry> = corpus.iter().map(|m| &m.entry).collect();
    let path = mdir.join("manifest.json");
    fs::write(&path, to_json(&manifest)).map_err(|source| WorkspaceError::Io { path, source })?;
    Ok(())
}

/// Every family name the checker of `kind` can report on the shipped bases.
pub fn mutation_families(ws: &Workspace, kind: ObjectKind) -> Vec<String> {
    let mut out = Vec::new();
    for base in MUTATION_BASES {
        let doc = ws.document(base).expect("fixture");
        if doc.kind() != kind {
            continue;
        }
        for r in ws.check(doc).expect("fixtures check").results {
            if !out.contains(&r.family) {
                out.push(r.family);
            }
        }
    }
    out
}
