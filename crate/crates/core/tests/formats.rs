use std::path::{Path, PathBuf};

use crossed_hqft::crossed_algebras::{group_algebra_c, group_algebra_p};
use crossed_hqft::crossed_modules::standard;
use crossed_hqft::fixtures::standard_workspace;
use crossed_hqft::formats::{AlgebraDoc, FormatError};
use crossed_hqft::workspace::{Document, ObjectKind, Workspace, WorkspaceError};
use crossed_hqft::{Rational, F3};
use serde_json::{json, Value};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixture_directory_matches_the_built_in_workspace() {
    let loaded = Workspace::load_dir(&fixtures()).unwrap();
    let built = standard_workspace();
    assert_eq!(loaded.len(), built.len());
    for doc in built.documents() {
        assert_eq!(loaded.document(doc.name()), Some(doc), "{}", doc.name());
    }
    for kind in ObjectKind::ALL {
        assert!(!loaded.names(kind).is_empty(), "{kind}");
    }
}

#[test]
fn documents_round_trip_through_json() {
    for doc in standard_workspace().documents() {
        let text = doc.to_json();
        let back = Document::parse(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn algebra_documents_decode_to_the_constructions() {
    let ws = standard_workspace();
    let cm = standard::cm_a3s3();
    assert_eq!(
        ws.algebra::<Rational>("kP-CM-A3S3").unwrap(),
        group_algebra_p(&cm)
    );
    assert_eq!(
        ws.algebra::<Rational>("kC-CM-A3S3").unwrap(),
        group_algebra_c(&cm)
    );
    assert_eq!(
        ws.algebra::<F3>("kP-CM-A3S3-F3").unwrap(),
        group_algebra_p(&cm)
    );
    assert!(ws.algebra::<F3>("kP-CM-A3S3").is_err());
}

fn kp_id2_doc() -> Value {
    let ws = standard_workspace();
    serde_json::from_str(&ws.document("kP-CM-Id2").unwrap().to_json()).unwrap()
}

#[test]
fn labels_may_be_names_or_indices() {
    let ws = standard_workspace();
    let mut v = kp_id2_doc();
    let mul = v["mul"].as_object().unwrap().clone();
    let reindexed: serde_json::Map<String, Value> = mul
        .into_iter()
        .map(|(k, inner)| {
            let key = if k == "e" {
                "0".to_string()
            } else {
                "1".to_string()
            };
            (key, inner)
        })
        .collect();
    v["mul"] = Value::Object(reindexed);
    let doc: AlgebraDoc = serde_json::from_value(v).unwrap();
    let cm = ws.crossed_module("CM-Id2").unwrap();
    assert_eq!(doc.to_algebra::<Rational>(cm).unwrap(), group_algebra_p(cm));
}

#[test]
fn missing_blocks_decode_as_zero() {
    let ws = standard_workspace();
    let cm = ws.crossed_module("CM-Id2").unwrap();
    let mut v = kp_id2_doc();
    v["mul"]["s"].as_object_mut().unwrap().remove("s");
    let doc: AlgebraDoc = serde_json::from_value(v).unwrap();
    let l = doc.to_algebra::<Rational>(cm).unwrap();
    assert!(l.mul_block(1, 1).is_zero());
}

#[test]
fn malformed_documents_are_rejected() {
    let ws = standard_workspace();
    let cm = ws.crossed_module("CM-Id2").unwrap();
    let decode = |v: Value| -> Result<(), FormatError> {
        let doc: AlgebraDoc = serde_json::from_value(v).map_err(FormatError::Json)?;
        doc.to_algebra::<Rational>(cm).map(|_| ())
    };
    let mut v = kp_id2_doc();
    v["dims"]["e"] = json!(2);
    assert!(decode(v).is_err());
    let mut v = kp_id2_doc();
    v["unit"] = json!(["1", "0"]);
    assert!(decode(v).is_err());
    let mut v = kp_id2_doc();
    v["tilde"]["q"] = json!(["1"]);
    assert!(decode(v).is_err());
    let mut v = kp_id2_doc();
    v["field"] = json!({"Fp": 4});
    assert!(decode(v).is_err());
    let mut v = kp_id2_doc();
    v["unit"] = json!(["1/0"]);
    assert!(decode(v).is_err());

    assert!(Document::parse(r#"{"kind": "widget", "name": "w"}"#).is_err());
    assert!(Document::parse("[]").is_err());
}

#[test]
fn workspace_rejects_duplicates_and_dangling_references() {
    let mut ws = standard_workspace();
    let doc = ws.document("S3").unwrap().clone();
    assert!(matches!(
        ws.insert(doc),
        Err(WorkspaceError::DuplicateName(_))
    ));

    let mut v = kp_id2_doc();
    v["name"] = json!("orphan");
    v["crossed_module"] = json!("CM-Nowhere");
    let orphan = Document::parse(&v.to_string()).unwrap();
    assert!(ws.insert(orphan).is_err());
}

#[test]
fn misplaced_files_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let ws = standard_workspace();
    std::fs::create_dir_all(dir.path().join("groups")).unwrap();
    std::fs::write(
        dir.path().join("groups/x.json"),
        ws.document("CM-Id2").unwrap().to_json(),
    )
    .unwrap();
    assert!(matches!(
        Workspace::load_dir(dir.path()),
        Err(WorkspaceError::Misplaced { .. })
    ));
    assert!(Workspace::load_dir(&dir.path().join("absent")).is_err());
}

#[test]
fn written_workspace_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let ws = standard_workspace();
    ws.write_dir(dir.path()).unwrap();
    let back = Workspace::load_dir(dir.path()).unwrap();
    assert_eq!(back.len(), ws.len());
}
