//! End-to-end CLI tests: exit codes, byte determinism, and schema validation
//! of the emitted JSON records.

use std::process::Command;

fn twistkit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistkit"))
}

fn schema_with_inlined_refs(name: &str) -> serde_json::Value {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("schemas");
    let mut schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(root.join(name)).unwrap()).unwrap();
    // inline file refs (the validator would otherwise try to fetch them)
    fn inline(v: &mut serde_json::Value, root: &std::path::Path) {
        match v {
            serde_json::Value::Object(map) => {
                if let Some(serde_json::Value::String(target)) = map.get("$ref") {
                    if target.ends_with(".schema.json") {
                        let mut sub: serde_json::Value = serde_json::from_str(
                            &std::fs::read_to_string(root.join(target)).unwrap(),
                        )
                        .unwrap();
                        sub.as_object_mut().unwrap().remove("$schema");
                        sub.as_object_mut().unwrap().remove("$id");
                        inline(&mut sub, root);
                        *v = sub;
                        return;
                    }
                }
                for (_, vv) in map.iter_mut() {
                    inline(vv, root);
                }
            }
            serde_json::Value::Array(items) => {
                for vv in items.iter_mut() {
                    inline(vv, root);
                }
            }
            _ => {}
        }
    }
    inline(&mut schema, &root);
    schema
}

fn assert_valid(schema_name: &str, instance: &serde_json::Value) {
    let schema = schema_with_inlined_refs(schema_name);
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let mut msgs: Vec<String> = Vec::new();
    if let Err(errors) = compiled.validate(instance) {
        for e in errors {
            msgs.push(format!("{} at {}", e, e.instance_path));
        }
    }
    assert!(msgs.is_empty(), "{} validation failed: {:?}", schema_name, msgs);
}

#[test]
fn classify_is_deterministic_and_schema_valid() {
    let run = || {
        let out = twistkit()
            .args(["classify", "--group", "dihedral 4"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "classify output must be byte-deterministic");
    let value: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_valid("atlas_record.schema.json", &value);
    assert_eq!(value["label_count"], serde_json::json!(7));
}

#[test]
fn classify_twisted_d8() {
    let out = twistkit()
        .args([
            "classify",
            "--group",
            "dihedral 4",
            "--omega",
            "inflate cyclic 2 1 via mod-r2-s",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("atlas_record.schema.json", &value);
    assert_eq!(value["label_count"], serde_json::json!(5));
    // twisted labels carry no dual group
    assert!(value["labels"][0]["dual_group"].is_null());
}

#[test]
fn modular_record_schema() {
    let out = twistkit()
        .args(["modular", "--group", "sym 3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("modular_data.schema.json", &value);
    assert_eq!(value["objects"].as_array().unwrap().len(), 8);
}

#[test]
fn morita_report_schema() {
    let out = twistkit()
        .args([
            "morita",
            "--group",
            "dihedral 4",
            "--group",
            "quaternion",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("morita_report.schema.json", &value);
    assert_eq!(value["matrix"][0][1]["verdict"], serde_json::json!("distinguished"));
    assert_eq!(value["matrix"][1][0]["verdict"], serde_json::json!("distinguished"));
    assert_eq!(value["matrix"][0][0]["verdict"], serde_json::json!("equivalent"));
}

#[test]
fn exit_codes() {
    // parse error -> 2
    let out = twistkit().args(["classify", "--group", "frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // bound exceeded -> 3
    let out = twistkit().args(["verify", "--group", "alt 5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    // pass -> 0
    let out = twistkit().args(["verify", "--group", "abelian 2 2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("oracle equivalence: 6 = 6"));
}

#[test]
fn verify_twisted_d8() {
    let out = twistkit()
        .args([
            "verify",
            "--group",
            "dihedral 4",
            "--omega",
            "inflate cyclic 2 1 via mod-r2-s",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("oracle equivalence: 5 = 5"));
}

#[test]
fn group_and_cochain_files() {
    let dir = std::env::temp_dir().join(format!("twistkit-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // a multiplication table file for Z3
    let table = "3\n0 1 2\n1 2 0\n2 0 1\n";
    let table_path = dir.join("z3.table");
    std::fs::write(&table_path, table).unwrap();
    let out = twistkit()
        .args(["classify", "--group", &format!("table {}", table_path.display())])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["label_count"], serde_json::json!(2));
    // permutation generators for S3
    let perm_path = dir.join("s3.perm");
    std::fs::write(&perm_path, "(1 2)\n(1 2 3)\n").unwrap();
    let out = twistkit()
        .args(["verify", "--group", &format!("perm {}", perm_path.display())])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}
