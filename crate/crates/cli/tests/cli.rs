use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use spechtkit::perm::Permutation;
use spechtkit::wordspace::Tableau;
use spechtkit::{FieldVector, GModule, Guard, ModuleKind, Partition, PrimeField, WordSpace};
use spechtkit_cli::cache::ModuleCache;
use spechtkit_cli::suite::{Profile, SuiteConfig};
use spechtkit_cli::{run, Context};

fn spechtkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spechtkit"))
        .args(args)
        .env_remove("SPECHTKIT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn validate(report: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(report) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    panic!("report violates schema: {msgs:?}\n{report:#}");
}

#[test]
fn irreducible_dimension_of_two_one() {
    let out = spechtkit(&["dim-irreducible", "--lambda", "2,1", "--n", "2", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["outputs"]["dim"], 1);
    assert_eq!(r["params"]["r"], 3);
    let out = spechtkit(&["dim-irreducible", "--lambda", "2,1", "--n", "2", "--p", "2"]);
    assert_eq!(json(&out)["outputs"]["dim"], 2);
}

#[test]
fn eq3_instance_holds() {
    let out = spechtkit(&["verify-eq3", "--lambda", "3,3", "--n", "2", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["outputs"]["up_equal"], true);
    assert_eq!(r["outputs"]["hypotheses_hold"], true);
}

#[test]
fn error_exit_codes() {
    let singular = spechtkit(&["dim-irreducible", "--lambda", "1,1", "--n", "2", "--p", "2"]);
    assert_eq!(singular.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&singular.stderr).contains("singular"));
    assert_eq!(spechtkit(&["dim-specht", "--lambda", "2,1", "--n", "2", "--p", "4"]).status.code(), Some(2));
    assert_eq!(spechtkit(&["dim-specht", "--lambda", "1,2", "--n", "2", "--p", "3"]).status.code(), Some(2));
    assert_eq!(spechtkit(&["dim-specht", "--lambda", "2,1", "--bogus"]).status.code(), Some(2));
    assert_eq!(spechtkit(&["frobnicate"]).status.code(), Some(2));
    // 5^12 words exceeds the default guard
    let guarded = spechtkit(&["dim-specht", "--lambda", "12", "--n", "5", "--p", "3"]);
    assert_eq!(guarded.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&guarded.stderr).contains("guard"));
}

#[test]
fn counterexamples_exit_one() {
    // R = 3 lies below the threshold 4 for p = 5, n = 2, and (3) is in C₀(3)
    let out = spechtkit(&["lemma1-sweep", "--p", "5", "--n", "2", "--r", "3", "--r-max", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["outputs"]["counterexamples"], serde_json::json!(["3"]));
    assert_eq!(r["failures"], serde_json::json!(["no_counterexamples"]));
}

#[test]
fn reports_follow_the_schema() {
    let runs: &[&[&str]] = &[
        &["dim-specht", "--lambda", "3,1", "--n", "2", "--p", "5"],
        &["dim-irreducible", "--lambda", "3,2", "--n", "2", "--p", "3"],
        &["radical", "--lambda", "2,2", "--n", "2", "--p", "3"],
        &["up", "--lambda", "2,1", "--n", "2", "--p", "3", "--source", "radical"],
        &["down", "--lambda", "2,1", "--n", "2", "--p", "3"],
        &["verify-updown", "--lambda", "2,2", "--n", "2", "--p", "3", "--source", "radical"],
        &["verify-down-radical", "--lambda", "3,2", "--n", "2", "--p", "3"],
        &["schur-weyl-kernel", "--r", "3", "--n", "2", "--p", "3"],
        &["condition1", "--lambda", "3,1", "--n", "2", "--p", "2"],
        &["condition1", "--lambda", "1,1,1", "--n", "3", "--p", "5"],
        &["lemma1-sweep", "--p", "7", "--n", "3"],
        &["delta-sweep", "--p", "2", "--k", "2", "--m-max", "200"],
        &["bound", "--r", "5", "--n", "2", "--a", "2", "--timing"],
    ];
    for args in runs {
        let out = spechtkit(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        validate(&json(&out));
    }
    let bound = json(&spechtkit(&["bound", "--r", "2", "--n", "2", "--a", "1"]));
    assert_eq!(bound["outputs"]["k"], 9);
    let cert = json(&spechtkit(&["condition1", "--lambda", "1", "--n", "2", "--p", "2"]));
    assert_eq!((cert["outputs"]["route"].as_str(), cert["outputs"]["a"].as_u64()), (Some("two-part"), Some(2)));
}

#[test]
fn csv_and_text_formats() {
    let out = spechtkit(&["delta-sweep", "--p", "3", "--k", "1", "--m-max", "50", "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "m,candidate\n");
    let out = spechtkit(&["dim-specht", "--lambda", "2,1", "--n", "3", "--p", "3", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("outputs.dim: 2\n"), "{text}");
}

#[test]
fn cached_runs_match_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["dim-irreducible", "--lambda", "3,2", "--n", "2", "--p", "3", "--cache-dir", d];
    let cold = spechtkit(&args);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 2, "{files:?}");
    let warm = spechtkit(&args);
    let uncached = spechtkit(&args[..7]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
    assert_eq!(warm.status.code(), Some(0));

    // the environment variable is honoured when the flag is absent
    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_spechtkit"))
        .args(&args[..7])
        .env("SPECHTKIT_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(out.stdout, cold.stdout);
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 2);
}

#[test]
fn cached_module_files_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ModuleCache::at(dir.path());
    let f = PrimeField::new(3).unwrap();
    let lam: Partition = "3,3".parse().unwrap();
    let rad = cache.radical(&lam, 2, f, Guard::default()).unwrap();
    let text = std::fs::read_to_string(dir.path().join("radical-n2-p3-3_3.gmod")).unwrap();
    let back = GModule::from_text(&text, Guard::default()).unwrap();
    assert_eq!(back, rad);
    assert_eq!(back.kind(), ModuleKind::Radical);
}

#[test]
fn quick_suite_is_byte_stable() {
    let a = spechtkit(&["suite", "--profile", "quick"]);
    let b = spechtkit(&["suite", "--profile", "quick"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    validate(&r);
    assert_eq!(r["outputs"]["failed"], 0);
}

/// `S^λ` grown from the column product with the signs dropped.
fn unsigned_specht(lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> spechtkit::Result<GModule> {
    let space = WordSpace::new(n, lambda.size(), guard)?;
    let t = Tableau::column_superstandard(lambda);
    let mut words: Vec<Vec<u8>> = vec![vec![0; lambda.size()]];
    for col in t.columns() {
        let mut next = Vec::new();
        for w in &words {
            for sigma in Permutation::all(col.len()) {
                let mut w = w.clone();
                for (j, &pos) in col.iter().enumerate() {
                    w[pos - 1] = sigma.apply0(j) as u8 + 1;
                }
                next.push(w);
            }
        }
        words = next;
    }
    let terms: Vec<(usize, i64)> = words.iter().map(|w| (space.index_of_letters(w), 1)).collect();
    let generator = FieldVector::from_terms(field, space.dim(), terms);
    Ok(GModule::generated(space, field, [generator]).with_label(ModuleKind::Specht, Some(lambda.clone())))
}

#[test]
fn suite_names_a_broken_bracket() {
    let ctx = Context {
        cache: ModuleCache::disabled(),
        guard: Guard::default(),
        suite: Some(SuiteConfig { profile: Profile::Full, specht: unsigned_specht }),
    };
    let report = run(&spechtkit_cli::Command::Suite { profile: Profile::Full }, &ctx).unwrap();
    assert!(!report.passed);
    assert_eq!(report.failures, vec!["dim-specht".to_string()]);
}
