use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use hopfpi::brace::trivial_brace;
use hopfpi::hopf::group_algebra;
use hopfpi::{Field, FiniteGroup, GroupHom, MatchedPair};
use hopfpi_cli::gallery::gallery_documents;
use hopfpi_cli::{encode, parse_document, Document, Structure};
use tempfile::TempDir;

fn gallery(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery").join(rel)
}

fn hopfpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfpi")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn text(out: &Output) -> String {
    format!("{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write_doc(dir: &TempDir, name: &str, doc: &Document) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, encode(doc)).unwrap();
    path
}

fn load(rel: &str) -> Document {
    parse_document(&std::fs::read(gallery(rel)).unwrap()).unwrap()
}

#[test]
fn gallery_matches_generator() {
    let docs = gallery_documents().unwrap();
    let root = gallery("");
    let mut on_disk = Vec::new();
    for dir in std::fs::read_dir(&root).unwrap() {
        let dir = dir.unwrap().path();
        for f in std::fs::read_dir(&dir).unwrap() {
            let f = f.unwrap().path();
            on_disk.push(f.strip_prefix(&root).unwrap().to_string_lossy().into_owned());
        }
    }
    on_disk.sort();
    let mut expected: Vec<String> = docs.iter().map(|(rel, _)| rel.clone()).collect();
    expected.sort();
    assert_eq!(on_disk, expected, "regenerate with `hopfpi gallery --out gallery`");
    for (rel, doc) in &docs {
        let disk = std::fs::read_to_string(root.join(rel)).unwrap();
        assert!(disk == encode(doc), "{rel} drifted from the generator");
    }
}

#[test]
fn every_fixture_roundtrips_byte_for_byte() {
    for (rel, _) in gallery_documents().unwrap() {
        let bytes = std::fs::read(gallery(&rel)).unwrap();
        let again = encode(&parse_document(&bytes).unwrap());
        assert_eq!(again.as_bytes(), &bytes[..], "{rel}");
    }
}

#[test]
fn gallery_brace_validates() {
    let out = hopfpi(&["validate", p(&gallery("braces/s3-sign-opposite.json"))]);
    assert_eq!(code(&out), 0, "{}", text(&out));
    assert!(text(&out).contains("verdict: PASS"));
}

#[test]
fn mutated_fixture_names_the_axiom() {
    let dir = TempDir::new().unwrap();
    let doc = load("algebras/s3-sign.json");
    let Structure::Hopf(h) = doc.structure else { panic!() };
    let t = h.mult_tensor(1, 1);
    let bad = h.with_mult(1, 1, t.with_entry(0, 1, 1, t.get(0, 1, 1) + &Field::Rational.one())).unwrap();
    let path = write_doc(&dir, "bad.json", &Document { field: doc.field, structure: Structure::Hopf(bad) });
    let out = hopfpi(&["validate", p(&path)]);
    assert_eq!(code(&out), 1);
    assert!(text(&out).contains("FAIL associativity"), "{}", text(&out));

    let json = hopfpi(&["--json", "validate", p(&path)]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["verdict"], "FAIL");
    assert_eq!(v["exit_code"], 1);
    assert_eq!(code(&json), 1);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&hopfpi(&["validate", p(&missing)])), 2);

    let fixture = std::fs::read_to_string(gallery("algebras/z2-identity.json")).unwrap();
    let zero = dir.path().join("zero.json");
    std::fs::write(&zero, fixture.replacen("[0,\"1\"]", "[0,\"1/0\"]", 1)).unwrap();
    let out = hopfpi(&["validate", p(&zero)]);
    assert_eq!(code(&out), 2);
    assert!(text(&out).contains("zero denominator"), "{}", text(&out));

    let extra = dir.path().join("extra.json");
    std::fs::write(&extra, fixture.replacen("\"dims\"", "\"colour\": 1, \"dims\"", 1)).unwrap();
    let out = hopfpi(&["validate", p(&extra)]);
    assert_eq!(code(&out), 2);
    assert!(text(&out).contains("unknown field `colour`") && text(&out).contains("line "), "{}", text(&out));

    assert_eq!(code(&hopfpi(&["validate"])), 2);
}

#[test]
fn group_algebra_matches_fixture() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("ga.json");
    let out = hopfpi(&["construct", "group-algebra", "--group", p(&gallery("groups/s3.json")), "--deg", "sign", "-o", p(&out_path)]);
    assert_eq!(code(&out), 0, "{}", text(&out));
    assert_eq!(std::fs::read(&out_path).unwrap(), std::fs::read(gallery("algebras/s3-sign.json")).unwrap());
    assert_eq!(code(&hopfpi(&["validate", p(&out_path)])), 0);

    let bad = hopfpi(&["construct", "group-algebra", "--group", p(&gallery("groups/s3.json")), "--deg", "parity"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn brace_from_antipode_equals_opposite_fixture() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("b.json");
    let rb = gallery("rota-baxter/s3-trivial-antipode.json");
    let out = hopfpi(&["construct", "brace-from-rb", "--rb", p(&rb), "-o", p(&out_path)]);
    assert_eq!(code(&out), 0, "{}", text(&out));
    assert_eq!(std::fs::read(&out_path).unwrap(), std::fs::read(gallery("braces/s3-trivial-opposite.json")).unwrap());
}

#[test]
fn construct_without_output_prints_the_document() {
    let out = hopfpi(&["construct", "antipode-rb", "--hopf", p(&gallery("algebras/z2-identity.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, std::fs::read(gallery("rota-baxter/z2-identity-antipode.json")).unwrap());
    assert!(String::from_utf8_lossy(&out.stderr).contains("verdict: PASS"));
}

#[test]
fn circle_identity_gate_exits_one() {
    let dir = TempDir::new().unwrap();
    let doc = load("algebras/s3-sign.json");
    let Structure::Hopf(h) = doc.structure else { panic!() };
    let mp = MatchedPair::trivial(h.clone(), h).unwrap();
    let path = write_doc(&dir, "mp.json", &Document { field: doc.field, structure: Structure::MatchedPair(mp) });
    assert_eq!(code(&hopfpi(&["validate", p(&path)])), 0);
    let out = hopfpi(&["construct", "mp-to-brace", "--mp", p(&path)]);
    assert_eq!(code(&out), 1);
    assert!(text(&out).contains("a∘b = (a1⇀b1)∘(a2↼b2)"), "{}", text(&out));
    assert!(!String::from_utf8_lossy(&out.stdout).contains("format_version"));
}

#[test]
fn non_abelian_grading_gate_names_the_hypothesis() {
    let dir = TempDir::new().unwrap();
    let doc = load("groups/s3.json");
    let Structure::Group(g) = doc.structure else { panic!() };
    let h = group_algebra(Field::Rational, &GroupHom::identity(g.group.clone()));
    let rb = hopfpi::rota_baxter::antipode_rb(&h).unwrap();
    let structure = Structure::RotaBaxter { carrier: h, operator: rb.operator().clone() };
    let path = write_doc(&dir, "rb.json", &Document { field: Field::Rational, structure });
    let out = hopfpi(&["construct", "brace-from-rb", "--rb", p(&path)]);
    assert_eq!(code(&out), 1);
    assert!(text(&out).contains("requires abelian π"), "{}", text(&out));
}

#[test]
fn enumeration_commands() {
    let dir = TempDir::new().unwrap();
    let v4 = gallery("groups/v4.json");
    let out = hopfpi(&["enumerate-rb", "--group", p(&v4), "--deg", "trivial", "--oracle"]);
    assert_eq!(code(&out), 0, "{}", text(&out));
    assert!(text(&out).contains("count: 16") && text(&out).contains("oracle count: 16"));

    let z2_out = dir.path().join("z2.json");
    let out = hopfpi(&["enumerate-rb", "--group", p(&gallery("groups/z2.json")), "--deg", "trivial", "-o", p(&z2_out)]);
    assert_eq!(code(&out), 0);
    let Structure::RbEnumeration(e) = parse_document(&std::fs::read(&z2_out).unwrap()).unwrap().structure else {
        panic!()
    };
    assert!(e.tables.contains(&vec![0, 1]) && e.tables.contains(&vec![0, 0]));
    assert_eq!(code(&hopfpi(&["validate", p(&z2_out)])), 0);

    let out = hopfpi(&["enumerate-rb", "--group", p(&gallery("groups/s3.json")), "--deg", "trivial", "--bound", "10"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out).contains("exceeds bound 10"));
}

#[test]
fn ybe_command() {
    let trivial = gallery("braces/s3-sign-trivial.json");
    for n in ["2", "3"] {
        let out = hopfpi(&["ybe", p(&trivial), "--n", n]);
        assert_eq!(code(&out), 0, "{}", text(&out));
        assert!(text(&out).contains("[PASS] braid equation for c") && text(&out).contains("[PASS] braid equation for σ"));
    }
    assert_eq!(code(&hopfpi(&["ybe", p(&trivial), "--perturb"])), 1);
    assert_eq!(code(&hopfpi(&["ybe", p(&trivial), "--n", "4"])), 2);

    let dir = TempDir::new().unwrap();
    let one = group_algebra(Field::Rational, &GroupHom::to_trivial(Arc::new(FiniteGroup::trivial())));
    let path = write_doc(&dir, "one.json", &Document { field: Field::Rational, structure: Structure::Brace(trivial_brace(&one)) });
    assert_eq!(code(&hopfpi(&["ybe", p(&path)])), 0);
}

/// Every construct subcommand on gallery inputs exits 0; outputs were
/// validated before being written, and validate agrees afterwards.
#[test]
fn construct_sweep_revalidates() {
    let dir = TempDir::new().unwrap();
    let g = |rel: &str| gallery(rel).to_str().unwrap().to_string();
    let mut cases: Vec<Vec<String>> = Vec::new();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    for (rel, _) in gallery_documents().unwrap() {
        if rel.starts_with("algebras/") {
            cases.push(s(&["antipode-rb", "--hopf", &g(&rel)]));
        }
        if rel.starts_with("braces/s3-sign") || rel.starts_with("braces/v4-first") {
            cases.push(s(&["brace-to-mp", "--brace", &g(&rel)]));
            cases.push(s(&["post-hopf-from-brace", "--brace", &g(&rel)]));
        }
        if rel.starts_with("rota-baxter/") && !rel.contains("q8") && !rel.contains("d4") {
            cases.push(s(&["descendent", "--rb", &g(&rel)]));
            cases.push(s(&["brace-from-rb", "--rb", &g(&rel)]));
        }
        if rel.starts_with("matched-pairs/") {
            cases.push(s(&["bicrossed", "--mp", &g(&rel)]));
            cases.push(s(&["mp-to-brace", "--mp", &g(&rel)]));
        }
        if rel.starts_with("post-hopf/") {
            cases.push(s(&["brace-from-post-hopf", "--post-hopf", &g(&rel)]));
            cases.push(s(&["subadjacent", "--post-hopf", &g(&rel)]));
        }
    }
    cases.push(s(&["group-algebra", "--group", &g("groups/q8.json"), "--deg", "klein", "--field", "prime:5"]));
    cases.push(s(&["smash-pimod", "--action", &g("actions/v4-swap-pimod.json")]));
    cases.push(s(&["smash-modlike", "--action", &g("actions/v4-swap-modlike.json")]));
    cases.push(s(&["aut-brace", "--brace", &g("braces/s3-trivial-opposite.json"), "--autos", &g("automorphisms/s3-conjugation.json")]));
    cases.push(s(&["aut-rb", "--rb", &g("rota-baxter/s3-trivial-antipode.json"), "--autos", &g("automorphisms/s3-conjugation.json")]));
    cases.push(s(&["twist-rb", "--rb", &g("rota-baxter/s3-sign-antipode.json"), "--phi", &g("linear-maps/s3-sign-conjugation.json")]));
    cases.push(s(&["factorization-rb", "--factorization", &g("factorizations/v4-second.json")]));
    cases.push(s(&["factorization-rb", "--factorization", &g("factorizations/v4-second-degenerate.json")]));

    let mut subcommands = std::collections::BTreeSet::new();
    for (n, case) in cases.iter().enumerate() {
        let out_path = dir.path().join(format!("{n}.json"));
        let mut args = vec!["construct".to_string()];
        args.extend(case.iter().cloned());
        args.extend(["-o".to_string(), p(&out_path).to_string()]);
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = hopfpi(&argv);
        assert_eq!(code(&out), 0, "{argv:?}\n{}", text(&out));
        let check = hopfpi(&["validate", p(&out_path)]);
        assert_eq!(code(&check), 0, "{argv:?} output\n{}", text(&check));
        subcommands.insert(case[0].clone());
    }
    assert_eq!(subcommands.len(), 16, "{subcommands:?}");
}
