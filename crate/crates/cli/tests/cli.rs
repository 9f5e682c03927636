use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn irrgen(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrgen"))
        .args(args)
        .current_dir(dir)
        .env_remove("IRRGEN_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(args, dir.path());
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    assert_eq!(stdout(&o), golden(name), "{args:?}");
}

#[test]
fn goldens() {
    check_golden(&["--machine", "verify", "M11"], "verify_m11.txt");
    check_golden(&["--machine", "bounds", "M11", "--m-lower", "5"], "bounds_m11.txt");
    check_golden(&["--machine", "dihedral", "M11"], "dihedral_m11.txt");
    check_golden(&["--machine", "oracle", "symmetric(4)", "--classes"], "oracle_s4.txt");
    check_golden(&["--machine", "classes", "M11"], "classes_m11.txt");
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(&["verify", "M12"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("order 7,920").count(), 6);

    let shipped = stdout(&irrgen(&["--machine", "verify", "M11"], dir.path()));
    assert!(shipped.contains("overall=PASS"));
    let text = irredundant::catalog::shipped_certificates()[0].to_string();
    let last = text.lines().last().unwrap().to_string();
    fs::write(dir.path().join("dup.cert"), format!("{text}{last}\n")).unwrap();
    let o = irrgen(&["verify", "dup.cert"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("irredundant: FAIL"));

    fs::write(dir.path().join("bad.cert"), "group M11\nnonsense here\n").unwrap();
    let o = irrgen(&["verify", "bad.cert"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(irrgen(&["verify", "missing.cert"], dir.path()).status.code(), Some(2));
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(
        &["--machine", "search", "M11", "--size", "5", "--pool-order", "2", "--out", "m11.cert"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificates=1"));
    let o = irrgen(&["--machine", "verify", "m11.cert"], dir.path());
    assert_eq!(o.status.code(), Some(0));

    let o = irrgen(
        &["search", "M11", "--size", "7", "--pool-order", "2", "--limit", "10^6", "--progress-every", "0"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stop: limit-reached"));

    let o = irrgen(&["search", "M12", "--size", "6", "--tails", "7"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = irrgen(&["search", "M11", "--size", "5", "--class", "9Z"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = irrgen(&["search", "M11", "--size", "5", "--class", "2A", "--pool-order", "2"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_with_generators_and_progress() {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(
        &[
            "search", "S5", "--gens", "(1,2,3,4,5);(1,2)", "--degree", "5", "--size", "4",
            "--progress-every", "10", "--max-certs", "3", "--out", "s5.cert",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("  S5  "));
    assert!(dir.path().join("s5.cert").is_file());
    assert!(dir.path().join("s5-2.cert").is_file());
    let o = irrgen(
        &["--machine", "search", "S5", "--gens", "(1,2,3,4,5);(1,2)", "--degree", "5", "--size", "5", "--progress-every", "0"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("exhaustive=true"));
}

#[test]
fn bounds_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(&["--machine", "bounds", "Aut(S6)"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("i_exact=5\n"));
    let o = irrgen(&["bounds", "M12", "--m-lower", "6"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("m_upper=6") && text.contains("i_exact=6") && text.contains("verdict=strongly-flat"));
    assert!(text.contains("S5xZ2 x396"));

    fs::write(dir.path().join("bad.table"), "table G order 10\nrow A order=3 count=1 solvable=no m=1 i=1\n").unwrap();
    assert_eq!(irrgen(&["bounds", "bad.table"], dir.path()).status.code(), Some(2));
}

#[test]
fn data_dir_lookup() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("tables")).unwrap();
    fs::write(
        dir.path().join("tables/toy.table"),
        "table Toy order 6\nrow Z3 order=3 count=1 solvable=yes m=1 i=1\nrow Z2 order=2 count=3 solvable=yes m=1 i=1\n",
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_irrgen"))
        .args(["--machine", "bounds", "Toy", "--m-lower", "2"])
        .env("IRRGEN_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m_upper=2\n"));
}

#[test]
fn oracle_and_classes() {
    let dir = tempfile::tempdir().unwrap();
    let o = irrgen(&["oracle", "symmetric(4)"], dir.path());
    assert!(stdout(&o).contains("m        3"));
    assert_eq!(irrgen(&["oracle", "symmetric(6)"], dir.path()).status.code(), Some(2));
    assert_eq!(irrgen(&["oracle", "torus(3)"], dir.path()).status.code(), Some(2));

    let o = irrgen(&["classes", "M12"], dir.path());
    assert!(stdout(&o).contains("order 2 total 891 (classes 2A + 2B)"));
    assert!(stdout(&o).contains("95,040"));
    let o = irrgen(&["dihedral", "M12"], dir.path());
    assert!(stdout(&o).starts_with("95,040  [2,2,2,2,2,2,3,3,3,5,11]\nyes:  2\n"));
    assert_eq!(irrgen(&["dihedral", "M99"], dir.path()).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--machine", "search", "M11", "--size", "5", "--seed", "3", "--out", "a.cert"];
    let a = stdout(&irrgen(&args, dir.path()));
    let first = fs::read_to_string(dir.path().join("a.cert")).unwrap();
    let b = stdout(&irrgen(&args, dir.path()));
    assert_eq!(a, b);
    assert_eq!(first, fs::read_to_string(dir.path().join("a.cert")).unwrap());
}
