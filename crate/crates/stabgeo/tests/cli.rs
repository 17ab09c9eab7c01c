use std::process::Command;

fn stabgeo(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stabgeo")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("stabgeo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn synth_prints_a_one_based_circuit() {
    let bell = file("bell.txt", "XX\nZZ\n");
    assert_eq!(stabgeo(&["synth", &bell]), (0, "CNOT 1 2\nH 1\n# maps to |00>\n".into()));
}

#[test]
fn table_verification_passes() {
    assert_eq!(stabgeo(&["enum", "--n", "2", "--verify"]).0, 0);
}

#[test]
fn histogram_csv() {
    let (code, out) = stabgeo(&["hist", "--n", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,k,count,fraction\n2,1,12,0.203390\n2,2,32,0.542373\n2,orth,15,0.254237\n");
}

#[test]
fn exit_codes() {
    assert_eq!(stabgeo(&["canon", &file("bad.txt", "XZQ\n")]).0, 2);
    assert_eq!(stabgeo(&["canon"]).0, 1);
    assert_eq!(stabgeo(&["nonsense"]).0, 1);
    let mixed = [file("a.txt", "XX\nZZ\n"), file("b.txt", "-ZI\nIZ\n")];
    assert_eq!(stabgeo(&["wedge", &mixed[0], &mixed[1]]).0, 3);
}

#[test]
fn measurement_is_seeded() {
    let bell = file("bell2.txt", "XX\nZZ\n");
    let runs: Vec<_> = (0..3).map(|_| stabgeo(&["measure", &bell, "--qubit", "2", "--seed", "5"])).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
