use hoch::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use hoch::Element;

fn hoch(args: &[&str]) -> hoch::cli::Outcome {
    run(std::iter::once("hoch").chain(args.iter().copied()))
}

#[test]
fn worked_succ_example() {
    let out = hoch(&["op", "succ", "| | |", "|"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "| | [|,|] + | [|,|,|] + [|,|,|,|]\n");
}

#[test]
fn coproduct_of_generator_is_zero() {
    assert_eq!(hoch(&["coproduct", "|"]).stdout, "0\n");
    assert_eq!(hoch(&["coproduct", "| |"]).stdout, "| (x) |\n");
    assert_eq!(hoch(&["coproduct", "-| | + [|,|]"]).stdout, "0\n");
    assert_eq!(
        hoch(&["coproduct", "--iterate", "2", "| | |"]).stdout,
        "| (x) | (x) |\n"
    );
    assert_eq!(
        hoch(&["coproduct", "--unital", "1 + |"]).stdout,
        "1 (x) 1 + 1 (x) | + | (x) 1\n"
    );
}

#[test]
fn dims_table_rows() {
    let out = hoch(&["dims", "--max-degree", "5", "--tsv"]);
    assert_eq!(out.code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split('\t').collect())
        .collect();
    let forests: Vec<(&str, &str)> = rows.iter().map(|r| (r[0], r[4])).collect();
    assert_eq!(
        forests,
        [("1", "1"), ("2", "2"), ("3", "6"), ("4", "22"), ("5", "90")]
    );
    assert!(rows
        .iter()
        .all(|r| r[4] == r[5] && r[5] == r[6] && r[1] == r[2] && r[2] == r[3]));
}

#[test]
fn enumeration_and_brackets() {
    assert_eq!(
        hoch(&["enum", "trees", "--leaves", "4"])
            .stdout
            .lines()
            .count(),
        11
    );
    assert_eq!(
        hoch(&["enum", "forests", "--leaves", "4"])
            .stdout
            .lines()
            .count(),
        22
    );
    assert_eq!(
        hoch(&["--alphabet", "2", "enum", "trees", "--leaves", "2"])
            .stdout
            .lines()
            .count(),
        4
    );
    assert_eq!(hoch(&["bracket", "|", "|"]).stdout, "-| | + [|,|]\n");
    assert_eq!(hoch(&["filtration", "| | |"]).stdout, "3\n");
    assert_eq!(hoch(&["filtration", "0"]).stdout, "zero-element\n");
    assert_eq!(
        hoch(&["primitive-basis", "--degree", "4"])
            .stdout
            .lines()
            .count(),
        11
    );
}

#[test]
fn printed_elements_reparse() {
    for args in [
        vec!["op", "succ", "2/3*| - [|,|]", "| [|,|]"],
        vec!["bracket", "|", "[|,|] - | |", "|"],
        vec!["op", "star", "-1/2*[|,|]", "3*| |"],
    ] {
        let out = hoch(&args);
        let printed = out.stdout.trim();
        let reparsed: Element = printed.parse().unwrap();
        assert_eq!(reparsed.to_string(), printed);
    }
}

#[test]
fn errors_map_to_exit_codes() {
    let out = hoch(&["op", "star", "[|]", "|"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position 0"), "{}", out.stderr);
    assert_eq!(hoch(&["op", "star", "|"]).code, EXIT_USAGE);
    assert_eq!(
        hoch(&["enum", "trees", "--leaves", "3", "--bogus"]).code,
        EXIT_USAGE
    );
    assert_eq!(hoch(&["coproduct", "|", "--iterate", "0"]).code, EXIT_USAGE);
    assert_eq!(
        hoch(&["verify", "--max-degree", "2", "--suite", "nope"]).code,
        EXIT_USAGE
    );
    assert_eq!(hoch(&["coproduct", "|1"]).code, EXIT_USAGE);
}

#[test]
fn from_file_batch() {
    let dir = tempdir();
    let path = dir.join("exprs.txt");
    std::fs::write(&path, "|\n\n| |\n[|,|] - | |\n").unwrap();
    let out = hoch(&["coproduct", "--from-file", path.to_str().unwrap()]);
    assert_eq!(out.stdout, "0\n| (x) |\n0\n");
    let out = hoch(&["bracket", "--from-file", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    std::fs::remove_dir_all(dir).ok();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hoch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_exit_status() {
    let ok = hoch(&["verify", "--max-degree", "4", "--samples", "50"]);
    assert_eq!(ok.code, EXIT_OK, "{}", ok.stdout);
    assert!(ok.stdout.ends_with("all checks passed\n"));
    let bad = hoch(&[
        "verify",
        "--max-degree",
        "3",
        "--suite",
        "compat",
        "--flip-cross-term",
    ]);
    assert_eq!(bad.code, EXIT_VERIFY_FAILED);
    assert!(bad.stdout.contains("FAIL"));
}
