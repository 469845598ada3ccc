use std::process::{Command, Output};

fn rowmotion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rowmotion"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn f4_orbit_summary() {
    let out = rowmotion(&["orbits", "F4", "--convention", "paper-f4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert!(
        text.ends_with("#AN=105 ord=12 orbits=11 expected=105\n"),
        "{text}"
    );
}

#[test]
fn orbits_json_shape() {
    let out = rowmotion(&["orbits", "C3", "--variant", "short", "--format", "json"]);
    assert_eq!(code(&out), 0);
    // One JSON object per orbit, then a summary object.
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let (summary, rows) = lines.split_last().unwrap();
    assert_eq!(summary["ord"], 5);
    assert_eq!(summary["antichains"], 10);
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row["size"], 5);
        assert!(row["mean"].as_str().unwrap().contains('/'));
        assert!(row["representative"].is_array());
    }
}

#[test]
fn custom_poset_file() {
    let p2 = concat!(env!("CARGO_MANIFEST_DIR"), "/data/p2.poset");
    let out = rowmotion(&["orbits", "--custom", p2]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ord=112"), "{text}");
    assert!(text.contains("29/16") && text.contains("12/7"));
}

#[test]
fn rowmotion_powers_in_type_a() {
    let run = |power: &str| {
        let out = rowmotion(&["rowmotion", "A3", "1-1", "--power", power]);
        assert_eq!(code(&out), 0);
        stdout(&out).trim().to_string()
    };
    assert_eq!(run("1"), "2-3");
    assert_eq!(run("3"), "1-1,2-2");
    assert_eq!(run("4"), "3-3");
    assert_eq!(run("-1"), "2-2,3-3");
    // Order 8 on the full A3 poset.
    assert_eq!(run("8"), "1-1");
}

#[test]
fn rowmotion_from_empty_in_paper_numbering() {
    let out = rowmotion(&["rowmotion", "F4", "--empty", "--convention", "paper-f4"]);
    assert_eq!(stdout(&out).trim(), "2432");
    let back = rowmotion(&[
        "rowmotion",
        "F4",
        "2432",
        "--power",
        "-1",
        "--convention",
        "paper-f4",
    ]);
    assert_eq!(stdout(&back).trim(), "{}");
}

#[test]
fn oy_and_star() {
    let out = rowmotion(&["oy", "3", "1-1,3-3"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "2"));
    let out = rowmotion(&["oy", "4", "1-1,2-2,3-3,4-4"]);
    assert_eq!(stdout(&out).trim(), "0");
    let out = rowmotion(&["oy", "3", "1-1,2-3", "--form", "both"]);
    assert_eq!(stdout(&out).trim(), "ideal=1 difference=1");
    let out = rowmotion(&["star", "3", "1-1"]);
    assert_eq!(stdout(&out).trim(), "2-2,3-3");
}

#[test]
fn verify_single_claim_and_list() {
    let out = rowmotion(&["verify", "--claim", "appendix-f4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS appendix-f4"));

    let out = rowmotion(&[
        "verify", "--claim", "conj-2.4", "--type", "C3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["scope"], "C3/short");

    let out = rowmotion(&["verify", "--list"]);
    assert!(stdout(&out)
        .lines()
        .any(|l| l.starts_with("weighted-oy-cn\t")));
}

#[test]
fn failing_claim_exits_one_with_witness() {
    let out = rowmotion(&[
        "verify",
        "--claim",
        "weighted-oy-cn",
        "--type",
        "C2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "FAIL");
    assert!(v["evidence"]["witness"]["antichain"].is_array());
}

#[test]
fn isomorphic_answers() {
    assert_eq!(code(&rowmotion(&["isomorphic", "B3", "C3"])), 0);
    assert_eq!(code(&rowmotion(&["isomorphic", "A3/no-simple", "A2"])), 0);
    assert_eq!(code(&rowmotion(&["isomorphic", "A3", "B2"])), 1);
}

#[test]
fn antichain_listing() {
    let out = rowmotion(&["antichains", "A2", "--list", "--format", "json"]);
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "[]");
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(code(&rowmotion(&[])), 2);
    assert_eq!(code(&rowmotion(&["orbits", "Q9"])), 2);
    assert_eq!(code(&rowmotion(&["verify", "--claim", "no-such-claim"])), 2);
    assert_eq!(code(&rowmotion(&["star", "B3", "1-1"])), 2);
    assert_eq!(code(&rowmotion(&["rowmotion", "A3", "1-1,1-2"])), 2);

    // Unreadable or malformed poset files.
    let dir = std::env::temp_dir().join(format!("rowmotion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cyclic = dir.join("cyclic.poset");
    std::fs::write(&cyclic, "a < b\nb < a\n").unwrap();
    let garbled = dir.join("garbled.poset");
    std::fs::write(&garbled, "a < b < c\n").unwrap();
    for path in [&cyclic, &garbled] {
        let out = rowmotion(&["orbits", "--custom", path.to_str().unwrap()]);
        assert_eq!(code(&out), 3, "{}", path.display());
        assert!(!out.stderr.is_empty());
    }
    // A path that cannot be opened is an argument error.
    let missing = dir.join("missing.poset");
    assert_eq!(
        code(&rowmotion(&[
            "orbits",
            "--custom",
            missing.to_str().unwrap()
        ])),
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["orbits", "E6", "--variant", "no-simple", "--format", "tsv"][..],
        &["verify", "--claim", "conj-2.1", "--format", "json"],
    ] {
        assert_eq!(rowmotion(args).stdout, rowmotion(args).stdout);
    }
}
