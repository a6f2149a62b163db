//! Round-trip stability of the interchange format, plus the exit-code
//! contract of the binary.

use std::process::Command;

fn gca() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gca"))
}

/// Every legal (family, d, 2l, central) combination with d <= 3, 2l <= 6,
/// as CLI flag triples.
fn legal_grid() -> Vec<(&'static str, u32, i64, &'static str)> {
    let mut grid = Vec::new();
    for family in ["gca", "standard", "exotic-super", "n1"] {
        for d in 1..=3u32 {
            if family == "exotic-super" && d != 2 {
                continue;
            }
            for tl in 1..=6i64 {
                grid.push((family, d, tl, "none"));
                if tl % 2 == 1 {
                    grid.push((family, d, tl, "mass"));
                }
                if d == 2 && tl % 2 == 0 {
                    grid.push((family, d, tl, "exotic"));
                }
            }
        }
    }
    grid
}

#[test]
fn criterion_7_round_trip() {
    let dir = std::env::temp_dir().join(format!("gca-roundtrip-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut failures = Vec::new();
    for (family, d, tl, central) in legal_grid() {
        let first = dir.join(format!("{family}-{d}-{tl}-{central}.json"));
        let second = dir.join(format!("{family}-{d}-{tl}-{central}.2.json"));
        let status = gca()
            .args([
                "build",
                "--family",
                family,
                "--d",
                &d.to_string(),
                "--two-ell",
                &tl.to_string(),
                "--central",
                central,
                "--out",
                first.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        if !status.success() {
            failures.push(format!("{family} d={d} 2l={tl} {central}: build failed"));
            continue;
        }
        let status = gca()
            .args([
                "export",
                "--input",
                first.to_str().unwrap(),
                "--out",
                second.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        if !status.success() {
            failures.push(format!(
                "{family} d={d} 2l={tl} {central}: re-export failed"
            ));
            continue;
        }
        let a = std::fs::read(&first).unwrap();
        let b = std::fs::read(&second).unwrap();
        if a != b {
            failures.push(format!("{family} d={d} 2l={tl} {central}: bytes differ"));
        }
    }
    std::fs::remove_dir_all(&dir).ok();
    println!(
        "criterion 7 (round trip): {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "{}", failures.join("; "));
}

#[test]
fn illegal_spec_exits_2() {
    let out = gca()
        .args([
            "build",
            "--family",
            "exotic-super",
            "--d",
            "3",
            "--two-ell",
            "2",
            "--central",
            "none",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("d = 2"), "diagnostic was: {stderr}");
}

#[test]
fn generator_count_example() {
    let out = gca()
        .args([
            "build",
            "--family",
            "gca",
            "--d",
            "2",
            "--two-ell",
            "2",
            "--central",
            "exotic",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["generators"].as_array().unwrap().len(), 11);
}

#[test]
fn n1_mass_builds() {
    let status = gca()
        .args([
            "build",
            "--family",
            "n1",
            "--d",
            "1",
            "--two-ell",
            "1",
            "--central",
            "mass",
        ])
        .output()
        .unwrap()
        .status;
    assert!(status.success());
}

#[test]
fn verify_jacobi_clean_and_mutated() {
    let dir = std::env::temp_dir().join(format!("gca-mutate-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc_path = dir.join("alg.json");
    assert!(gca()
        .args([
            "build",
            "--family",
            "standard",
            "--d",
            "1",
            "--two-ell",
            "1",
            "--central",
            "mass",
            "--out",
            doc_path.to_str().unwrap(),
        ])
        .status()
        .unwrap()
        .success());

    let out = gca()
        .args(["verify", "jacobi", "--input", doc_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "clean algebra must pass");

    // Flip the sign of one structure constant: [D, H] = 2H -> -2H.
    let text = std::fs::read_to_string(&doc_path).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let brackets = doc["brackets"].as_array_mut().unwrap();
    let entry = brackets
        .iter_mut()
        .find(|b| b["left"] == "D" && b["right"] == "H")
        .unwrap();
    entry["result"][0]["coefficient"] = "-2".into();
    std::fs::write(&doc_path, serde_json::to_string(&doc).unwrap()).unwrap();

    let out = gca()
        .args([
            "verify",
            "jacobi",
            "--input",
            doc_path.to_str().unwrap(),
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "mutated algebra must fail");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let named = report["violations"].as_array().unwrap().iter().any(|v| {
        let w = v["witnesses"].as_array().unwrap();
        w.iter().any(|g| g == "D") && w.iter().any(|g| g == "H")
    });
    assert!(
        named,
        "report must name a triple containing the mutated pair"
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn appendix_trivial_verdict() {
    for tl in ["1", "2", "4"] {
        let out = gca().args(["appendix", "--two-ell", tl]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "2l = {tl}");
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(stdout.contains("verdict: trivial"), "2l = {tl}: {stdout}");
    }
}

#[test]
fn reports_are_thread_count_independent() {
    let doc = |threads: &str| {
        let out = gca()
            .env("GCA_THREADS", threads)
            .args([
                "verify",
                "jacobi",
                "--family",
                "standard",
                "--d",
                "2",
                "--two-ell",
                "3",
                "--central",
                "mass",
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(doc("1"), doc("4"));
}
