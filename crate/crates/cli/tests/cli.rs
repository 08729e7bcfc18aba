use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use msd_core::corpus::{compute_stats, read_vertical};
use msd_core::data;
use msd_core::orthography::normalize;
use msd_core::tagset::count_msds;

fn msd(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_msd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn msd");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn describe_with_hub_tagset() {
    let out = msd(&["tag", "describe", "Ncms", "--tagset", "hub"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PoS: Noun, Type: common, Gender: masculine, Number: singular\n"
    );
}

#[test]
fn count_matches_library() {
    let out = msd(&["tag", "count"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Interjection\t1\n"));

    let spec = data::persian_tagset();
    let counts = count_msds(&spec, &data::persian_constraints(&spec));
    let mut expected = String::new();
    for (c, n) in &counts.per_category {
        expected.push_str(&format!("{c}\t{n}\n"));
    }
    expected.push_str(&format!("Total\t{}\n", counts.total));
    assert_eq!(text, expected);
}

#[test]
fn count_without_constraints() {
    let out = msd(&["tag", "count", "--constraints", "none"], "");
    assert!(stdout(&out).contains("Adjective\t48\n"));
}

#[test]
fn parse_unknown_category_fails_with_one() {
    let out = msd(&["tag", "parse", "Q"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown category code"));
}

#[test]
fn parse_prints_features() {
    let out = msd(&["tag", "parse", "Nc-sgn"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PoS\tNoun\nType\tcommon\nNumber\tsingular\nCase\tgenitive\nDefiniteness\tno\n"
    );
}

#[test]
fn encode_and_errors() {
    let out = msd(
        &[
            "tag",
            "encode",
            "Noun",
            "Type=common",
            "Number=singular",
            "Case=genitive",
            "Definiteness=no",
        ],
        "",
    );
    assert_eq!(stdout(&out), "Nc-sgn\n");

    let out = msd(&["tag", "encode", "Noun", "Type=abstract"], "");
    assert_eq!(out.status.code(), Some(1));
    let out = msd(&["tag", "encode", "Noun", "Type"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    let out = msd(&["tag", "validate", "Nc-sgn"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Nc-sgn\tmeaningful\n");

    let out = msd(&["tag", "validate", "Nz-sgn"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown value code 'z'"));

    let out = msd(&["tag", "validate", "Np-p-n"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("violates\tFORBID Noun Type=proper & Number=plural"));
}

#[test]
fn enumerate_category() {
    let out = msd(&["tag", "enumerate", "Conjunction"], "");
    assert_eq!(stdout(&out), "Ccc\nCcs\nCsc\nCss\n");
    let out = msd(&["tag", "enumerate", "Gerund"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(msd(&["bogus"], "").status.code(), Some(2));
    assert_eq!(msd(&["tag"], "").status.code(), Some(2));
    assert_eq!(msd(&["tag", "parse"], "").status.code(), Some(2));
    assert_eq!(
        msd(&["tag", "count", "--tagset", "/no/such/file"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(msd(&["--help"], "").status.code(), Some(0));
}

#[test]
fn custom_tagset_and_constraints() {
    let dir = tempfile::tempdir().unwrap();
    let tagset = write(
        dir.path(),
        "t.tagset",
        "CATEGORY X X\nATTR 1 A\nVAL a a\nVAL b b\n",
    );
    let rules = write(dir.path(), "t.rules", "FORBID X A=-\n");
    let out = msd(&["tag", "enumerate", "X", "--tagset", &tagset], "");
    assert_eq!(stdout(&out), "X\nXa\nXb\n");
    let out = msd(
        &[
            "tag",
            "enumerate",
            "X",
            "--tagset",
            &tagset,
            "--constraints",
            &rules,
        ],
        "",
    );
    assert_eq!(stdout(&out), "Xa\nXb\n");

    let bad = write(dir.path(), "bad.rules", "FORBID Noun Type=-\n");
    let out = msd(
        &["tag", "count", "--tagset", &tagset, "--constraints", &bad],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown category 'Noun'"));
}

#[test]
fn normalize_inserts_zwnj() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "in.txt", "کتاب ها");
    let out = msd(&["normalize", &file], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "کتاب\u{200C}ها");
}

#[test]
fn normalize_fixed_point_and_report() {
    let text = "کتاب\u{200C}ها را می\u{200C}خوانم.\n";
    let out = msd(&["normalize", "-"], text);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, text.as_bytes());

    let out = msd(&["normalize", "--report"], "مي روم");
    assert_eq!(stdout(&out), "می\u{200C}روم");
    assert_eq!(
        stderr(&out),
        "char_substitutions\t1\nzwnj_insertions\t1\n1\t1\tcharmap:U+064A\n2\t1\tzwnj:prefix\n"
    );
    let (lib, _) = normalize("مي روم", &data::charmap(), &data::affixes());
    assert_eq!(stdout(&out), lib);
}

#[test]
fn normalize_missing_file() {
    let out = msd(&["normalize", "/no/such/input.txt"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tokenize_lines() {
    let out = msd(&["tokenize"], "کتاب\u{200C}ها رفتند.");
    assert_eq!(stdout(&out), "کتاب\u{200C}ها\nرفتند\n.\n");
    assert_eq!(stdout(&msd(&["tokenize"], "")), "");

    let out = msd(&["tokenize", "--sentences"], "الف. ب؟");
    assert_eq!(stdout(&out), "الف\n.\n\nب\n؟\n");
    assert_eq!(stdout(&out).matches("\n\n").count(), 1);

    let out = msd(&["tokenize", "--offsets"], "a ۱۲");
    assert_eq!(stdout(&out), "a\tword\t0\t1\n۱۲\tnumber\t2\t4\n");
    assert_eq!(msd(&["tokenize", "/no/such"], "").status.code(), Some(2));
}

const CORPUS: &str = "<doc id=\"d1\">\n<p>\n<s>\nکتاب\tکتاب\tNc-s-n\nرا\tرا\tSps\nخواندم\tخواندن\n.\n</s>\n</p>\n</doc>\n";

#[test]
fn corpus_stats() {
    let out = msd(&["corpus", "stats"], "");
    assert_eq!(
        stdout(&out),
        "Tokens\t0\nParagraphs\t0\nSentences\t0\nLemmas\t0\nTypes\t0\nDistinctMSDs\t0\n"
    );
    let out = msd(&["corpus", "stats", "-"], CORPUS);
    assert_eq!(
        stdout(&out),
        compute_stats(&read_vertical(CORPUS).unwrap()).to_string()
    );
    assert!(stdout(&out).starts_with("Tokens\t4\n"));

    let out = msd(&["corpus", "stats"], "<s>\n</s>\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn corpus_validate() {
    let out = msd(&["corpus", "validate"], CORPUS);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Diagnostics\t0\nObservedMSDs\t2\n");

    let planted = CORPUS.replace("Sps", "Spx");
    let out = msd(&["corpus", "validate"], &planted);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("d1\tp1\ts1\tt2\tرا\tSpx\t"), "{text}");
    assert!(text.contains("Diagnostics\t1\n"));
}

#[test]
fn corpus_annotate() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", "کتاب\u{200C}ها\tکتاب\tNc-p\n");
    let input = write(dir.path(), "story.txt", "کتاب ها");
    let out = msd(&["corpus", "annotate", &input, "--lexicon", &lex], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "<doc id=\"story\">\n<p>\n<s>\nکتاب\u{200C}ها\tکتاب\tNc-p\n</s>\n</p>\n</doc>\n"
    );

    let bad = write(dir.path(), "bad.tsv", "x\ty\n");
    let out = msd(&["corpus", "annotate", &input, "--lexicon", &bad], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn output_is_deterministic() {
    let a = msd(&["tag", "enumerate", "Verb"], "");
    let b = msd(&["tag", "enumerate", "Verb"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 636);
}
