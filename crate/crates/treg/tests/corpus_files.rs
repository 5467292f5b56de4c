//! Pins the shipped corpus files to the builder output and validates them.

use std::path::{Path, PathBuf};
use treg::corpus::{self, CorpusFile};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn shipped_files_match_builders() {
    for (name, built) in [
        ("p1xp1.json", corpus::p1xp1_corpus()),
        ("elliptic.json", corpus::elliptic_corpus()),
        ("completions.json", corpus::completions_corpus()),
    ] {
        let path = corpus_dir().join(name);
        let shipped = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{name} missing ({e}); run `treg corpus-gen`"));
        let mut expected = serde_json::to_string_pretty(&built).unwrap();
        expected.push('\n');
        assert_eq!(shipped, expected, "{name} drifted from the builders");
    }
}

#[test]
fn shipped_files_validate() {
    for name in ["p1xp1.json", "elliptic.json", "completions.json"] {
        let file = CorpusFile::load(&corpus_dir().join(name)).unwrap();
        assert_eq!(file.schema_version, corpus::SCHEMA_VERSION);
    }
}

#[test]
fn wrong_schema_version_rejected() {
    let mut file = corpus::p1xp1_corpus();
    file.schema_version = 99;
    assert!(file.validate().is_err());
}
