#![allow(dead_code)]

use std::path::PathBuf;

use goodcomp::laurent::parse_system;
use goodcomp::LaurentPolynomial;

pub struct CorpusEntry {
    pub name: String,
    pub rank: usize,
    pub system: Vec<LaurentPolynomial>,
    pub codim: usize,
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "sys"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let codim = text
                .lines()
                .find_map(|l| l.strip_prefix("# codim:"))
                .expect("codim header")
                .trim()
                .parse()
                .unwrap();
            let (rank, system) = parse_system(&text).unwrap();
            CorpusEntry {
                name: p.file_stem().unwrap().to_string_lossy().into_owned(),
                rank,
                system,
                codim,
            }
        })
        .collect()
}

pub fn poly(s: &str, rank: usize) -> LaurentPolynomial {
    LaurentPolynomial::parse_with_rank(s, rank).unwrap()
}
