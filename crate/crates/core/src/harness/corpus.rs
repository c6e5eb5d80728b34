//! The bundled example corpus and a runner that checks our solvers
//! against it.
//!
//! Each entry is a directory holding `input.lp` or `input.thy`,
//! `expected.json` (semantics tag to list of world views, a world view being
//! a list of atom-name lists) and `meta.json`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faeel::faeel_world_views_program;
use crate::ht::Interpretation;
use crate::kd45::BeliefView;
use crate::syntax::{parse_program_with, parse_theory, Signature, Theory};

use super::properties::{world_views, Semantics};

/// Result columns published for semantics we do not implement.
pub const REFERENCE_TAGS: [&str; 4] = ["g11", "k15", "f15", "s17"];

pub type ViewNames = Vec<Vec<String>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Program,
    Theory,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub source_ref: String,
    #[serde(default)]
    pub reference_only: Vec<String>,
    /// Tags whose expected views need only be contained in the result.
    #[serde(default)]
    pub contains: Vec<String>,
    /// Atoms to place first in the signature.
    #[serde(default)]
    pub atoms: Vec<String>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub kind: InputKind,
    pub input: String,
    pub meta: Meta,
    pub expected: BTreeMap<String, Vec<ViewNames>>,
}

impl CorpusEntry {
    pub fn theory(&self) -> Result<Theory> {
        let hint = Signature::from_names(self.meta.atoms.iter().cloned());
        match self.kind {
            InputKind::Program => Ok(parse_program_with(&self.input, Some(&hint))?.to_theory()),
            InputKind::Theory => parse_theory(&self.input, Some(&hint)),
        }
    }

    pub fn is_asserted(&self, tag: &str) -> bool {
        !REFERENCE_TAGS.contains(&tag) && !self.meta.reference_only.iter().any(|t| t == tag)
    }
}

pub fn bundled_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))
}

pub fn load_entry(dir: &Path) -> Result<CorpusEntry> {
    let id = dir
        .file_name()
        .and_then(|n| n.to_str())
        .ok_or_else(|| Error::Corpus(format!("bad entry path {}", dir.display())))?
        .to_string();
    let (kind, input_path) = if dir.join("input.lp").exists() {
        (InputKind::Program, dir.join("input.lp"))
    } else if dir.join("input.thy").exists() {
        (InputKind::Theory, dir.join("input.thy"))
    } else {
        return Err(Error::Corpus(format!("{id}: no input.lp or input.thy")));
    };
    let input = fs::read_to_string(&input_path)?;
    let meta: Meta = read_json(&dir.join("meta.json"))?;
    let expected: BTreeMap<String, Vec<ViewNames>> = read_json(&dir.join("expected.json"))?;
    for tag in expected.keys() {
        if !REFERENCE_TAGS.contains(&tag.as_str()) && tag.parse::<Semantics>().is_err() {
            return Err(Error::Corpus(format!("{id}: unknown semantics tag `{tag}`")));
        }
    }
    Ok(CorpusEntry { id, kind, input, meta, expected })
}

/// All entries under `dir`, sorted by id.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut dirs: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_dir())
        .collect();
    dirs.sort();
    dirs.iter().map(|d| load_entry(d)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusRow {
    pub id: String,
    pub semantics: String,
    pub asserted: bool,
    pub expected: Vec<ViewNames>,
    pub actual: Option<Vec<ViewNames>>,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CorpusReport {
    pub rows: Vec<CorpusRow>,
}

impl CorpusReport {
    pub fn failures(&self) -> impl Iterator<Item = &CorpusRow> {
        self.rows.iter().filter(|r| r.asserted && !r.passed)
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let status = match (r.asserted, r.passed) {
                (false, _) => "ref ",
                (true, true) => "pass",
                (true, false) => "FAIL",
            };
            let _ = write!(out, "{status} {:<28} {:<12} expected {}", r.id, r.semantics, show(&r.expected));
            if let Some(actual) = &r.actual {
                if r.asserted && !r.passed {
                    let _ = write!(out, " got {}", show(actual));
                }
            }
            if let Some(e) = &r.error {
                let _ = write!(out, " error: {e}");
            }
            out.push('\n');
        }
        out
    }
}

fn show(views: &[ViewNames]) -> String {
    if views.is_empty() {
        return "none".into();
    }
    views
        .iter()
        .map(|v| {
            let sets: Vec<String> = v.iter().map(|s| format!("{{{}}}", s.join(","))).collect();
            format!("[{}]", sets.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn canonical(views: &[ViewNames], sig: &Signature) -> Result<Vec<BeliefView>> {
    let mut out = Vec::with_capacity(views.len());
    for v in views {
        let mut worlds = Vec::with_capacity(v.len());
        for set in v {
            let names = set.iter().map(String::as_str);
            let i = Interpretation::from_names(sig, names)
                .ok_or_else(|| Error::Corpus(format!("unknown atom in {set:?}")))?;
            worlds.push(i);
        }
        out.push(BeliefView::new(worlds)?);
    }
    out.sort();
    Ok(out)
}

fn names(views: &[BeliefView], sig: &Signature) -> Vec<ViewNames> {
    views.iter().map(|v| v.to_names(sig)).collect()
}

/// Checks one entry. Program entries also check the founded-G91 route
/// for FAEEL as a row of its own.
pub fn run_entry(entry: &CorpusEntry) -> Result<Vec<CorpusRow>> {
    let g = entry.theory()?;
    let sig = &g.signature;
    let mut rows = Vec::new();
    for (tag, expected) in &entry.expected {
        let asserted = entry.is_asserted(tag);
        let mut row = CorpusRow {
            id: entry.id.clone(),
            semantics: tag.clone(),
            asserted,
            expected: expected.clone(),
            actual: None,
            passed: false,
            error: None,
        };
        let want = canonical(expected, sig)?;
        if asserted {
            let semantics: Semantics = tag.parse()?;
            let mut targets = vec![(tag.clone(), world_views(&g, semantics))];
            if semantics == Semantics::Faeel && entry.kind == InputKind::Program {
                let p = parse_program_with(&entry.input, Some(&Signature::from_names(entry.meta.atoms.iter().cloned())))?;
                targets.push((format!("{tag}(fast)"), faeel_world_views_program(&p)));
            }
            let contains = entry.meta.contains.iter().any(|t| t == tag);
            for (label, got) in targets {
                let mut r = row.clone();
                r.semantics = label;
                match got {
                    Ok(got) => {
                        r.passed = if contains { want.iter().all(|w| got.contains(w)) } else { got == want };
                        r.actual = Some(names(&got, sig));
                    }
                    Err(e) => r.error = Some(e.to_string()),
                }
                rows.push(r);
            }
        } else {
            row.passed = true;
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn run_corpus(dir: &Path) -> Result<CorpusReport> {
    let mut report = CorpusReport::default();
    for entry in load_corpus(dir)? {
        report.rows.extend(run_entry(&entry)?);
    }
    Ok(report)
}
