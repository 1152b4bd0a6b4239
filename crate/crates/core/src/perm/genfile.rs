//! Generator files: one cycle-notation permutation per line.
//!
//! ```text
//! # M11
//! degree 11
//! (1,2,3,4,5,6,7,8,9,10,11)
//! (3,7,11,8)(4,10,5,6)
//! ```
//!
//! `#` starts a comment, blank lines are ignored, and an optional leading
//! `degree N` line fixes the degree (otherwise the largest point mentioned).

use std::fmt::Write as _;
use std::path::Path;

use super::{PermError, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GeneratorFile {
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut degree = None;
        let mut lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() || !lines.is_empty() {
                    return Err(PermError::Syntax(format!(
                        "line {}: `degree` must come before any generator",
                        lineno + 1
                    )));
                }
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Syntax(format!("line {}: bad degree {:?}", lineno + 1, rest.trim())))?;
                degree = Some(n);
                continue;
            }
            lines.push((lineno + 1, line));
        }
        let degree = degree.unwrap_or_else(|| lines.iter().map(|(_, l)| Permutation::max_point(l)).max().unwrap_or(0));
        let generators = lines
            .iter()
            .map(|(n, l)| {
                Permutation::parse(l, degree).map_err(|e| match e {
                    PermError::Syntax(m) => PermError::Syntax(format!("line {n}: {m}")),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { degree, generators })
    }

    pub fn read(path: &Path) -> Result<Self, PermError> {
        let text = std::fs::read_to_string(path).map_err(|e| PermError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Renders the file, with optional leading comment lines.
    pub fn render(&self, comments: &[&str]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "degree {}", self.degree);
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}
