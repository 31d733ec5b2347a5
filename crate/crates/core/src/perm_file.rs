//! Text format for permutations.
//!
//! ```text
//! # optional comments
//! group: H3
//! (0,0,0) -> (0,0,0)
//! (0,0,1) -> (2,0,1)
//! ...
//! images: [0, 19, ...]
//! ```
//!
//! Either the label lines or the `images:` line may be omitted; when both are
//! present they must agree. Labels use the coordinates of
//! [`build_from_spec`](crate::group::build_from_spec).

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{build_from_spec, Elem, FiniteGroup, Label};
use crate::perm::Perm;

pub fn write_perm(g: &FiniteGroup, sigma: &Perm) -> String {
    let mut out = format!("group: {}\n", g.name());
    for x in g.elements() {
        let _ = writeln!(out, "{} -> {}", g.label(x), g.label(sigma.apply(x)));
    }
    let images: Vec<String> = sigma.images().iter().map(|i| i.to_string()).collect();
    let _ = writeln!(out, "images: [{}]", images.join(", "));
    out
}

pub fn write_perm_file(path: &Path, g: &FiniteGroup, sigma: &Perm) -> Result<()> {
    std::fs::write(path, write_perm(g, sigma))?;
    Ok(())
}

/// Parses a permutation document, building its group from the header.
pub fn read_perm(text: &str) -> Result<(FiniteGroup, Perm)> {
    let mut group: Option<FiniteGroup> = None;
    let mut from_labels: Vec<Option<Elem>> = Vec::new();
    let mut label_lines = 0usize;
    let mut compact: Option<(usize, Vec<Elem>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |reason: String| Error::Format { line: line_no, reason };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(spec) = line.strip_prefix("group:") {
            if group.is_some() {
                return Err(err("duplicate group header".into()));
            }
            let g = build_from_spec(spec.trim())?;
            from_labels = vec![None; g.order()];
            group = Some(g);
            continue;
        }
        let g = group.as_ref().ok_or_else(|| err("expected `group: <spec>` first".into()))?;
        if let Some(list) = line.strip_prefix("images:") {
            if compact.is_some() {
                return Err(err("duplicate images line".into()));
            }
            let inner = list
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| err("images must be a bracketed list".into()))?;
            let images = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<Elem>().map_err(|e| err(format!("bad index `{s}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            compact = Some((line_no, images));
            continue;
        }
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| err(format!("unrecognised line `{line}`")))?;
        let parse = |s: &str| -> Result<Elem> {
            let label: Label = s.parse().map_err(&err)?;
            g.element_by_label(&label).ok_or_else(|| err(format!("{label} is not an element of {}", g.name())))
        };
        let (x, y) = (parse(lhs)?, parse(rhs)?);
        if from_labels[x].replace(y).is_some() {
            return Err(err(format!("{} is mapped twice", g.label(x))));
        }
        label_lines += 1;
    }

    let g = group.ok_or(Error::Format { line: 0, reason: "missing `group: <spec>` header".into() })?;
    let n = g.order();
    let images = match (label_lines, compact) {
        (0, None) => return Err(Error::Format { line: 0, reason: "no mapping given".into() }),
        (0, Some((line, images))) => {
            if images.len() != n {
                return Err(Error::Format { line, reason: format!("expected {n} images, got {}", images.len()) });
            }
            images
        }
        (_, compact) => {
            if label_lines != n {
                return Err(Error::Format { line: 0, reason: format!("expected {n} label lines, got {label_lines}") });
            }
            let images: Vec<Elem> = from_labels.into_iter().map(|y| y.expect("every element mapped")).collect();
            if let Some((line, list)) = compact {
                if list != images {
                    return Err(Error::Format { line, reason: "images line disagrees with label lines".into() });
                }
            }
            images
        }
    };
    let perm = Perm::new(images)?;
    Ok((g, perm))
}

pub fn read_perm_file(path: &Path) -> Result<(FiniteGroup, Perm)> {
    read_perm(&std::fs::read_to_string(path)?)
}
