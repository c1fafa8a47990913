//! Poset references on the command line: `zoo:<family>:<n>` specs, file
//! paths, or `-` for standard input.

use std::io::Read;

use anyhow::{bail, Context, Result};
use rees_core::{zoo, GradedPoset};

use crate::json::poset_from_json;

/// Resolve a poset reference: `zoo:chain:4`, `zoo:tree:2:3`, a JSON file
/// path, or `-` for stdin.
pub fn load_poset(spec: &str) -> Result<GradedPoset> {
    if let Some(rest) = spec.strip_prefix("zoo:") {
        return zoo_spec(rest);
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading poset from stdin")?;
        buf
    } else {
        std::fs::read_to_string(spec).with_context(|| format!("reading poset file {spec}"))?
    };
    poset_from_json(&text)
}

pub fn zoo_spec(rest: &str) -> Result<GradedPoset> {
    let parts: Vec<&str> = rest.split(':').collect();
    let parse = |s: &str| -> Result<u32> {
        s.parse::<u32>().with_context(|| format!("bad zoo parameter {s:?}"))
    };
    match parts.as_slice() {
        ["chain", n] => in_range(parse(n)?, 1, 64).map(zoo::chain),
        ["boolean", n] => in_range(parse(n)?, 0, 16).map(zoo::boolean_algebra),
        ["cube", n] => in_range(parse(n)?, 1, 8).map(zoo::cubical_lattice),
        ["crosspoly", n] => in_range(parse(n)?, 1, 8).map(zoo::crosspolytope_lattice),
        ["tree", t, n] => {
            let t = in_range(parse(t)?, 1, 16)?;
            let n = in_range(parse(n)?, 1, 16)?;
            Ok(zoo::tary_tree(t, n))
        }
        _ => bail!("unknown zoo spec zoo:{rest} (families: chain, tree, boolean, cube, crosspoly)"),
    }
}

fn in_range(v: u32, lo: u32, hi: u32) -> Result<u32> {
    if v < lo || v > hi {
        bail!("parameter {v} outside supported range {lo}..={hi}");
    }
    Ok(v)
}
