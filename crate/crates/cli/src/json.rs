//! The poset interchange format: a JSON object with deterministic ordering
//! (element ids ascending, covers lexicographic).

use anyhow::{bail, Context, Result};
use rees_core::GradedPoset;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: usize,
    pub rank: u32,
    pub label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<ElementJson>,
    pub covers: Vec<[usize; 2]>,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
}

impl PosetJson {
    pub fn from_poset(p: &GradedPoset) -> Self {
        let elements = (0..p.len())
            .map(|id| ElementJson { id, rank: p.rank(id), label: p.label(id).to_string() })
            .collect();
        let covers = p.covers().map(|(a, b)| [a, b]).collect();
        PosetJson { elements, covers, bottom: p.bottom(), top: p.top() }
    }

    pub fn into_poset(self) -> Result<GradedPoset> {
        let n = self.elements.len();
        let mut ranks = vec![0u32; n];
        let mut labels = vec![String::new(); n];
        let mut seen = vec![false; n];
        for e in &self.elements {
            if e.id >= n || seen[e.id] {
                bail!("element ids must be exactly 0..{} without repeats", n.saturating_sub(1));
            }
            seen[e.id] = true;
            ranks[e.id] = e.rank;
            labels[e.id] = e.label.clone();
        }
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let poset = GradedPoset::from_covers(ranks, &covers, labels)
            .map_err(|e| anyhow::anyhow!("invalid poset: {e}"))?;
        // declared bounds, if any, must agree with the structure
        if self.bottom.is_some() && self.bottom != poset.bottom() {
            bail!("declared bottom does not match the cover structure");
        }
        if self.top.is_some() && self.top != poset.top() {
            bail!("declared top does not match the cover structure");
        }
        Ok(poset)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serialization")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed poset JSON")
    }
}

pub fn poset_to_json(p: &GradedPoset) -> String {
    PosetJson::from_poset(p).to_json_string()
}

pub fn poset_from_json(text: &str) -> Result<GradedPoset> {
    PosetJson::parse(text)?.into_poset()
}
