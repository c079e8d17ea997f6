//! JSON documents exchanged with the command-line tool.
//!
//! A placement document looks like
//!
//! ```json
//! { "n": 4, "variant": "full", "cells": [[1, 3], [2, 2], [3, 4], [4, 1]] }
//! ```
//!
//! with 1-based cells sorted by row. Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::board::{BoardSpec, Placement, Variant};
use crate::construct::ConstructionTrace;
use crate::enumerate::{DominationReport, EnumerationReport};
use crate::error::Error;
use crate::solution::SolutionPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub n: usize,
    pub variant: Variant,
    pub cells: Vec<[usize; 2]>,
}

impl PlacementDoc {
    pub fn new(p: &Placement, variant: Variant) -> Self {
        PlacementDoc {
            n: p.n(),
            variant,
            cells: p.cells().map(|(r, c)| [r, c]).collect(),
        }
    }

    pub fn full(s: &SolutionPermutation) -> Self {
        Self::new(&s.to_placement(), Variant::Full)
    }

    /// The board the document declares and its queens. Duplicate cells
    /// collapse into one.
    pub fn to_placement(&self) -> Result<(Placement, BoardSpec), Error> {
        let spec = BoardSpec::new(self.n, self.variant)?;
        let p = Placement::new(self.n, self.cells.iter().map(|&[r, c]| (r, c)));
        Ok((p, spec))
    }

    /// A cell listed more than once, if any.
    pub fn first_duplicate(&self) -> Option<[usize; 2]> {
        let mut seen = std::collections::HashSet::new();
        self.cells.iter().copied().find(|c| !seen.insert(*c))
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("placement documents always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub n: usize,
    pub case: String,
    pub r: usize,
    pub boundary: Vec<[usize; 3]>,
    pub offset: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub child_variant: Option<String>,
    pub child: Option<Box<TraceDoc>>,
}

impl From<&ConstructionTrace> for TraceDoc {
    fn from(t: &ConstructionTrace) -> Self {
        TraceDoc {
            n: t.n,
            case: t.case_tag.as_str().to_string(),
            r: t.r,
            boundary: t
                .boundary_cells
                .iter()
                .map(|&(a, b, v)| [a, b, v])
                .collect(),
            offset: t.offset,
            child_variant: t.child_variant.map(|v| v.as_str().to_string()),
            child: t.child.as_deref().map(|c| Box::new(TraceDoc::from(c))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDoc {
    pub n: usize,
    pub total_count: u64,
    pub fundamental_count: Option<u64>,
    pub representatives: Vec<PlacementDoc>,
    pub elapsed_ms: u64,
}

impl From<&EnumerationReport> for EnumerationDoc {
    fn from(r: &EnumerationReport) -> Self {
        EnumerationDoc {
            n: r.n,
            total_count: r.total_count,
            fundamental_count: r.fundamental_count,
            representatives: r.representatives.iter().map(PlacementDoc::full).collect(),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationDoc {
    pub n: usize,
    pub gamma: usize,
    pub witness: PlacementDoc,
}

impl From<&DominationReport> for DominationDoc {
    fn from(r: &DominationReport) -> Self {
        DominationDoc {
            n: r.n,
            gamma: r.gamma,
            witness: PlacementDoc::new(&r.witness, Variant::Full),
        }
    }
}
