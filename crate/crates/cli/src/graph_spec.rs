//! Shared graph-selection flags: either a generated family with its size
//! flags, or a custom graph JSON file.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use ising_stability::bounds::GraphFamily;
use ising_stability::Graph;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Kings,
    Star,
    Torus,
}

#[derive(Debug, Args)]
pub struct GraphSpec {
    /// Graph family to generate.
    #[arg(long, value_enum, conflicts_with = "graph_file")]
    pub graph: Option<Family>,

    /// Custom graph JSON file ({"n": ..., "edges": [[a,b], ...]}).
    #[arg(long)]
    pub graph_file: Option<PathBuf>,

    /// Vertex count (complete) or row count (kings).
    #[arg(long)]
    pub n: Option<usize>,

    /// Column count (kings).
    #[arg(long)]
    pub m: Option<usize>,

    /// Leaf count (star).
    #[arg(long)]
    pub k: Option<usize>,

    /// Torus side lengths, comma separated (e.g. 4,4,4).
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
}

impl GraphSpec {
    /// Builds the graph and reports the family when one was requested.
    pub fn build(&self) -> Result<(Graph, Option<GraphFamily>), Failure> {
        if let Some(path) = &self.graph_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))?;
            let graph: Graph = serde_json::from_str(&text)
                .map_err(|e| Failure::validation(format!("parsing {}: {e}", path.display())))?;
            return Ok((graph, None));
        }
        let family = self
            .graph
            .ok_or_else(|| Failure::validation("need either --graph or --graph-file"))?;
        let graph = match family {
            Family::Complete => {
                let n = self.require("--n", self.n)?;
                Graph::complete(n)?
            }
            Family::Kings => {
                let rows = self.require("--n", self.n)?;
                let cols = self.require("--m", self.m)?;
                Graph::kings(rows, cols)?
            }
            Family::Star => {
                let k = self.require("--k", self.k)?;
                Graph::star(k)?
            }
            Family::Torus => {
                if self.dims.is_empty() {
                    return Err(Failure::validation("torus needs --dims"));
                }
                Graph::torus(&self.dims)?
            }
        };
        let hint = match family {
            Family::Complete => GraphFamily::Complete,
            Family::Kings => GraphFamily::Kings,
            Family::Star => GraphFamily::Star,
            Family::Torus => GraphFamily::Torus,
        };
        Ok((graph, Some(hint)))
    }

    fn require(&self, flag: &str, value: Option<usize>) -> Result<usize, Failure> {
        value.ok_or_else(|| Failure::validation(format!("{flag} is required for this family")))
    }
}
