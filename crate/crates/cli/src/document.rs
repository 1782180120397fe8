//! On-disk pair documents: square matrices as row-major grids of canonical
//! rational strings, with optional construction provenance.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use tdpair::wire;
use tdpair::Matrix;

#[derive(Debug, Serialize, Deserialize)]
pub struct PairDocument {
    pub dim: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "Astar")]
    pub astar: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl PairDocument {
    pub fn from_matrices(a: &Matrix, astar: &Matrix, provenance: Option<String>) -> Self {
        PairDocument {
            dim: a.dim(),
            a: wire::matrix_to_rows(a),
            astar: wire::matrix_to_rows(astar),
            provenance,
        }
    }

    pub fn load(path: &Path) -> Result<PairDocument> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let doc: PairDocument = serde_json::from_str(&text)
            .with_context(|| format!("{} is not a valid pair document", path.display()))?;
        Ok(doc)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        fs::write(path, text + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
        Ok(())
    }

    /// Parse and validate the matrices: square, equal, matching `dim`.
    pub fn matrices(&self) -> Result<(Matrix, Matrix)> {
        let a = wire::rows_to_matrix(&self.a).context("field A")?;
        let astar = wire::rows_to_matrix(&self.astar).context("field Astar")?;
        if !a.is_square() || !astar.is_square() {
            bail!("pair members must be square matrices");
        }
        if a.dim() != astar.dim() {
            bail!(
                "pair members have different dimensions {} and {}",
                a.dim(),
                astar.dim()
            );
        }
        if a.dim() != self.dim {
            bail!(
                "declared dimension {} does not match the {}x{} matrices",
                self.dim,
                a.dim(),
                a.dim()
            );
        }
        Ok((a, astar))
    }
}
