//! JSON state files.
//!
//! A state file is a single JSON object
//! `{"matrix": [[[re, im], ...x4], ...x4]}`: four rows of four `[re, im]`
//! pairs, row-major, in the |00>, |01>, |10>, |11> basis. Loading validates
//! the full density-matrix contract, so a file that parses but violates
//! Hermiticity, trace, or positivity is rejected with the failing invariant
//! named.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::DensityMatrix;
use crate::Complex64;

#[derive(Serialize, Deserialize)]
struct StateFile {
    matrix: Vec<Vec<[f64; 2]>>,
}

/// Serialize a density matrix to the JSON state format.
///
/// `serde_json` prints doubles in shortest round-trip form, so a
/// save/load cycle reproduces every entry bit-for-bit.
pub fn density_to_json(rho: &DensityMatrix) -> String {
    let m = rho.matrix();
    let rows: Vec<Vec<[f64; 2]>> = (0..4)
        .map(|i| (0..4).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
        .collect();
    serde_json::to_string_pretty(&StateFile { matrix: rows }).expect("plain data serializes")
}

/// Parse and validate a density matrix from the JSON state format.
pub fn density_from_json(text: &str) -> Result<DensityMatrix> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| Error::StateFormat {
        detail: e.to_string(),
    })?;
    if file.matrix.len() != 4 {
        return Err(Error::StateFormat {
            detail: format!("expected 4 rows, got {}", file.matrix.len()),
        });
    }
    for (i, row) in file.matrix.iter().enumerate() {
        if row.len() != 4 {
            return Err(Error::StateFormat {
                detail: format!("row {i} has {} entries, expected 4", row.len()),
            });
        }
    }
    let m = ComplexMatrix::from_fn(4, |i, j| {
        Complex64::new(file.matrix[i][j][0], file.matrix[i][j][1])
    });
    DensityMatrix::new(m)
}

/// Write a state file.
pub fn save_density(path: &Path, rho: &DensityMatrix) -> Result<()> {
    std::fs::write(path, density_to_json(rho))?;
    Ok(())
}

/// Read and validate a state file.
pub fn load_density(path: &Path) -> Result<DensityMatrix> {
    let text = std::fs::read_to_string(path)?;
    density_from_json(&text)
}
