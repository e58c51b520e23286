//! Golden values: enumeration counts computed once by the slow oracles and
//! stored as JSON, one file per value, naming the oracle that produced it.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuchsian::Signature;
use crate::genvec::{enumerate_vectors_with, orbit_classes_with};
use crate::group::{FiniteGroup, GroupSpec};
use crate::oracle::{naive_class_count, naive_vector_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    VectorCount,
    ClassCount,
}

impl Quantity {
    fn oracle(self) -> &'static str {
        match self {
            Quantity::VectorCount => {
                "exhaustive scan over all tuples of elements with the period orders, keeping those with identity product that generate the group"
            }
            Quantity::ClassCount => {
                "breadth-first search over vectors in every period ordering, using both braid directions and every automorphism"
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GoldenCase {
    pub name: &'static str,
    pub group: &'static str,
    pub signature: &'static str,
    pub quantity: Quantity,
}

pub const GOLDEN_CASES: [GoldenCase; 6] = [
    GoldenCase {
        name: "dihedral10_2x5_vectors",
        group: "dihedral:10",
        signature: "0;2,2,2,2,2",
        quantity: Quantity::VectorCount,
    },
    GoldenCase {
        name: "dihedral10_2x5_classes",
        group: "dihedral:10",
        signature: "0;2,2,2,2,2",
        quantity: Quantity::ClassCount,
    },
    GoldenCase {
        name: "dihedral18_2x5_vectors",
        group: "dihedral:18",
        signature: "0;2,2,2,2,2",
        quantity: Quantity::VectorCount,
    },
    GoldenCase {
        name: "dihedral18_2x5_classes",
        group: "dihedral:18",
        signature: "0;2,2,2,2,2",
        quantity: Quantity::ClassCount,
    },
    GoldenCase {
        name: "metacyclic5_2244_vectors",
        group: "metacyclic:5,4,2",
        signature: "0;2,2,4,4",
        quantity: Quantity::VectorCount,
    },
    GoldenCase {
        name: "metacyclic5_2244_classes",
        group: "metacyclic:5,4,2",
        signature: "0;2,2,4,4",
        quantity: Quantity::ClassCount,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenValue {
    pub name: String,
    pub group: String,
    pub signature: String,
    pub quantity: Quantity,
    pub value: usize,
    pub oracle: String,
}

impl GoldenCase {
    fn inputs(&self) -> Result<(FiniteGroup, Signature)> {
        Ok((self.group.parse::<GroupSpec>()?.build()?, self.signature.parse()?))
    }

    pub fn oracle_value(&self) -> Result<usize> {
        let (g, s) = self.inputs()?;
        match self.quantity {
            Quantity::VectorCount => naive_vector_count(&g, &s),
            Quantity::ClassCount => naive_class_count(&g, &s),
        }
    }

    /// The same quantity from the production engine.
    pub fn engine_value(&self, workers: usize) -> Result<usize> {
        let (g, s) = self.inputs()?;
        match self.quantity {
            Quantity::VectorCount => Ok(enumerate_vectors_with(&g, &s, workers)?.len()),
            Quantity::ClassCount => Ok(orbit_classes_with(&g, &s, workers)?.class_count()),
        }
    }

    pub fn path(&self, dir: &Path) -> PathBuf {
        dir.join(format!("{}.json", self.name))
    }

    pub fn load(&self, dir: &Path) -> Result<GoldenValue> {
        let path = self.path(dir);
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::params(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

/// Recomputes every golden value with its oracle and writes the files.
pub fn bless(dir: &Path) -> Result<Vec<GoldenValue>> {
    fs::create_dir_all(dir).map_err(|e| Error::params(format!("cannot create {}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for case in GOLDEN_CASES {
        let value = GoldenValue {
            name: case.name.to_string(),
            group: case.group.to_string(),
            signature: case.signature.to_string(),
            quantity: case.quantity,
            value: case.oracle_value()?,
            oracle: case.quantity.oracle().to_string(),
        };
        let text = serde_json::to_string_pretty(&value).expect("golden values serialize") + "\n";
        fs::write(case.path(dir), text)
            .map_err(|e| Error::params(format!("cannot write {}: {e}", case.path(dir).display())))?;
        out.push(value);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub stored: usize,
    pub oracle: usize,
    pub engine: usize,
}

impl GoldenCheck {
    pub fn passed(&self) -> bool {
        self.stored == self.oracle && self.oracle == self.engine
    }
}

/// Compares each stored value with a fresh oracle run and the engine.
pub fn verify(dir: &Path, workers: usize) -> Result<Vec<GoldenCheck>> {
    GOLDEN_CASES
        .iter()
        .map(|case| {
            Ok(GoldenCheck {
                name: case.name,
                stored: case.load(dir)?.value,
                oracle: case.oracle_value()?,
                engine: case.engine_value(workers)?,
            })
        })
        .collect()
}

/// The versioned golden directory shipped with the crate.
pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}
