use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::Result;

/// On-disk group description.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { name: String, order: usize, table: Vec<Vec<usize>> },
    Permutations { name: String, degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { name, order, table } => {
                if table.len() != *order {
                    return Err(crate::error::Error::InvalidGroup(format!(
                        "order {order} but table has {} rows",
                        table.len()
                    )));
                }
                if *order > cap {
                    return Err(crate::error::Error::CapExceeded { cap, got: *order });
                }
                FiniteGroup::from_table(name.clone(), table)
            }
            GroupFile::Permutations { name, degree, generators } => {
                FiniteGroup::from_permutations(name.clone(), *degree, generators, cap)
            }
        }
    }

    /// Table form; re-reading it reproduces the element numbering exactly.
    pub fn from_group(g: &FiniteGroup) -> GroupFile {
        GroupFile::Table { name: g.name().to_string(), order: g.order(), table: g.table_rows() }
    }
}
