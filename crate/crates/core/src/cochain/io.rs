use serde::{Deserialize, Serialize};

use super::{builtin_cochain, Cochain};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::phase::Phase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DomainTag {
    G,
    H,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainEntry {
    pub args: Vec<usize>,
    pub phase: Phase,
}

/// On-disk cochain: an explicit sparse table or a builtin reference.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CochainFile {
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<i64>,
    },
    Table {
        degree: usize,
        domain: DomainTag,
        entries: Vec<CochainEntry>,
        #[serde(default)]
        default: Phase,
    },
}

impl CochainFile {
    /// Materializes the cochain. `degree` is the expected degree; `h` is
    /// the subgroup named by `"domain": "H"`.
    pub fn build(&self, degree: usize, grp: &FiniteGroup, h: &Subgroup) -> Result<Cochain> {
        match self {
            CochainFile::Builtin { builtin, k } => {
                let dom = if degree == 3 { grp.whole() } else { h.clone() };
                builtin_cochain(builtin, *k, degree, grp, &dom)
            }
            CochainFile::Table { degree: d, domain, entries, default } => {
                if *d != degree {
                    return Err(Error::Parse(format!("expected a degree-{degree} cochain, file has degree {d}")));
                }
                let dom = match domain {
                    DomainTag::G => grp.whole(),
                    DomainTag::H => h.clone(),
                };
                let mut listed = std::collections::HashMap::new();
                for (i, e) in entries.iter().enumerate() {
                    if e.args.len() != degree {
                        return Err(Error::Parse(format!("entry {i}: expected {degree} arguments")));
                    }
                    if let Some(&x) = e.args.iter().find(|&&x| x >= grp.order() || !dom.contains(x)) {
                        return Err(Error::Parse(format!("entry {i}: element {x} not in the domain")));
                    }
                    if e.args.contains(&0) && !e.phase.is_zero() {
                        return Err(Error::NotNormalized(e.args.clone()));
                    }
                    listed.insert(e.args.clone(), e.phase);
                }
                Cochain::from_fn(degree, &dom, |args| {
                    if args.contains(&0) {
                        Phase::ZERO
                    } else {
                        listed.get(args).copied().unwrap_or(*default)
                    }
                })
            }
        }
    }

    pub fn from_cochain(c: &Cochain, domain: DomainTag) -> CochainFile {
        CochainFile::Table {
            degree: c.degree(),
            domain,
            entries: c.support().into_iter().map(|(args, phase)| CochainEntry { args, phase }).collect(),
            default: Phase::ZERO,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn parse_table_and_builtin() {
        let g = builtin_group("Z2").unwrap();
        let f: CochainFile = serde_json::from_str(
            r#"{"degree": 3, "domain": "G", "entries": [{"args": [1,1,1], "phase": "1/2"}], "default": "0"}"#,
        )
        .unwrap();
        let w = f.build(3, &g, &g.whole()).unwrap();
        let b: CochainFile = serde_json::from_str(r#"{"builtin": "zn_omega", "k": 1}"#).unwrap();
        assert_eq!(b.build(3, &g, &g.trivial_subgroup()).unwrap(), w);
    }

    #[test]
    fn rejects_unnormalized_entries() {
        let g = builtin_group("Z2").unwrap();
        let f: CochainFile =
            serde_json::from_str(r#"{"degree": 2, "domain": "G", "entries": [{"args": [0,1], "phase": "1/2"}]}"#).unwrap();
        assert!(matches!(f.build(2, &g, &g.whole()), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn round_trip() {
        let g = builtin_group("Z4").unwrap();
        let w = super::super::zn_omega(&g, 3).unwrap();
        let json = serde_json::to_string(&CochainFile::from_cochain(&w, DomainTag::G)).unwrap();
        let back: CochainFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build(3, &g, &g.whole()).unwrap(), w);
    }
}
