//! JSON instance and solution formats.
//!
//! Instance:
//! `{"n": 4, "rotation": [[1,3],[2,0],[3,1],[0,2]], "outer_face": [0,1,2,3], "name": "c4"}`
//! where `rotation[v]` lists the neighbors of `v` clockwise and the last two
//! keys are optional.
//!
//! Solution:
//! `{"clar_number": k, "faces": [[v, ...], ...], "matching": [[u, v], ...],
//!   "stats": {"T": t, "J": j, "lps_solved": c}}`

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matching::Matching;
use crate::plane_graph::{GraphError, PlaneGraph};
use crate::solver::ClarResult;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("\"n\" is {n} but \"rotation\" has {len} entries")]
    CountMismatch { n: usize, len: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("matching pairs overlap or fall outside the graph")]
    BadMatching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl InstanceJson {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        InstanceJson {
            n: g.n(),
            rotation: g.rotation_lists(),
            outer_face: g.outer_face().map(|f| g.face(f).vertices.clone()),
            name: g.name().map(str::to_owned),
        }
    }

    pub fn into_graph(self) -> Result<PlaneGraph, IoError> {
        if self.n != self.rotation.len() {
            return Err(IoError::CountMismatch {
                n: self.n,
                len: self.rotation.len(),
            });
        }
        let mut g = PlaneGraph::from_rotation(self.rotation)?;
        if let Some(outer) = self.outer_face {
            g = g.with_outer_face(&outer)?;
        }
        if let Some(name) = self.name {
            g = g.with_name(name);
        }
        Ok(g)
    }
}

pub fn parse_instance(text: &str) -> Result<PlaneGraph, IoError> {
    serde_json::from_str::<InstanceJson>(text)?.into_graph()
}

pub fn instance_to_json(g: &PlaneGraph) -> String {
    serde_json::to_string(&InstanceJson::from_graph(g)).expect("instance serializes")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    #[serde(rename = "T")]
    pub terminals: usize,
    #[serde(rename = "J")]
    pub join_size: usize,
    pub lps_solved: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub clar_number: usize,
    pub faces: Vec<Vec<usize>>,
    pub matching: Vec<[usize; 2]>,
    pub stats: StatsJson,
}

impl SolutionJson {
    pub fn from_result(g: &PlaneGraph, r: &ClarResult) -> Self {
        SolutionJson {
            clar_number: r.value,
            faces: r
                .solution
                .faces
                .iter()
                .map(|&f| g.face(f).vertices.clone())
                .collect(),
            matching: r.solution.matching.iter().map(|&(u, v)| [u, v]).collect(),
            stats: StatsJson {
                terminals: r.stats.terminals,
                join_size: r.stats.join_size,
                lps_solved: r.stats.lps_solved,
            },
        }
    }
}

pub fn solution_to_json(g: &PlaneGraph, r: &ClarResult) -> String {
    serde_json::to_string_pretty(&SolutionJson::from_result(g, r)).expect("solution serializes")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatchingJson {
    Wrapped { matching: Vec<[usize; 2]> },
    Bare(Vec<[usize; 2]>),
}

/// Reads a matching given either as `[[u, v], ...]` or as an object with a
/// `"matching"` key (so solution files are accepted as-is).
pub fn parse_matching(text: &str, n: usize) -> Result<Matching, IoError> {
    let pairs = match serde_json::from_str::<MatchingJson>(text)? {
        MatchingJson::Wrapped { matching } | MatchingJson::Bare(matching) => matching,
    };
    let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[u, v]| (u, v)).collect();
    Matching::from_pairs(n, &pairs).ok_or(IoError::BadMatching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::solver::{solve_clar, SolveOptions};

    #[test]
    fn parses_four_cycle() {
        let g =
            parse_instance(r#"{"n":4,"rotation":[[1,3],[2,0],[3,1],[0,2]],"name":"c4"}"#).unwrap();
        assert_eq!((g.n(), g.m(), g.face_count()), (4, 4, 2));
        assert_eq!(g.name(), Some("c4"));
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(matches!(
            parse_instance(r#"{"n":3,"rotation":[[1,2],[0,2]]}"#),
            Err(IoError::CountMismatch { .. })
        ));
        assert!(matches!(
            parse_instance(r#"{"n":3,"rotation":[[1,2],[0,2],[1]]}"#),
            Err(IoError::Graph(GraphError::AsymmetricRotation { .. }))
        ));
        assert!(matches!(
            parse_instance(r#"{"n":3}"#),
            Err(IoError::Json(_))
        ));
    }

    #[test]
    fn solution_schema() {
        let g = named("prism").unwrap();
        let r = solve_clar(&g, &SolveOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&solution_to_json(&g, &r)).unwrap();
        assert_eq!(v["clar_number"], 1);
        assert_eq!(v["stats"]["T"], 2);
        assert_eq!(v["stats"]["J"], 2);
        assert_eq!(v["stats"]["lps_solved"], 9);
        assert_eq!(v["faces"].as_array().unwrap().len(), 1);
        assert_eq!(v["matching"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn matching_formats() {
        let a = parse_matching("[[0,1],[2,3]]", 4).unwrap();
        let b = parse_matching(r#"{"matching":[[0,1],[2,3]],"clar_number":0}"#, 4).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            parse_matching("[[0,1],[1,2]]", 4),
            Err(IoError::BadMatching)
        ));
    }
}
