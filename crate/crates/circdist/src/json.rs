//! Canonical JSON wire formats.
//!
//! | value        | shape                                                        |
//! |--------------|--------------------------------------------------------------|
//! | graph        | `{"n": 6, "edges": [[0,1],[0,2]]}` (sorted, `u < v`)         |
//! | circulant    | `{"circulant": {"n": 5, "generators": [1,4]}}`               |
//! | labeling     | `{"r": 3, "labels": [1,2,3]}`                                |
//! | permutation  | `{"images": [1,0,2]}`                                        |
//! | family plan  | `{"n": 24, "members": [{"m":2,"p":12,"target_d":3}], "scaling_k": 1}` |
//!
//! Serialization always emits the canonical form, so emitting, parsing and
//! re-emitting reproduces the bytes. Deserialization re-runs the domain
//! validation; malformed documents are rejected, not repaired.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::distinguishing::Labeling;
use crate::family::{DisconnectedMember, DisconnectedPlan, FamilyPlan};
use crate::graph::{CirculantSpec, CmpSpec, Graph};
use crate::perm::Permutation;

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges().iter().map(|&(u, v)| [u, v]).collect();
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v))).map_err(D::Error::custom)
    }
}

impl Serialize for CirculantSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CirculantSpec", 2)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("generators", &self.generators())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct CirculantRepr {
    n: usize,
    generators: Vec<usize>,
}

impl<'de> Deserialize<'de> for CirculantSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CirculantRepr::deserialize(deserializer)?;
        CirculantSpec::new(repr.n, repr.generators).map_err(D::Error::custom)
    }
}

impl Serialize for CmpSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CmpSpec", 2)?;
        s.serialize_field("m", &self.m())?;
        s.serialize_field("p", &self.p())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct CmpRepr {
    m: usize,
    p: usize,
}

impl<'de> Deserialize<'de> for CmpSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CmpRepr::deserialize(deserializer)?;
        CmpSpec::new(repr.m, repr.p).map_err(D::Error::custom)
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Labeling", 2)?;
        s.serialize_field("r", &self.r())?;
        s.serialize_field("labels", &self.labels())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct LabelingRepr {
    r: usize,
    labels: Vec<usize>,
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LabelingRepr::deserialize(deserializer)?;
        Labeling::new(repr.r, repr.labels).map_err(D::Error::custom)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Permutation", 1)?;
        s.serialize_field("images", &self.images())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct PermutationRepr {
    images: Vec<usize>,
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PermutationRepr::deserialize(deserializer)?;
        Permutation::from_images(repr.images).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyMemberRepr {
    m: usize,
    p: usize,
    target_d: usize,
}

impl Serialize for FamilyPlan {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let members: Vec<FamilyMemberRepr> = self
            .members()
            .iter()
            .zip(self.targets())
            .map(|(spec, &d)| FamilyMemberRepr {
                m: spec.m(),
                p: spec.p(),
                target_d: d,
            })
            .collect();
        let fields = if self.scaling_k().is_some() { 3 } else { 2 };
        let mut s = serializer.serialize_struct("FamilyPlan", fields)?;
        s.serialize_field("n", &self.common_order())?;
        s.serialize_field("members", &members)?;
        if let Some(k) = self.scaling_k() {
            s.serialize_field("scaling_k", &k)?;
        }
        s.end()
    }
}

#[derive(Deserialize)]
struct FamilyPlanRepr {
    #[allow(dead_code)]
    n: usize,
    members: Vec<FamilyMemberRepr>,
    #[serde(default)]
    scaling_k: Option<usize>,
}

impl<'de> Deserialize<'de> for FamilyPlan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FamilyPlanRepr::deserialize(deserializer)?;
        let mut targets = Vec::with_capacity(repr.members.len());
        let mut members = Vec::with_capacity(repr.members.len());
        for member in repr.members {
            targets.push(member.target_d);
            members.push(CmpSpec::new(member.m, member.p).map_err(D::Error::custom)?);
        }
        let plan =
            FamilyPlan::assemble(targets, members, repr.scaling_k).map_err(D::Error::custom)?;
        if plan.common_order() != repr.n {
            return Err(D::Error::custom(format!(
                "declared order {} does not match the members' order {}",
                repr.n,
                plan.common_order()
            )));
        }
        Ok(plan)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum DisconnectedKindRepr {
    Path { order: usize },
    CliquePlusPath { clique: usize, path: usize },
    Clique { order: usize },
}

#[derive(Serialize, Deserialize)]
struct DisconnectedMemberRepr {
    #[serde(flatten)]
    kind: DisconnectedKindRepr,
    target_d: usize,
}

impl Serialize for DisconnectedPlan {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let members: Vec<DisconnectedMemberRepr> = self
            .members()
            .iter()
            .zip(self.targets())
            .map(|(member, &d)| DisconnectedMemberRepr {
                kind: match *member {
                    DisconnectedMember::Path { order } => DisconnectedKindRepr::Path { order },
                    DisconnectedMember::CliquePlusPath { clique, path } => {
                        DisconnectedKindRepr::CliquePlusPath { clique, path }
                    }
                    DisconnectedMember::Clique { order } => DisconnectedKindRepr::Clique { order },
                },
                target_d: d,
            })
            .collect();
        let mut s = serializer.serialize_struct("DisconnectedPlan", 2)?;
        s.serialize_field("n", &self.common_order())?;
        s.serialize_field("members", &members)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct DisconnectedPlanRepr {
    n: usize,
    members: Vec<DisconnectedMemberRepr>,
}

impl<'de> Deserialize<'de> for DisconnectedPlan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DisconnectedPlanRepr::deserialize(deserializer)?;
        let mut targets = Vec::with_capacity(repr.members.len());
        let mut members = Vec::with_capacity(repr.members.len());
        for member in repr.members {
            targets.push(member.target_d);
            members.push(match member.kind {
                DisconnectedKindRepr::Path { order } => DisconnectedMember::Path { order },
                DisconnectedKindRepr::CliquePlusPath { clique, path } => {
                    DisconnectedMember::CliquePlusPath { clique, path }
                }
                DisconnectedKindRepr::Clique { order } => DisconnectedMember::Clique { order },
            });
        }
        let plan = DisconnectedPlan::assemble(targets, members).map_err(D::Error::custom)?;
        if plan.common_order() != repr.n {
            return Err(D::Error::custom(format!(
                "declared order {} does not match the members' order {}",
                repr.n,
                plan.common_order()
            )));
        }
        Ok(plan)
    }
}

/// Wrapper emitting the `{"circulant": ...}` envelope.
#[derive(Serialize, Deserialize)]
pub struct CirculantDocument {
    pub circulant: CirculantSpec,
}

/// A graph given either directly as an edge list or as a circulant
/// description to expand.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum GraphInput {
    Circulant { circulant: CirculantSpec },
    Plain(Graph),
}

impl GraphInput {
    pub fn into_graph(self) -> Graph {
        match self {
            GraphInput::Circulant { circulant } => circulant.build(),
            GraphInput::Plain(graph) => graph,
        }
    }
}
