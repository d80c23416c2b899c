//! The six known 5-vertex-critical (P5, chair)-free graphs K5, W, P, Q1, Q2, Q3.

use std::fmt;
use std::str::FromStr;

use crate::format::parse_adjacency_list;
use crate::graph::Graph;

pub const W_ADJACENCY: &str = "{0: 1 4 5 6; 1: 0 2 5 6; 2: 1 3 5 6; 3: 2 4 5 6; 4: 0 3 5 6; \
     5: 0 1 2 3 4 6; 6: 0 1 2 3 4 5}";

pub const P_ADJACENCY: &str = "{0: 1 4 5 6; 1: 0 2 7 8; 2: 1 3 5 6 7 8; 3: 2 4 5 6 7 8; \
     4: 0 3 7 8; 5: 0 2 3 7; 6: 0 2 3 8; 7: 1 2 3 4 5 8; 8: 1 2 3 4 6 7}";

pub const Q1_ADJACENCY: &str = "{0: 1 4 5 6; 1: 0 2 5 6 7 8; 2: 1 3 5 6 7 8; 3: 2 4 7 8; \
     4: 0 3 7 8; 5: 0 1 2 6 7; 6: 0 1 2 5 8; 7: 1 2 3 4 5; 8: 1 2 3 4 6}";

/// Vertex 1 lists 5 and 6 but those rows omit 1 in the printed source; the
/// edges 1-5 and 1-6 are kept, which makes 5 and 6 members of S4(4).
pub const Q2_ADJACENCY: &str = "{0: 1 4 5 6; 1: 0 2 5 6 7 8; 2: 1 3 5 6 7 8; 3: 2 4 5 6 7 8; \
     4: 0 3 7 8; 5: 0 1 2 3 6 7; 6: 0 1 2 3 5 8; 7: 1 2 3 4 5; 8: 1 2 3 4 6}";

/// The printed Q2 text, which is not symmetric.
pub const Q2_ADJACENCY_PRINTED: &str =
    "{0: 1 4 5 6; 1: 0 2 5 6 7 8; 2: 1 3 5 6 7 8; 3: 2 4 5 6 7 8; \
     4: 0 3 7 8; 5: 0 2 3 6 7; 6: 0 2 3 5 8; 7: 1 2 3 4 5; 8: 1 2 3 4 6}";

pub const Q3_ADJACENCY: &str = "{0: 1 4 5 6; 1: 0 2 5 7 8; 2: 1 3 5 7 8; 3: 2 4 6 7 8; \
     4: 0 3 6 7 8; 5: 0 1 2 6; 6: 0 3 4 5 8; 7: 1 2 3 4 8; 8: 1 2 3 4 6 7}";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyMember {
    K5,
    W,
    P,
    Q1,
    Q2,
    Q3,
}

impl FamilyMember {
    /// Fixed check order used by the classifier.
    pub const ALL: [FamilyMember; 6] = [
        FamilyMember::K5,
        FamilyMember::W,
        FamilyMember::P,
        FamilyMember::Q1,
        FamilyMember::Q2,
        FamilyMember::Q3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyMember::K5 => "K5",
            FamilyMember::W => "W",
            FamilyMember::P => "P",
            FamilyMember::Q1 => "Q1",
            FamilyMember::Q2 => "Q2",
            FamilyMember::Q3 => "Q3",
        }
    }

    pub fn graph(self) -> Graph {
        let text = match self {
            FamilyMember::K5 => return Graph::complete(5).expect("5 <= 64"),
            FamilyMember::W => W_ADJACENCY,
            FamilyMember::P => P_ADJACENCY,
            FamilyMember::Q1 => Q1_ADJACENCY,
            FamilyMember::Q2 => Q2_ADJACENCY,
            FamilyMember::Q3 => Q3_ADJACENCY,
        };
        parse_adjacency_list(text).expect("compiled-in fixture is well formed")
    }
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyMember {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FamilyMember::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family member '{s}'"))
    }
}
