//! Exact tools for Q-integral graphs: signless-Laplacian spectra decided
//! without floating-point error at integer thresholds, the eigenvalue and
//! degree gates for Q-graphs, a vertex-extension search over induced
//! Q-subgraph hypotheses, and an isomorph-free brute-force enumerator used
//! as an independent oracle.

pub mod canon;
pub mod catalog;
pub mod enumerate;
pub mod feasibility;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod search;
pub mod spectral;

pub use canon::{canonical_code, canonical_labeling, Canonical, CanonicalCode, VertexColoring};
pub use feasibility::{
    check_prop_ev, check_prop_ev_with, degree_caps_ok, enumerate_d_list, DList, DegreeConstraint, FeasibilityError, FeasibilityVerdict, GateMode,
    InfeasibleReason,
};
pub use graph::{Bipartition, Graph, GraphError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use spectral::{exact_q_spectrum, float_spectrum, q_matrix, q_submatrix, signless_laplacian, IntegerSpectrum, QGraph, SpectralError};
