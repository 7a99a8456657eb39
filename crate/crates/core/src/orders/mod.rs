//! Linear and cyclic orders on symbol subsets, families of them, and the
//! pairwise primitives everything else is built from.

mod cyclic;
mod family;
mod linear;
mod pairwise;

pub use cyclic::{
    cyclic_family_to_linear, is_cyclic_intersection_reverse, CyclicFamily, CyclicOrder,
};
pub use family::{OrderFamily, TripleWitness, WeightRatio};
pub use linear::{HalfSplit, LinearOrder, Symbol};
pub use pairwise::{
    common_triple_same_order, discordant_pairs, f_pair, f_single, intersection_reverse_witness,
    is_intersection_reverse, two_chain_decomposition, TwoChainDecomposition,
};
