//! Left-modular chains, levels and the level condition, characteristic
//! polynomials with their level-size factorization, and supersolvability.

mod chains;
mod ll;
mod polynomial;
mod report;
mod supersolvable;

pub use chains::{
    find_left_modular_chain, generalized_rank, induced_atom_order, is_left_modular_element,
    left_modularity_witness, level_condition_holds, level_condition_witness, levels_from_chain,
    longest_chain_lengths, LevelPartition, LevelViolation, MaximalChain,
};
pub use ll::{
    characteristic_polynomial, is_ll, level_condition_from_circuits, level_transversals,
    ll_factorization_check, ll_witness_for_chain, nbb_level_characterization, rank_comparison,
    CircuitLevelCheck, Factorization, LlWitness, RankDifference,
};
pub use polynomial::{format_factored, IntegerPolynomial};
pub use report::{
    check_property, find_level_chain, write_report, Property, ReportRow, MAX_LEVEL_CHAIN_SCAN,
};
pub use supersolvable::{
    find_supersolvable_chain, first_maximal_chain, is_supersolvable_with, sublattice_generated,
    supersolvability_witness, MAX_SUPERSOLVABLE_SIZE,
};
