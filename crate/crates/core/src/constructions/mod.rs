//! Generators for the periodic grid codes and the finite graph gadgets.

mod graphs;
mod hex;
mod lattice;

pub use graphs::{
    log_attaining_graph, n_minus_one_code, realize_degree_sequence, regularize_subset_graph,
    subset_code_graph, subset_gadget_degree, subset_gadget_order,
};
pub use hex::{hex_code, hex_density_counted, hex_density_even, hex_density_printed_odd, hex_period};
pub use lattice::{
    dominating_code, hamming_dominating_set, lattice_r_code, lift_dimension, lift_king_to_lattice4,
    KVariant,
};
