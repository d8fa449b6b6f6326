//! Matrix representations of Clifford algebras.

mod dirac;
mod regular;

pub use dirac::{
    idempotent, pauli, peirce_components, printed_entries, printed_ideal_sum, volume_element,
    DiracRep, PRINTED_ENTRY_POSITIONS, SPIN_TOLERANCE,
};
pub use regular::regular_representation;
