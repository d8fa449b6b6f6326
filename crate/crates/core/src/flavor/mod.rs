//! Flavor symmetry in isospace: Gell-Mann generators, diagonal isounits,
//! iso-states, mass operators and the equal-mass parameter solver.

mod gell_mann;
mod isounit;
mod mass;
mod tensor;

pub use gell_mann::{
    diagonal_generator_indices, gell_mann, structure_constant, su3_reference_constants,
};
pub use isounit::{Flavor, FlavorGroup, FlavorIsoUnit, IsoState};
pub use mass::{
    common_iso_mass, decompose_mass, equal_mass_params, iso_mass_operator, mass_operator,
    paper_mass_coefficients, paper_intervals, param_intervals, param_values, Interval,
    MassBound, MassDecomposition, ParamInterval, QuarkMassBounds, INTERVAL_MATCH_TOLERANCE,
};
pub use tensor::{iso_tensor, reversion_image};
