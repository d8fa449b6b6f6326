//! Mass files: `{"u": {"min": 1.5, "max": 3.0, "central": 2.25}, …}` in MeV.

use std::collections::BTreeMap;

use isoclifford_core::flavor::{Flavor, FlavorGroup, MassBound, QuarkMassBounds};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    min: f64,
    max: f64,
    central: Option<f64>,
}

/// Why a mass file was rejected.
#[derive(Debug, Clone, PartialEq)]
pub enum MassFileError {
    /// Malformed JSON or an unexpected field; carries serde's line/column text.
    Parse(String),
    /// Structurally valid but unusable for the requested group.
    Missing(String),
}

impl std::fmt::Display for MassFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MassFileError::Parse(s) | MassFileError::Missing(s) => f.write_str(s),
        }
    }
}

fn flavor_from_key(key: &str) -> Option<Flavor> {
    Flavor::ALL.iter().copied().find(|f| f.name() == key)
}

/// Parses a mass file and checks that every flavor of `group` is present.
/// Value checks (positivity, ordering) are left to the library.
pub fn parse_mass_file(text: &str, group: FlavorGroup) -> Result<QuarkMassBounds, MassFileError> {
    let raw: BTreeMap<String, Entry> =
        serde_json::from_str(text).map_err(|e| MassFileError::Parse(format!("mass file: {e}")))?;
    let mut bounds = QuarkMassBounds::new();
    for (key, entry) in raw {
        let flavor = flavor_from_key(&key).ok_or_else(|| {
            MassFileError::Parse(format!(
                "mass file: unknown flavor \"{key}\" (expected one of u, d, s, c, b, t)"
            ))
        })?;
        bounds.insert(flavor, MassBound::new(entry.min, entry.max, entry.central));
    }
    for f in group.flavors() {
        if bounds.get(*f).is_none() {
            return Err(MassFileError::Missing(format!(
                "mass file: missing flavor \"{}\" required for {group}",
                f.name()
            )));
        }
    }
    Ok(bounds)
}
