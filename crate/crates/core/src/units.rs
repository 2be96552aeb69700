//! Unit conventions and physical constants.
//!
//! All internal frequencies are angular, in rad/us, and all times are in us.
//! Decay constants are plain rates in 1/us and never carry a 2π. User-facing
//! configuration quotes frequencies in "MHz"; whether such a value means a
//! cyclic frequency (multiply by 2π) or is already angular is controlled by
//! [`FreqConvention`].

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Boltzmann constant, J/K.
pub const K_BOLTZMANN: f64 = 1.380649e-23;

/// Cesium-133 atomic mass, kg.
pub const CESIUM_MASS_KG: f64 = 2.20695e-25;

/// Default wavelength of the |1⟩ → |p⟩ excitation laser, m (Cs 6S -> 7P).
pub const WAVELENGTH_P_M: f64 = 459.3e-9;

/// Default wavelength of the |p⟩ → |r⟩ excitation laser, m.
pub const WAVELENGTH_R_M: f64 = 1038e-9;

/// Interpretation of user-facing "MHz" frequency values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FreqConvention {
    /// Values are cyclic frequencies: Ω/2π in MHz. Internal value is 2π·v rad/us.
    #[default]
    Cyclic,
    /// Values are already angular: taken as rad/us directly.
    Angular,
}

impl FreqConvention {
    /// Convert a user-facing "MHz" value to internal rad/us.
    pub fn to_angular(self, value_mhz: f64) -> f64 {
        match self {
            FreqConvention::Cyclic => TAU * value_mhz,
            FreqConvention::Angular => value_mhz,
        }
    }

    /// Convert an internal rad/us value back to the user-facing scale.
    pub fn from_angular(self, value_rad_per_us: f64) -> f64 {
        match self {
            FreqConvention::Cyclic => value_rad_per_us / TAU,
            FreqConvention::Angular => value_rad_per_us,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cyclic_applies_two_pi() {
        assert_relative_eq!(FreqConvention::Cyclic.to_angular(500.0), TAU * 500.0);
        assert_relative_eq!(FreqConvention::Angular.to_angular(500.0), 500.0);
    }

    #[test]
    fn round_trip() {
        for conv in [FreqConvention::Cyclic, FreqConvention::Angular] {
            let v = 123.456;
            assert_relative_eq!(conv.from_angular(conv.to_angular(v)), v, max_relative = 1e-15);
        }
    }
}
