use serde::{Deserialize, Serialize};

/// Beam spacing for a 29 mm grid holding four beam centres per side.
pub const DEFAULT_PITCH_MM: f64 = 7.25;

/// Parts list of the reference bench. Configuration data only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardwareConstants {
    /// Width x length of the cylindrical lenses that swap adjacent lines.
    pub small_cylindrical_lens_mm: [f64; 2],
    pub small_cylindrical_focal_mm: f64,
    /// Width x length of the cylindrical lenses that swap non-adjacent lines.
    pub large_cylindrical_lens_mm: [f64; 2],
    pub large_cylindrical_focal_mm: f64,
    pub spherical_lens_diameter_mm: f64,
    pub spherical_focal_mm: f64,
    /// Side of the square grid the beams are laid out on.
    pub grid_side_mm: f64,
    pub laser_wavelength_nm: f64,
    pub laser_power_mw: f64,
}

impl Default for HardwareConstants {
    fn default() -> Self {
        HardwareConstants {
            small_cylindrical_lens_mm: [12.7, 25.4],
            small_cylindrical_focal_mm: 19.0,
            large_cylindrical_lens_mm: [25.0, 50.0],
            large_cylindrical_focal_mm: 25.4,
            spherical_lens_diameter_mm: 2.5,
            spherical_focal_mm: 50.0,
            grid_side_mm: 29.0,
            laser_wavelength_nm: 638.2,
            laser_power_mw: 4.6,
        }
    }
}
