#pragma once

#include "dispforce/materials.hpp"

// Default material data so the library and CLI work without external
// optical-data files. Any table can be overridden with a user CSV.

namespace dispforce::materials {

/// Gold optical table generated from a published Drude + 5-oscillator
/// Lorentz fit (Rakic et al., Appl. Opt. 37, 5271), 0.05-100 eV.
OpticalDataTable builtin_gold_table();

/// Low-frequency Drude tail matching the builtin gold table's free
/// electron part, for extrapolating the dispersion integral below the
/// table minimum.
KkExtrapolation builtin_gold_extrapolation();

/// Silicon n,k table (CRC Handbook of Chemistry and Physics), 1-10 eV,
/// converted to eps1/eps2.
OpticalDataTable builtin_silicon_table();

/// Default single-oscillator silicon fit, constrained to
/// eps(0) = 11.66; eps_inf and omega0 were fit to the dispersion
/// transform of the builtin silicon table over 1e13-1e17 rad/s.
LorentzFit builtin_silicon_lorentz();

/// Photo-carrier Drude parameters for illuminated silicon:
/// holes (5.6e14, 5.0e12) and electrons (5.0e14, 1.8e13) rad/s.
std::vector<DrudeParams> silicon_photocarrier_drude();

/// Intrinsic-hole Drude term of dark high-resistivity silicon
/// (2.8e12, 5.0e12) rad/s, i.e. the dc-conductivity correction.
DrudeParams silicon_dark_dc_drude();

/// A profile assembled entirely from the builtin data above.
PermittivityModel default_profile(MaterialProfile profile);

}  // namespace dispforce::materials
