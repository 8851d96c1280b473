#pragma once

#include <cmath>

#include "ghz/errors.hpp"

namespace ghz {

/// Dense matrices throughout; 2^14 = 16384 is the largest space we build.
inline constexpr int kMaxSites = 14;

/// A uniform open Ising chain: N sites, nearest-neighbour ZZ coupling of
/// strength J with |J| = 1 (the sign carries the physics: J < 0
/// ferromagnetic, J > 0 antiferromagnetic).  Time is measured in 1/|J|,
/// hbar = k_B = 1.
struct ChainSpec {
  int n_sites = 2;
  double coupling = -1.0;

  ChainSpec() = default;
  ChainSpec(int n, double j) : n_sites(n), coupling(j) { validate(); }

  void validate() const {
    if (n_sites < 2) throw validation_error("ChainSpec: n_sites must be >= 2");
    if (n_sites > kMaxSites) throw validation_error("ChainSpec: n_sites exceeds the dense-storage cap of 14");
    if (coupling == 0.0 || !std::isfinite(coupling)) throw validation_error("ChainSpec: coupling must be nonzero and finite");
  }

  int dim() const { return 1 << n_sites; }
};

}  // namespace ghz
