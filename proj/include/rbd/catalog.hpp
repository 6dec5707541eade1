#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/design.hpp"

namespace rbd {

struct CatalogEntry {
  std::string name;        // kebab-case, e.g. gamma-rc-8, theta-8, delta-5
  ResolvableDesign design;
  std::string provenance;
};

// The three published eight-replicate designs, parsed from their embedded text.
ResolvableDesign published_gamma_rc8();
ResolvableDesign published_theta8();
ResolvableDesign published_delta_rc8();

// Published designs plus every connected gamma/delta family member
// (plain r=2..6, R and C r=2..7, RC r=2..8). gamma-rc-8 and delta-rc-8 are the
// embedded published designs; they coincide with the constructed ones.
const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> find_catalog(const std::string& name);

}  // namespace rbd
