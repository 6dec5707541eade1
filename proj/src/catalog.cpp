#include "rbd/catalog.hpp"

#include <algorithm>

#include "catalog_data.hpp"
#include "rbd/design_io.hpp"
#include "rbd/families.hpp"

namespace rbd {

ResolvableDesign published_gamma_rc8() { return read_design(data::kGammaRC8); }
ResolvableDesign published_theta8() { return read_design(data::kTheta8); }
ResolvableDesign published_delta_rc8() { return read_design(data::kDeltaRC8); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back({"gamma-rc-8", published_gamma_rc8(), "published galaxy design, columns and rows first"});
    out.push_back({"theta-8", published_theta8(), "published annealing-search design"});
    out.push_back({"delta-rc-8", published_delta_rc8(), "published Latin-square design, columns and rows first"});
    for (const std::string family : {"gamma", "delta"}) {
      for (const auto variant : {Variant::Plain, Variant::R, Variant::C, Variant::RC}) {
        const auto [lo, hi] = variant_range(variant);
        for (int r = std::max(lo, 2); r <= hi; ++r) {
          const auto name = family_name(family, r, variant);
          if (name == "gamma-rc-8" || name == "delta-rc-8") continue;
          auto design = family == "gamma" ? gamma(r, variant) : delta(r, variant);
          out.push_back({name, std::move(design), "constructed " + family + " family"});
        }
      }
    }
    return out;
  }();
  return entries;
}

std::optional<CatalogEntry> find_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace rbd
