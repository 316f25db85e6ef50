#pragma once

// Banaschewski functions on finite bounded lattices: antitone maps sending
// each element to one of its complements.

#include <optional>
#include <string>
#include <vector>

#include "m3lat/finlat.hpp"

namespace m3lat {

struct BanMap {
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table.at(x); }
  bool operator==(const BanMap&) const = default;
};

bool is_banaschewski(const FiniteLattice& l, const BanMap& f);

struct BanEnumeration {
  std::vector<BanMap> functions;
  /// Why the list is empty when the lattice is not complemented.
  std::string note;
};

/// Hard cap on lattice size for the exhaustive searches below.
inline constexpr std::size_t kBanSearchLimit = 12;

/// Every Banaschewski function, by backtracking bottom-up along a linear
/// extension. Output is in lexicographic order of the tables taken along that
/// extension. Throws BudgetExceeded above kBanSearchLimit elements.
BanEnumeration enumerate_banaschewski(const FiniteLattice& l);

struct RangeInfo {
  Mask image;
  bool is_sublattice = false;
};

RangeInfo range_of(const FiniteLattice& l, const BanMap& f);

/// Some Banaschewski function whose image is exactly mask, if one exists.
std::optional<BanMap> is_range_of_some_banaschewski(const FiniteLattice& l, const Mask& mask);

/// All Banaschewski ranges that are Boolean sublattices are pairwise
/// isomorphic. Vacuously true when there are none.
bool boolean_ranges_isomorphic(const FiniteLattice& l);

}  // namespace m3lat
