#pragma once

// Finite-or-cofinite subsets of an index universe. The universe is either
// countably infinite (omega) or a finite ordinal n = {0, ..., n-1}.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace m3lat {

using Index = std::uint64_t;

class UniverseMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Universe {
public:
  static Universe omega() { return Universe{}; }
  static Universe finite(Index n) { return Universe{n}; }

  bool is_finite() const { return size_.has_value(); }
  /// Cardinality of a finite universe. Throws on omega.
  Index size() const;

  bool operator==(const Universe&) const = default;

  std::string to_string() const;

private:
  Universe() = default;
  explicit Universe(Index n) : size_(n) {}

  std::optional<Index> size_;
};

enum class Tag { Fin, Cofin };

/// A finite or cofinite subset of a universe, kept in canonical form:
///  - in a finite universe the tag is always Fin;
///  - in omega, Fin means "exactly support" and Cofin means "omega minus support".
/// With this, two FcSets denote the same set iff they compare equal.
class FcSet {
public:
  /// Constructs and canonicalizes. Support may be unsorted and contain
  /// duplicates; in a finite universe every index must be < n.
  FcSet(Universe u, Tag tag, std::vector<Index> support);

  static FcSet empty(Universe u) { return FcSet(u, Tag::Fin, {}); }
  static FcSet full(Universe u) { return FcSet(u, Tag::Cofin, {}); }
  static FcSet fin(Universe u, std::initializer_list<Index> xs) {
    return FcSet(u, Tag::Fin, std::vector<Index>(xs));
  }
  static FcSet cofin(Universe u, std::initializer_list<Index> xs) {
    return FcSet(u, Tag::Cofin, std::vector<Index>(xs));
  }

  const Universe& universe() const { return universe_; }
  Tag tag() const { return tag_; }
  const std::vector<Index>& support() const { return support_; }

  bool contains(Index i) const;
  bool is_empty() const { return tag_ == Tag::Fin && support_.empty(); }
  bool is_full() const;

  /// Least element, if nonempty.
  std::optional<Index> min_element() const;

  bool operator==(const FcSet&) const = default;

  std::string to_string() const;

private:
  Universe universe_;
  Tag tag_;
  std::vector<Index> support_;
};

std::ostream& operator<<(std::ostream& os, const FcSet& s);

FcSet set_union(const FcSet& a, const FcSet& b);
FcSet intersection(const FcSet& a, const FcSet& b);
FcSet complement(const FcSet& a);
FcSet difference(const FcSet& a, const FcSet& b);
FcSet symmetric_difference(const FcSet& a, const FcSet& b);

/// In a finite universe every set is both finite and cofinite.
bool is_finite(const FcSet& a);
bool is_cofinite(const FcSet& a);
bool is_subset(const FcSet& a, const FcSet& b);

/// A ~ C: the pair is finite (both finite) or co-finite (both complements
/// finite). Computed both that way and as "symmetric difference is finite";
/// throws std::logic_error if the two disagree.
bool sim(const FcSet& a, const FcSet& c);

/// Random FcSet for property tests and sampled verification. In omega the
/// tag is a fair coin and the support a random subset of [0, index_bound);
/// in Finite(n) the set is a uniform subset of [0, n).
FcSet random_fcset(std::mt19937_64& rng, const Universe& u, Index index_bound = 16);

/// Every subset of a finite universe, ordered by bitmask (bit i = index i).
/// Requires n <= 20.
std::vector<FcSet> all_subsets(const Universe& u);

/// Every FcSet of omega whose support lies in [0, bound), Fin tags first, then
/// Cofin, each in bitmask order.
std::vector<FcSet> bounded_fcsets(const Universe& u, Index bound);

}  // namespace m3lat
