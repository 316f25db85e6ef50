#include "m3lat/setalg.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

namespace m3lat {

namespace {

using Support = std::vector<Index>;

Support merge_union(const Support& a, const Support& b) {
  Support out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support merge_intersection(const Support& a, const Support& b) {
  Support out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support merge_difference(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_same_universe(const FcSet& a, const FcSet& b, const char* op) {
  if (a.universe() != b.universe()) {
    throw UniverseMismatch(std::string(op) + ": universe mismatch (" + a.universe().to_string() +
                           " vs " + b.universe().to_string() + ")");
  }
}

}  // namespace

Index Universe::size() const {
  if (!size_) throw std::logic_error("Universe::size on omega");
  return *size_;
}

std::string Universe::to_string() const {
  return size_ ? "Finite(" + std::to_string(*size_) + ")" : "omega";
}

FcSet::FcSet(Universe u, Tag tag, std::vector<Index> support)
    : universe_(u), tag_(tag), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (universe_.is_finite()) {
    const Index n = universe_.size();
    if (!support_.empty() && support_.back() >= n) {
      throw std::out_of_range("FcSet: index " + std::to_string(support_.back()) +
                              " outside " + universe_.to_string());
    }
    if (tag_ == Tag::Cofin) {
      Support fin;
      fin.reserve(n - support_.size());
      auto it = support_.begin();
      for (Index i = 0; i < n; ++i) {
        if (it != support_.end() && *it == i) {
          ++it;
        } else {
          fin.push_back(i);
        }
      }
      support_ = std::move(fin);
      tag_ = Tag::Fin;
    }
  }
}

bool FcSet::contains(Index i) const {
  const bool in_support = std::binary_search(support_.begin(), support_.end(), i);
  if (universe_.is_finite() && i >= universe_.size()) return false;
  return tag_ == Tag::Fin ? in_support : !in_support;
}

bool FcSet::is_full() const {
  if (universe_.is_finite()) return support_.size() == universe_.size();
  return tag_ == Tag::Cofin && support_.empty();
}

std::optional<Index> FcSet::min_element() const {
  if (tag_ == Tag::Fin) {
    if (support_.empty()) return std::nullopt;
    return support_.front();
  }
  // Cofin only occurs in omega: the least index missing from the support.
  Index i = 0;
  for (Index s : support_) {
    if (s != i) break;
    ++i;
  }
  return i;
}

std::string FcSet::to_string() const {
  std::ostringstream os;
  os << (tag_ == Tag::Fin ? "Fin{" : "Cofin{");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) os << ',';
    os << support_[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FcSet& s) { return os << s.to_string(); }

FcSet set_union(const FcSet& a, const FcSet& b) {
  require_same_universe(a, b, "union");
  const auto& u = a.universe();
  const auto& sa = a.support();
  const auto& sb = b.support();
  if (a.tag() == Tag::Fin && b.tag() == Tag::Fin) return FcSet(u, Tag::Fin, merge_union(sa, sb));
  if (a.tag() == Tag::Cofin && b.tag() == Tag::Cofin) {
    return FcSet(u, Tag::Cofin, merge_intersection(sa, sb));
  }
  // One finite, one cofinite: the cofinite side loses the finite side's points.
  const auto& fin = a.tag() == Tag::Fin ? sa : sb;
  const auto& cof = a.tag() == Tag::Fin ? sb : sa;
  return FcSet(u, Tag::Cofin, merge_difference(cof, fin));
}

FcSet intersection(const FcSet& a, const FcSet& b) {
  require_same_universe(a, b, "intersection");
  const auto& u = a.universe();
  const auto& sa = a.support();
  const auto& sb = b.support();
  if (a.tag() == Tag::Fin && b.tag() == Tag::Fin) {
    return FcSet(u, Tag::Fin, merge_intersection(sa, sb));
  }
  if (a.tag() == Tag::Cofin && b.tag() == Tag::Cofin) return FcSet(u, Tag::Cofin, merge_union(sa, sb));
  const auto& fin = a.tag() == Tag::Fin ? sa : sb;
  const auto& cof = a.tag() == Tag::Fin ? sb : sa;
  return FcSet(u, Tag::Fin, merge_difference(fin, cof));
}

FcSet complement(const FcSet& a) {
  return FcSet(a.universe(), a.tag() == Tag::Fin ? Tag::Cofin : Tag::Fin, a.support());
}

FcSet difference(const FcSet& a, const FcSet& b) {
  require_same_universe(a, b, "difference");
  return intersection(a, complement(b));
}

FcSet symmetric_difference(const FcSet& a, const FcSet& b) {
  require_same_universe(a, b, "symmetric_difference");
  return set_union(difference(a, b), difference(b, a));
}

bool is_finite(const FcSet& a) { return a.universe().is_finite() || a.tag() == Tag::Fin; }

bool is_cofinite(const FcSet& a) { return a.universe().is_finite() || a.tag() == Tag::Cofin; }

bool is_subset(const FcSet& a, const FcSet& b) {
  require_same_universe(a, b, "is_subset");
  return difference(a, b).is_empty();
}

bool sim(const FcSet& a, const FcSet& c) {
  require_same_universe(a, c, "sim");
  const bool by_pairs = (is_finite(a) && is_finite(c)) ||
                        (is_finite(complement(a)) && is_finite(complement(c)));
  const bool by_symdiff = is_finite(symmetric_difference(a, c));
  if (by_pairs != by_symdiff) {
    throw std::logic_error("sim: characterizations disagree on " + a.to_string() + ", " +
                           c.to_string());
  }
  return by_pairs;
}

FcSet random_fcset(std::mt19937_64& rng, const Universe& u, Index index_bound) {
  const Index bound = u.is_finite() ? u.size() : index_bound;
  std::bernoulli_distribution coin(0.5);
  std::vector<Index> support;
  for (Index i = 0; i < bound; ++i) {
    if (coin(rng)) support.push_back(i);
  }
  const Tag tag = (!u.is_finite() && coin(rng)) ? Tag::Cofin : Tag::Fin;
  return FcSet(u, tag, std::move(support));
}

std::vector<FcSet> all_subsets(const Universe& u) {
  const Index n = u.size();
  if (n > 20) throw std::invalid_argument("all_subsets: universe too large");
  std::vector<FcSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(i);
    }
    out.emplace_back(u, Tag::Fin, std::move(s));
  }
  return out;
}

std::vector<FcSet> bounded_fcsets(const Universe& u, Index bound) {
  if (u.is_finite()) bound = std::min(bound, u.size());
  if (bound > 20) throw std::invalid_argument("bounded_fcsets: bound too large");
  std::vector<FcSet> out;
  for (Tag tag : {Tag::Fin, Tag::Cofin}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bound); ++mask) {
      std::vector<Index> s;
      for (Index i = 0; i < bound; ++i) {
        if (mask >> i & 1U) s.push_back(i);
      }
      FcSet x(u, tag, std::move(s));
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace m3lat
