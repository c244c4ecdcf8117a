#pragma once

#include <map>
#include <set>
#include <string>

#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Per-link demanded fraction of a time unit, as exact rationals.
class DemandVector {
 public:
  DemandVector() = default;

  /// Validates every demand >= 0.
  static DemandVector from_map(std::map<std::string, Rat> demands);

  const std::map<std::string, Rat>& demands() const { return demands_; }
  std::size_t size() const { return demands_.size(); }
  bool contains(const std::string& link) const;

  /// Demand of one link. Throws DomainError when the link is unknown.
  const Rat& at(const std::string& link) const;

  /// Sum of demands over a subset of links; the empty set sums to zero.
  /// Throws DomainError when the subset mentions an unknown link.
  Rat sum(const std::set<std::string>& links) const;

  Rat total() const;

  /// Copy with every demand multiplied by a nonnegative rational.
  DemandVector scaled(const Rat& factor) const;

  /// Copy restricted to the given links (all must exist).
  DemandVector restricted(const std::set<std::string>& links) const;

  bool matches(const ConflictGraph& g) const;
  /// Throws DomainError unless the domain equals g's vertex set exactly.
  void require_matches(const ConflictGraph& g) const;

 private:
  std::map<std::string, Rat> demands_;
};

/// Raw per-link rate requests before normalization: rates and capacities are
/// in the same bandwidth unit as the shared medium's total bandwidth.
struct RawDemandSpec {
  struct Entry {
    Rat rate;      // requested rate f
    Rat capacity;  // link transmission capacity
  };
  std::map<std::string, Entry> entries;
  Rat medium_bandwidth;  // total shared-medium bandwidth
};

/// Converts rate requests into dimensionless demands, rate / capacity, exactly.
/// Throws DomainError on zero/negative capacity, negative rate, or a capacity
/// above the medium bandwidth.
DemandVector normalize_demands(const RawDemandSpec& spec);

}  // namespace qsched
