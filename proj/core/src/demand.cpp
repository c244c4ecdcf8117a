#include "qsched/demand.hpp"

#include "qsched/errors.hpp"

namespace qsched {

DemandVector DemandVector::from_map(std::map<std::string, Rat> demands) {
  for (const auto& [link, value] : demands) {
    if (value < 0) {
      throw DomainError("negative demand for link '" + link + "'");
    }
  }
  DemandVector d;
  d.demands_ = std::move(demands);
  return d;
}

bool DemandVector::contains(const std::string& link) const {
  return demands_.count(link) > 0;
}

const Rat& DemandVector::at(const std::string& link) const {
  auto it = demands_.find(link);
  if (it == demands_.end()) {
    throw DomainError("no demand for link '" + link + "'");
  }
  return it->second;
}

Rat DemandVector::sum(const std::set<std::string>& links) const {
  Rat total = 0;
  for (const std::string& link : links) total += at(link);
  return total;
}

Rat DemandVector::total() const {
  Rat total = 0;
  for (const auto& [link, value] : demands_) total += value;
  return total;
}

DemandVector DemandVector::scaled(const Rat& factor) const {
  if (factor < 0) throw DomainError("negative scale factor");
  std::map<std::string, Rat> out;
  for (const auto& [link, value] : demands_) out[link] = value * factor;
  return from_map(std::move(out));
}

DemandVector DemandVector::restricted(const std::set<std::string>& links) const {
  std::map<std::string, Rat> out;
  for (const std::string& link : links) out[link] = at(link);
  return from_map(std::move(out));
}

bool DemandVector::matches(const ConflictGraph& g) const {
  if (static_cast<int>(demands_.size()) != g.size()) return false;
  for (const auto& [link, value] : demands_) {
    if (!g.contains(link)) return false;
  }
  return true;
}

void DemandVector::require_matches(const ConflictGraph& g) const {
  if (!matches(g)) {
    throw DomainError(
        "demand domain does not match the conflict graph's vertex set");
  }
}

DemandVector normalize_demands(const RawDemandSpec& spec) {
  std::map<std::string, Rat> out;
  for (const auto& [link, entry] : spec.entries) {
    if (entry.capacity <= 0) {
      throw DomainError("link '" + link + "' has nonpositive capacity");
    }
    if (spec.medium_bandwidth > 0 && entry.capacity > spec.medium_bandwidth) {
      throw DomainError("link '" + link +
                        "' capacity exceeds the medium bandwidth");
    }
    if (entry.rate < 0) {
      throw DomainError("link '" + link + "' has negative rate");
    }
    out[link] = entry.rate / entry.capacity;
  }
  return DemandVector::from_map(std::move(out));
}

}  // namespace qsched
