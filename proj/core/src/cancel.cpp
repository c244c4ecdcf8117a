#include "qsched/cancel.hpp"

#include "qsched/errors.hpp"

namespace qsched {

bool CancelToken::cancelled() const {
  if (flag_ != nullptr && flag_->load(std::memory_order_relaxed)) return true;
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) return true;
  return false;
}

void CancelToken::check() const {
  if (cancelled()) throw CancelledError("computation cancelled");
}

}  // namespace qsched
