#pragma once

#include <atomic>
#include <chrono>
#include <optional>

namespace qsched {

/// Cooperative cancellation for long-running solves. A token can carry an
/// external flag, a deadline, or both; enumeration and LP loops poll it.
class CancelToken {
 public:
  CancelToken() = default;

  static CancelToken with_deadline(std::chrono::steady_clock::duration budget) {
    CancelToken t;
    t.deadline_ = std::chrono::steady_clock::now() + budget;
    return t;
  }

  static CancelToken with_flag(const std::atomic<bool>* flag) {
    CancelToken t;
    t.flag_ = flag;
    return t;
  }

  bool cancelled() const;

  /// Throws CancelledError when the token has fired.
  void check() const;

 private:
  const std::atomic<bool>* flag_ = nullptr;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace qsched
