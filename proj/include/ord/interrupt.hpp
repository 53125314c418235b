#pragma once

#include <atomic>

#include "ord/errors.hpp"

namespace ord {

// Cooperative interrupt flag. Long-running searches poll it and abort with a
// ResourceLimitError, letting front ends report partial progress.
inline std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

inline void request_interrupt() { interrupt_flag().store(true); }

inline void check_interrupt() {
  if (interrupt_flag().load(std::memory_order_relaxed)) {
    throw ResourceLimitError("interrupted");
  }
}

}  // namespace ord
