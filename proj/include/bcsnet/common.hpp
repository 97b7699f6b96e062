#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace bcsnet {

/// Base class for all errors thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter value is outside its valid range (bad sensing rate, block size...).
class value_error : public error {
 public:
  using error::error;
};

/// Shapes of two operands do not agree.
class dimension_error : public error {
 public:
  using error::error;
};

/// A file or stream could not be opened, read or written.
class io_error : public error {
 public:
  using error::error;
};

/// A file exists but its contents do not match the expected layout
/// (bad magic, unsupported version, truncated payload).
class format_error : public error {
 public:
  using error::error;
};

/// A non-finite value appeared where the computation requires finite ones.
class numeric_error : public error {
 public:
  using error::error;
};

namespace detail {
inline std::atomic<int>& thread_count_ref() {
  static std::atomic<int> n{1};
  return n;
}
}  // namespace detail

/// Number of worker threads compute kernels may use. Defaults to 1
/// (fully sequential). Results are bit-identical for any setting: every
/// output element is produced by one fixed-order accumulation regardless
/// of how elements are distributed over threads.
inline int thread_count() { return detail::thread_count_ref().load(std::memory_order_relaxed); }

inline void set_thread_count(int n) {
  detail::thread_count_ref().store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

}  // namespace bcsnet
