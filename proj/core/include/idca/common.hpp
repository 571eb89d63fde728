#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idca {

/// A symbol of the alphabet {0, ..., k-1}.
using Symbol = std::uint8_t;

/// Invalid input for an operation: mismatched groups or alphabets, malformed
/// patterns, violated preconditions. The CLI maps it to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (group specs, subsets, pattern records).
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A dense table or an enumeration would exceed the configured cap.
/// The CLI maps it to exit code 3.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps on dense rule tables and on brute-force configuration enumeration.
/// Exceeding a cap is always an error, never a silent truncation.
struct SizeLimits {
  std::uint64_t max_table_entries = std::uint64_t{1} << 24;
  std::uint64_t max_configurations = std::uint64_t{1} << 20;

  /// Defaults overridden by IDCA_MAX_TABLE_ENTRIES / IDCA_MAX_CONFIGURATIONS.
  static SizeLimits from_env();
};

/// k^n, or SizeCapError when it exceeds `cap`.
std::uint64_t checked_power(std::uint64_t k, std::size_t n, std::uint64_t cap,
                            std::string_view what);

/// Runs body(i) for i in [0, n) on up to `threads` workers. Rethrows the
/// first exception raised by any worker after all of them have joined.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

inline constexpr bool kDebugBuild =
#ifdef NDEBUG
    false;
#else
    true;
#endif

}  // namespace idca
