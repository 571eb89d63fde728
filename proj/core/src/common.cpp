#include "idca/common.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace idca {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw ParseError(std::string("invalid value for ") + name + ": " + raw);
  }
  return value;
}

}  // namespace

SizeLimits SizeLimits::from_env() {
  SizeLimits limits;
  limits.max_table_entries = env_or("IDCA_MAX_TABLE_ENTRIES", limits.max_table_entries);
  limits.max_configurations =
      env_or("IDCA_MAX_CONFIGURATIONS", limits.max_configurations);
  return limits;
}

std::uint64_t checked_power(std::uint64_t k, std::size_t n, std::uint64_t cap,
                            std::string_view what) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (result > cap / k) {
      throw SizeCapError(std::string(what) + ": " + std::to_string(k) + "^" +
                         std::to_string(n) + " exceeds the cap of " +
                         std::to_string(cap));
    }
    result *= k;
  }
  if (result > cap) {
    throw SizeCapError(std::string(what) + ": " + std::to_string(result) +
                       " exceeds the cap of " + std::to_string(cap));
  }
  return result;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1U, threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace idca
