#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solq {

/// Execution policy for the exhaustive kernels. Every parallel path has a
/// serial twin with identical output; tests compare the two and the bench
/// tool times them.
enum class Exec : std::uint8_t { serial, parallel };

namespace scan_detail {
// Below this many iterations the parallel path is not worth spawning.
constexpr std::size_t kParCutoff = std::size_t{1} << 12;
constexpr std::size_t kBlock = std::size_t{1} << 16;
}  // namespace scan_detail

/// Indices in [0, count) where `pred` is false, in ascending order.
/// `pred` must be pure.
template <class Pred>
std::vector<std::size_t> scan_failures(std::size_t count, Exec exec, Pred&& pred) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count >= scan_detail::kParCutoff) {
    std::vector<std::vector<std::size_t>> parts;
#pragma omp parallel
    {
      std::vector<std::size_t> mine;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(count); ++i)
        if (!pred(static_cast<std::size_t>(i))) mine.push_back(static_cast<std::size_t>(i));
#pragma omp critical
      parts.push_back(std::move(mine));
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<std::size_t> out;
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
  }
#endif
  (void)exec;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (!pred(i)) out.push_back(i);
  return out;
}

/// Smallest index in [0, count) where `pred` is false, if any. The parallel
/// path scans fixed-size blocks in order, so the answer matches the serial
/// one regardless of thread count.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Exec exec, Pred&& pred) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count >= scan_detail::kParCutoff) {
    for (std::size_t lo = 0; lo < count; lo += scan_detail::kBlock) {
      const long long hi = static_cast<long long>(std::min(count, lo + scan_detail::kBlock));
      long long best = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
      for (long long i = static_cast<long long>(lo); i < hi; ++i)
        if (!pred(static_cast<std::size_t>(i))) best = std::min(best, i);
      if (best != std::numeric_limits<long long>::max())
        return static_cast<std::size_t>(best);
    }
    return std::nullopt;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < count; ++i)
    if (!pred(i)) return i;
  return std::nullopt;
}

/// Runs fn(i) for every i in [0, count). fn must only touch state owned by
/// index i (results slot i, its own locals).
template <class Fn>
void for_each_index(std::size_t count, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count > 1) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace solq
