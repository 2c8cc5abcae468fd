#pragma once

#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

#include <omp.h>

namespace wittjet {

/// Scans over an index space [0, n). The serial versions are the reference the
/// OpenMP versions are tested and benchmarked against.
enum class Exec { Serial, Parallel };

namespace kernels {

/// Holds the first exception thrown inside a parallel region, since one may not
/// escape the region; rethrown once the region has joined.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(wittjet_exception_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

/// Little-endian mixed-radix digits of `index` with a uniform radix.
inline void decode(std::uint64_t index, std::uint64_t radix, std::vector<std::uint32_t>& digits) {
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(index % radix);
    index /= radix;
  }
}

/// Smallest index where `ok` is false.
template <class Pred>
std::optional<std::uint64_t> first_failure_serial(std::uint64_t n, Pred ok) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!ok(i)) return i;
  }
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> first_failure_parallel(std::uint64_t n, Pred ok) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto count = static_cast<std::int64_t>(n);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    if (index < best) slot.run([&] {
      if (!ok(index)) best = index;
    });
  }
  slot.rethrow();
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

/// Ascending list of indices where `keep` holds.
template <class Pred>
std::vector<std::uint64_t> select_serial(std::uint64_t n, Pred keep) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (keep(i)) out.push_back(i);
  }
  return out;
}

template <class Pred>
std::vector<std::uint64_t> select_parallel(std::uint64_t n, Pred keep) {
  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> partial(threads);
  const auto count = static_cast<std::int64_t>(n);
  ExceptionSlot slot;
#pragma omp parallel
  {
    auto& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      slot.run([&] {
        if (keep(static_cast<std::uint64_t>(i))) local.push_back(static_cast<std::uint64_t>(i));
      });
    }
  }
  slot.rethrow();
  // Static schedule hands out contiguous ascending blocks by thread number.
  std::vector<std::uint64_t> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace kernels

template <class Pred>
std::optional<std::uint64_t> first_failure(Exec exec, std::uint64_t n, Pred ok) {
  return exec == Exec::Serial ? kernels::first_failure_serial(n, ok)
                              : kernels::first_failure_parallel(n, ok);
}

template <class Pred>
std::vector<std::uint64_t> select(Exec exec, std::uint64_t n, Pred keep) {
  return exec == Exec::Serial ? kernels::select_serial(n, keep) : kernels::select_parallel(n, keep);
}

}  // namespace wittjet
