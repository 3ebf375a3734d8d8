#ifndef ORBITCUB_NUMERIC_HPP_
#define ORBITCUB_NUMERIC_HPP_

#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <thread>
#include <vector>

namespace orbitcub {

using Complex = std::complex<double>;

/// Neumaier-compensated accumulator.  All node/cell reductions in the
/// library run through this in a fixed order, so results are reproducible
/// bit for bit across runs and thread counts.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanSumComplex {
 public:
  void add(const Complex& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(chunk) for chunk = 0..n_chunks-1 on up to `threads` workers.
/// Each chunk writes into its own slot, so the final (serial, index-ordered)
/// combination step is independent of the thread count.
template <class Fn>
void parallel_chunks(std::size_t n_chunks, int threads, Fn&& fn) {
  const int nt = resolve_thread_count(threads);
  if (nt <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      fn(c);
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(nt), n_chunks));
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace orbitcub

#endif  // ORBITCUB_NUMERIC_HPP_
