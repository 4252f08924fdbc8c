#ifndef KTILE_TESTS_INCREMENTAL_RHS_HPP
#define KTILE_TESTS_INCREMENTAL_RHS_HPP

// Second route to every summation-bearing identity right side. The registry
// evaluators run the printed sums as literal loops per point; these rebuild
// the same quantities from running and weighted prefix sums, so the two
// implementations share no summation structure.

#include <functional>
#include <utility>
#include <vector>

#include "ktile/identities.hpp"
#include "ktile/sequences.hpp"

namespace ktile_tests {

using ktile::Natural;
using ktile::SequenceCache;

// Points (n, rhs) for one identity at fixed k, n ascending over the asserted
// range up to n_max.
using RhsSeries = std::vector<std::pair<long, Natural>>;

// sum_{j=0..M} sum_{i=0..M-j} X(M-i-j) collapses to
// sum_{t=0..M} (M-t+1) X(t) = (M+1) P0(M) - P1(M) with P0 = sum X(t),
// P1 = sum t*X(t). `weighted` maintains both prefixes while M advances.
class WeightedPrefix {
 public:
  explicit WeightedPrefix(std::function<Natural(long)> term)
      : term_(std::move(term)) {}

  Natural value_at(long m) {
    while (next_ <= m) {
      Natural x = term_(next_);
      p0_ += x;
      p1_ += next_ * x;
      ++next_;
    }
    return (m + 1) * p0_ - p1_;
  }

 private:
  std::function<Natural(long)> term_;
  Natural p0_ = 0;
  Natural p1_ = 0;
  long next_ = 0;
};

inline RhsSeries incremental_rhs(const std::string& id, int k, long n_max,
                                 SequenceCache& cache,
                                 ktile::LucasConvention convention =
                                     ktile::LucasConvention::GeneralizedBase) {
  RhsSeries out;
  auto F = [&](long m) { return ktile::gen_fib(k, m, cache); };
  auto L = [&](long m) { return ktile::gen_lucas(k, m, cache); };

  if (id == "I-3.2") {
    Natural prefix = 0;  // sum_{i=0..n-k} F(k,i), grown one term per n
    long upto = -1;
    for (long n = k + 1; n <= n_max; ++n) {
      while (upto < n - k) prefix += F(++upto);
      out.emplace_back(n, Natural(k + prefix));
    }
  } else if (id == "I-3.3") {
    Natural acc = 1;
    long i = 0;
    for (long n = 1; n <= n_max; ++n) {
      while (i < n) acc += F(++i * k - 1);
      if (n >= k) out.emplace_back(n, acc);
    }
  } else if (id == "I-3.4") {
    // window of k consecutive values F(k, n-2k+2 .. n-k+1)
    for (long n = 2 * k - 2; n <= n_max; ++n) {
      if (out.empty()) {
        Natural window = 0;
        for (long j = n - 2 * k + 2; j <= n - k + 1; ++j) window += F(j);
        out.emplace_back(n, window);
      } else {
        Natural window = out.back().second + F(n - k + 1) - F(n - 2 * k + 1);
        out.emplace_back(n, window);
      }
    }
  } else if (id == "I-3.5") {
    // sliding window of the k-2 subtracted terms
    Natural window = 0;
    for (long n = 2 * k - 1; n <= n_max; ++n) {
      if (n == 2 * k - 1) {
        for (long i = 0; i <= k - 3; ++i) window += F(i);
      } else {
        window += F(n - k - 2) - F(n - 2 * k);
      }
      out.emplace_back(n, Natural(F(n - 1) + F(n - 2) - window));
    }
  } else if (id == "I-3.8") {
    Natural acc = L(0);
    for (long n = 1; n <= n_max; ++n) {
      acc += L(n * k);
      if (n >= 2 * k) out.emplace_back(n, acc);
    }
  } else if (id == "I-4.1") {
    // F(k,n) plus a k-wide window sum F(k, n-k+1 .. n)
    Natural window = 0;
    for (long n = k; n <= n_max; ++n) {
      if (n == k) {
        for (long i = 0; i <= k - 1; ++i) window += F(n - i);
      } else {
        window += F(n) - F(n - k);
      }
      out.emplace_back(n, Natural(F(n) + window));
    }
  } else if (id == "I-4.2p" || id == "I-4.2c") {
    long coeff = id == "I-4.2c" ? k : k - 1;
    WeightedPrefix ds(F);
    for (long n = 2 * k; n <= n_max; ++n) {
      Natural rhs = k + coeff * (n + 1 - k) - static_cast<long>(k) * (k - 1) / 2;
      rhs += ds.value_at(n - 2 * k);
      out.emplace_back(n, rhs);
    }
  } else if (id == "I-4.3p" || id == "I-4.3c") {
    if (k != 2) return out;
    WeightedPrefix ds(F);
    for (long n = 4; n <= n_max; ++n) {
      Natural rhs = id == "I-4.3c" ? Natural(2 * n - 1) : Natural(n);
      rhs += ds.value_at(n - 4);
      out.emplace_back(n, rhs);
    }
  } else if (id == "I-4.4p") {
    WeightedPrefix ds(L);
    for (long n = 2 * k; n <= n_max; ++n) {
      Natural rhs = k;
      rhs += static_cast<long>(k - 1) * (n + 1 - (k - 1) - k);
      rhs += static_cast<long>(k - 1) * (n + 1 - (2 * k - 1) - k);
      rhs += ds.value_at(n - 2 * k);
      out.emplace_back(n, rhs);
    }
  } else if (id == "I-4.5p") {
    if (k != 2) return out;
    auto small = [&](long m) {
      return convention == ktile::LucasConvention::GeneralizedBase
                 ? ktile::gen_lucas(2, m, cache)
                 : ktile::classic_lucas(m, cache);
    };
    WeightedPrefix ds(small);
    for (long n = 4; n <= n_max; ++n) {
      Natural rhs = 2 * (n - 2);
      rhs += ds.value_at(n - 4);
      out.emplace_back(n, rhs);
    }
  }
  return out;
}

}  // namespace ktile_tests

#endif  // KTILE_TESTS_INCREMENTAL_RHS_HPP
