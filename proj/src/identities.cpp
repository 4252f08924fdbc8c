#include "ktile/identities.hpp"

#include <utility>

namespace ktile {

namespace {

using Eval = std::function<Natural(int, long, SequenceCache&)>;
using Pred = std::function<bool(int, long)>;

Natural F(int k, long n, SequenceCache& c) { return gen_fib(k, n, c); }
Natural L(int k, long n, SequenceCache& c) { return gen_lucas(k, n, c); }

// sum_{j=0..m} sum_{i=0..m-j} term(m-i-j), written as the literal double
// loop; the test suites re-derive it through weighted prefix sums.
Natural double_sum(long m, const std::function<Natural(long)>& term) {
  Natural acc = 0;
  for (long j = 0; j <= m; ++j)
    for (long i = 0; i <= m - j; ++i) acc += term(m - i - j);
  return acc;
}

IdentityDescriptor make(std::string id, std::string statement, Variant variant,
                        bool multiplier, Pred applicable, Eval lhs, Eval rhs,
                        Pred explorable = nullptr) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.statement = std::move(statement);
  d.variant = variant;
  d.n_is_multiplier = multiplier;
  d.applicable = std::move(applicable);
  d.explorable = std::move(explorable);
  d.lhs = std::move(lhs);
  d.rhs = std::move(rhs);
  return d;
}

// Shared right side of I-4.2; the printed and corrected variants differ
// only in the coefficient of (n+1-k).
Natural rhs_42(int k, long n, SequenceCache& c, long coeff) {
  Natural acc = k + coeff * (n + 1 - k) - static_cast<long>(k) * (k - 1) / 2;
  acc += double_sum(n - 2 * k, [&](long m) { return F(k, m, c); });
  return acc;
}

// Shared right side of I-4.3: constant term plus sum_{i=0..n-4}(i+1)F(2,n-4-i).
Natural rhs_43(long n, SequenceCache& c, const Natural& constant) {
  Natural acc = constant;
  acc += double_sum(n - 4, [&](long m) { return F(2, m, c); });
  return acc;
}

std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> reg;

  reg.push_back(make(
      "I-3.1", "F(k,n-(k-1)) = F(k,n-k) + F(k,n-(2k-1))  [n >= 2k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return F(k, n - (k - 1), c); },
      [](int k, long n, SequenceCache& c) {
        return Natural(F(k, n - k, c) + F(k, n - (2 * k - 1), c));
      }));

  reg.push_back(make(
      "I-3.2", "F(k,n) = k + sum_{i=0..n-k} F(k,i)  [n >= k+1]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= k + 1; },
      [](int k, long n, SequenceCache& c) { return F(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = k;
        for (long i = 0; i <= n - k; ++i) acc += F(k, i, c);
        return acc;
      }));

  reg.push_back(make(
      "I-3.3", "F(k,n*k) = 1 + sum_{i=1..n} F(k,i*k-1)  [n >= k, n indexes the k-multiple]",
      Variant::AsPrinted, true,
      [](int k, long n) { return n >= k; },
      [](int k, long n, SequenceCache& c) { return F(k, n * k, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = 1;
        for (long i = 1; i <= n; ++i) acc += F(k, i * k - 1, c);
        return acc;
      }));

  reg.push_back(make(
      "I-3.4", "F(k,n) = sum_{i=0..k-1} F(k,n-(k-1)-i)  [n >= 2k-2]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k - 2; },
      [](int k, long n, SequenceCache& c) { return F(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = 0;
        for (long i = 0; i <= k - 1; ++i) acc += F(k, n - (k - 1) - i, c);
        return acc;
      }));

  reg.push_back(make(
      "I-3.5",
      "F(k,n) = F(k,n-1) + F(k,n-2) - sum_{i=0..k-3} F(k,n-(2k-1)+i)  [n >= 2k-1]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k - 1; },
      [](int k, long n, SequenceCache& c) { return F(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = F(k, n - 1, c) + F(k, n - 2, c);
        for (long i = 0; i <= k - 3; ++i) acc -= F(k, n - (2 * k - 1) + i, c);
        return acc;
      }));

  reg.push_back(make(
      "I-3.6", "L(k,n) = L(k,n-1) + L(k,n-k)  [asserted n >= 2k; explored n >= k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return L(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        return Natural(L(k, n - 1, c) + L(k, n - k, c));
      },
      [](int k, long n) { return n >= k; }));

  reg.push_back(make(
      "I-3.7", "L(k,n) = k*F(k,n-(2k-1)) + F(k,n-k)  [n >= 2k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return L(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        return Natural(k * F(k, n - (2 * k - 1), c) + F(k, n - k, c));
      }));

  reg.push_back(make(
      "I-3.8",
      "L(k,n*k+1) = sum_{i=0..n} L(k,i*k)  [asserted n >= 2k; explored n >= 1; n indexes the k-multiple]",
      Variant::AsPrinted, true,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return L(k, n * k + 1, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = 0;
        for (long i = 0; i <= n; ++i) acc += L(k, i * k, c);
        return acc;
      },
      [](int, long n) { return n >= 1; }));

  reg.push_back(make(
      "I-4.1", "F(k,n+k) = F(k,n) + sum_{i=0..k-1} F(k,n-i)  [n >= k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= k; },
      [](int k, long n, SequenceCache& c) { return F(k, n + k, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = F(k, n, c);
        for (long i = 0; i <= k - 1; ++i) acc += F(k, n - i, c);
        return acc;
      }));

  reg.push_back(make(
      "I-4.2p",
      "F(k,n) = k + (k-1)(n+1-k) - k(k-1)/2 + sum_{j=0..n-2k} sum_{i=0..n-2k-j} F(k,n-2k-i-j)  [n >= 2k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return F(k, n, c); },
      [](int k, long n, SequenceCache& c) { return rhs_42(k, n, c, k - 1); }));

  reg.push_back(make(
      "I-4.2c",
      "F(k,n) = k + k(n+1-k) - k(k-1)/2 + sum_{j=0..n-2k} sum_{i=0..n-2k-j} F(k,n-2k-i-j)  [n >= 2k]",
      Variant::Corrected, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return F(k, n, c); },
      [](int k, long n, SequenceCache& c) { return rhs_42(k, n, c, k); }));

  reg.push_back(make(
      "I-4.3p", "F(2,n) = n + sum_{i=0..n-4} (i+1)F(2,n-4-i)  [k = 2, n >= 4]",
      Variant::AsPrinted, false,
      [](int k, long n) { return k == 2 && n >= 4; },
      [](int, long n, SequenceCache& c) { return F(2, n, c); },
      [](int, long n, SequenceCache& c) { return rhs_43(n, c, Natural(n)); }));

  reg.push_back(make(
      "I-4.3c",
      "F(2,n) = 2n-1 + sum_{i=0..n-4} (i+1)F(2,n-4-i)  [k = 2, n >= 4]",
      Variant::Corrected, false,
      [](int k, long n) { return k == 2 && n >= 4; },
      [](int, long n, SequenceCache& c) { return F(2, n, c); },
      [](int, long n, SequenceCache& c) {
        return rhs_43(n, c, Natural(2 * n - 1));
      }));

  reg.push_back(make(
      "I-4.4p",
      "L(k,n) = k + k(k-1) + (k-1)(n+1-(k-1)-k) + (k-1)(n+1-(2k-1)-k) - k(k-1) "
      "+ sum_{j=0..n-2k} sum_{i=0..n-2k-j} L(k,n-2k-i-j)  [n >= 2k]",
      Variant::AsPrinted, false,
      [](int k, long n) { return n >= 2 * k; },
      [](int k, long n, SequenceCache& c) { return L(k, n, c); },
      [](int k, long n, SequenceCache& c) {
        Natural acc = k;
        acc += static_cast<long>(k) * (k - 1);
        acc += static_cast<long>(k - 1) * (n + 1 - (k - 1) - k);
        acc += static_cast<long>(k - 1) * (n + 1 - (2 * k - 1) - k);
        acc -= static_cast<long>(k) * (k - 1);
        acc += double_sum(n - 2 * k, [&](long m) { return L(k, m, c); });
        return acc;
      }));

  reg.push_back(make_cor_45(LucasConvention::GeneralizedBase));

  reg.push_back(make(
      "I-3FN", "F(2,n+2) + F(2,n-2) = 3F(2,n)  [k = 2, n >= 2]",
      Variant::AsPrinted, false,
      [](int k, long n) { return k == 2 && n >= 2; },
      [](int, long n, SequenceCache& c) {
        return Natural(F(2, n + 2, c) + F(2, n - 2, c));
      },
      [](int, long n, SequenceCache& c) { return Natural(3 * F(2, n, c)); }));

  return reg;
}

}  // namespace

IdentityDescriptor make_cor_45(LucasConvention convention) {
  auto small_lucas = [convention](long m, SequenceCache& c) {
    return convention == LucasConvention::GeneralizedBase
               ? gen_lucas(2, m, c)
               : classic_lucas(m, c);
  };
  std::string note = convention == LucasConvention::GeneralizedBase
                         ? "small indices via L(2,m) = m+1"
                         : "small indices via classical 2, 1, 3";
  return make(
      "I-4.5p",
      "L_n = 2(n-2) + sum_{i=0..n-4} (i+1)L_{n-4-i}  [k = 2, n >= 4; " + note +
          "]",
      Variant::AsPrinted, false,
      [](int k, long n) { return k == 2 && n >= 4; },
      [](int, long n, SequenceCache& c) { return classic_lucas(n, c); },
      [small_lucas](int, long n, SequenceCache& c) {
        Natural acc = 2 * (n - 2);
        acc += double_sum(n - 4, [&](long m) { return small_lucas(m, c); });
        return acc;
      });
}

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> reg = build_registry();
  return reg;
}

const IdentityDescriptor& find_identity(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  fail(Errc::UnknownIdentity, "no identity named '" + id + "'");
}

EvaluationRecord evaluate_identity(const IdentityDescriptor& d, int k, long n,
                                   SequenceCache& cache) {
  const bool asserted = d.applicable(k, n);
  if (!asserted && !d.in_exploration_range(k, n))
    fail(Errc::NotApplicable, d.id + " is not applicable at k=" +
                                  std::to_string(k) + ", n=" +
                                  std::to_string(n));
  EvaluationRecord rec;
  rec.identity_id = d.id;
  rec.variant = d.variant;
  rec.k = k;
  rec.n = n;
  rec.lhs_value = d.lhs(k, n, cache);
  rec.rhs_value = d.rhs(k, n, cache);
  rec.matched = rec.lhs_value == rec.rhs_value;
  rec.asserted = asserted;
  return rec;
}

VerificationReport verify_grid(const std::vector<IdentityDescriptor>& ids,
                               GridSpec grid, SequenceCache& cache) {
  if (grid.k_min < 2 || grid.k_max < grid.k_min || grid.n_max < 0)
    fail(Errc::InvalidArgument, "empty or malformed verification grid");
  VerificationReport report;
  grid.ids.clear();
  for (const auto& d : ids) grid.ids.push_back(d.id);
  report.grid = grid;
  for (const auto& d : ids) {
    IdentitySummary s;
    s.id = d.id;
    s.variant = d.variant;
    for (int k = grid.k_min; k <= grid.k_max; ++k) {
      for (long n = 0; n <= grid.n_max; ++n) {
        const bool asserted = d.applicable(k, n);
        const bool explored =
            !asserted && grid.explore && d.in_exploration_range(k, n);
        if (!asserted && !explored) continue;
        EvaluationRecord rec = evaluate_identity(d, k, n, cache);
        if (asserted) {
          ++s.points;
          if (rec.matched) {
            ++s.matched;
          } else {
            ++s.mismatched;
            if (!s.first_counterexample) s.first_counterexample = rec;
          }
        } else {
          ++s.explored;
          if (rec.matched) {
            ++s.explored_matched;
          } else {
            ++s.explored_mismatched;
            if (!s.first_exploration_mismatch)
              s.first_exploration_mismatch = rec;
          }
        }
        report.records.push_back(std::move(rec));
      }
    }
    report.summary.push_back(std::move(s));
  }
  return report;
}

}  // namespace ktile
