#ifndef KTILE_IDENTITIES_HPP
#define KTILE_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktile/sequences.hpp"

namespace ktile {

enum class Variant { AsPrinted, Corrected };

inline const char* variant_name(Variant v) {
  return v == Variant::AsPrinted ? "as-printed" : "corrected";
}

// Reading of the small Lucas indices L_0, L_1, L_2 used by I-4.5p's right
// side: either the generalized base values L(2,m) = m+1 or the classical
// constants 2, 1, 3. Neither reading makes the printed identity hold
// everywhere; the registry ships the generalized one and the CLI can flip.
enum class LucasConvention { GeneralizedBase, ClassicalConstants };

// One identity over F(k,.) and L(k,.): an applicability range that the
// identity is asserted on, an optional wider exploration range whose
// results are reported but never gate anything, and exact evaluators for
// both sides. For I-3.3 and I-3.8 the free variable n indexes the
// k-multiple (the board grows as n*k), and grids iterate that index.
struct IdentityDescriptor {
  std::string id;
  std::string statement;
  Variant variant = Variant::AsPrinted;
  bool n_is_multiplier = false;
  std::function<bool(int k, long n)> applicable;
  std::function<bool(int k, long n)> explorable;  // null: same as applicable
  std::function<Natural(int k, long n, SequenceCache&)> lhs;
  std::function<Natural(int k, long n, SequenceCache&)> rhs;

  bool in_exploration_range(int k, long n) const {
    return explorable ? explorable(k, n) : applicable(k, n);
  }
};

struct EvaluationRecord {
  std::string identity_id;
  Variant variant = Variant::AsPrinted;
  int k = 0;
  long n = 0;
  Natural lhs_value;
  Natural rhs_value;
  bool matched = false;
  // True when (k,n) lies in the asserted range; false for exploration-only
  // points, which never affect pass/fail verdicts or exit codes.
  bool asserted = true;
};

struct IdentitySummary {
  std::string id;
  Variant variant = Variant::AsPrinted;
  long points = 0;      // asserted evaluations
  long matched = 0;
  long mismatched = 0;
  std::optional<EvaluationRecord> first_counterexample;
  long explored = 0;    // exploration-only evaluations
  long explored_matched = 0;
  long explored_mismatched = 0;
  std::optional<EvaluationRecord> first_exploration_mismatch;
};

struct GridSpec {
  int k_min = 2;
  int k_max = 6;
  long n_max = 40;
  bool explore = false;
  std::vector<std::string> ids;  // filled in by verify_grid
};

struct VerificationReport {
  GridSpec grid;
  std::vector<EvaluationRecord> records;
  std::vector<IdentitySummary> summary;

  // All asserted points of all selected identities matched.
  bool all_matched() const {
    for (const auto& s : summary)
      if (s.mismatched > 0) return false;
    return true;
  }
};

// The full registry, fixed order: I-3.1 ... I-3.8, I-4.1, I-4.2p, I-4.2c,
// I-4.3p, I-4.3c, I-4.4p, I-4.5p, I-3FN.
const std::vector<IdentityDescriptor>& registry();

// Registry entry by id; throws UnknownIdentity.
const IdentityDescriptor& find_identity(const std::string& id);

// I-4.5p under either small-index convention (the registry carries the
// GeneralizedBase one).
IdentityDescriptor make_cor_45(LucasConvention convention);

// Evaluates one point. Points outside even the exploration range throw
// NotApplicable; points inside the exploration range but outside the
// asserted range come back with asserted = false.
EvaluationRecord evaluate_identity(const IdentityDescriptor& d, int k, long n,
                                   SequenceCache& cache);

// Evaluates every selected identity at every applicable (k,n) of the grid,
// in deterministic order (identity, then k, then n). With grid.explore set,
// exploration-band points are evaluated too and marked non-asserted.
VerificationReport verify_grid(const std::vector<IdentityDescriptor>& ids,
                               GridSpec grid, SequenceCache& cache);

}  // namespace ktile

#endif  // KTILE_IDENTITIES_HPP
