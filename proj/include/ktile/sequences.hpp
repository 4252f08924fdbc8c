#ifndef KTILE_SEQUENCES_HPP
#define KTILE_SEQUENCES_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "ktile/errors.hpp"

namespace ktile {

// Sequence values are exact, arbitrary-precision integers. F(2,n) alone
// outgrows 64-bit words near n = 90, and the identity harness needs exact
// equality, so there is no fixed-width fallback anywhere.
using Natural = mpz_class;

enum class SequenceKind { GenFib, GenLucas };

struct SequenceKey {
  SequenceKind kind;
  int k;   // block width, k >= 2
  long n;  // index, n >= 0
  auto operator<=>(const SequenceKey&) const = default;
};

// Memo table shared by the evaluators. Entries are write-once: inserting a
// key that is already present with a different value throws CacheConflict.
// Not synchronized; concurrent users clone one cache per worker.
class SequenceCache {
 public:
  // Null when the key has not been computed yet.
  const Natural* find(const SequenceKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const Natural& insert(const SequenceKey& key, Natural value) {
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      if (it->second != value)
        fail(Errc::CacheConflict, "entry rewritten with a different value");
      return it->second;
    }
    return entries_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const { return entries_.size(); }

  // Ordered by (kind, k, n); keeps saved cache files diff-friendly.
  const std::map<SequenceKey, Natural>& entries() const { return entries_; }

 private:
  std::map<SequenceKey, Natural> entries_;
};

// F(k,n): n+1 for n < k, else F(k,n-1) + F(k,n-k). Fills the cache bottom-up
// from 0, so deep indices (n ~ 1e5) run in constant stack depth.
Natural gen_fib(int k, long n, SequenceCache& cache);

// L(k,n): n+1 for n < 2k, else (k-1)*F(k,n-(2k-1)) + F(k,n-(k-1)).
Natural gen_lucas(int k, long n, SequenceCache& cache);

// Independent second route to L(k,n): seeds L(k,m) = m+1 for m < 2k and
// iterates L(k,n) = L(k,n-1) + L(k,n-k) from n = 2k upward. Between k and
// 2k the base values n+1 do not satisfy that recurrence, so it is applied
// only from 2k (identity I-3.6 explores the gap). Shares no state with
// gen_lucas so the two routes can cross-check each other.
Natural gen_lucas_rec(int k, long n);

// The k = 2 column, shifted indexing: 1, 2, 3, 5, 8, ...
Natural classic_fib(long n, SequenceCache& cache);

// Classical Lucas numbers 2, 1, 3, 4, 7, 11, ... For n >= 3 this equals
// gen_lucas(2, n); at n = 0, 1, 2 the classical constants 2, 1, 3 differ
// from L(2,n) = n+1 and are pinned here.
Natural classic_lucas(long n, SequenceCache& cache);

// Flat text cache files, one entry per line: "<fib|lucas>,<k>,<n>,<value>".
// Loaded entries are trusted as-is; re-derive from scratch when in doubt.
void load_cache_file(const std::string& path, SequenceCache& cache);
void save_cache_file(const std::string& path, const SequenceCache& cache);

}  // namespace ktile

#endif  // KTILE_SEQUENCES_HPP
