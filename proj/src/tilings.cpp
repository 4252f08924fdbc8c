#include "ktile/tilings.hpp"

#include <algorithm>

namespace ktile {

long black_cell(const Tiling& t) {
  long cell = 1;
  for (Piece p : t.pieces) {
    if (p == Piece::Black) return cell;
    cell += piece_width(p, t.k);
  }
  fail(Errc::InvariantViolation, "tiling has no black square");
}

bool is_type_a(int k, long n, const std::vector<Piece>& pieces) {
  if (k < 2 || n < 0) return false;
  long width = 0;
  int blacks = 0;
  long black_at = 0;
  for (Piece p : pieces) {
    if (p != Piece::White && p != Piece::Black && p != Piece::Gray)
      return false;
    if (p == Piece::Black) {
      ++blacks;
      black_at = width + 1;
    }
    width += piece_width(p, k);
  }
  return width == n + 1 && blacks == 1 && black_at <= k;
}

bool is_type_b(int k, long n, const std::vector<Piece>& pieces) {
  if (!is_type_a(k, n, pieces)) return false;
  if (n < k) return true;
  const long m = static_cast<long>(pieces.size());
  if (n < 2 * k) {
    long black_idx = 0;
    for (long i = 0; i < m; ++i)
      if (pieces[i] == Piece::Black) black_idx = i;
    long after = m - 1 - black_idx;
    long whites_after = 0;
    for (long i = black_idx + 1; i < m; ++i)
      if (pieces[i] == Piece::White) ++whites_after;
    return after >= n - k + 1 && whites_after >= n - k;
  }
  if (m < k) return false;
  long whites_in_suffix = 0;
  for (long i = m - k; i < m; ++i)
    if (pieces[i] == Piece::White) ++whites_in_suffix;
  return whites_in_suffix >= k - 1;
}

bool is_type_a(const Tiling& t) { return is_type_a(t.k, t.n(), t.pieces); }
bool is_type_b(const Tiling& t) { return is_type_b(t.k, t.n(), t.pieces); }

namespace {

// Depth-first generation trying pieces in code order b < g < w, which makes
// the emission order lexicographic on codes. Branches that can no longer
// place the black square within the first k cells are cut.
void generate(int k, long remaining, bool black_used, long next_cell,
              std::vector<Piece>& prefix,
              const std::function<void(const Tiling&)>& fn, long n) {
  if (!black_used && next_cell > k) return;
  if (remaining == 0) {
    if (black_used) fn(Tiling{k, n + 1, prefix});
    return;
  }
  if (!black_used && next_cell <= k) {
    prefix.push_back(Piece::Black);
    generate(k, remaining - 1, true, next_cell + 1, prefix, fn, n);
    prefix.pop_back();
  }
  if (remaining >= k) {
    prefix.push_back(Piece::Gray);
    generate(k, remaining - k, black_used, next_cell + k, prefix, fn, n);
    prefix.pop_back();
  }
  prefix.push_back(Piece::White);
  generate(k, remaining - 1, black_used, next_cell + 1, prefix, fn, n);
  prefix.pop_back();
}

void check_enum_args(int k, long n, long limit) {
  if (k < 2)
    fail(Errc::InvalidArgument, "k must be >= 2, got " + std::to_string(k));
  if (n < 0)
    fail(Errc::InvalidArgument, "n must be >= 0, got " + std::to_string(n));
  if (n > limit)
    fail(Errc::LimitExceeded, "n = " + std::to_string(n) +
                                  " exceeds the enumeration bound " +
                                  std::to_string(limit));
}

}  // namespace

void for_each_type_a(int k, long n, const std::function<void(const Tiling&)>& fn,
                     long limit) {
  check_enum_args(k, n, limit);
  std::vector<Piece> prefix;
  generate(k, n + 1, false, 1, prefix, fn, n);
}

void for_each_type_b(int k, long n, const std::function<void(const Tiling&)>& fn,
                     long limit) {
  for_each_type_a(
      k, n,
      [&](const Tiling& t) {
        if (is_type_b(t)) fn(t);
      },
      limit);
}

std::vector<Tiling> enumerate_type_a(int k, long n, long limit) {
  std::vector<Tiling> out;
  for_each_type_a(k, n, [&](const Tiling& t) { out.push_back(t); }, limit);
  return out;
}

std::vector<Tiling> enumerate_type_b(int k, long n, long limit) {
  std::vector<Tiling> out;
  for_each_type_b(k, n, [&](const Tiling& t) { out.push_back(t); }, limit);
  return out;
}

TailDescriptor tail(const Tiling& t) {
  if (!is_type_b(t)) fail(Errc::NotTypeB, "tail is defined on type-B tilings");
  const int k = t.k;
  if (t.n() < 2 * k)
    fail(Errc::BoardTooSmall,
         "tail needs n >= 2k, got n = " + std::to_string(t.n()));
  const std::size_t m = t.pieces.size();  // type B at n >= 2k forces m >= k
  const std::size_t suffix = m - static_cast<std::size_t>(k);
  std::optional<std::size_t> gray_at;
  for (std::size_t i = suffix + 1; i < m; ++i)
    if (t.pieces[i] == Piece::Gray) gray_at = i;
  if (gray_at)
    return {TailSize::K, suffix, static_cast<int>(m - *gray_at)};
  return {TailSize::KMinus1, m - static_cast<std::size_t>(k - 1),
          std::nullopt};
}

std::string encode(const Tiling& t) { return code_of(t.pieces); }

std::string code_of(const std::vector<Piece>& pieces) {
  std::string s;
  s.reserve(pieces.size());
  for (Piece p : pieces) s.push_back(static_cast<char>(p));
  return s;
}

Tiling decode(int k, long n, const std::string& code) {
  if (k < 2)
    fail(Errc::InvalidArgument, "k must be >= 2, got " + std::to_string(k));
  if (n < 0)
    fail(Errc::InvalidArgument, "n must be >= 0, got " + std::to_string(n));
  Tiling t{k, n + 1, {}};
  t.pieces.reserve(code.size());
  for (char c : code) {
    if (c != 'w' && c != 'b' && c != 'g')
      fail(Errc::MalformedCode,
           std::string("unexpected character '") + c + "' in code");
    t.pieces.push_back(static_cast<Piece>(c));
  }
  if (!is_type_a(t)) {
    long width = 0;
    int blacks = 0;
    long black_at = -1;
    for (Piece p : t.pieces) {
      if (p == Piece::Black) {
        ++blacks;
        black_at = width + 1;
      }
      width += piece_width(p, k);
    }
    if (width != n + 1)
      fail(Errc::InvariantViolation,
           "widths sum to " + std::to_string(width) + ", board needs " +
               std::to_string(n + 1));
    if (blacks != 1)
      fail(Errc::InvariantViolation,
           "expected exactly one black square, got " + std::to_string(blacks));
    fail(Errc::InvariantViolation,
         "black square at cell " + std::to_string(black_at) +
             " outside the first " + std::to_string(k) + " positions");
  }
  return t;
}

}  // namespace ktile
