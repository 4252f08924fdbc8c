#ifndef KTILE_TILINGS_HPP
#define KTILE_TILINGS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktile/errors.hpp"

namespace ktile {

// A piece is a white unit square, a black unit square, or a gray 1xk block.
// The enumerator value doubles as the code character.
enum class Piece : char { White = 'w', Black = 'b', Gray = 'g' };

inline long piece_width(Piece p, int k) { return p == Piece::Gray ? k : 1; }

// Plain container for one tiling of a 1x(n+1) board. Validity (widths fill
// the board, exactly one black square, black square within the first k
// cells) is checked by the predicates below, not enforced on construction;
// decompositions deliberately produce remainders that may fall outside the
// valid classes.
struct Tiling {
  int k = 2;
  long board_length = 0;  // n + 1 cells
  std::vector<Piece> pieces;

  long n() const { return board_length - 1; }
  bool operator==(const Tiling&) const = default;
};

// 1-based cell index of the unique black square.
long black_cell(const Tiling& t);

// Class membership. Type A: piece widths sum to n+1, exactly one black
// square, and the black square's cell is <= k. Type B adds:
//   n <  k  : nothing further;
//   k <= n < 2k : at least n-k+1 pieces after the black square, of which
//                 at least n-k are white;
//   n >= 2k : at least k-1 white squares among the last k pieces (fewer
//             than k pieces fails).
// Malformed input of any shape returns false.
bool is_type_a(int k, long n, const std::vector<Piece>& pieces);
bool is_type_b(int k, long n, const std::vector<Piece>& pieces);
bool is_type_a(const Tiling& t);
bool is_type_b(const Tiling& t);

// Enumeration is exhaustive and therefore bounded; n above the limit throws
// LimitExceeded. The CLI lets KTILE_ENUM_LIMIT or --limit override this.
inline constexpr long kDefaultEnumLimit = 24;

// Visit every type-A (resp. type-B) tiling of the 1x(n+1) board exactly
// once, in lexicographic order of the code strings (alphabet b < g < w).
void for_each_type_a(int k, long n, const std::function<void(const Tiling&)>& fn,
                     long limit = kDefaultEnumLimit);
void for_each_type_b(int k, long n, const std::function<void(const Tiling&)>& fn,
                     long limit = kDefaultEnumLimit);

std::vector<Tiling> enumerate_type_a(int k, long n, long limit = kDefaultEnumLimit);
std::vector<Tiling> enumerate_type_b(int k, long n, long limit = kDefaultEnumLimit);

enum class TailSize { KMinus1, K };

// Tail of a type-B tiling with n >= 2k: the last k pieces when they contain
// a gray block anywhere past the leading slot, otherwise the last k-1
// pieces (then all white). A k-piece suffix that starts with its gray ends
// in k-1 whites and lands in the k-1 case.
struct TailDescriptor {
  TailSize size;
  std::size_t start_piece_index;  // 0-based index of the first tail piece
  // Size-K tails only: position of the gray counted in pieces from the tail
  // end, so 1 means the tiling ends with the gray and k-1 means the gray
  // sits right after the tail's first piece. Ranges over 1..k-1.
  std::optional<int> gray_offset;
};

TailDescriptor tail(const Tiling& t);

// One code character per piece: 'w', 'b', 'g'.
std::string encode(const Tiling& t);
std::string code_of(const std::vector<Piece>& pieces);

// Parses and validates; throws MalformedCode for characters outside the
// alphabet and InvariantViolation when the decoded sequence is not a valid
// type-A tiling of the 1x(n+1) board.
Tiling decode(int k, long n, const std::string& code);

}  // namespace ktile

#endif  // KTILE_TILINGS_HPP
