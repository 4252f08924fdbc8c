#ifndef KTILE_DECOMPOSITIONS_HPP
#define KTILE_DECOMPOSITIONS_HPP

#include <map>
#include <optional>
#include <string>

#include "ktile/tilings.hpp"

namespace ktile {

enum class DecompositionKind {
  LastPiece,
  RightmostGray,
  TrailingWhiteRun,
  BeforeTail,
  LastTwoGrays,
};

const char* kind_name(DecompositionKind kind);
std::optional<DecompositionKind> kind_from_name(const std::string& name);

// Result of removing a structured block of pieces from a tiling. The
// remainder keeps the original k with a shortened board; reassemble()
// reproduces the input exactly. BeforeTail removes an interior piece, so
// its params carry the reinsertion index; every other kind removes a
// suffix. BeforeTail's black case leaves a remainder without a black
// square, which no longer belongs to any tiling class.
struct Decomposition {
  DecompositionKind kind;
  Tiling remainder;
  std::vector<Piece> removed;
  std::map<std::string, long> params;
};

Tiling reassemble(const Decomposition& d);

// Removes the final piece of a type-A tiling with n >= k (always white or
// gray there, never black). params: none.
Decomposition split_last_piece(const Tiling& t);

// Removes the rightmost gray block and the j trailing whites after it from
// a type-A tiling. params: j.
Decomposition split_rightmost_gray(const Tiling& t);

// Removes the maximal trailing run of white squares (possibly empty) from a
// type-A tiling. params: r (run length).
Decomposition split_trailing_white_run(const Tiling& t);

// Removes the single piece immediately preceding the tail of a type-B
// tiling with n >= 2k. The removed piece is white, gray, or (on boards with
// n <= 3k-2) the black square itself; whether the shortened sequence is
// still type B is checked and recorded, never assumed. params:
// insert_index (piece slot the removed piece goes back into),
// remainder_type_b (0/1).
Decomposition split_before_tail(const Tiling& t);

// Removes the suffix starting at the second-to-last gray: gray, i whites,
// gray, j whites. Requires a type-A tiling with at least two grays.
// params: i, j.
Decomposition split_last_two_grays(const Tiling& t);

}  // namespace ktile

#endif  // KTILE_DECOMPOSITIONS_HPP
