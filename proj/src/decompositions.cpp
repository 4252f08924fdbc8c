#include "ktile/decompositions.hpp"

#include <algorithm>

namespace ktile {

const char* kind_name(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::LastPiece:        return "last-piece";
    case DecompositionKind::RightmostGray:    return "rightmost-gray";
    case DecompositionKind::TrailingWhiteRun: return "trailing-white-run";
    case DecompositionKind::BeforeTail:       return "before-tail";
    case DecompositionKind::LastTwoGrays:     return "last-two-grays";
  }
  return "unknown";
}

std::optional<DecompositionKind> kind_from_name(const std::string& name) {
  if (name == "last-piece") return DecompositionKind::LastPiece;
  if (name == "rightmost-gray") return DecompositionKind::RightmostGray;
  if (name == "trailing-white-run") return DecompositionKind::TrailingWhiteRun;
  if (name == "before-tail") return DecompositionKind::BeforeTail;
  if (name == "last-two-grays") return DecompositionKind::LastTwoGrays;
  return std::nullopt;
}

namespace {

void require_type_a(const Tiling& t) {
  if (!is_type_a(t))
    fail(Errc::NotTypeA, "decomposition needs a type-A tiling");
}

long width_of(const std::vector<Piece>& pieces, int k) {
  long w = 0;
  for (Piece p : pieces) w += piece_width(p, k);
  return w;
}

// Splits off the suffix starting at piece index `from`.
Decomposition split_suffix(DecompositionKind kind, const Tiling& t,
                           std::size_t from) {
  Decomposition d;
  d.kind = kind;
  d.removed.assign(t.pieces.begin() + static_cast<std::ptrdiff_t>(from),
                   t.pieces.end());
  d.remainder.k = t.k;
  d.remainder.pieces.assign(t.pieces.begin(),
                            t.pieces.begin() + static_cast<std::ptrdiff_t>(from));
  d.remainder.board_length = t.board_length - width_of(d.removed, t.k);
  return d;
}

}  // namespace

Tiling reassemble(const Decomposition& d) {
  Tiling t = d.remainder;
  std::size_t at = t.pieces.size();
  if (d.kind == DecompositionKind::BeforeTail)
    at = static_cast<std::size_t>(d.params.at("insert_index"));
  t.pieces.insert(t.pieces.begin() + static_cast<std::ptrdiff_t>(at),
                  d.removed.begin(), d.removed.end());
  t.board_length += width_of(d.removed, t.k);
  return t;
}

Decomposition split_last_piece(const Tiling& t) {
  require_type_a(t);
  if (t.n() < t.k)
    fail(Errc::BoardTooSmall,
         "needs n >= k so the last piece is never the black square");
  return split_suffix(DecompositionKind::LastPiece, t, t.pieces.size() - 1);
}

Decomposition split_rightmost_gray(const Tiling& t) {
  require_type_a(t);
  auto it = std::find(t.pieces.rbegin(), t.pieces.rend(), Piece::Gray);
  if (it == t.pieces.rend())
    fail(Errc::NoGrayPresent, "tiling has no gray block");
  std::size_t gray_idx =
      static_cast<std::size_t>(t.pieces.rend() - it) - 1;
  Decomposition d = split_suffix(DecompositionKind::RightmostGray, t, gray_idx);
  d.params["j"] = static_cast<long>(t.pieces.size() - gray_idx - 1);
  return d;
}

Decomposition split_trailing_white_run(const Tiling& t) {
  require_type_a(t);
  std::size_t from = t.pieces.size();
  while (from > 0 && t.pieces[from - 1] == Piece::White) --from;
  Decomposition d =
      split_suffix(DecompositionKind::TrailingWhiteRun, t, from);
  d.params["r"] = static_cast<long>(d.removed.size());
  return d;
}

Decomposition split_before_tail(const Tiling& t) {
  if (!is_type_b(t))
    fail(Errc::NotTypeB, "before-tail split needs a type-B tiling");
  if (t.n() < 2 * t.k)
    fail(Errc::NoPieceBeforeTail,
         "no tail admits a preceding piece when n < 2k");
  TailDescriptor td = tail(t);
  if (td.start_piece_index == 0)
    fail(Errc::NoPieceBeforeTail, "tail spans the whole tiling");
  const std::size_t cut = td.start_piece_index - 1;
  Decomposition d;
  d.kind = DecompositionKind::BeforeTail;
  d.removed = {t.pieces[cut]};
  d.remainder.k = t.k;
  d.remainder.pieces = t.pieces;
  d.remainder.pieces.erase(d.remainder.pieces.begin() +
                           static_cast<std::ptrdiff_t>(cut));
  d.remainder.board_length =
      t.board_length - piece_width(t.pieces[cut], t.k);
  d.params["insert_index"] = static_cast<long>(cut);
  d.params["remainder_type_b"] = is_type_b(d.remainder) ? 1 : 0;
  return d;
}

Decomposition split_last_two_grays(const Tiling& t) {
  require_type_a(t);
  std::vector<std::size_t> grays;
  for (std::size_t i = 0; i < t.pieces.size(); ++i)
    if (t.pieces[i] == Piece::Gray) grays.push_back(i);
  if (grays.size() < 2)
    fail(Errc::FewerThanTwoGrays, "needs at least two gray blocks, got " +
                                      std::to_string(grays.size()));
  const std::size_t g1 = grays[grays.size() - 2];
  const std::size_t g2 = grays[grays.size() - 1];
  Decomposition d = split_suffix(DecompositionKind::LastTwoGrays, t, g1);
  d.params["i"] = static_cast<long>(g2 - g1 - 1);
  d.params["j"] = static_cast<long>(t.pieces.size() - g2 - 1);
  return d;
}

}  // namespace ktile
