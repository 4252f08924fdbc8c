#ifndef KTILE_ERRORS_HPP
#define KTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktile {

// Failure reasons surfaced by the library. The CLI maps every one of these
// to exit code 2 (usage / bad input), keeping exit code 1 for verified
// identity mismatches.
enum class Errc {
  InvalidArgument,
  LimitExceeded,
  MalformedCode,
  InvariantViolation,
  NotTypeA,
  NotTypeB,
  BoardTooSmall,
  NoGrayPresent,
  FewerThanTwoGrays,
  NoPieceBeforeTail,
  NotApplicable,
  UnknownIdentity,
  CacheConflict,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument:    return "invalid-argument";
    case Errc::LimitExceeded:      return "limit-exceeded";
    case Errc::MalformedCode:      return "malformed-code";
    case Errc::InvariantViolation: return "invariant-violation";
    case Errc::NotTypeA:           return "not-type-a";
    case Errc::NotTypeB:           return "not-type-b";
    case Errc::BoardTooSmall:      return "board-too-small";
    case Errc::NoGrayPresent:      return "no-gray-present";
    case Errc::FewerThanTwoGrays:  return "fewer-than-two-grays";
    case Errc::NoPieceBeforeTail:  return "no-piece-before-tail";
    case Errc::NotApplicable:      return "not-applicable";
    case Errc::UnknownIdentity:    return "unknown-identity";
    case Errc::CacheConflict:      return "cache-conflict";
    case Errc::IoError:            return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ktile

#endif  // KTILE_ERRORS_HPP
