#pragma once

#include <stdexcept>
#include <string>

namespace kempelab {

// Typed failure reasons.  Library functions throw Error with one of these
// codes; callers that want to branch on a reason compare codes, not strings.
enum class Err {
  NotSimple,
  NotTriangulation,
  EdgeCountMismatch,
  Disconnected,
  DisconnectedResult,
  EdgeAbsent,
  BadHeader,
  TruncatedRecord,
  CapExceeded,
  ColorNotInPair,
  NotMaximal,
  StaleCanal,
  DegreeNot5,
  PreconditionUnmet,
  InconsistentHolonomy,
  SizeLimit,
  NotATree,
  InconsistentPlan,
  OmegaNotCycle,
  StateSpaceLimit,
  NotFourGon,
  NSAdjacent,
  NoRedChain,
  EmptyFamily,
  UnknownSuite,
  CorpusUnavailable,
  UnsupportedFormat,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what)
      : std::runtime_error(std::string(err_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

}  // namespace kempelab
