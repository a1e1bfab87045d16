#include "kempelab/errors.hpp"

namespace kempelab {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotSimple: return "NotSimple";
    case Err::NotTriangulation: return "NotTriangulation";
    case Err::EdgeCountMismatch: return "EdgeCountMismatch";
    case Err::Disconnected: return "Disconnected";
    case Err::DisconnectedResult: return "DisconnectedResult";
    case Err::EdgeAbsent: return "EdgeAbsent";
    case Err::BadHeader: return "BadHeader";
    case Err::TruncatedRecord: return "TruncatedRecord";
    case Err::CapExceeded: return "CapExceeded";
    case Err::ColorNotInPair: return "ColorNotInPair";
    case Err::NotMaximal: return "NotMaximal";
    case Err::StaleCanal: return "StaleCanal";
    case Err::DegreeNot5: return "DegreeNot5";
    case Err::PreconditionUnmet: return "PreconditionUnmet";
    case Err::InconsistentHolonomy: return "InconsistentHolonomy";
    case Err::SizeLimit: return "SizeLimit";
    case Err::NotATree: return "NotATree";
    case Err::InconsistentPlan: return "InconsistentPlan";
    case Err::OmegaNotCycle: return "OmegaNotCycle";
    case Err::StateSpaceLimit: return "StateSpaceLimit";
    case Err::NotFourGon: return "NotFourGon";
    case Err::NSAdjacent: return "NSAdjacent";
    case Err::NoRedChain: return "NoRedChain";
    case Err::EmptyFamily: return "EmptyFamily";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::CorpusUnavailable: return "CorpusUnavailable";
    case Err::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

}  // namespace kempelab
