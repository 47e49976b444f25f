#include "gpab/error.hpp"

namespace gpab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NonPrimePower: return "NonPrimePower";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::DominationFails: return "DominationFails";
    case ErrorCode::NotComponentUnion: return "NotComponentUnion";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotAGraphAutomorphism: return "NotAGraphAutomorphism";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotAnInnerCandidate: return "NotAnInnerCandidate";
    case ErrorCode::NotRestrictable: return "NotRestrictable";
    case ErrorCode::KernelNotPreserved: return "KernelNotPreserved";
    case ErrorCode::NotInAutZero: return "NotInAutZero";
    case ErrorCode::NotInOutOneInf: return "NotInOutOneInf";
    case ErrorCode::NotConnectedOrIsStar: return "NotConnectedOrIsStar";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace gpab
