#include "vty/error.hpp"

namespace vty {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnresolvedReference: return "UNRESOLVED_REFERENCE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DepthExplosion: return "DEPTH_EXPLOSION";
    case ErrorCode::AtomCapExceeded: return "ATOM_CAP_EXCEEDED";
    case ErrorCode::SubsetCapExceeded: return "SUBSET_CAP_EXCEEDED";
    case ErrorCode::MapUndefined: return "MAP_UNDEFINED";
    case ErrorCode::UndeclaredAxiom: return "UNDECLARED_AXIOM";
    case ErrorCode::DecodeError: return "DECODE_ERROR";
    case ErrorCode::BadSymbol: return "BAD_SYMBOL";
    case ErrorCode::EnumerationCapExceeded: return "ENUMERATION_CAP_EXCEEDED";
  }
  return "UNKNOWN";
}

}  // namespace vty
