#include "nichebench/error.hpp"

namespace nichebench {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownCode: return "UnknownCode";
    case ErrorKind::UnknownInstitution: return "UnknownInstitution";
    case ErrorKind::UnknownRegion: return "UnknownRegion";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::EmptyScope: return "EmptyScope";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InsufficientTaxonomy: return "InsufficientTaxonomy";
    case ErrorKind::TooManyInstitutions: return "TooManyInstitutions";
  }
  return "Unknown";
}

}  // namespace nichebench
