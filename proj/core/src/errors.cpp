#include "crb/errors.hpp"

namespace crb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Reducible: return "ReducibleError";
    case ErrorKind::Sigma: return "SigmaError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::DegenerateCrossRatio: return "DegenerateCrossRatio";
    case ErrorKind::OutsideK: return "OutsideK";
    case ErrorKind::FieldLacksI: return "FieldLacksI";
    case ErrorKind::DegenerateArgument: return "DegenerateArgument";
    case ErrorKind::IllegalRelationInMode: return "IllegalRelationInMode";
    case ErrorKind::OutsideFamily: return "OutsideFamily";
    case ErrorKind::UnfactoredElement: return "UnfactoredElement";
    case ErrorKind::InconsistentStructure: return "InconsistentStructure";
    case ErrorKind::FieldExtensionRequired: return "FieldExtensionRequired";
    case ErrorKind::MissingPairings: return "MissingPairings";
    case ErrorKind::MissingGeometry: return "MissingGeometry";
    case ErrorKind::CartanMismatch: return "CartanMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::RootIsolation: return "RootIsolationError";
  }
  return "Error";
}

}  // namespace crb
