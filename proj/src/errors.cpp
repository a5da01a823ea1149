#include "trisph/errors.hpp"

namespace trisph {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::MalformedFace: return "MalformedFace";
    case Err::NotASphere: return "NotASphere";
    case Err::CapExceeded: return "CapExceeded";
    case Err::OutOfRange: return "OutOfRange";
    case Err::FaceNotPresent: return "FaceNotPresent";
    case Err::InvalidGluing: return "InvalidGluing";
    case Err::NotABelt: return "NotABelt";
    case Err::InvalidSplit: return "InvalidSplit";
    case Err::UnknownName: return "UnknownName";
    case Err::NotRealizable: return "NotRealizable";
    case Err::IncompleteCensus: return "IncompleteCensus";
    case Err::CorruptDatabase: return "CorruptDatabase";
  }
  return "Error";
}

}  // namespace trisph
