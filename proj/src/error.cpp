#include "roughmap/error.hpp"

namespace roughmap {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyUniverse: return "EmptyUniverse";
    case Errc::BadLabels: return "BadLabels";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MixedUniverse: return "MixedUniverse";
    case Errc::BadElement: return "BadElement";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotEquivalence: return "NotEquivalence";
    case Errc::BadImage: return "BadImage";
    case Errc::EmptyReference: return "EmptyReference";
    case Errc::NoSurjection: return "NoSurjection";
    case Errc::BadInstance: return "BadInstance";
    case Errc::BadCursor: return "BadCursor";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::IoError: return "IoError";
    case Errc::UnknownClaim: return "UnknownClaim";
  }
  return "Unknown";
}

}  // namespace roughmap
