#include "sheafcalc/error.hpp"

namespace sheafcalc {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonIntegralChernClass: return "NonIntegralChernClass";
    case ErrorKind::NonIntegralChi: return "NonIntegralChi";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::NotComputable: return "NotComputable";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::RankError: return "RankError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::MissingInvariant: return "MissingInvariant";
    case ErrorKind::HypothesisError: return "HypothesisError";
    case ErrorKind::NegativeLength: return "NegativeLength";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::NegativeCurveClass: return "NegativeCurveClass";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidThreefold: return "InvalidThreefold";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "UnknownError";
}

}  // namespace sheafcalc
