#include "etheta/family.hpp"

#include <algorithm>

#include "etheta/error.hpp"

namespace etheta {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::MissingEmpty: return "MissingEmpty";
    case ErrorCode::MissingFull: return "MissingFull";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::MemberOutOfRange: return "MemberOutOfRange";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalCharacterizationMismatch: return "InternalCharacterizationMismatch";
  }
  return "Error";
}

SetFamily::SetFamily(int width, std::vector<PointSet> members)
    : width_(width), members_(std::move(members)) {
  if (width_ < 0 || width_ > kMaxPoints)
    throw Error(ErrorCode::CarrierTooLarge,
                "family width " + std::to_string(width_) + " exceeds " +
                    std::to_string(kMaxPoints));
  const Mask limit = PointSet::full(width_).bits;
  for (PointSet s : members_)
    if ((s.bits & ~limit) != 0)
      throw Error(ErrorCode::MemberOutOfRange, "member has bits outside the carrier");
  std::sort(members_.begin(), members_.end(),
            [](PointSet a, PointSet b) { return canonical_less(a, b); });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_.assign(std::size_t(1) << width_, false);
  for (PointSet s : members_) index_[s.bits] = true;
}

}  // namespace etheta
