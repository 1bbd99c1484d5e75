#ifndef SHADOWCOVER_ERRORS_HPP
#define SHADOWCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace shadowcover {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SHADOWCOVER_DEFINE_ERROR(Name)            \
  struct Name : Error {                           \
    using Error::Error;                           \
  }

SHADOWCOVER_DEFINE_ERROR(RankDeficient);
SHADOWCOVER_DEFINE_ERROR(Singular);
SHADOWCOVER_DEFINE_ERROR(SingularMap);
SHADOWCOVER_DEFINE_ERROR(NumericalFailure);
SHADOWCOVER_DEFINE_ERROR(DimensionMismatch);
SHADOWCOVER_DEFINE_ERROR(DegenerateInput);
SHADOWCOVER_DEFINE_ERROR(ZeroDirection);
SHADOWCOVER_DEFINE_ERROR(Unbounded);
SHADOWCOVER_DEFINE_ERROR(BadParameter);
SHADOWCOVER_DEFINE_ERROR(BadBasis);
SHADOWCOVER_DEFINE_ERROR(BadStrategy);
SHADOWCOVER_DEFINE_ERROR(BadCodimension);
SHADOWCOVER_DEFINE_ERROR(NotASimplex);
SHADOWCOVER_DEFINE_ERROR(PointBody);
SHADOWCOVER_DEFINE_ERROR(ZeroVolume);
SHADOWCOVER_DEFINE_ERROR(IllConditioned);
SHADOWCOVER_DEFINE_ERROR(SweepInconclusive);

#undef SHADOWCOVER_DEFINE_ERROR

/// Raised when a containment pipeline detects that its covering
/// hypothesis does not actually hold; carries the offending direction.
struct PreconditionFailed : Error {
  std::vector<double> direction;
  PreconditionFailed(const std::string& what, std::vector<double> dir)
      : Error(what), direction(std::move(dir)) {}
};

}  // namespace shadowcover

#endif
