#pragma once

#include <stdexcept>
#include <string>

namespace tessparam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TESSPARAM_ERROR(Name)              \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

TESSPARAM_ERROR(ParseError);
TESSPARAM_ERROR(InvalidParams);
TESSPARAM_ERROR(DegenerateCellIntensity);
TESSPARAM_ERROR(InfeasibleCyclic);
TESSPARAM_ERROR(InfeasibleUpstream);
TESSPARAM_ERROR(InvalidPlanar);
TESSPARAM_ERROR(NegativeInterior);
TESSPARAM_ERROR(InvalidShares);
TESSPARAM_ERROR(UnknownEntry);
TESSPARAM_ERROR(NotATessellation);
TESSPARAM_ERROR(NonConvexCell);
TESSPARAM_ERROR(InvalidGeneratorParams);

#undef TESSPARAM_ERROR

}  // namespace tessparam
