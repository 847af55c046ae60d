#pragma once

#include <stdexcept>
#include <string>

namespace mitosiskit {

#define MITOSISKIT_ERROR(Name)                                   \
  struct Name : std::runtime_error {                             \
    explicit Name(const std::string& what)                       \
        : std::runtime_error(std::string(#Name) + ": " + what) {} \
  }

MITOSISKIT_ERROR(UnboundedPolytope);
MITOSISKIT_ERROR(EmptyPolytope);
MITOSISKIT_ERROR(EmptyFace);
MITOSISKIT_ERROR(LatticeMismatch);
MITOSISKIT_ERROR(RankTooLarge);
MITOSISKIT_ERROR(UnsupportedKind);
MITOSISKIT_ERROR(NonMinimalFaceSet);
MITOSISKIT_ERROR(AmbiguousTieBreak);
MITOSISKIT_ERROR(InvalidCell);
MITOSISKIT_ERROR(NoConeStructure);
MITOSISKIT_ERROR(InterpolationRankDeficient);
MITOSISKIT_ERROR(NoAdmissibleWord);
MITOSISKIT_ERROR(TransversalityFailure);
MITOSISKIT_ERROR(DependentBasis);
MITOSISKIT_ERROR(NotSimple);

#undef MITOSISKIT_ERROR

}  // namespace mitosiskit
