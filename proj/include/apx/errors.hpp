#pragma once

#include <stdexcept>
#include <string>

namespace apx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define APX_DEFINE_ERROR(Name)                  \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

APX_DEFINE_ERROR(SingularMatrix);
APX_DEFINE_ERROR(EdgeNotInGraph);
APX_DEFINE_ERROR(NoSuchSpanningTree);
APX_DEFINE_ERROR(NotACycle);
APX_DEFINE_ERROR(DisconnectedGraph);
APX_DEFINE_ERROR(NotFullDimensional);
APX_DEFINE_ERROR(CorrespondenceViolation);
APX_DEFINE_ERROR(NotAValidSharedEdgeDecomposition);
APX_DEFINE_ERROR(PreconditionViolated);
APX_DEFINE_ERROR(NotCorankOne);
APX_DEFINE_ERROR(TreeMissingContractedEdge);
APX_DEFINE_ERROR(UnsupportedCorank);
APX_DEFINE_ERROR(NoValidCyclePair);
APX_DEFINE_ERROR(MorphismViolation);
APX_DEFINE_ERROR(ParseError);
APX_DEFINE_ERROR(InvalidGraph);

#undef APX_DEFINE_ERROR

}  // namespace apx
