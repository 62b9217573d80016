#pragma once

#include <stdexcept>
#include <string>

namespace pipeforge {

// Base of every recoverable failure raised by the library. Command handlers
// translate these into process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PIPEFORGE_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

PIPEFORGE_DEFINE_ERROR(LexError);
PIPEFORGE_DEFINE_ERROR(DuplicateLabel);
PIPEFORGE_DEFINE_ERROR(MissingEstimatorCategory);
PIPEFORGE_DEFINE_ERROR(FormatError);
PIPEFORGE_DEFINE_ERROR(DimensionMismatch);
PIPEFORGE_DEFINE_ERROR(EmptyIndex);
PIPEFORGE_DEFINE_ERROR(InvalidGraph);
PIPEFORGE_DEFINE_ERROR(InvalidTrace);
PIPEFORGE_DEFINE_ERROR(VocabMismatch);
PIPEFORGE_DEFINE_ERROR(DivergedLoss);
PIPEFORGE_DEFINE_ERROR(NoValidGraph);
PIPEFORGE_DEFINE_ERROR(NoEstimator);
PIPEFORGE_DEFINE_ERROR(EmptyTarget);
PIPEFORGE_DEFINE_ERROR(BudgetExhausted);
PIPEFORGE_DEFINE_ERROR(LengthMismatch);
PIPEFORGE_DEFINE_ERROR(ZeroVariance);
PIPEFORGE_DEFINE_ERROR(DegenerateSequence);
PIPEFORGE_DEFINE_ERROR(InvalidArgument);

#undef PIPEFORGE_DEFINE_ERROR

}  // namespace pipeforge
