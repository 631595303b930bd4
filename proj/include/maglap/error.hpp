#pragma once

#include <stdexcept>
#include <string>

namespace maglap {

/// Domain error with a machine-checkable code.
class Error : public std::runtime_error {
public:
  enum class Code {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    BadEdgeId,
    Disconnected,
    NotAMatching,
    NotAChord,
    NotClosed,
    SizeMismatch,
    GraphMismatch,
    EigenSolverFailure,
    CycleTooSmall,
    BadShift,
    NotApplicable,
    SoundnessViolation,
    BudgetExceeded,
    ParseError,
    InvalidArgument,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

private:
  Code code_;
};

} // namespace maglap
