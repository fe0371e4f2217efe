#pragma once

#include <stdexcept>
#include <string>

namespace revmc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction
struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct EmptyOrFullSubsetError : Error { using Error::Error; };
struct RankDeficientFamilyError : Error { using Error::Error; };

// cycle space
struct CycleCapExceededError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotInKernelError : Error { using Error::Error; };
struct InstanceTooLargeError : Error { using Error::Error; };

// transition matrices and checks
struct BadSupportError : Error { using Error::Error; };
struct NotQReversibleError : Error { using Error::Error; };
struct DisconnectedSupportError : Error { using Error::Error; };
struct NonpositiveKappaError : Error { using Error::Error; };
struct ZeroOnSupportError : Error { using Error::Error; };
struct NotCycleBinomialError : Error { using Error::Error; };
struct ReducibleError : Error { using Error::Error; };

// parameterizations
struct IsolatedMasslessError : Error { using Error::Error; };
struct NotReversibleError : Error { using Error::Error; };
struct NonpositivePiError : Error { using Error::Error; };
struct EntriesOutOfRangeError : Error { using Error::Error; };
struct NonpositiveParamsError : Error { using Error::Error; };
struct NotABasisError : Error { using Error::Error; };
struct ZeroTransitionError : Error { using Error::Error; };

struct FeasibilityViolatedError : Error {
    int vertex;
    FeasibilityViolatedError(const std::string& msg, int v) : Error(msg), vertex(v) {}
};

// simulation
struct PathTooShortError : Error { using Error::Error; };

// input parsing
struct ParseError : Error { using Error::Error; };

} // namespace revmc
