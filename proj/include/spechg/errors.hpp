#ifndef SPECHG_ERRORS_HPP
#define SPECHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spechg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error { using Error::Error; };
struct DuplicateVertexInEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct IsolatedVertex : Error { using Error::Error; };
struct OddOrder : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NonPositiveB : Error { using Error::Error; };
struct LineSearchFailed : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };
struct NotNonnegative : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

} // namespace spechg

#endif
