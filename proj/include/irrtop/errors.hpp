#ifndef IRRTOP_ERRORS_HPP
#define IRRTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irrtop {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construction / validation failures.
struct NotT0Error : Error {
    explicit NotT0Error(const std::string& w) : Error(w) {}
};
struct CarrierTooLargeError : Error {
    explicit CarrierTooLargeError(const std::string& w) : Error(w) {}
};
struct InvalidPosetError : Error {
    explicit InvalidPosetError(const std::string& w) : Error(w) {}
};

// Precondition violations on operations.
struct EmptySetError : Error {
    explicit EmptySetError(const std::string& w) : Error(w) {}
};
struct NotOpenError : Error {
    explicit NotOpenError(const std::string& w) : Error(w) {}
};
struct NotClosedError : Error {
    explicit NotClosedError(const std::string& w) : Error(w) {}
};
struct NotCofinalError : Error {
    explicit NotCofinalError(const std::string& w) : Error(w) {}
};
struct UndecidableTailError : Error {
    explicit UndecidableTailError(const std::string& w) : Error(w) {}
};
struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& w) : Error(w) {}
};
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& w) : Error(w) {}
};
struct UnknownSpaceError : Error {
    explicit UnknownSpaceError(const std::string& w) : Error(w) {}
};
struct BadQueryError : Error {
    explicit BadQueryError(const std::string& w) : Error(w) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& w) : Error(w) {}
};

// A frozen catalog oracle answer contradicted a definitional probe.  This is
// a build-stopping defect, never a recoverable condition.
struct OracleMismatchError : Error {
    explicit OracleMismatchError(const std::string& w) : Error(w) {}
};

} // namespace irrtop

#endif
