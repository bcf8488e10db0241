#ifndef ARR_ERRORS_HPP
#define ARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arr {

/// Raised on invalid user input: bad parameters, malformed files,
/// contract violations a caller can fix. CLI exit code 1.
class user_error : public std::runtime_error {
public:
    explicit user_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant is violated. Indicates a bug in this
/// library, never a fixable input problem. CLI exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace arr

#endif
