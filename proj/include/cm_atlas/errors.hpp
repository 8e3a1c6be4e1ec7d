#pragma once

#include <stdexcept>
#include <string>

namespace cm_atlas {

/// Argument outside the domain of the function (x <= 0, x <= -alpha, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested derivative / polygamma order exceeds what is supported.
class order_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters collapse a formula (s == t where a gap is required, a == b, ...).
class degenerate_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure did not reach its tolerance, or produced a result
/// that is internally inconsistent.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bisection bracket does not straddle a sign change of the predicate.
class bracket_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result would overflow binary64.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

inline void require_domain(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
}

}  // namespace detail
}  // namespace cm_atlas
