#pragma once

#include <stdexcept>
#include <string>

namespace zxf {

// Bad input: the caller asked for something outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A construction does not apply to the given input (wrong case of the
// classification, missing hypothesis). Callers usually fall back to another rule.
class NotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Always a bug, never a user error.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define ZXF_ENSURE(cond, msg)                                                        \
    do {                                                                             \
        if (!(cond)) {                                                               \
            throw ::zxf::ContractViolation(std::string(__func__) + ": " + (msg));    \
        }                                                                            \
    } while (false)

}  // namespace zxf
