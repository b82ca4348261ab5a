#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

// Bad arguments or mismatched contexts at an API boundary.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Undefined field arithmetic (inversion of zero and friends).
class arithmetic_error : public std::domain_error {
public:
    explicit arithmetic_error(const std::string& what) : std::domain_error(what) {}
};

// A context could not be built (e.g. reducible modulus).
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold for the given input.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Two supposedly-equal computations disagree.  This is a finding, not a bug
// in the caller, so the message carries both sides.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modinv
