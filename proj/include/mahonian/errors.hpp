#pragma once

#include <stdexcept>
#include <string>

namespace mahonian {

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/// A rational function whose reduced denominator is not a constant.
struct not_a_polynomial : std::domain_error {
    explicit not_a_polynomial(const std::string& what) : std::domain_error(what) {}
};

/// A closed form that should have integer coefficients but does not.
struct non_integral_result : std::domain_error {
    explicit non_integral_result(const std::string& what) : std::domain_error(what) {}
};

struct type_mismatch : std::invalid_argument {
    explicit type_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct precondition_violation : std::invalid_argument {
    explicit precondition_violation(const std::string& what) : std::invalid_argument(what) {}
};

struct disjointness_violation : std::invalid_argument {
    explicit disjointness_violation(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_spec : std::invalid_argument {
    explicit invalid_spec(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_identity : std::invalid_argument {
    explicit unknown_identity(const std::string& what) : std::invalid_argument(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace mahonian
