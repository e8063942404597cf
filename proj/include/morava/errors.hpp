#pragma once

#include <stdexcept>
#include <string>

namespace morava {

// Mixed-precision operands are rejected, never coerced.
struct precision_mismatch : std::invalid_argument {
    explicit precision_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct not_a_unit : std::domain_error {
    explicit not_a_unit(const std::string& what) : std::domain_error(what) {}
};

struct no_square_root : std::domain_error {
    explicit no_square_root(const std::string& what) : std::domain_error(what) {}
};

struct bad_branch : std::domain_error {
    explicit bad_branch(const std::string& what) : std::domain_error(what) {}
};

struct tag_mismatch : std::invalid_argument {
    explicit tag_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct not_odd_valuation : std::domain_error {
    explicit not_odd_valuation(const std::string& what) : std::domain_error(what) {}
};

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_subgroup : std::invalid_argument {
    explicit not_a_subgroup(const std::string& what) : std::invalid_argument(what) {}
};

struct insufficient_precision : std::invalid_argument {
    explicit insufficient_precision(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_name : std::invalid_argument {
    explicit unknown_name(const std::string& what) : std::invalid_argument(what) {}
};

struct variant_mismatch : std::invalid_argument {
    explicit variant_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace morava
