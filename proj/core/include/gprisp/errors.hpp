#pragma once

#include <stdexcept>
#include <string>

namespace gprisp {

// Bad arguments or malformed configuration (maps to CLI exit code 2).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failures (map to CLI exit code 3).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Cholesky pivot fell below tolerance: the system matrix is not positive
// definite, typically because alpha is too small for degenerate kernels.
class not_positive_definite : public numerical_error {
public:
    explicit not_positive_definite(const std::string& what) : numerical_error(what) {}
};

// lambda_min + alpha <= 0, condition number undefined.
class singular_matrix : public numerical_error {
public:
    explicit singular_matrix(const std::string& what) : numerical_error(what) {}
};

// Volterra marching denominator vanished (step too coarse or H(0) ~ 0).
class marching_breakdown : public numerical_error {
public:
    explicit marching_breakdown(const std::string& what) : numerical_error(what) {}
};

}  // namespace gprisp
