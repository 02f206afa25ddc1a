#ifndef CHISHOLM_ERRORS_HPP
#define CHISHOLM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chisholm {

// Base of every error thrown by the library. Each subclass maps to one
// distinct CLI exit code (see tools/cli.hpp).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Elimination found no acceptable pivot; for approximant fits this means the
// approximant of the requested order does not exist.
class singular_system : public error {
public:
    using error::error;
};

// Coefficients required by a fit are not known.
class insufficient_terms : public error {
public:
    insufficient_terms(std::string what, std::vector<std::pair<int, int>> missing)
        : error(std::move(what)), missing_(std::move(missing)) {}

    const std::vector<std::pair<int, int>>& missing() const noexcept { return missing_; }

private:
    std::vector<std::pair<int, int>> missing_;
};

// Constant coefficient is zero, unknown, or not equal to one where one is required.
class not_normalized : public error {
public:
    using error::error;
};

// Denominator of a rational approximant vanishes at the evaluation point.
class pole_hit : public error {
public:
    using error::error;
};

// Pochhammer or gamma parameter sits on a pole (nonpositive integer).
class parameter_pole : public error {
public:
    using error::error;
};

// Malformed series / approximant file or command-line value.
class parse_error : public error {
public:
    using error::error;
};

} // namespace chisholm

#endif // CHISHOLM_ERRORS_HPP
