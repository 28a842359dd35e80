#pragma once

#include <stdexcept>
#include <string>

namespace radial {

/// Requested operation exceeds a hard capability limit (e.g. quadrature order).
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A grid cannot represent the requested function (tail mass lost, too coarse).
struct resolution_error : std::runtime_error {
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested state lies outside the validity regime of a construction.
struct validity_error : std::domain_error {
    explicit validity_error(const std::string& what) : std::domain_error(what) {}
};

/// Energy bracket contains no eigenvalue (no sign change of the mismatch).
struct no_eigenvalue_error : std::runtime_error {
    explicit no_eigenvalue_error(const std::string& what) : std::runtime_error(what) {}
};

/// Converged eigenstate does not have the requested radial node count.
struct bracket_error : std::runtime_error {
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radial
