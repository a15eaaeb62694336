#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wilsonq/system.hpp"
#include "wilsonq/types.hpp"

namespace wilsonq::verify {

struct VerifyOptions {
    // Overrides every check's default tolerance when set (strict comparison:
    // a check passes only if residual < tolerance, so 0 fails everything).
    std::optional<double> tolerance;
    // Runs a single named check when set.
    std::optional<std::string> only;
};

// Names, in execution order: gamma-identities, recursion-vs-series,
// orthonormal-consistency, orthogonality, generating-function,
// weight-normalization, kinetic-decomposition, hamiltonian-symmetry,
// harmonic-reconstruction, plus the informational hamiltonian-vs-recursion
// diagnostic (reported, never counted).
std::vector<std::string> check_names();

std::vector<VerificationReport> run_verification(const system::SystemParams& p,
                                                 const VerifyOptions& options = {});

}  // namespace wilsonq::verify
