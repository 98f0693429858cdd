#ifndef CCX_EXTENSION_HPP
#define CCX_EXTENSION_HPP

#include "ccx/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccx {

// One central direction: a reduced 2-cocycle with trivial coefficients plus
// the scale put on the monic central term built from it.
struct ExtensionCocycle {
    std::string central_name;
    Cochain cocycle;
    Rational scale = 1;
};

struct ExtensionSpec {
    ConformalAlgebra base;
    std::vector<ExtensionCocycle> cocycles;
};

struct CentralTermInfo {
    std::string central_name;
    std::string pair;          // e.g. "(L,M)"
    std::string raw;           // cocycle restricted to x1 = x, x2 = -x
    std::string term;          // final bracket coefficient
    Rational proportionality;  // term = proportionality * raw
};

struct ExtensionResult {
    ConformalAlgebra extended;
    std::vector<CentralTermInfo> terms;
};

// Builds the central extension: each cocycle contributes the bracket term
// scale * monic(c(x, -x)) on its own central generator. The cocycles must be
// reduced 2-cocycles (d c lands in the image of D); CocycleCheckFailed
// otherwise.
ExtensionResult build_extension(const ExtensionSpec& spec);

// Skew-symmetry and Jacobi on an algebra with declared centrals.
CheckReport verify_extension(const ConformalAlgebra& A);

// Searches for constant central corrections g -> g + h_g C that remove every
// central bracket term; succeeds exactly when the defining cocycles are
// reduced coboundaries. Returns the corrections per (generator, central).
std::optional<std::vector<std::vector<Rational>>> solve_trivialization(
    const ConformalAlgebra& extended);

} // namespace ccx

#endif
