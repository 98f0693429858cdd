#ifndef CCX_SPECFILE_HPP
#define CCX_SPECFILE_HPP

#include "ccx/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccx {

// Text description of an algebra and (optionally) a module:
//
//   [algebra]
//   name = HV
//   generators = L, M
//   centrals = C1, C2         # optional
//
//   [[bracket]]
//   left = L
//   right = L
//   value = (D+2*x)*L
//
//   [module]
//   name = MDeltaAlphaBeta
//   partial = D               # D for a free module, else a scalar polynomial
//   action.L = (D+alpha+Delta*x)*v
//   action.M = beta*v
//
//   [params]
//   Delta alpha beta
//
// Values use the polynomial grammar; unlisted brackets and actions are zero.
// Every identifier in a value must be a declared parameter, a generator, or
// one of the reserved symbols.
struct SpecFile {
    std::optional<ConformalAlgebra> algebra;
    std::optional<ConformalModule> module;
    std::vector<std::string> params;
};

SpecFile parse_specfile_text(const std::string& text, const std::string& origin = "<string>");
SpecFile load_specfile(const std::string& path);

std::string emit_specfile(const ConformalAlgebra& A, const ConformalModule* V = nullptr,
                          const std::vector<std::string>& params = {});

} // namespace ccx

#endif
