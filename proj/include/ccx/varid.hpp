#ifndef CCX_VARID_HPP
#define CCX_VARID_HPP

#include "ccx/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace ccx {

// Commuting indeterminates. The kinds, in canonical order:
//   D        the polynomial generator of C[d] acting on algebra/module values
//   x        the bracket parameter of [a_x b]
//   y        the second bracket parameter used by the Jacobi check
//   x1..xN   the cochain parameters attached to arguments 1..N
//   params   free symbols (Delta, alpha, beta, a, ...), ordered by name
enum class VarKind : std::uint8_t {
    Partial = 0,
    BracketLambda = 1,
    BracketMu = 2,
    Lambda = 3,
    Param = 4,
};

struct VarId {
    VarKind kind = VarKind::Partial;
    int index = 0;    // Lambda only, 1-based
    std::string name; // Param only

    static VarId partial() { return {VarKind::Partial, 0, {}}; }
    static VarId bracket_lambda() { return {VarKind::BracketLambda, 0, {}}; }
    static VarId bracket_mu() { return {VarKind::BracketMu, 0, {}}; }
    static VarId lambda(int i) {
        if (i < 1) throw Error("lambda index must be >= 1");
        return {VarKind::Lambda, i, {}};
    }
    static VarId param(std::string n) { return {VarKind::Param, 0, std::move(n)}; }

    // Member order gives exactly the canonical variable order.
    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string to_string() const {
        switch (kind) {
        case VarKind::Partial: return "D";
        case VarKind::BracketLambda: return "x";
        case VarKind::BracketMu: return "y";
        case VarKind::Lambda: return "x" + std::to_string(index);
        case VarKind::Param: return name;
        }
        return "?";
    }
};

} // namespace ccx

#endif
