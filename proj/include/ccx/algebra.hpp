#ifndef CCX_ALGEBRA_HPP
#define CCX_ALGEBRA_HPP

#include "ccx/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ccx {

// A finite Lie conformal algebra presented by structure polynomials:
// generators g_0..g_{n-1} with [g_i x g_j] = sum_k P_ij^k(D, x) g_k.
// Central generators are killed by D and bracket to zero with everything.
struct ConformalAlgebra {
    std::string name;
    std::vector<std::string> generators;
    std::vector<char> central;                              // per generator
    std::vector<std::vector<std::vector<Polynomial>>> bracket; // [i][j][k]

    int size() const { return static_cast<int>(generators.size()); }
    int gen_index(std::string_view gen) const;
    bool is_central(int k) const { return central[static_cast<std::size_t>(k)] != 0; }
    std::vector<int> noncentral_generators() const;

    // D kills central generators, so a coefficient carrying D on a central
    // output is zero term by term.
    Polynomial central_reduce(int k, Polynomial p) const;

    // Structurally validates shapes and variable alphabets; throws on error.
    void validate() const;

    bool operator==(const ConformalAlgebra&) const = default;
};

// Coefficient vector of an element sum_i p_i(D, ...) g_i.
using AlgebraElement = std::vector<Polynomial>;

AlgebraElement gen_element(const ConformalAlgebra& A, int i);

// Bracket of C[D]-combinations with parameter `lambda`, extended from the
// structure polynomials by sesquilinearity:
//   [p(D) g_i  q(D) g_j] = p(-lambda) q(D+lambda) [g_i g_j].
AlgebraElement bracket_eval(const ConformalAlgebra& A, const AlgebraElement& a,
                            const AlgebraElement& b, const VarId& lambda);

// Multiplies every coefficient by (D + lambda), dropping D on centrals.
AlgebraElement apply_partial_shift(const ConformalAlgebra& A, const AlgebraElement& e,
                                   const Polynomial& shift);

// A module given by one free generator v: either V = C[D]v (Free), or a
// one-dimensional line where D acts by a fixed scalar polynomial (Line;
// scalar 0 is the trivial module). Generator g acts by g_x v = action[g] * v.
struct ConformalModule {
    enum class PartialKind { Free, Line };

    std::string name;
    ConformalAlgebra algebra;
    PartialKind partial_kind = PartialKind::Line;
    Polynomial partial_scalar;          // Line only
    std::vector<Polynomial> action;     // per generator, in {D, x, params}
    std::string generator = "v";

    bool is_trivial() const;
    // Value of D as it appears inside polynomial identities: the variable D
    // for a free module, the scalar otherwise.
    Polynomial partial_value() const;

    bool operator==(const ConformalModule&) const = default;
};

using ModuleRef = std::shared_ptr<const ConformalModule>;

// Action of g_gen with parameter `lambda` on a value polynomial (the
// coefficient of v). For free modules the value's D shifts to D + lambda
// before the action polynomial multiplies in.
Polynomial module_act(const ConformalModule& V, int gen, const Polynomial& lambda,
                      const Polynomial& value);

struct CheckFailure {
    std::string location;  // pair/triple or identity description
    std::string residual;  // serialized nonzero residual
};

struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<CheckFailure> failures;
    std::string summary() const;
};

// Axiom checks. All three return PASS/FAIL reports with residual witnesses.
CheckReport check_sesquilinearity(const ConformalAlgebra& A);
CheckReport check_skew_symmetry(const ConformalAlgebra& A);
CheckReport check_jacobi(const ConformalAlgebra& A);
CheckReport check_module(const ConformalAlgebra& A, const ConformalModule& V);

// Catalog: HV, Vir, HVext / Trivial, Ca, MDeltaAlpha, MDeltaAlphaBeta.
ConformalAlgebra builtin_algebra(std::string_view name);
ConformalModule builtin_module(std::string_view name, const ConformalAlgebra& A);
bool is_builtin_algebra(std::string_view name);
bool is_builtin_module(std::string_view name);

} // namespace ccx

#endif
