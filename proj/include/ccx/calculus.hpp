#ifndef CCX_CALCULUS_HPP
#define CCX_CALCULUS_HPP

#include "ccx/cochain.hpp"
#include "ccx/linalg.hpp"

#include <optional>

namespace ccx {

// The differential of a q-cochain:
//   (dg)(a_1..a_{q+1}) = sum_i (-1)^{i+1} a_i acting on g(..without i..)
//                      + sum_{i<j} (-1)^{i+j} g([a_i a_j] merged first, ..)
// with the merged slot carrying x_i + x_j and a D on the bracket output
// converted to -(x_i + x_j) by conformal antilinearity. On 0-cochains it is
// (dg)_x(a) = a_x g.
Cochain apply_differential(const Cochain& g, const ConformalModule& V);

// (Dg)(...) = (D_V + sum x_i) g(...), with D_V = 0, a scalar, or D.
Cochain partial_on_cochain(const Cochain& g);

// Degree -1 operators built by appending the generator L in the last slot:
// tau differentiates at 0 (trivial coefficients), tau2/tau3 evaluate at 0
// (line and free coefficients).
Cochain tau(const Cochain& g);
Cochain tau2(const Cochain& g);
Cochain tau3(const Cochain& g);

enum class HomotopyKind { Tau, Tau2, Tau3 };

// (d tau + tau d) g minus its predicted value, reduced where the prediction
// only holds modulo the image of D:
//   Tau : prediction (deg g - k) g per block; residual is exact.
//   Tau2: prediction -a g; residual reduced modulo (a + sum x_i).
//   Tau3: prediction alpha g; residual reduced modulo (D + sum x_i).
// Returns the zero cochain exactly when the identity holds.
Cochain homotopy_residual(const Cochain& g, HomotopyKind kind);

// sum of x1..xq plus the module's D-value; the linear form whose multiples
// form the image of D on q-cochains.
Polynomial partial_form(const ConformalModule& V, int arity);

struct DifferentialMatrix {
    SliceBasis source;
    SliceBasis target;
    QMatrix matrix; // target.dimension() x source.dimension()
};

// Matrix of the differential leaving a graded slice, in the inferred target
// slice basis (arity+1, block with one more L, degree+1). Requires value
// polynomials with rational coordinates in the target slice; coefficients
// with free symbols in d-images (symbolic module parameters) are rejected.
DifferentialMatrix assemble_matrix(const SliceBasis& src, const ConformalModule& V);

// Coordinates of a value polynomial in a slice basis; nullopt if outside.
std::optional<std::vector<Rational>> slice_coordinates(const SliceBasis& basis,
                                                       const Polynomial& value);

} // namespace ccx

#endif
