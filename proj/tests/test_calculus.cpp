#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccx/calculus.hpp"
#include "ccx/cohomology.hpp"
#include "ccx/errors.hpp"
#include "ccx/parser.hpp"

#include "oracles.hpp"

using namespace ccx;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

struct Fixture {
    ConformalAlgebra hv = builtin_algebra("HV");
    ModuleRef triv = std::make_shared<const ConformalModule>(builtin_module("Trivial", hv));
    ModuleRef ca = std::make_shared<const ConformalModule>(builtin_module("Ca", hv));
    ModuleRef mda = std::make_shared<const ConformalModule>(builtin_module("MDeltaAlpha", hv));
    int L = hv.gen_index("L");
    int M = hv.gen_index("M");

    Cochain make(int arity, std::vector<int> tuple, const char* poly, ModuleRef mod = nullptr) {
        Cochain c(arity, mod ? mod : triv);
        c.set_value(GenTuple{std::move(tuple)}, P(poly));
        return c;
    }
};

// Direct transcription of the appended-slot evaluation, used as the oracle
// for tau2/tau3.
Polynomial direct_eval_at_zero(const Cochain& g, const std::vector<int>& tuple) {
    const int q = g.arity();
    std::vector<int> args = tuple;
    args.push_back(g.module()->algebra.gen_index("L"));
    std::vector<Polynomial> lambdas;
    for (int i = 1; i < q; ++i) lambdas.push_back(Polynomial::variable(VarId::lambda(i)));
    lambdas.push_back(Polynomial());
    Polynomial v = g.eval(args, lambdas);
    if (q % 2 == 0) v = -v;
    return v;
}

} // namespace

TEST_CASE("differential on 1-cochains") {
    Fixture f;
    // value b on (M): image is b x2 on (L,M) and nothing else
    const Cochain phi = f.make(1, {f.M}, "b");
    const Cochain d = apply_differential(phi, *f.triv);
    CHECK(d.value_on(GenTuple{{f.L, f.M}}) == P("b*x2"));
    CHECK(d.values().size() == 1);

    // value x1 on (L): image is -(x1-x2)(x1+x2) on (L,L)
    const Cochain psi = f.make(1, {f.L}, "x1");
    const Cochain d2 = apply_differential(psi, *f.triv);
    CHECK(d2.value_on(GenTuple{{f.L, f.L}}) == P("-(x1-x2)*(x1+x2)"));
    CHECK(d2.values().size() == 1);
}

TEST_CASE("differential of a general degree-1 2-cochain") {
    Fixture f;
    const Cochain g = f.make(2, {f.L, f.M}, "a*x1+b*x2");
    const Cochain dg = apply_differential(g, *f.triv);
    // the (L,L,M) component: the b part cancels and the a part survives
    CHECK(dg.value_on(GenTuple{{f.L, f.L, f.M}}) ==
          P("-a*(x1+x2)*(x1-x2) + a*x2*x3 - a*x1*x3"));
    CHECK(dg.value_on(GenTuple{{f.L, f.L, f.M}}) == P("-a*(x1-x2)*(x1+x2+x3)"));
    // no other block is hit
    CHECK(dg.values().size() == 1);
    // d g = 0 forces a = 0: with a set to zero the cochain is closed
    const Cochain closed = f.make(2, {f.L, f.M}, "b*x2");
    CHECK(apply_differential(closed, *f.triv).is_zero());
}

TEST_CASE("named cocycles are closed") {
    Fixture f;
    const NamedCocycles n = named_cocycles(f.triv);
    for (const Cochain* c : {&n.phi1, &n.phi2, &n.phi3, &n.psi1, &n.psi2})
        CHECK(apply_differential(*c, *f.triv).is_zero());
    // and the degree-2 (L,L) value is a coboundary of x1 on (L)
    const Cochain pre = f.make(1, {f.L}, "-x1");
    CHECK(apply_differential(pre, *f.triv) == f.make(2, {f.L, f.L}, "x1^2-x2^2"));
}

TEST_CASE("differential on 0-cochains is the module action") {
    Fixture f;
    const Cochain unit = f.make(0, {}, "1", f.mda);
    const Cochain d = apply_differential(unit, *f.mda);
    CHECK(d.value_on(GenTuple{{f.L}}) == P("D+alpha+Delta*x1"));
    CHECK(d.values().size() == 1);
    // trivial coefficients: everything dies
    const Cochain u2 = f.make(0, {}, "1");
    CHECK(apply_differential(u2, *f.triv).is_zero());
}

TEST_CASE("grading of the differential") {
    Fixture f;
    for (int q = 1; q <= 3; ++q) {
        for (const auto& block : canonical_tuples(f.hv, q)) {
            for (int m = min_slice_degree(block); m <= 4; ++m) {
                const auto S = basis_of_slice(f.hv, q, block, m);
                for (int i = 0; i < S.dimension(); ++i) {
                    const Cochain el = slice_element_cochain(S, i, f.triv);
                    const Cochain d = apply_differential(el, *f.triv);
                    int kL = 0;
                    for (int gidx : block.idx)
                        if (gidx == f.L) ++kL;
                    for (const auto& [t, p] : d.values()) {
                        int kL2 = 0;
                        for (int gidx : t.idx)
                            if (gidx == f.L) ++kL2;
                        CHECK(kL2 == kL + 1);
                        CHECK(p.lambda_degree() == m + 1);
                        CHECK(p.split_by_lambda_degree().size() == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("d squared vanishes and d commutes with D (sampled)") {
    Fixture f;
    for (const ModuleRef& mod : {f.triv, f.ca, f.mda}) {
        for (int q = 0; q <= 3; ++q) {
            for (const auto& block : canonical_tuples(f.hv, q)) {
                for (int m = min_slice_degree(block); m <= 3; ++m) {
                    const auto S = basis_of_slice(f.hv, q, block, m);
                    for (int i = 0; i < S.dimension(); ++i) {
                        const Cochain el = slice_element_cochain(S, i, mod);
                        const Cochain d1 = apply_differential(el, *mod);
                        CHECK(apply_differential(d1, *mod).is_zero());
                        CHECK(apply_differential(partial_on_cochain(el), *mod) ==
                              partial_on_cochain(d1));
                    }
                }
            }
        }
    }
}

TEST_CASE("D action on cochains") {
    Fixture f;
    const NamedCocycles n = named_cocycles(f.triv);
    CHECK(partial_on_cochain(n.phi1).value_on(GenTuple{{f.L, f.M, f.M}}) ==
          P("(x1+x2+x3)*(x2-x3)"));
    const Cochain over_ca = f.make(2, {f.L, f.M}, "x1", f.ca);
    CHECK(partial_on_cochain(over_ca).value_on(GenTuple{{f.L, f.M}}) == P("(a+x1+x2)*x1"));
    const Cochain unit = f.make(0, {}, "1");
    CHECK(partial_on_cochain(unit).is_zero());
}

TEST_CASE("tau computes the connecting-map preimages") {
    Fixture f;
    const NamedCocycles n = named_cocycles(f.triv);
    CHECK(tau(partial_on_cochain(n.phi1)) == n.phib1);
    CHECK(tau(partial_on_cochain(n.phi2)) == n.phib2);
    CHECK(tau(partial_on_cochain(n.phi3)) == n.phib3);
    CHECK(tau(partial_on_cochain(n.psi1)) == n.psib1);
    CHECK(tau(partial_on_cochain(n.psi2)) == n.psib2);
    // preimage identity d(tau(D phi)) = D phi
    for (const Cochain* c : {&n.phi1, &n.phi2, &n.phi3, &n.psi1, &n.psi2}) {
        const Cochain dphi = partial_on_cochain(*c);
        CHECK(apply_differential(tau(dphi), *f.triv) == dphi);
    }
    CHECK_THROWS_AS(tau(f.make(0, {}, "1")), Error);
    CHECK_THROWS_AS(tau(f.make(1, {f.L}, "x1", f.ca)), ModuleMismatch);
}

TEST_CASE("tau2 and tau3 evaluate the appended slot at zero") {
    Fixture f;
    const Cochain g = f.make(2, {f.L, f.L}, "x1-x2", f.ca);
    const Cochain t = tau2(g);
    CHECK(t.value_on(GenTuple{{f.L}}) == P("-x1"));
    CHECK(t.value_on(GenTuple{{f.M}}) == direct_eval_at_zero(g, {f.M}));
    CHECK(tau2(Cochain(2, f.ca)).is_zero());

    // arity 1: the 0-cochain value g_x(L) at x = 0
    const Cochain g1 = f.make(1, {f.L}, "3+x1", f.ca);
    CHECK(tau2(g1).value_on(GenTuple{}) == P("3"));

    CHECK(tau3(Cochain(1, f.mda)).is_zero());
    for (const auto& block : canonical_tuples(f.hv, 2)) {
        for (int m = min_slice_degree(block); m <= 2; ++m) {
            const auto S = basis_of_slice(f.hv, 2, block, m);
            for (int i = 0; i < S.dimension(); ++i) {
                const Cochain el = slice_element_cochain(S, i, f.mda);
                const Cochain t3 = tau3(el);
                for (const auto& tup : canonical_tuples(f.hv, 1))
                    CHECK(t3.value_on(tup) == direct_eval_at_zero(el, tup.idx));
            }
        }
    }
}

TEST_CASE("homotopy identity with trivial coefficients") {
    Fixture f;
    // (deg - k) = 0 cases: anticommutator vanishes
    CHECK(homotopy_residual(f.make(3, {f.L, f.L, f.L}, "(x1-x2)*(x1-x3)*(x2-x3)"),
                            HomotopyKind::Tau)
              .is_zero());
    CHECK(homotopy_residual(f.make(2, {f.L, f.L}, "x1^2-x2^2"), HomotopyKind::Tau).is_zero());
    // a nonzero eigenvalue case: deg 1 on two L's gives -g
    const Cochain g = f.make(2, {f.L, f.L}, "x1-x2");
    const Cochain dtau = apply_differential(tau(g), *f.triv);
    CHECK(dtau == g * Rational(-1));
    CHECK(homotopy_residual(g, HomotopyKind::Tau).is_zero());

    for (int q = 0; q <= 4; ++q) {
        for (const auto& block : canonical_tuples(f.hv, q)) {
            for (int m = min_slice_degree(block); m <= 4; ++m) {
                const auto S = basis_of_slice(f.hv, q, block, m);
                for (int i = 0; i < S.dimension(); ++i) {
                    CAPTURE(S.id());
                    CHECK(homotopy_residual(slice_element_cochain(S, i, f.triv),
                                            HomotopyKind::Tau)
                              .is_zero());
                }
            }
        }
    }

    Cochain mixed(1, f.triv);
    mixed.set_value(GenTuple{{f.L}}, P("1+x1"));
    CHECK_THROWS_AS(homotopy_residual(mixed, HomotopyKind::Tau), NonHomogeneous);
}

TEST_CASE("homotopy identities over the one-dimensional and free modules") {
    Fixture f;
    for (int q = 0; q <= 3; ++q) {
        for (const auto& block : canonical_tuples(f.hv, q)) {
            for (int m = min_slice_degree(block); m <= 3; ++m) {
                const auto S = basis_of_slice(f.hv, q, block, m);
                for (int i = 0; i < S.dimension(); ++i) {
                    CAPTURE(S.id());
                    CHECK(homotopy_residual(slice_element_cochain(S, i, f.ca),
                                            HomotopyKind::Tau2)
                              .is_zero());
                    CHECK(homotopy_residual(slice_element_cochain(S, i, f.mda),
                                            HomotopyKind::Tau3)
                              .is_zero());
                }
            }
        }
    }
}

TEST_CASE("matrix assembly agrees with the functional differential") {
    Fixture f;
    // the q=2 (L,M) degree-1 slice: columns reproduce the worked example
    const auto S = basis_of_slice(f.hv, 2, GenTuple{{f.L, f.M}}, 1);
    REQUIRE(S.dimension() == 2);
    REQUIRE(S.elements[0] == P("x1"));
    const auto dm = assemble_matrix(S, *f.triv);
    CHECK(dm.matrix.rows == dm.target.dimension());
    CHECK(dm.matrix.cols == 2);
    // column of x1: expand through the target basis and compare with d
    for (int col = 0; col < 2; ++col) {
        Polynomial expanded;
        for (int row = 0; row < dm.target.dimension(); ++row)
            expanded += dm.target.elements[static_cast<std::size_t>(row)] * dm.matrix.at(row, col);
        const Cochain img =
            apply_differential(slice_element_cochain(S, col, f.triv), *f.triv);
        CHECK(expanded == img.value_on(dm.target.block));
    }
    // the x2 column is zero, the x1 column is not
    bool col0_nonzero = false, col1_nonzero = false;
    for (int row = 0; row < dm.matrix.rows; ++row) {
        col0_nonzero = col0_nonzero || dm.matrix.at(row, 0) != 0;
        col1_nonzero = col1_nonzero || dm.matrix.at(row, 1) != 0;
    }
    CHECK(col0_nonzero);
    CHECK(!col1_nonzero);

    // closed slice: zero matrix
    const auto S3 = basis_of_slice(f.hv, 3, GenTuple{{f.L, f.L, f.L}}, 3);
    const auto dm3 = assemble_matrix(S3, *f.triv);
    for (int r = 0; r < dm3.matrix.rows; ++r)
        for (int c = 0; c < dm3.matrix.cols; ++c) CHECK(dm3.matrix.at(r, c) == 0);

    // empty slice: empty matrix
    const auto S0 = basis_of_slice(f.hv, 2, GenTuple{{f.M, f.M}}, 0);
    const auto dm0 = assemble_matrix(S0, *f.triv);
    CHECK(dm0.matrix.cols == 0);

    // sweep: columns match apply_differential coordinates
    for (int q = 1; q <= 3; ++q) {
        for (const auto& block : canonical_tuples(f.hv, q)) {
            for (int m = min_slice_degree(block); m <= 3; ++m) {
                const auto src = basis_of_slice(f.hv, q, block, m);
                if (src.dimension() == 0) continue;
                const auto dmx = assemble_matrix(src, *f.triv);
                for (int col = 0; col < src.dimension(); ++col) {
                    Polynomial expanded;
                    for (int row = 0; row < dmx.target.dimension(); ++row)
                        expanded += dmx.target.elements[static_cast<std::size_t>(row)] *
                                    dmx.matrix.at(row, col);
                    const Cochain img = apply_differential(
                        slice_element_cochain(src, col, f.triv), *f.triv);
                    CHECK(expanded == img.value_on(dmx.target.block));
                }
            }
        }
    }
}

TEST_CASE("matrix assembly over modules") {
    Fixture f;
    // numeric free module: Delta = 2, alpha = 3
    ConformalModule numeric = *f.mda;
    numeric.name = "M23";
    numeric.action[static_cast<std::size_t>(f.L)] = P("D+3+2*x");
    const auto S = basis_of_slice(f.hv, 1, GenTuple{{f.L}}, 1);
    const auto dm = assemble_matrix(S, numeric);
    REQUIRE(dm.matrix.cols == 1);
    Polynomial expanded;
    for (int row = 0; row < dm.target.dimension(); ++row)
        expanded += dm.target.elements[static_cast<std::size_t>(row)] * dm.matrix.at(row, 0);
    ModuleRef nref = std::make_shared<const ConformalModule>(numeric);
    const Cochain img = apply_differential(slice_element_cochain(S, 0, nref), numeric);
    CHECK(expanded == img.value_on(dm.target.block));

    // symbolic parameters cannot be packed into rational coordinates
    CHECK_THROWS_AS(assemble_matrix(S, *f.mda), TargetSliceOverflow);
}

TEST_CASE("module mismatch is rejected") {
    Fixture f;
    const Cochain g = f.make(1, {f.L}, "x1");
    CHECK_THROWS_AS(apply_differential(g, *f.ca), ModuleMismatch);
}
