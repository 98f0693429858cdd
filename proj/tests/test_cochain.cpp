#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccx/cochain.hpp"
#include "ccx/errors.hpp"
#include "ccx/parser.hpp"

#include "oracles.hpp"

using namespace ccx;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

struct Fixture {
    ConformalAlgebra hv = builtin_algebra("HV");
    ModuleRef triv = std::make_shared<const ConformalModule>(builtin_module("Trivial", hv));
    int L = hv.gen_index("L");
    int M = hv.gen_index("M");
};

} // namespace

TEST_CASE("canonical tuples enumerate blocks in order") {
    Fixture f;
    const auto tuples = canonical_tuples(f.hv, 2);
    REQUIRE(tuples.size() == 3);
    CHECK(tuples[0].idx == std::vector<int>{f.L, f.L});
    CHECK(tuples[1].idx == std::vector<int>{f.L, f.M});
    CHECK(tuples[2].idx == std::vector<int>{f.M, f.M});
    CHECK_THROWS_AS(GenTuple(std::vector<int>{1, 0}), Error);
    // centrals are excluded from cochain tuples
    const auto ext_tuples = canonical_tuples(builtin_algebra("HVext"), 1);
    CHECK(ext_tuples.size() == 2);
}

TEST_CASE("normalize canonicalizes permuted input") {
    Fixture f;
    // value given on (M,L,M) instead of (L,M,M)
    const Cochain c = Cochain::normalize(
        3, f.triv, {{{f.M, f.L, f.M}, P("-(x1-x3)")}});
    REQUIRE(c.values().size() == 1);
    CHECK(c.value_on(GenTuple{{f.L, f.M, f.M}}) == P("x2-x3"));

    // the same data plus its canonical form is accepted; a conflict is not
    CHECK_NOTHROW(Cochain::normalize(3, f.triv,
                                     {{{f.M, f.L, f.M}, P("-(x1-x3)")},
                                      {{f.L, f.M, f.M}, P("x2-x3")}}));
    CHECK_THROWS_AS(Cochain::normalize(3, f.triv,
                                       {{{f.M, f.L, f.M}, P("-(x1-x3)")},
                                        {{f.L, f.M, f.M}, P("x2+x3")}}),
                    InconsistentSkewData);
}

TEST_CASE("skew forces constants on repeated generators to zero") {
    Fixture f;
    CHECK_THROWS_AS(Cochain::normalize(2, f.triv, {{{f.M, f.M}, P("5")}}),
                    InconsistentSkewData);
    const Cochain zero = Cochain::normalize(2, f.triv, {{{f.M, f.M}, P("0")}});
    CHECK(zero.is_zero());
    // and an arity-0 cochain is just a coefficient value
    const Cochain unit = Cochain::normalize(0, f.triv, {{{}, P("1")}});
    CHECK(unit.value_on(GenTuple{}) == P("1"));
}

TEST_CASE("normalize is idempotent") {
    Fixture f;
    const Cochain c = Cochain::normalize(
        2, f.triv, {{{f.M, f.M}, P("x1-x2")}, {{f.L, f.M}, P("x2^2")}});
    std::vector<std::pair<std::vector<int>, Polynomial>> again;
    for (const auto& [t, p] : c.values()) again.push_back({t.idx, p});
    CHECK(Cochain::normalize(2, f.triv, again) == c);
}

TEST_CASE("eval applies signs and substitutions") {
    Fixture f;
    Cochain phi1(3, f.triv);
    phi1.set_value(GenTuple{{f.L, f.M, f.M}}, P("x2-x3"));
    // swap of the two M slots flips the sign
    const std::vector<int> gens{f.M, f.L, f.M};
    const std::vector<Polynomial> lambdas{P("x1"), P("x2"), P("x3")};
    CHECK(phi1.eval(gens, lambdas) == P("-(x1-x3)"));
    // merged argument polynomials substitute in
    const std::vector<int> gens2{f.L, f.M, f.M};
    const std::vector<Polynomial> lambdas2{P("x1"), P("x1+x2"), P("x3")};
    CHECK(phi1.eval(gens2, lambdas2) == P("x1+x2-x3"));
    // tuples outside the support evaluate to zero
    const std::vector<int> gens3{f.L, f.L, f.M};
    CHECK(phi1.eval(gens3, lambdas) == Polynomial());
}

TEST_CASE("slice bases match the quoted spans") {
    Fixture f;
    const GenTuple mm{{f.M, f.M}};
    CHECK(basis_of_slice(f.hv, 2, mm, 0).dimension() == 0);

    const GenTuple ll{{f.L, f.L}};
    const auto s1 = basis_of_slice(f.hv, 2, ll, 2);
    REQUIRE(s1.dimension() == 1);
    CHECK(s1.elements[0] == P("(x1-x2)*(x1+x2)"));

    const GenTuple llm{{f.L, f.L, f.M}};
    const auto s2 = basis_of_slice(f.hv, 3, llm, 2);
    REQUIRE(s2.dimension() == 2);
    CHECK(s2.elements[0] == P("(x1-x2)*(x1+x2)"));
    CHECK(s2.elements[1] == P("(x1-x2)*x3"));

    const GenTuple lll{{f.L, f.L, f.L}};
    const auto s3 = basis_of_slice(f.hv, 3, lll, 3);
    REQUIRE(s3.dimension() == 1);
    CHECK(s3.elements[0] == P("(x1-x2)*(x1-x3)*(x2-x3)"));

    // arity 0
    CHECK(basis_of_slice(f.hv, 0, GenTuple{}, 0).dimension() == 1);
    CHECK(basis_of_slice(f.hv, 0, GenTuple{}, 1).dimension() == 0);
}

TEST_CASE("every slice element is divisible by the double Vandermonde") {
    Fixture f;
    for (int q = 1; q <= 4; ++q) {
        for (const auto& block : canonical_tuples(f.hv, q)) {
            for (int m = min_slice_degree(block); m <= 4; ++m) {
                const auto s = basis_of_slice(f.hv, q, block, m);
                for (const auto& e : s.elements) {
                    Polynomial rem = e;
                    for (int i = 0; i < q; ++i) {
                        for (int j = i + 1; j < q; ++j) {
                            if (block.idx[static_cast<std::size_t>(i)] !=
                                block.idx[static_cast<std::size_t>(j)])
                                continue;
                            const Polynomial factor =
                                Polynomial::variable(VarId::lambda(i + 1)) -
                                Polynomial::variable(VarId::lambda(j + 1));
                            const auto div = divide_by_linear(rem, factor);
                            REQUIRE(div.remainder.is_zero());
                            rem = div.quotient;
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("slice dimensions equal the antisymmetrization oracle") {
    Fixture f;
    for (int q = 1; q <= 5; ++q) {
        for (int k = 0; k <= q; ++k) {
            std::vector<int> idx;
            for (int i = 0; i < k; ++i) idx.push_back(f.L);
            for (int i = k; i < q; ++i) idx.push_back(f.M);
            const GenTuple block{idx};
            for (int m = 0; m <= 5; ++m) {
                CAPTURE(q);
                CAPTURE(k);
                CAPTURE(m);
                const int got = basis_of_slice(f.hv, q, block, m).dimension();
                CHECK(got == oracles::antisym_dimension(q, k, m));
            }
        }
    }
}

TEST_CASE("degree decomposition splits and reassembles") {
    Fixture f;
    Cochain c(2, f.triv);
    c.set_value(GenTuple{{f.L, f.M}}, P("a*x1 + b*x2 + x1*x2"));
    const auto parts = c.degree_decompose();
    REQUIRE(parts.size() == 2);
    Cochain sum(2, f.triv);
    for (const auto& p : parts) sum += p;
    CHECK(sum == c);
    CHECK(parts[0].value_on(GenTuple{{f.L, f.M}}) == P("a*x1+b*x2"));

    CHECK(Cochain(2, f.triv).degree_decompose().empty());
    // a single homogeneous block value stays in one component
    Cochain homog(2, f.triv);
    homog.set_value(GenTuple{{f.L, f.L}}, P("x1^2-x2^2"));
    CHECK(homog.degree_decompose().size() == 1);
}

TEST_CASE("partitions and symmetric functions are deterministic") {
    const auto p32 = partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0] == std::vector<int>{3});
    CHECK(p32[1] == std::vector<int>{2, 1});
    CHECK(partitions(0, 2).size() == 1);
    CHECK(partitions(2, 0).empty());

    const std::vector<VarId> vars{VarId::lambda(1), VarId::lambda(2)};
    CHECK(monomial_symmetric(vars, {1}) == P("x1+x2"));
    CHECK(monomial_symmetric(vars, {1, 1}) == P("x1*x2"));
    CHECK(monomial_symmetric(vars, {2}) == P("x1^2+x2^2"));
    CHECK(vandermonde(vars) == P("x1-x2"));
}
