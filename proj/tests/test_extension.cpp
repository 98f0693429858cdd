#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccx/cohomology.hpp"
#include "ccx/errors.hpp"
#include "ccx/extension.hpp"
#include "ccx/parser.hpp"

using namespace ccx;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

struct Fixture {
    ConformalAlgebra hv = builtin_algebra("HV");
    ModuleRef triv = std::make_shared<const ConformalModule>(builtin_module("Trivial", hv));
    NamedCocycles named = named_cocycles(triv);
};

} // namespace

TEST_CASE("the catalog extension is rebuilt from the reduced 2-cocycles") {
    Fixture f;
    ExtensionSpec spec{f.hv,
                       {{"C1", f.named.phib3, Rational(1, 12)},
                        {"C2", f.named.phib2, Rational(1)},
                        {"C3", f.named.phib1, Rational(1)}}};
    const auto result = build_extension(spec);
    CHECK(result.extended.bracket == builtin_algebra("HVext").bracket);
    CHECK(result.extended.generators == builtin_algebra("HVext").generators);
    CHECK(verify_extension(result.extended).pass);

    // central terms are scale * monic powers of x, with the factors reported
    bool saw_LL = false, saw_LM = false, saw_ML = false, saw_MM = false;
    for (const auto& t : result.terms) {
        if (t.central_name == "C1" && t.pair == "(L,L)") {
            saw_LL = true;
            CHECK(t.term == "1/12*x^3");
            CHECK(t.raw == "-2*x^3");
            CHECK(t.proportionality == Rational(-1, 24));
        }
        if (t.central_name == "C2" && t.pair == "(L,M)") {
            saw_LM = true;
            CHECK(t.term == "x^2");
        }
        if (t.central_name == "C2" && t.pair == "(M,L)") {
            saw_ML = true;
            CHECK(t.term == "-x^2");
        }
        if (t.central_name == "C3" && t.pair == "(M,M)") {
            saw_MM = true;
            CHECK(t.term == "x");
            CHECK(t.proportionality == Rational(1, 2));
        }
    }
    CHECK(saw_LL);
    CHECK(saw_LM);
    CHECK(saw_ML);
    CHECK(saw_MM);
}

TEST_CASE("extension verification spots a flipped sign") {
    ConformalAlgebra bad = builtin_algebra("HVext");
    const int M = bad.gen_index("M"), L = bad.gen_index("L"), C2 = bad.gen_index("C2");
    bad.bracket[static_cast<std::size_t>(M)][static_cast<std::size_t>(L)]
               [static_cast<std::size_t>(C2)] = P("x^2");
    const auto rep = verify_extension(bad);
    CHECK(!rep.pass);
    bool found = false;
    for (const auto& fail : rep.failures) found = found || fail.residual == "2*x^2";
    CHECK(found);
}

TEST_CASE("plain algebras verify too") {
    CHECK(verify_extension(builtin_algebra("HV")).pass);
    CHECK(verify_extension(builtin_algebra("HVext")).pass);
}

TEST_CASE("zero cocycle gives the split extension") {
    Fixture f;
    ExtensionSpec spec{f.hv, {{"Z", Cochain(2, f.triv), Rational(1)}}};
    const auto result = build_extension(spec);
    CHECK(result.terms.empty());
    CHECK(verify_extension(result.extended).pass);
    const int z = result.extended.gen_index("Z");
    REQUIRE(z >= 0);
    CHECK(result.extended.is_central(z));
    for (int i = 0; i < result.extended.size(); ++i)
        for (int j = 0; j < result.extended.size(); ++j)
            CHECK(result.extended.bracket[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(j)]
                                         [static_cast<std::size_t>(z)]
                      .is_zero());
}

TEST_CASE("the Virasoro sector alone takes the degree-3 cocycle") {
    const ConformalAlgebra vir = builtin_algebra("Vir");
    ModuleRef triv = std::make_shared<const ConformalModule>(builtin_module("Trivial", vir));
    Cochain c(2, triv);
    c.set_value(GenTuple{{vir.gen_index("L"), vir.gen_index("L")}}, P("-x1^3+x2^3"));
    const auto result = build_extension({vir, {{"C", c, Rational(1, 12)}}});
    CHECK(verify_extension(result.extended).pass);
    const int L = result.extended.gen_index("L"), C = result.extended.gen_index("C");
    CHECK(result.extended.bracket[static_cast<std::size_t>(L)][static_cast<std::size_t>(L)]
                                 [static_cast<std::size_t>(C)] == P("1/12*x^3"));
}

TEST_CASE("non-cocycles are rejected") {
    Fixture f;
    const int L = f.hv.gen_index("L"), M = f.hv.gen_index("M");
    Cochain notc(2, f.triv);
    notc.set_value(GenTuple{{L, M}}, P("x1^3"));
    CHECK_THROWS_AS(build_extension({f.hv, {{"C", notc, Rational(1)}}}), CocycleCheckFailed);

    // wrong arity
    Cochain c3(3, f.triv);
    CHECK_THROWS_AS(build_extension({f.hv, {{"C", c3, Rational(1)}}}), CocycleCheckFailed);
    // name clash
    Cochain ok(2, f.triv);
    ok.set_value(GenTuple{{M, M}}, P("x1-x2"));
    CHECK_THROWS_AS(build_extension({f.hv, {{"L", ok, Rational(1)}}}), CocycleCheckFailed);
}

TEST_CASE("coboundary cocycles build trivializable extensions") {
    Fixture f;
    // d of the 1-cochain with values 2+x1 on L and 3 on M
    Cochain one(1, f.triv);
    const int L = f.hv.gen_index("L"), M = f.hv.gen_index("M");
    one.set_value(GenTuple{{L}}, P("2+x1"));
    one.set_value(GenTuple{{M}}, P("3"));
    const Cochain cob = apply_differential(one, *f.triv);
    CHECK(!cob.is_zero());

    const auto result = build_extension({f.hv, {{"C", cob, Rational(1)}}});
    CHECK(verify_extension(result.extended).pass);
    const auto h = solve_trivialization(result.extended);
    REQUIRE(h.has_value());
    // applying the correction must cancel every central term: rebuild and check
    // c_ij(x) == sum_g h_g P_ij^g(0, x)
    const int z = result.extended.gen_index("C");
    for (int i = 0; i < f.hv.size(); ++i) {
        for (int j = 0; j < f.hv.size(); ++j) {
            Polynomial expect;
            for (int g = 0; g < f.hv.size(); ++g)
                expect += result.extended.bracket[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(j)]
                                                 [static_cast<std::size_t>(g)]
                              .eval_at_zero(VarId::partial()) *
                          (*h)[static_cast<std::size_t>(g)][0];
            CHECK(result.extended.bracket[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(j)]
                                         [static_cast<std::size_t>(z)] == expect);
        }
    }

    // the genuine extension admits no trivialization
    CHECK(!solve_trivialization(builtin_algebra("HVext")).has_value());
}

TEST_CASE("center dimension matches the reduced 2-classes") {
    Fixture f;
    EngineConfig cfg;
    cfg.degree_bound = 6;
    CohomologyEngine engine(f.hv, cfg);
    const auto reps = engine.representatives(2, ClassKind::Reduced);
    ExtensionSpec spec{f.hv, {}};
    int idx = 1;
    for (const auto& r : reps)
        spec.cocycles.push_back({"Z" + std::to_string(idx++), r.cochain, Rational(1)});
    const auto result = build_extension(spec);
    CHECK(verify_extension(result.extended).pass);
    int centrals = 0;
    for (int i = 0; i < result.extended.size(); ++i)
        if (result.extended.is_central(i)) ++centrals;
    CHECK(centrals == engine.reduced_dim_les(2));
    CHECK(centrals == 3);
}
