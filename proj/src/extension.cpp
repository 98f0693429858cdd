#include "ccx/extension.hpp"

#include "ccx/calculus.hpp"
#include "ccx/errors.hpp"
#include "ccx/linalg.hpp"

#include <algorithm>

namespace ccx {

namespace {

const VarId kD = VarId::partial();
const VarId kX = VarId::bracket_lambda();

Rational leading_coefficient(const Polynomial& p, const VarId& v) {
    const int d = p.degree_in(v);
    Rational lead;
    for (const auto& [m, c] : p.terms())
        for (const auto& [var, e] : m)
            if (var == v && e == d) lead = c;
    if (d == 0) lead = p.constant_value();
    return lead;
}

} // namespace

ExtensionResult build_extension(const ExtensionSpec& spec) {
    spec.base.validate();
    const ConformalAlgebra& base = spec.base;

    for (const auto& ec : spec.cocycles) {
        if (ec.cocycle.arity() != 2)
            throw CocycleCheckFailed("central extensions come from 2-cochains");
        const ConformalModule& V = *ec.cocycle.module();
        if (!V.is_trivial() || !(V.algebra == base))
            throw CocycleCheckFailed("cocycle must have trivial coefficients over the base");
        // reduced 2-cocycle: d c lands in (sum of x_i) * 3-cochains
        const Cochain dc = apply_differential(ec.cocycle, V);
        const Polynomial form = partial_form(V, 3);
        for (const auto& [t, p] : dc.values())
            if (!divides_exactly(p, form))
                throw CocycleCheckFailed("not a reduced 2-cocycle: d value " + p.to_string() +
                                         " on " + t.to_string(base));
        if (base.gen_index(ec.central_name) >= 0)
            throw CocycleCheckFailed("central name clashes with a base generator");
    }

    ExtensionResult out;
    ConformalAlgebra& E = out.extended;
    E.name = base.name + "ext";
    E.generators = base.generators;
    E.central.assign(base.generators.size(), 0);
    for (const auto& ec : spec.cocycles) {
        E.generators.push_back(ec.central_name);
        E.central.push_back(1);
    }
    const auto n = E.generators.size();
    E.bracket.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
    for (std::size_t i = 0; i < base.generators.size(); ++i)
        for (std::size_t j = 0; j < base.generators.size(); ++j)
            for (std::size_t k = 0; k < base.generators.size(); ++k)
                E.bracket[i][j][k] = base.bracket[i][j][k];

    const Polynomial x = Polynomial::variable(kX);
    for (std::size_t ci = 0; ci < spec.cocycles.size(); ++ci) {
        const auto& ec = spec.cocycles[ci];
        const int zidx = static_cast<int>(base.generators.size() + ci);

        // One scalar per cocycle: scale divided by the leading coefficient of
        // the first nonzero restriction to (x, -x), so the stored term is
        // scale times a monic power of x.
        Rational factor = ec.scale;
        bool have_ref = false;
        for (const auto& [t, p] : ec.cocycle.values()) {
            const Polynomial raw =
                ec.cocycle.eval(t.idx, std::vector<Polynomial>{x, -x});
            if (raw.is_zero()) continue;
            factor = ec.scale / leading_coefficient(raw, kX);
            have_ref = true;
            break;
        }
        (void)have_ref;

        for (int i = 0; i < base.size(); ++i) {
            for (int j = 0; j < base.size(); ++j) {
                const std::vector<int> pair{i, j};
                const Polynomial raw = ec.cocycle.eval(pair, std::vector<Polynomial>{x, -x});
                if (raw.is_zero()) continue;
                const Polynomial term = raw * factor;
                E.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(zidx)] = term;
                out.terms.push_back({ec.central_name,
                                     "(" + base.generators[static_cast<std::size_t>(i)] + "," +
                                         base.generators[static_cast<std::size_t>(j)] + ")",
                                     raw.to_string(), term.to_string(), factor});
            }
        }
    }
    E.validate();
    return out;
}

CheckReport verify_extension(const ConformalAlgebra& A) {
    CheckReport rep{"extension", true, {}};
    A.validate();
    const CheckReport skew = check_skew_symmetry(A);
    const CheckReport jac = check_jacobi(A);
    rep.pass = skew.pass && jac.pass;
    for (const auto& f : skew.failures)
        rep.failures.push_back({"skew-symmetry " + f.location, f.residual});
    for (const auto& f : jac.failures)
        rep.failures.push_back({"jacobi " + f.location, f.residual});
    return rep;
}

std::optional<std::vector<std::vector<Rational>>> solve_trivialization(
    const ConformalAlgebra& extended) {
    extended.validate();
    const std::vector<int> base = extended.noncentral_generators();
    std::vector<int> centrals;
    for (int k = 0; k < extended.size(); ++k)
        if (extended.is_central(k)) centrals.push_back(k);

    std::vector<std::vector<Rational>> h(base.size(),
                                         std::vector<Rational>(centrals.size(), Rational(0)));
    for (std::size_t zi = 0; zi < centrals.size(); ++zi) {
        const int z = centrals[zi];
        // equations: c_ij^z(x) = sum_g h_g P_ij^g(0, x), one per x-power and pair
        std::vector<std::vector<Polynomial>> pair_cols; // [pair][gen]
        std::vector<Polynomial> pair_rhs;
        for (int i : base) {
            for (int j : base) {
                const Polynomial& c = extended.bracket[static_cast<std::size_t>(i)]
                                                      [static_cast<std::size_t>(j)]
                                                      [static_cast<std::size_t>(z)];
                std::vector<Polynomial> row(base.size());
                for (std::size_t gi = 0; gi < base.size(); ++gi) {
                    const Polynomial& p = extended.bracket[static_cast<std::size_t>(i)]
                                                          [static_cast<std::size_t>(j)]
                                                          [static_cast<std::size_t>(base[gi])];
                    row[gi] = p.eval_at_zero(kD);
                }
                pair_cols.push_back(std::move(row));
                pair_rhs.push_back(c);
            }
        }
        // Stack coefficient equations.
        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> vec;
        for (std::size_t pi = 0; pi < pair_cols.size(); ++pi) {
            std::set<Monomial, GrlexLess> monos;
            for (const auto& p : pair_cols[pi])
                for (const auto& [m, cc] : p.terms()) monos.insert(m);
            for (const auto& [m, cc] : pair_rhs[pi].terms()) monos.insert(m);
            for (const auto& m : monos) {
                std::vector<Rational> row(base.size());
                for (std::size_t gi = 0; gi < base.size(); ++gi) row[gi] = pair_cols[pi][gi].coeff(m);
                mat.push_back(std::move(row));
                vec.push_back(pair_rhs[pi].coeff(m));
            }
        }
        QMatrix A(static_cast<int>(mat.size()), static_cast<int>(base.size()));
        for (std::size_t r = 0; r < mat.size(); ++r)
            for (std::size_t c = 0; c < base.size(); ++c)
                A.at(static_cast<int>(r), static_cast<int>(c)) = mat[r][c];
        const auto sol = solve(A, vec);
        if (!sol) return std::nullopt;
        for (std::size_t gi = 0; gi < base.size(); ++gi) h[gi][zi] = (*sol)[gi];
    }
    return h;
}

} // namespace ccx
