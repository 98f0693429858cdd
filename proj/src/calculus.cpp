#include "ccx/calculus.hpp"

#include "ccx/errors.hpp"

#include <algorithm>

namespace ccx {

namespace {

const VarId kD = VarId::partial();
const VarId kX = VarId::bracket_lambda();

Polynomial lambda_var(int i) { return Polynomial::variable(VarId::lambda(i)); }

int require_L(const ConformalAlgebra& A) {
    const int l = A.gen_index("L");
    if (l < 0) throw Error("operation needs a generator named L in " + A.name);
    return l;
}

} // namespace

Polynomial partial_form(const ConformalModule& V, int arity) {
    Polynomial f = V.partial_value();
    for (int i = 1; i <= arity; ++i) f += lambda_var(i);
    return f;
}

Cochain apply_differential(const Cochain& g, const ConformalModule& V) {
    if (!(*g.module() == V)) throw ModuleMismatch("cochain coefficients differ from the module");
    const ConformalAlgebra& A = V.algebra;
    const int n = g.arity();
    Cochain out(n + 1, g.module());

    std::vector<bool> acts(static_cast<std::size_t>(A.size()), false);
    for (int k = 0; k < A.size(); ++k)
        acts[static_cast<std::size_t>(k)] = !V.action[static_cast<std::size_t>(k)].is_zero();

    for (const GenTuple& target : canonical_tuples(A, n + 1)) {
        Polynomial total;

        // module-action terms
        for (int i = 0; i <= n; ++i) {
            const int gi = target.idx[static_cast<std::size_t>(i)];
            if (!acts[static_cast<std::size_t>(gi)]) continue;
            std::vector<int> rest;
            std::vector<Polynomial> lambdas;
            rest.reserve(static_cast<std::size_t>(n));
            lambdas.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j <= n; ++j) {
                if (j == i) continue;
                rest.push_back(target.idx[static_cast<std::size_t>(j)]);
                lambdas.push_back(lambda_var(j + 1));
            }
            const Polynomial value = g.eval(rest, lambdas);
            if (value.is_zero()) continue;
            Polynomial term = module_act(V, gi, lambda_var(i + 1), value);
            if (i % 2 != 0) term = -term;
            total += term;
        }

        // bracket terms, merged argument first with parameter x_i + x_j
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const int a = target.idx[static_cast<std::size_t>(i)];
                const int b = target.idx[static_cast<std::size_t>(j)];
                const Polynomial merged_lambda = lambda_var(i + 1) + lambda_var(j + 1);
                for (int k = 0; k < A.size(); ++k) {
                    if (A.is_central(k)) continue; // cochains vanish on centrals
                    const Polynomial& st = A.bracket[static_cast<std::size_t>(a)]
                                                    [static_cast<std::size_t>(b)]
                                                    [static_cast<std::size_t>(k)];
                    if (st.is_zero()) continue;
                    // D on the merged first slot becomes -(x_i + x_j).
                    const Polynomial coef =
                        st.substitute({{kX, lambda_var(i + 1)}, {kD, -merged_lambda}});
                    if (coef.is_zero()) continue;
                    std::vector<int> args{k};
                    std::vector<Polynomial> lambdas{merged_lambda};
                    for (int m = 0; m <= n; ++m) {
                        if (m == i || m == j) continue;
                        args.push_back(target.idx[static_cast<std::size_t>(m)]);
                        lambdas.push_back(lambda_var(m + 1));
                    }
                    const Polynomial value = g.eval(args, lambdas);
                    if (value.is_zero()) continue;
                    Polynomial term = coef * value;
                    if ((i + j) % 2 != 0) term = -term; // = (-1)^{(i+1)+(j+1)}
                    total += term;
                }
            }
        }

        if (!total.is_zero()) out.set_value(target, std::move(total));
    }
    return out;
}

Cochain partial_on_cochain(const Cochain& g) {
    const Polynomial f = partial_form(*g.module(), g.arity());
    Cochain out(g.arity(), g.module());
    for (const auto& [t, p] : g.values()) out.set_value(t, p * f);
    return out;
}

namespace {

Cochain append_L(const Cochain& g, bool differentiate) {
    const int q = g.arity();
    if (q < 1) throw Error("tau needs arity >= 1");
    const ConformalAlgebra& A = g.module()->algebra;
    const int L = require_L(A);
    const VarId last = VarId::lambda(q);
    Cochain out(q - 1, g.module());
    for (const GenTuple& t : canonical_tuples(A, q - 1)) {
        std::vector<int> args = t.idx;
        args.push_back(L);
        std::vector<Polynomial> lambdas;
        lambdas.reserve(static_cast<std::size_t>(q));
        for (int i = 1; i < q; ++i) lambdas.push_back(lambda_var(i));
        lambdas.push_back(Polynomial::variable(last));
        Polynomial v = g.eval(args, lambdas);
        if (v.is_zero()) continue;
        v = differentiate ? v.derivative(last).eval_at_zero(last) : v.eval_at_zero(last);
        if (v.is_zero()) continue;
        if (q % 2 == 0) v = -v; // (-1)^{q-1}
        out.set_value(t, std::move(v));
    }
    return out;
}

} // namespace

Cochain tau(const Cochain& g) {
    if (!g.module()->is_trivial()) throw ModuleMismatch("tau is defined for trivial coefficients");
    return append_L(g, true);
}

Cochain tau2(const Cochain& g) {
    if (g.module()->partial_kind != ConformalModule::PartialKind::Line)
        throw ModuleMismatch("tau2 is defined for one-dimensional coefficients");
    return append_L(g, false);
}

Cochain tau3(const Cochain& g) {
    if (g.module()->partial_kind != ConformalModule::PartialKind::Free)
        throw ModuleMismatch("tau3 is defined for free rank-one coefficients");
    return append_L(g, false);
}

namespace {

// remainder of p modulo the multiples of a linear form; constants span
// everything (nonzero) or nothing (zero).
Polynomial reduce_mod_form(const Polynomial& p, const Polynomial& form) {
    if (form.is_zero()) return p;
    if (form.total_degree() == 0) return Polynomial();
    return divide_by_linear(p, form).remainder;
}

int count_L(const ConformalAlgebra& A, const GenTuple& t) {
    const int L = A.gen_index("L");
    int k = 0;
    for (int g : t.idx)
        if (g == L) ++k;
    return k;
}

} // namespace

Cochain homotopy_residual(const Cochain& g, HomotopyKind kind) {
    const ConformalModule& V = *g.module();
    const int q = g.arity();

    // tau is only defined from arity 1 up, so the d-tau term drops at q = 0.
    auto op = [&](const Cochain& c) {
        switch (kind) {
        case HomotopyKind::Tau: return tau(c);
        case HomotopyKind::Tau2: return tau2(c);
        default: return tau3(c);
        }
    };
    Cochain anticommutator = op(apply_differential(g, V));
    if (q >= 1) anticommutator += apply_differential(op(g), V);

    if (kind == HomotopyKind::Tau) {
        if (!V.is_trivial()) throw ModuleMismatch("tau residual needs trivial coefficients");
        // blockwise (deg - k) g
        Cochain residual = anticommutator;
        for (const auto& [t, p] : g.values()) {
            if (p.split_by_lambda_degree().size() > 1)
                throw NonHomogeneous("block " + t.to_string(V.algebra) +
                                     " carries mixed degrees");
            const int deg = p.lambda_degree();
            const int k = count_L(V.algebra, t);
            Cochain pred(q, g.module());
            pred.set_value(t, p * Rational(deg - k));
            residual -= pred;
        }
        return residual;
    }

    Polynomial scale; // subtracted multiple of g
    Polynomial modulus;
    if (kind == HomotopyKind::Tau2) {
        scale = -V.partial_scalar;
        modulus = partial_form(V, q);
    } else {
        const int L = require_L(V.algebra);
        Polynomial alpha =
            V.action[static_cast<std::size_t>(L)].eval_at_zero(kX) - Polynomial::variable(kD);
        if (alpha.degree_in(kD) > 0)
            throw Error("action of L at x=0 must be D plus a D-free part");
        scale = std::move(alpha);
        modulus = Polynomial::variable(kD);
        for (int i = 1; i <= q; ++i) modulus += lambda_var(i);
    }

    Cochain residual = anticommutator;
    for (const auto& [t, p] : g.values()) {
        Cochain pred(q, g.module());
        pred.set_value(t, p * scale);
        residual -= pred;
    }
    Cochain reduced(q, g.module());
    for (const auto& [t, p] : residual.values()) {
        Polynomial r = reduce_mod_form(p, modulus);
        if (!r.is_zero()) reduced.set_value(t, std::move(r));
    }
    return reduced;
}

std::optional<std::vector<Rational>> slice_coordinates(const SliceBasis& basis,
                                                       const Polynomial& value) {
    // Coordinates over the union of monomials of the basis and the value.
    std::map<Monomial, int, GrlexLess> index;
    auto index_of = [&](const Monomial& m) {
        auto it = index.find(m);
        if (it == index.end()) it = index.emplace(m, static_cast<int>(index.size())).first;
        return it->second;
    };
    for (const auto& e : basis.elements)
        for (const auto& [m, c] : e.terms()) index_of(m);
    for (const auto& [m, c] : value.terms()) index_of(m);

    QMatrix A(static_cast<int>(index.size()), basis.dimension());
    for (int col = 0; col < basis.dimension(); ++col)
        for (const auto& [m, c] : basis.elements[static_cast<std::size_t>(col)].terms())
            A.at(index.at(m), col) = c;
    std::vector<Rational> b(index.size(), Rational(0));
    for (const auto& [m, c] : value.terms()) b[static_cast<std::size_t>(index.at(m))] = c;
    return solve(A, b);
}

DifferentialMatrix assemble_matrix(const SliceBasis& src, const ConformalModule& V) {
    const ConformalAlgebra& A = V.algebra;
    const int L = require_L(A);

    // Inferred target block: one more L.
    std::vector<int> tb = src.block.idx;
    tb.insert(std::lower_bound(tb.begin(), tb.end(), L), L);
    const GenTuple target_block{tb};

    DifferentialMatrix out;
    out.source = src;

    const bool free_module = V.partial_kind == ConformalModule::PartialKind::Free;
    if (!free_module) {
        out.target = basis_of_slice(A, src.arity + 1, target_block, src.degree + 1);
    } else {
        // Degree-truncated free case: D-powers 0..1 over lambda-degrees
        // src.degree .. src.degree+1 on the inferred block.
        out.target.arity = src.arity + 1;
        out.target.block = target_block;
        out.target.degree = src.degree + 1;
        for (int e = 0; e <= 1; ++e) {
            for (int m = src.degree; m <= src.degree + 1; ++m) {
                SliceBasis part = basis_of_slice(A, src.arity + 1, target_block, m);
                for (auto& el : part.elements)
                    out.target.elements.push_back(Polynomial::variable(kD).pow(e) * el);
            }
        }
    }

    ModuleRef mod = std::make_shared<const ConformalModule>(V);
    out.matrix = QMatrix(out.target.dimension(), src.dimension());
    for (int col = 0; col < src.dimension(); ++col) {
        const Cochain image = apply_differential(slice_element_cochain(src, col, mod), V);
        for (const auto& [t, p] : image.values()) {
            if (!(t == target_block))
                throw TargetSliceOverflow("image leaves the inferred block " +
                                          t.to_string(A));
            (void)p;
        }
        const Polynomial value = image.value_on(target_block);
        auto coords = slice_coordinates(out.target, value);
        if (!coords)
            throw TargetSliceOverflow("image of column " + std::to_string(col) +
                                      " is outside the declared target slice");
        for (int row = 0; row < out.target.dimension(); ++row)
            out.matrix.at(row, col) = (*coords)[static_cast<std::size_t>(row)];
    }
    return out;
}

} // namespace ccx
