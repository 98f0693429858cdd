#include "ccx/cochain.hpp"

#include "ccx/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ccx {

GenTuple::GenTuple(std::vector<int> v) : idx(std::move(v)) {
    if (!std::is_sorted(idx.begin(), idx.end()))
        throw Error("generator tuple is not in canonical order");
}

std::string GenTuple::to_string(const ConformalAlgebra& A) const {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += A.generators[static_cast<std::size_t>(idx[i])];
    }
    return s + ")";
}

std::vector<GenTuple> canonical_tuples(const ConformalAlgebra& A, int arity) {
    std::vector<int> gens = A.noncentral_generators();
    std::vector<GenTuple> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(GenTuple(cur));
            return;
        }
        for (std::size_t g = from; g < gens.size(); ++g) {
            cur.push_back(gens[g]);
            self(self, g, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, arity);
    return out;
}

namespace {

// Stable argsort of the generator indices; returns (order, sign) where
// order[j] is the original position placed at canonical slot j.
std::pair<std::vector<int>, int> sorting_permutation(std::span<const int> gens) {
    std::vector<int> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gens[static_cast<std::size_t>(a)] <
                                                gens[static_cast<std::size_t>(b)]; });
    // Parity by counting inversions of `order`.
    int inversions = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) ++inversions;
    return {order, (inversions % 2 == 0) ? 1 : -1};
}

} // namespace

Cochain::Cochain(int arity, ModuleRef module) : arity_(arity), module_(std::move(module)) {
    if (!module_) throw Error("cochain needs a module");
    if (arity_ < 0) throw Error("negative arity");
}

Cochain::Cochain(int arity, ModuleRef module, std::map<GenTuple, Polynomial> canonical_values)
    : Cochain(arity, std::move(module)) {
    for (auto& [t, p] : canonical_values) {
        if (t.arity() != arity_) throw Error("tuple arity mismatch");
        if (!p.is_zero()) values_.emplace(t, std::move(p));
    }
}

Cochain Cochain::normalize(int arity, ModuleRef module,
                           const std::vector<std::pair<std::vector<int>, Polynomial>>& values) {
    Cochain out(arity, std::move(module));
    std::map<GenTuple, Polynomial> seen; // keeps zeros so conflicts are not lost
    for (const auto& [gens, poly] : values) {
        if (static_cast<int>(gens.size()) != arity) throw Error("tuple arity mismatch");
        auto [order, sign] = sorting_permutation(gens);
        std::vector<int> sorted;
        sorted.reserve(gens.size());
        std::map<VarId, Polynomial> rename;
        for (std::size_t j = 0; j < order.size(); ++j) {
            sorted.push_back(gens[static_cast<std::size_t>(order[j])]);
            rename[VarId::lambda(order[j] + 1)] =
                Polynomial::variable(VarId::lambda(static_cast<int>(j) + 1));
        }
        Polynomial canon = poly.substitute(rename);
        if (sign < 0) canon = -canon;
        GenTuple t{sorted};
        auto it = seen.find(t);
        if (it == seen.end()) {
            seen.emplace(std::move(t), std::move(canon));
        } else if (!(it->second == canon)) {
            throw InconsistentSkewData("conflicting values for one tuple after signing: " +
                                       it->second.to_string() + " vs " + canon.to_string());
        }
    }
    for (auto& [t, p] : seen)
        if (!p.is_zero()) out.values_.emplace(t, std::move(p));
    if (!out.skew_consistent())
        throw InconsistentSkewData("value not skew-symmetric within an equal-generator group");
    return out;
}

const Polynomial& Cochain::value_on(const GenTuple& t) const {
    static const Polynomial zero;
    auto it = values_.find(t);
    return it == values_.end() ? zero : it->second;
}

Polynomial Cochain::eval(std::span<const int> gens, std::span<const Polynomial> lambdas) const {
    if (static_cast<int>(gens.size()) != arity_ || gens.size() != lambdas.size())
        throw Error("eval arity mismatch");
    auto [order, sign] = sorting_permutation(gens);
    std::vector<int> sorted;
    sorted.reserve(gens.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        sorted.push_back(gens[static_cast<std::size_t>(order[j])]);
    auto it = values_.find(GenTuple{sorted});
    if (it == values_.end()) return Polynomial();
    std::map<VarId, Polynomial> subst;
    for (std::size_t j = 0; j < order.size(); ++j)
        subst[VarId::lambda(static_cast<int>(j) + 1)] = lambdas[static_cast<std::size_t>(order[j])];
    Polynomial v = it->second.substitute(subst);
    if (sign < 0) v = -v;
    return v;
}

Cochain Cochain::operator-() const {
    Cochain r(*this);
    for (auto& [t, p] : r.values_) p = -p;
    return r;
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
    if (arity_ != rhs.arity_ || !(*module_ == *rhs.module_))
        throw ModuleMismatch("cochain sum needs equal arity and module");
    for (const auto& [t, p] : rhs.values_) {
        auto it = values_.find(t);
        if (it == values_.end()) {
            values_.emplace(t, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) values_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
    return *this += -rhs;
}

Cochain Cochain::operator*(const Rational& c) const {
    Cochain r(arity_, module_);
    if (c == 0) return r;
    for (const auto& [t, p] : values_) r.values_.emplace(t, p * c);
    return r;
}

bool Cochain::operator==(const Cochain& rhs) const {
    return arity_ == rhs.arity_ && *module_ == *rhs.module_ && values_ == rhs.values_;
}

void Cochain::set_value(const GenTuple& t, Polynomial p) {
    if (t.arity() != arity_) throw Error("tuple arity mismatch");
    if (p.is_zero())
        values_.erase(t);
    else
        values_[t] = std::move(p);
}

std::vector<Cochain> Cochain::degree_decompose() const {
    std::map<int, Cochain> by_degree;
    for (const auto& [t, p] : values_) {
        for (auto& [deg, comp] : p.split_by_lambda_degree()) {
            auto it = by_degree.find(deg);
            if (it == by_degree.end()) it = by_degree.emplace(deg, Cochain(arity_, module_)).first;
            it->second.set_value(t, std::move(comp));
        }
    }
    std::vector<Cochain> out;
    out.reserve(by_degree.size());
    for (auto& [deg, c] : by_degree) out.push_back(std::move(c));
    return out;
}

bool Cochain::skew_consistent() const {
    for (const auto& [t, p] : values_) {
        for (int i = 0; i + 1 < arity_; ++i) {
            if (t.idx[static_cast<std::size_t>(i)] != t.idx[static_cast<std::size_t>(i + 1)])
                continue;
            // Swap of the two lambda variables must flip the sign.
            std::map<VarId, Polynomial> swap;
            swap[VarId::lambda(i + 1)] = Polynomial::variable(VarId::lambda(i + 2));
            swap[VarId::lambda(i + 2)] = Polynomial::variable(VarId::lambda(i + 1));
            if (!(p.substitute(swap) == -p)) return false;
        }
    }
    return true;
}

std::string Cochain::to_string() const {
    if (values_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, p] : values_) {
        if (!first) os << "; ";
        first = false;
        os << t.to_string(module_->algebra) << " -> " << p.to_string();
    }
    return os.str();
}

std::string SliceBasis::id() const {
    std::ostringstream os;
    os << "q=" << arity << " block=(";
    for (std::size_t i = 0; i < block.idx.size(); ++i) os << (i ? "," : "") << block.idx[i];
    os << ") deg=" << degree;
    return os.str();
}

Polynomial vandermonde(const std::vector<VarId>& vars) {
    Polynomial v{Rational(1)};
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            v *= Polynomial::variable(vars[i]) - Polynomial::variable(vars[j]);
    return v;
}

std::vector<std::vector<int>> partitions(int d, int max_parts) {
    std::vector<std::vector<int>> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    if (max_parts <= 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part, int parts_left) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (parts_left == 0) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p, parts_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, d, d, max_parts);
    return out;
}

Polynomial monomial_symmetric(const std::vector<VarId>& vars, const std::vector<int>& partition) {
    if (partition.size() > vars.size())
        throw Error("partition has more parts than variables");
    std::vector<int> exps(vars.size(), 0);
    std::copy(partition.begin(), partition.end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    Polynomial out;
    do {
        Monomial m;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (exps[i] > 0) m.emplace_back(vars[i], exps[i]);
        std::sort(m.begin(), m.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.add_term(m, Rational(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

int min_slice_degree(const GenTuple& block) {
    int d = 0;
    std::size_t i = 0;
    while (i < block.idx.size()) {
        std::size_t j = i;
        while (j < block.idx.size() && block.idx[j] == block.idx[i]) ++j;
        const int run = static_cast<int>(j - i);
        d += run * (run - 1) / 2;
        i = j;
    }
    return d;
}

SliceBasis basis_of_slice(const ConformalAlgebra& A, int q, const GenTuple& block, int degree) {
    if (block.arity() != q) throw Error("block arity mismatch");
    for (int g : block.idx)
        if (g < 0 || g >= A.size()) throw Error("block names an unknown generator");
    SliceBasis out;
    out.arity = q;
    out.block = block;
    out.degree = degree;

    // Equal-generator runs with their variable lists.
    struct Group {
        std::vector<VarId> vars;
        Polynomial vand;
    };
    std::vector<Group> groups;
    {
        std::size_t i = 0;
        while (i < block.idx.size()) {
            std::size_t j = i;
            Group g;
            while (j < block.idx.size() && block.idx[j] == block.idx[i]) {
                g.vars.push_back(VarId::lambda(static_cast<int>(j) + 1));
                ++j;
            }
            g.vand = vandermonde(g.vars);
            groups.push_back(std::move(g));
            i = j;
        }
    }

    int base = 0;
    for (const auto& g : groups) {
        const int n = static_cast<int>(g.vars.size());
        base += n * (n - 1) / 2;
    }
    const int rem = degree - base;
    if (rem < 0) return out;

    if (groups.empty()) { // arity 0
        if (degree == 0) out.elements.push_back(Polynomial(Rational(1)));
        return out;
    }

    // Distribute the remaining degree over the groups, first group highest.
    std::vector<int> degs(groups.size(), 0);
    auto emit = [&]() {
        std::vector<std::vector<std::vector<int>>> parts(groups.size());
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            parts[gi] = partitions(degs[gi], static_cast<int>(groups[gi].vars.size()));
            if (parts[gi].empty()) return;
        }
        std::vector<std::size_t> pick(groups.size(), 0);
        while (true) {
            Polynomial e{Rational(1)};
            for (std::size_t gi = 0; gi < groups.size(); ++gi)
                e *= groups[gi].vand * monomial_symmetric(groups[gi].vars, parts[gi][pick[gi]]);
            out.elements.push_back(std::move(e));
            std::size_t level = groups.size();
            while (level > 0) {
                --level;
                if (++pick[level] < parts[level].size()) break;
                pick[level] = 0;
                if (level == 0) return;
            }
        }
    };
    auto distribute = [&](auto&& self, std::size_t gi, int left) -> void {
        if (gi + 1 == groups.size()) {
            degs[gi] = left;
            emit();
            return;
        }
        for (int d = left; d >= 0; --d) {
            degs[gi] = d;
            self(self, gi + 1, left - d);
        }
    };
    distribute(distribute, 0, rem);
    return out;
}

Cochain slice_element_cochain(const SliceBasis& basis, int index, const ModuleRef& module) {
    Cochain c(basis.arity, module);
    c.set_value(basis.block, basis.elements[static_cast<std::size_t>(index)]);
    return c;
}

} // namespace ccx
