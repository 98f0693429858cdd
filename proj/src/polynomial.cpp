#include "ccx/polynomial.hpp"

#include "ccx/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ccx {

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    // Walk both exponent vectors along the canonical variable order; the
    // first differing exponent decides.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second;
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            // a has a positive exponent on an earlier variable: a is larger.
            return false;
        } else {
            return true;
        }
    }
    if (i < a.size()) return false;
    if (j < b.size()) return true;
    return false;
}

Polynomial::Polynomial(Rational c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial::Polynomial(long long c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::variable(const VarId& v, int exp) {
    Polynomial p;
    if (exp < 0) throw Error("negative exponent");
    if (exp == 0) return Polynomial(Rational(1));
    p.terms_.emplace(Monomial{{v, exp}}, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, ccx::total_degree(m));
    return d;
}

int Polynomial::degree_in(const VarId& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m)
            if (var == v) d = std::max(d, e);
    return d;
}

int Polynomial::lambda_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [var, e] : m)
            if (var.kind == VarKind::Lambda) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::set<VarId> Polynomial::support() const {
    std::set<VarId> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m) s.insert(var);
    return s;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

} // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(mul_monomials(ma, mb), ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("negative exponent");
    Polynomial r{Rational(1)};
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& bindings) const {
    Polynomial r;
    // Power cache keyed by (variable, exponent).
    std::map<std::pair<VarId, int>, Polynomial> powers;
    auto power_of = [&](const VarId& v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        Polynomial term{c};
        Monomial kept;
        for (const auto& [v, e] : m) {
            if (bindings.count(v)) {
                term *= power_of(v, e);
            } else {
                kept.emplace_back(v, e);
            }
        }
        Polynomial keptp;
        keptp.add_term(kept, Rational(1));
        r += term * keptp;
    }
    return r;
}

Polynomial Polynomial::substitute_var(const VarId& v, const Polynomial& image) const {
    return substitute({{v, image}});
}

Polynomial Polynomial::derivative(const VarId& v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != v) continue;
            Monomial d = m;
            Rational nc = c * m[i].second;
            if (d[i].second == 1)
                d.erase(d.begin() + static_cast<long>(i));
            else
                d[i].second -= 1;
            r.add_term(d, nc);
        }
    }
    return r;
}

Polynomial Polynomial::eval_at_zero(const VarId& v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        bool has = false;
        for (const auto& [var, e] : m)
            if (var == v) { has = true; break; }
        if (!has) r.add_term(m, c);
    }
    return r;
}

std::map<int, Polynomial> Polynomial::split_by_lambda_degree() const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [var, e] : m)
            if (var.kind == VarKind::Lambda) t += e;
        out[t].add_term(m, c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs == 1;
        if (!unit || m.empty()) os << abs.str();
        bool need_star = !unit && !m.empty();
        for (const auto& [v, e] : m) {
            if (need_star) os << "*";
            os << v.to_string();
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

LinearDivision divide_by_linear(const Polynomial& p, const Polynomial& ell) {
    if (ell.is_zero() || ell.total_degree() != 1)
        throw DegreeError("divisor must have total degree 1, got " + ell.to_string());
    // ell = c_v * v + rest with v the highest-ordered variable present.
    VarId v;
    Rational cv;
    for (const auto& [m, c] : ell.terms()) {
        if (m.empty()) continue;
        const VarId& var = m.front().first;
        if (cv == 0 || v < var) {
            v = var;
            cv = c;
        }
    }
    Polynomial rest = ell - Polynomial::variable(v) * cv;

    LinearDivision out;
    out.eliminated = v;
    Polynomial work = p;
    // Reduce the top v-power repeatedly: if work = A * v^e + (lower), then
    // subtracting (A/c_v) * v^(e-1) * ell cancels that block exactly.
    while (true) {
        int e = work.degree_in(v);
        if (e == 0) break;
        Polynomial lead; // coefficient of v^e
        for (const auto& [m, c] : work.terms()) {
            for (const auto& [var, exp] : m) {
                if (var == v && exp == e) {
                    Monomial rem;
                    for (const auto& pr : m)
                        if (pr.first != v) rem.push_back(pr);
                    lead.add_term(rem, c);
                }
            }
        }
        Polynomial t = lead * Rational(1 / cv) * Polynomial::variable(v, e - 1);
        out.quotient += t;
        work -= t * ell;
    }
    out.remainder = work;
    return out;
}

} // namespace ccx
