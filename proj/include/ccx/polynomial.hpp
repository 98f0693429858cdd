#ifndef CCX_POLYNOMIAL_HPP
#define CCX_POLYNOMIAL_HPP

#include "ccx/rational.hpp"
#include "ccx/varid.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ccx {

// Exponent vector, sorted by VarId, exponents >= 1.
using Monomial = std::vector<std::pair<VarId, int>>;

int total_degree(const Monomial& m);

// Graded lexicographic order: total degree first, ties broken by comparing
// exponents along the canonical variable order (a higher exponent on an
// earlier variable makes the monomial larger).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(Rational c);
    explicit Polynomial(long long c);
    static Polynomial variable(const VarId& v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Zero polynomial reports constant value 0.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;

    int total_degree() const;           // -1 for the zero polynomial
    int degree_in(const VarId& v) const;
    int lambda_degree() const;          // total degree counting Lambda variables only
    std::set<VarId> support() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    Polynomial pow(int e) const;

    // Simultaneous substitution; variables absent from the map are kept.
    Polynomial substitute(const std::map<VarId, Polynomial>& bindings) const;
    Polynomial substitute_var(const VarId& v, const Polynomial& image) const;
    Polynomial derivative(const VarId& v) const;
    Polynomial eval_at_zero(const VarId& v) const;

    // Splits into homogeneous components by Lambda-degree.
    std::map<int, Polynomial> split_by_lambda_degree() const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

struct LinearDivision {
    Polynomial quotient;
    Polynomial remainder;
    VarId eliminated;
};

// Division by a nonzero polynomial of total degree 1. The highest-ordered
// variable of ell is eliminated: p = ell * quotient + remainder with the
// remainder free of that variable. Throws DegreeError otherwise.
LinearDivision divide_by_linear(const Polynomial& p, const Polynomial& ell);

inline bool divides_exactly(const Polynomial& p, const Polynomial& ell) {
    return divide_by_linear(p, ell).remainder.is_zero();
}

} // namespace ccx

#endif
