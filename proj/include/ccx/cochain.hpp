#ifndef CCX_COCHAIN_HPP
#define CCX_COCHAIN_HPP

#include "ccx/algebra.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace ccx {

// Canonical argument tuple: generator indices sorted nondecreasing.
struct GenTuple {
    std::vector<int> idx;

    GenTuple() = default;
    explicit GenTuple(std::vector<int> v);

    int arity() const { return static_cast<int>(idx.size()); }
    auto operator<=>(const GenTuple&) const = default;
    std::string to_string(const ConformalAlgebra& A) const;
};

// All canonical tuples of the given arity over the non-central generators.
std::vector<GenTuple> canonical_tuples(const ConformalAlgebra& A, int arity);

// A q-cochain with values in a rank-one (or line) module, stored on canonical
// tuples only. The value polynomial lives in x1..xq (plus D for free modules
// and any params); values on permuted tuples follow by signed permutation,
// values on D-shifted arguments by conformal antilinearity.
class Cochain {
public:
    Cochain(int arity, ModuleRef module);
    Cochain(int arity, ModuleRef module, std::map<GenTuple, Polynomial> canonical_values);

    // Builds a cochain from values on arbitrary tuples, checking that all
    // entries are consistent under signed permutation. Throws
    // InconsistentSkewData on conflicts (including self-conflicts such as a
    // nonzero constant on a repeated-generator tuple).
    static Cochain normalize(int arity, ModuleRef module,
                             const std::vector<std::pair<std::vector<int>, Polynomial>>& values);

    int arity() const { return arity_; }
    const ModuleRef& module() const { return module_; }
    const std::map<GenTuple, Polynomial>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    const Polynomial& value_on(const GenTuple& t) const;

    // Value on an arbitrary generator tuple whose k-th argument carries the
    // polynomial lambda value lambdas[k].
    Polynomial eval(std::span<const int> gens, std::span<const Polynomial> lambdas) const;

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain operator*(const Rational& c) const;
    bool operator==(const Cochain& rhs) const;

    void set_value(const GenTuple& t, Polynomial p);

    // Splits into homogeneous components by value lambda-degree; the sum of
    // the components reproduces the cochain. Zero cochain gives an empty list.
    std::vector<Cochain> degree_decompose() const;

    // Checks the stored values are skew within equal-generator groups.
    bool skew_consistent() const;

    std::string to_string() const;

private:
    int arity_ = 0;
    ModuleRef module_;
    std::map<GenTuple, Polynomial> values_;
};

// Basis of one graded piece of the cochain space: values supported on a
// single block, homogeneous of the given lambda-degree, skew within each
// equal-generator group. Elements are the value polynomials on the block.
struct SliceBasis {
    int arity = 0;
    GenTuple block;
    int degree = 0;
    std::vector<Polynomial> elements;

    int dimension() const { return static_cast<int>(elements.size()); }
    std::string id() const;
};

// Product construction: per equal-generator group, Vandermonde times a
// monomial symmetric function; degrees distributed over groups, first group
// descending, partitions in descending lex order.
SliceBasis basis_of_slice(const ConformalAlgebra& A, int q, const GenTuple& block, int degree);

// Smallest degree carrying a nonzero slice on this block (the degree of the
// forced Vandermonde factors).
int min_slice_degree(const GenTuple& block);

Cochain slice_element_cochain(const SliceBasis& basis, int index, const ModuleRef& module);

// Vandermonde product of a variable list.
Polynomial vandermonde(const std::vector<VarId>& vars);

// Monomial symmetric function for an integer partition in the given variables.
Polynomial monomial_symmetric(const std::vector<VarId>& vars, const std::vector<int>& partition);

// Partitions of d into at most max_parts parts, descending lex order.
std::vector<std::vector<int>> partitions(int d, int max_parts);

} // namespace ccx

#endif
