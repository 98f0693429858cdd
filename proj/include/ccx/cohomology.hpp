#ifndef CCX_COHOMOLOGY_HPP
#define CCX_COHOMOLOGY_HPP

#include "ccx/calculus.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ccx {

// k with k(k-1)/2 + (q-k)(q-k-1)/2 <= k: the blocks whose diagonal graded
// piece can be nonzero. Empty from q = 5 on.
std::set<int> admissible_k(int q);

struct RankProfile {
    std::string slice;
    int dim = 0;
    int rank_out = 0;
    int rank_in = 0;
    int contribution() const { return dim - rank_out - rank_in; }
};

struct BasicResult {
    int q = 0;
    int dim = 0;
    std::vector<RankProfile> profiles;
};

enum class ClassKind { Basic, Reduced };

struct CoboundaryWitness {
    // gamma = d(preimage) + partial_part for the reduced case; the basic case
    // leaves partial_part empty.
    Cochain preimage;
    std::optional<Cochain> partial_part;
};

struct CoboundaryCertificate {
    // A linear functional on one graded slice, vanishing on every coboundary
    // but not on gamma: the list of (monomial, weight) pairs of the slice
    // pairing, plus the nonzero value it takes on gamma.
    std::string slice;
    std::vector<std::pair<std::string, Rational>> functional;
    Rational value_on_gamma;
};

struct CoboundaryResult {
    bool yes = false;
    std::optional<CoboundaryWitness> witness;
    std::optional<CoboundaryCertificate> certificate;
};

struct Representative {
    std::string name; // matched label, or a generated one
    Cochain cochain;
    bool matches_named = false;
};

struct VanishingReport {
    std::string module_name;
    int q_max = 0;
    int degree_bound = 0;
    int checked_elements = 0;
    bool pass = false;
    std::string side_condition;
    std::string conclusion;
    std::vector<std::string> failures;
};

struct EngineConfig {
    int q_max = 6;
    int degree_bound = 8;
    // During the diagonal-slice computation, re-verify that every touched
    // off-diagonal slice is killed by the homotopy identity and contributes
    // rank zero.
    bool verify_offdiagonal = true;
};

// Cohomology of the basic and reduced complexes with trivial coefficients,
// plus the contracting-homotopy certificates for the nontrivial coefficient
// families. Requires an algebra whose bracket with the generator L has the
// eigenvalue shape [L x L] = (D+2x)L, [X x L] = x X; this is what makes the
// graded slices split off.
class CohomologyEngine {
public:
    explicit CohomologyEngine(ConformalAlgebra A, EngineConfig cfg = {});

    const ConformalAlgebra& algebra() const { return algebra_; }
    const EngineConfig& config() const { return config_; }
    ModuleRef trivial_module() const { return trivial_; }

    BasicResult basic_dim(int q) const;
    int reduced_dim_les(int q) const;
    // Truncated quotient computation at lambda-degree bounds D and D+1; the
    // two must agree or UnstableBound is thrown.
    int reduced_dim_direct(int q, int degree_bound) const;

    std::vector<Representative> representatives(int q, ClassKind kind) const;
    CoboundaryResult is_coboundary(const Cochain& g, ClassKind kind, int degree_bound) const;

    VanishingReport vanishing_certificate(const ConformalModule& V, int q_max) const;

    // d-matrices of the diagonal slices feeding basic_dim(q).
    std::vector<DifferentialMatrix> diagonal_matrices(int q) const;

private:
    ConformalAlgebra algebra_;
    EngineConfig config_;
    ModuleRef trivial_;
    int L_ = 0;
    // basic_dim is pure in q; the table routes query each q several times.
    mutable std::map<int, BasicResult> basic_cache_;

    int count_L(const GenTuple& t) const;
    GenTuple block_plus_L(const GenTuple& block) const;
    std::optional<GenTuple> block_minus_L(const GenTuple& block) const;

    // Matrix of d from the slice (q, block, m) in the monomial coordinates of
    // the target block at degree m+1.
    QMatrix d_matrix(const SliceBasis& src) const;
    // Matrix of multiplication by (sum of x_i) from slice degree m into m+1.
    QMatrix partial_matrix(int q, const GenTuple& block, int m) const;
};

// Named cocycles and reduced representatives used for matching and tests.
struct NamedCocycles {
    Cochain phi1, phi2, phi3; // arity 3
    Cochain psi1, psi2;       // arity 4
    Cochain phib1, phib2, phib3; // arity 2, reduced
    Cochain psib1, psib2;        // arity 3, reduced
};
NamedCocycles named_cocycles(const ModuleRef& trivial);

} // namespace ccx

#endif
