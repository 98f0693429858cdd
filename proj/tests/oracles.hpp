// Test-only oracles, kept independent of the library code paths they check.
#ifndef CCX_TESTS_ORACLES_HPP
#define CCX_TESTS_ORACLES_HPP

#include "ccx/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracles {

// Seed for randomized property tests; CCX_SEED overrides.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("CCX_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240613;
}

// ---- independent dense multinomial arithmetic (exponent-vector keyed) ----

using Expo = std::vector<int>;
using DensePoly = std::map<Expo, ccx::Rational>;

inline void dense_add(DensePoly& p, const Expo& e, const ccx::Rational& c) {
    auto it = p.find(e);
    if (it == p.end()) {
        if (c != 0) p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Expo e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            dense_add(out, e, ca * cb);
        }
    }
    return out;
}

// ---- brute-force dimension of the skew slice ----
// All monomials of total degree m in q variables, antisymmetrized over the
// product of symmetric groups permuting positions [0,k) and [k,q); the
// dimension is the rank of the resulting coefficient vectors.

inline void enumerate_exponents(int q, int m, Expo& cur, std::vector<Expo>& out) {
    if (static_cast<int>(cur.size()) == q - 1) {
        cur.push_back(m - std::accumulate(cur.begin(), cur.end(), 0));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    const int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int e = 0; e <= m - used; ++e) {
        cur.push_back(e);
        enumerate_exponents(q, m, cur, out);
        cur.pop_back();
    }
}

inline int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Local Gaussian elimination, independent of the library's linear algebra.
inline int dense_rank(std::vector<std::vector<ccx::Rational>> rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(c)] == 0) continue;
            const ccx::Rational f = row[static_cast<std::size_t>(c)] /
                                    prow[static_cast<std::size_t>(c)];
            for (int cc = c; cc < cols; ++cc)
                row[static_cast<std::size_t>(cc)] -= f * prow[static_cast<std::size_t>(cc)];
        }
        ++rank;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

inline int antisym_dimension(int q, int k, int m) {
    if (q == 0) return m == 0 ? 1 : 0;
    std::vector<Expo> monos;
    Expo cur;
    enumerate_exponents(q, m, cur, monos);
    std::map<Expo, int> index;
    for (const auto& e : monos) index.emplace(e, static_cast<int>(index.size()));

    std::vector<int> group1(static_cast<std::size_t>(k));
    std::iota(group1.begin(), group1.end(), 0);
    std::vector<int> group2(static_cast<std::size_t>(q - k));
    std::iota(group2.begin(), group2.end(), k);

    std::vector<std::vector<ccx::Rational>> rows;
    for (const auto& e : monos) {
        std::vector<ccx::Rational> row(index.size(), ccx::Rational(0));
        std::vector<int> p1 = group1;
        std::sort(p1.begin(), p1.end());
        do {
            std::vector<int> p2 = group2;
            std::sort(p2.begin(), p2.end());
            do {
                std::vector<int> perm;
                perm.insert(perm.end(), p1.begin(), p1.end());
                perm.insert(perm.end(), p2.begin(), p2.end());
                Expo permuted(static_cast<std::size_t>(q));
                for (int i = 0; i < q; ++i)
                    permuted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                        e[static_cast<std::size_t>(i)];
                row[static_cast<std::size_t>(index.at(permuted))] +=
                    ccx::Rational(permutation_sign(perm));
            } while (std::next_permutation(p2.begin(), p2.end()));
        } while (std::next_permutation(p1.begin(), p1.end()));
        rows.push_back(std::move(row));
    }
    return dense_rank(std::move(rows));
}

} // namespace oracles

#endif
