#pragma once

// Generalized Severi degrees of P^1 x P^1. A class (m, n) is m(1,0) + n(0,1);
// it meets the fixed (1,0)-ruling L0 in n points, and alpha/beta record fixed
// and moving contacts with L0. The recursion specializes one point onto L0 at
// a time. Breaking off L0 leaves (m-1, n), which still meets L0 in n points
// since L0^2 = 0.

#include <string>
#include <vector>

#include "severi/exactmath.hpp"
#include "severi/memo.hpp"
#include "severi/profile.hpp"

namespace severi {

struct QuadricKey {
    int m = 0;
    int n = 0;
    int delta = 0;
    TangencyProfile alpha;
    TangencyProfile beta;

    // "f0|m|n|delta|alpha|beta"
    std::string canonical() const;
    static QuadricKey parse_canonical(const std::string& key);
};

// (mn + m + n) - delta - I(alpha) - I(beta) + |beta|; DomainError unless
// I(alpha) + I(beta) == n.
long point_count_quadric(const QuadricKey& key);

BigInt severi_quadric(const QuadricKey& key, MemoStore& memo);

// N^{(m,n),delta}(0, (n))
BigInt severi_quadric_simple(int m, int n, int delta, MemoStore& memo);

// cells[m][n][delta] = severi_quadric_simple(m, n, delta) for m <= m_max,
// n <= n_max; evaluated by up to `jobs` threads over the shared store.
std::vector<std::vector<std::vector<BigInt>>> severi_quadric_table(int m_max, int n_max, int delta_max,
                                                                   MemoStore& memo, unsigned jobs = 1);

} // namespace severi
