#pragma once

// Generalized Severi degrees N^{d,delta}(alpha, beta) of the projective plane:
// the number of (possibly reducible) reduced degree-d curves with delta nodes,
// not containing a fixed line L, through the appropriate number of general
// points, with alpha_k contacts of order k to L at fixed points and beta_k
// contacts of order k at unspecified points. Computed by the Caporaso-Harris
// recursion, which specializes one point condition onto L at a time.

#include <string>
#include <vector>

#include "severi/exactmath.hpp"
#include "severi/memo.hpp"
#include "severi/profile.hpp"

namespace severi {

struct PlaneKey {
    int d = 1;
    int delta = 0;
    TangencyProfile alpha; // fixed contacts
    TangencyProfile beta;  // moving contacts

    // "p2|d|delta|alpha|beta"
    std::string canonical() const;
    static PlaneKey parse_canonical(const std::string& key);
};

// Number of general point conditions still free:
// d(d+3)/2 - delta - I(alpha) - I(beta) + |beta|.
// Throws DomainError unless I(alpha) + I(beta) == d.
long point_count_plane(const PlaneKey& key);

BigInt severi_plane(const PlaneKey& key, MemoStore& memo);

// N^{d,delta}(0, (d)): all intersections with L transverse and moving.
BigInt severi_plane_simple(int d, int delta, MemoStore& memo);

// rows[d-1][delta] = severi_plane_simple(d, delta) for 1 <= d <= d_max.
// Cells may be evaluated by `jobs` threads over the shared store.
std::vector<std::vector<BigInt>> severi_plane_table(int d_max, int delta_max, MemoStore& memo,
                                                    unsigned jobs = 1);

} // namespace severi
