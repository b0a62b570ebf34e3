#pragma once

// Picard-lattice models of P^2, the Hirzebruch surfaces F_e and the del Pezzo
// blowups X_r (r <= 6): intersection pairing, canonical class, Chern data and
// dimensions of complete linear systems via Riemann-Roch.

#include <string>
#include <string_view>
#include <vector>

namespace severi {

enum class SurfaceKind { P2, Hirzebruch, DelPezzo };

class SurfaceModel {
public:
    static SurfaceModel p2();
    // e >= 0
    static SurfaceModel hirzebruch(int e);
    // 0 <= r <= 6, so that -K is very ample
    static SurfaceModel del_pezzo(int r);

    SurfaceKind kind() const { return kind_; }
    // e for Hirzebruch, r for DelPezzo, 0 for P2
    int parameter() const { return param_; }
    int picard_rank() const;
    int euler_number() const;
    // Gram matrix entry in the storage basis:
    //   P2: (H); F_e: (F, E); X_r: (H, E_1..E_r)
    long gram(int i, int j) const;
    std::string name() const; // "P2", "F1", "X6"

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    SurfaceModel(SurfaceKind kind, int param) : kind_(kind), param_(param) {}

    SurfaceKind kind_;
    int param_;
};

/// Integer coordinates of a divisor class in the surface's storage basis.
struct DivisorClass {
    std::vector<long> coords;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(long k, const DivisorClass& a);

struct ChernData {
    long l2 = 0; // L.L
    long lk = 0; // L.K
    long k2 = 0; // K.K
    long c2 = 0; // topological Euler number of S

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

enum class Effectivity { Exact, Proxy };

struct LinearSystemDim {
    long value = -1; // -1 for an empty system
    // Riemann-Roch only bounds dim|L| from below here (del Pezzo classes that
    // are not nef).
    bool lower_bound_only = false;
    Effectivity effectivity = Effectivity::Exact;
};

long intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const SurfaceModel& s);
DivisorClass zero_class(const SurfaceModel& s);
ChernData chern_data(const SurfaceModel& s, const DivisorClass& L);

// D.(D-K)/2, which equals chi(L) - 1 on a rational surface.
long riemann_roch_dim(const SurfaceModel& s, const DivisorClass& D);

// Del Pezzo effectivity proxy: D = 0, or D.(D-K)/2 >= 0 and -K.D > 0.
bool proxy_effective(const SurfaceModel& s, const DivisorClass& D);

// L.C >= 0 for every generator C of the effective cone of X_r.
bool del_pezzo_nef(const SurfaceModel& s, const DivisorClass& L);

/// dim|L|.
///   P2: -1 for d < 0, else d(d+3)/2.
///   F_e: -1 if n < 0 or m < 0 (L = nF + mE); DomainError if p = n - em < 0,
///        where every member contains E; else pm + p + m + me(1+m)/2.
///   X_r: -1 if the effectivity proxy rejects L, else the Riemann-Roch value.
LinearSystemDim dim_linear_system(const SurfaceModel& s, const DivisorClass& L);

long arithmetic_genus(const SurfaceModel& s, const DivisorClass& L);

// dim|L| - delta
long expected_severi_dim(const SurfaceModel& s, const DivisorClass& L, long delta);

/// All classes with G.G = -1 and K.G = -1 on X_r or F_1, by exhaustive
/// search over a coordinate box; throws InternalError if a hit lands on the
/// box boundary (the box would then be too small).
std::vector<DivisorClass> minus_one_classes(const SurfaceModel& s);

// ---- Hirzebruch coordinates ------------------------------------------------

// L = pF + mG with G = eF + E, stored as (n, m) = (p + em, m).
DivisorClass hirzebruch_from_pm(int e, long p, long m);
struct HirzebruchPM {
    long p;
    long m;
};
HirzebruchPM hirzebruch_pm(const SurfaceModel& s, const DivisorClass& L);

// ---- text form ---------------------------------------------------------------

enum class ClassBasis { Default, FE };

/// Parses a class string.
///   P2: "d"; F_e: "p,m" (or "n,m" with ClassBasis::FE); X_r: "a0;a1,...,ar".
///   Every surface also accepts integer multiples of K: "K", "-K", "-2K".
DivisorClass parse_class(const SurfaceModel& s, std::string_view text,
                         ClassBasis basis = ClassBasis::Default);

// Linear combination of basis elements, e.g. "3H", "3F+2E", "6H-2E1-2E2".
std::string format_class(const SurfaceModel& s, const DivisorClass& D);

} // namespace severi
