#pragma once

// Sufficient conditions for deg|L|^delta_+ = G_delta(S, L), decided by
// codimension certificates for the loci of bad curves (nonreduced curves,
// curves containing E or a (-1)-curve).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "severi/surfaces.hpp"

namespace severi {

enum class Verdict { PlusHolds, DegreeFormulaHolds, Fails, NotCovered };

std::string to_string(Verdict v);

/// Codimension of one locus of |L|. An empty codim means the locus is empty
/// and is rendered as "inf".
struct Certificate {
    std::string stratum;
    std::optional<long> codim;
    std::string source;
    // Non-binding certificates describe a locus the verdict does not need to
    // avoid (e.g. the E-component when the degree formula is proved anyway).
    bool binding = true;

    bool exceeds(long delta) const { return !codim || *codim > delta; }
};

struct ComponentStructure {
    long e_component_codim; // delta - e + 1
    long other_codim;       // delta
};

struct ThresholdReport {
    std::string surface;
    nlohmann::ordered_json class_descriptor;
    long delta = 0;
    Verdict verdict = Verdict::Fails;
    // Everything proved, e.g. {degree_formula_holds, plus_holds}.
    std::vector<Verdict> conclusions;
    std::vector<Certificate> certificates;
    Effectivity effectivity = Effectivity::Exact;
    std::optional<ComponentStructure> component_structure;

    const Certificate* find(const std::string& stratum) const;
};

nlohmann::ordered_json to_json(const ThresholdReport& report);
// One line per certificate with its formula.
std::string explain(const ThresholdReport& report);

// ---- P^2 ---------------------------------------------------------------------

struct P2Bounds {
    long goettsche_d_min; // 1 if delta <= 2, else ceil(delta/2) + 1
    long kst_d_min;       // max(delta, 1): O(d) is delta-very ample iff d >= delta
};

P2Bounds p2_bounds(long delta);

// Codimension of {A + 2B : deg B = b} in |O(d)|: b(4d - 5b + 3)/2, 1 <= b <= d/2.
long p2_nonreduced_codim(long d, long b);

ThresholdReport p2_report(long d, long delta);

// ---- Hirzebruch F_e, L = pF + mG -----------------------------------------------

// Codimension of the nonreduced curves A + 2B, B ~ aF + bG, not containing E:
//   eps(a,b) = 2pb + 2am - 5ab + a + b + (1 + 4m - 5b)be/2.
long epsilon_f(long e, long m, long p, long a, long b);

struct EpsilonMin {
    long value;
    long a;
    long b;
};
// Minimum of eps over all valid (a,b); empty if no valid pair exists.
std::optional<EpsilonMin> min_epsilon(long e, long m, long p);

ThresholdReport hirzebruch_report(long e, long m, long p, long delta);

// ---- del Pezzo X_r ---------------------------------------------------------------

ThresholdReport delpezzo_report(int r, const DivisorClass& L, long delta);

} // namespace severi
