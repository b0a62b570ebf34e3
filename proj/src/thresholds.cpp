#include "severi/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "severi/errors.hpp"

namespace severi {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::PlusHolds:
        return "plus_holds";
    case Verdict::DegreeFormulaHolds:
        return "degree_formula_holds";
    case Verdict::Fails:
        return "fails";
    case Verdict::NotCovered:
        return "not_covered";
    }
    return "?";
}

const Certificate* ThresholdReport::find(const std::string& stratum) const
{
    for (const auto& c : certificates) {
        if (c.stratum == stratum) {
            return &c;
        }
    }
    return nullptr;
}

nlohmann::ordered_json to_json(const ThresholdReport& report)
{
    nlohmann::ordered_json j;
    j["surface"] = report.surface;
    j["class"] = report.class_descriptor;
    j["delta"] = report.delta;
    j["verdict"] = to_string(report.verdict);
    auto conclusions = nlohmann::ordered_json::array();
    for (Verdict v : report.conclusions) {
        conclusions.push_back(to_string(v));
    }
    j["conclusions"] = conclusions;
    auto certs = nlohmann::ordered_json::array();
    for (const auto& c : report.certificates) {
        nlohmann::ordered_json cj;
        cj["stratum"] = c.stratum;
        if (c.codim) {
            cj["codim"] = *c.codim;
        } else {
            cj["codim"] = "inf";
        }
        cj["source"] = c.source;
        cj["binding"] = c.binding;
        certs.push_back(cj);
    }
    j["certificates"] = certs;
    j["flags"] = {{"effectivity", report.effectivity == Effectivity::Exact ? "exact" : "proxy"}};
    if (report.component_structure) {
        j["component_structure"] = {{"e_component_codim", report.component_structure->e_component_codim},
                                    {"other_components_codim", report.component_structure->other_codim}};
    } else {
        j["component_structure"] = nullptr;
    }
    return j;
}

std::string explain(const ThresholdReport& report)
{
    std::ostringstream os;
    os << report.surface << " " << report.class_descriptor.dump() << " delta=" << report.delta << ": "
       << to_string(report.verdict) << "\n";
    for (const auto& c : report.certificates) {
        os << "  " << c.stratum << ": codim " << (c.codim ? std::to_string(*c.codim) : "inf")
           << (c.exceeds(report.delta) ? " > " : " <= ") << report.delta << "  [" << c.source << "]"
           << (c.binding ? "" : " (non-binding)") << "\n";
    }
    if (report.component_structure) {
        os << "  components: E-component codim " << report.component_structure->e_component_codim
           << ", others codim " << report.component_structure->other_codim << "\n";
    }
    return os.str();
}

// ---- P^2 ---------------------------------------------------------------------

P2Bounds p2_bounds(long delta)
{
    if (delta < 0) {
        throw DomainError("delta must be >= 0");
    }
    const long goettsche = delta <= 2 ? 1 : (delta + 1) / 2 + 1;
    return P2Bounds{goettsche, std::max(delta, 1L)};
}

long p2_nonreduced_codim(long d, long b)
{
    if (b < 1 || 2 * b > d) {
        throw DomainError("p2_nonreduced_codim needs 1 <= b <= d/2");
    }
    return b * (4 * d - 5 * b + 3) / 2;
}

ThresholdReport p2_report(long d, long delta)
{
    if (d < 1) {
        throw DomainError("P2 report needs d >= 1");
    }
    const P2Bounds bounds = p2_bounds(delta);
    ThresholdReport report;
    report.surface = "P2";
    report.class_descriptor = {{"d", d}};
    report.delta = delta;

    Certificate nonreduced{"nonreduced", std::nullopt, "no B with 1 <= deg B <= d/2"};
    for (long b = 1; 2 * b <= d; ++b) {
        const long codim = p2_nonreduced_codim(d, b);
        if (!nonreduced.codim || codim < *nonreduced.codim) {
            nonreduced.codim = codim;
            nonreduced.source = "b(4d-5b+3)/2 at b=" + std::to_string(b);
        }
    }
    report.certificates.push_back(nonreduced);

    if (d >= bounds.goettsche_d_min) {
        report.verdict = Verdict::PlusHolds;
        report.conclusions = {Verdict::PlusHolds};
    } else {
        report.verdict = Verdict::Fails;
    }
    return report;
}

// ---- Hirzebruch ----------------------------------------------------------------

long epsilon_f(long e, long m, long p, long a, long b)
{
    if (a < 0 || b < 0 || a + b < 1 || p - 2 * a < 0 || m - 2 * b < 0) {
        throw DomainError("epsilon_f needs a,b >= 0, a+b >= 1, 2a <= p, 2b <= m");
    }
    const long e_term = (1 + 4 * m - 5 * b) * b * e;
    if (e_term % 2 != 0) {
        throw InternalError("b(1+4m-5b)e is odd");
    }
    return 2 * p * b + 2 * a * m - 5 * a * b + a + b + e_term / 2;
}

std::optional<EpsilonMin> min_epsilon(long e, long m, long p)
{
    std::optional<EpsilonMin> best;
    for (long a = 0; 2 * a <= p; ++a) {
        for (long b = 0; 2 * b <= m; ++b) {
            if (a + b == 0) {
                continue;
            }
            const long value = epsilon_f(e, m, p, a, b);
            if (!best || value < best->value) {
                best = EpsilonMin{value, a, b};
            }
        }
    }
    return best;
}

ThresholdReport hirzebruch_report(long e, long m, long p, long delta)
{
    if (e < 0 || m < 0 || p < 0 || delta < 0) {
        throw DomainError("hirzebruch_report needs e, m, p, delta >= 0");
    }
    ThresholdReport report;
    report.surface = "F" + std::to_string(e);
    report.class_descriptor = {{"e", e}, {"m", m}, {"p", p}, {"n", p + e * m}};
    report.delta = delta;

    Certificate nonreduced{"nonreduced", std::nullopt, "no valid (a,b)"};
    if (auto best = min_epsilon(e, m, p)) {
        nonreduced.codim = best->value;
        nonreduced.source = "min eps(a,b) at (a,b)=(" + std::to_string(best->a) + "," +
                            std::to_string(best->b) + ")";
    }
    report.certificates.push_back(nonreduced);
    if (e >= 1 && m >= 1) {
        report.certificates.push_back({"E-stratum", p + 1, "dim|L| - dim|L - E| = p+1"});
    }
    if (e >= 1 && m >= 2) {
        report.certificates.push_back({"2E-stratum", 2 * p + e + 2, "2p+e+2"});
    }

    const long bound = e >= 1 ? std::min(2 * m, p) : std::min(2 * m, 2 * p);
    const bool goettsche_condition = m + p >= 1 && delta <= bound;
    // A single fiber class: a pencil of reduced curves. With e = 0 the two
    // rulings are interchangeable, so (m,p) = (1,0) is the same case.
    const bool pencil_case = delta == 1 && ((m == 0 && p == 1) || (e == 0 && m == 1 && p == 0));
    if (goettsche_condition || pencil_case) {
        report.verdict = Verdict::PlusHolds;
        report.conclusions = {Verdict::PlusHolds};
        return report;
    }

    const bool nonreduced_ok = delta <= std::min(2 * m, 2 * p + e + 1);
    if (e >= 1 && m >= 2 && nonreduced_ok && delta >= p + e) {
        report.component_structure = ComponentStructure{delta - e + 1, delta};
        if (e == 1) {
            // -K.E = 1 and E is smooth, so only the nonreduced curves are bad.
            for (auto& c : report.certificates) {
                if (c.stratum == "E-stratum") {
                    c.binding = false;
                }
            }
            report.verdict = Verdict::DegreeFormulaHolds;
            report.conclusions = {Verdict::DegreeFormulaHolds};
            if (delta == p + 1) {
                report.verdict = Verdict::PlusHolds;
                report.conclusions.push_back(Verdict::PlusHolds);
            }
        } else {
            report.verdict = Verdict::NotCovered;
        }
        return report;
    }
    report.verdict = Verdict::Fails;
    return report;
}

// ---- del Pezzo -------------------------------------------------------------------

namespace {

// Calls visit(B) for every class B != 0 on X_r with 1 <= -K.B <= max_anti and
// B.(B-K)/2 >= 0. Those conditions give B^2 >= -s for s = -K.B, and with
// sum a_i = s - 3 a0 Cauchy-Schwarz bounds a0 and every |a_i|.
template <typename Visit>
void for_each_rr_effective(const SurfaceModel& s, long max_anti, Visit&& visit)
{
    const long r = s.parameter();
    for (long anti = 1; anti <= max_anti; ++anti) {
        if (r == 0) {
            if (anti % 3 == 0) {
                visit(DivisorClass{{anti / 3}});
            }
            continue;
        }
        // (9 - r) a0^2 - 6 anti a0 + anti^2 - r anti <= 0
        const double qa = static_cast<double>(9 - r);
        const double qb = -6.0 * static_cast<double>(anti);
        const double qc = static_cast<double>(anti * anti - r * anti);
        const double disc = qb * qb - 4 * qa * qc;
        if (disc < 0) {
            continue;
        }
        const long lo = static_cast<long>(std::floor((-qb - std::sqrt(disc)) / (2 * qa))) - 1;
        const long hi = static_cast<long>(std::ceil((-qb + std::sqrt(disc)) / (2 * qa))) + 1;
        for (long a0 = lo; a0 <= hi; ++a0) {
            const long square_budget = a0 * a0 + anti;
            const long target_sum = anti - 3 * a0;
            const long box = static_cast<long>(std::floor(std::sqrt(static_cast<double>(square_budget)))) + 1;
            std::vector<long> coords(static_cast<std::size_t>(r + 1), 0);
            coords[0] = a0;
            // Fill a_1..a_{r-1} recursively; a_r closes the sum.
            auto rec = [&](auto&& self, long index, long sum, long squares) -> void {
                if (index == r) {
                    const long last = target_sum - sum;
                    if (squares + last * last > square_budget) {
                        return;
                    }
                    coords[static_cast<std::size_t>(r)] = last;
                    DivisorClass B{coords};
                    if (proxy_effective(s, B)) {
                        visit(B);
                    }
                    return;
                }
                for (long v = -box; v <= box; ++v) {
                    if (squares + v * v > square_budget) {
                        continue;
                    }
                    coords[static_cast<std::size_t>(index)] = v;
                    self(self, index + 1, sum + v, squares + v * v);
                }
            };
            rec(rec, 1, 0, 0);
        }
    }
}

} // namespace

ThresholdReport delpezzo_report(int r, const DivisorClass& L, long delta)
{
    const SurfaceModel s = SurfaceModel::del_pezzo(r);
    if (delta < 0) {
        throw DomainError("delta must be >= 0");
    }
    const long dim_l = dim_linear_system(s, L).value;
    if (dim_l < 0) {
        throw DomainError("delpezzo_report needs dim|L| >= 0");
    }
    ThresholdReport report;
    report.surface = s.name();
    report.class_descriptor = {{"r", r}, {"coords", L.coords}, {"text", format_class(s, L)}};
    report.delta = delta;
    report.effectivity = Effectivity::Proxy;

    if (r >= 1) {
        Certificate lines{"line-stratum", std::nullopt, ""};
        for (const auto& gamma : minus_one_classes(s)) {
            const long codim = dim_l - dim_linear_system(s, L - gamma).value;
            if (!lines.codim || codim < *lines.codim) {
                lines.codim = codim;
                lines.source = "dim|L| - dim|L - G| at G = " + format_class(s, gamma);
            }
        }
        report.certificates.push_back(lines);
    }

    Certificate nonreduced{"nonreduced", std::nullopt, "no B with B and L-2B effective"};
    const long anti_l = -intersect(s, canonical_class(s), L);
    for_each_rr_effective(s, anti_l / 2, [&](const DivisorClass& B) {
        const DivisorClass rest = L - 2 * B;
        if (!proxy_effective(s, rest)) {
            return;
        }
        const long codim = dim_l - dim_linear_system(s, rest).value - dim_linear_system(s, B).value;
        if (!nonreduced.codim || codim < *nonreduced.codim) {
            nonreduced.codim = codim;
            nonreduced.source = "dim|L| - dim|L-2B| - dim|B| at B = " + format_class(s, B);
        }
    });
    report.certificates.push_back(nonreduced);

    const bool ok = std::all_of(report.certificates.begin(), report.certificates.end(),
                                [&](const Certificate& c) { return c.exceeds(delta); });
    report.verdict = ok ? Verdict::PlusHolds : Verdict::Fails;
    if (ok) {
        report.conclusions = {Verdict::PlusHolds};
    }
    return report;
}

} // namespace severi
