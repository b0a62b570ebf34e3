#include <doctest.h>

#include "severi/errors.hpp"
#include "severi/thresholds.hpp"

using namespace severi;

namespace {

void check_certified(const ThresholdReport& r)
{
    if (r.verdict != Verdict::PlusHolds) {
        return;
    }
    for (const auto& c : r.certificates) {
        if (c.binding) {
            INFO(to_json(r).dump());
            CHECK(c.exceeds(r.delta));
        }
    }
}

} // namespace

TEST_CASE("plane bounds")
{
    CHECK(p2_bounds(0).goettsche_d_min == 1);
    CHECK(p2_bounds(2).goettsche_d_min == 1);
    CHECK(p2_bounds(2).kst_d_min == 2);
    CHECK(p2_bounds(3).goettsche_d_min == 3);
    CHECK(p2_bounds(3).kst_d_min == 3);
    CHECK(p2_bounds(8).goettsche_d_min == 5);
    CHECK(p2_bounds(8).kst_d_min == 8);
    for (long delta = 0; delta <= 60; ++delta) {
        CHECK(p2_bounds(delta).goettsche_d_min <= p2_bounds(delta).kst_d_min);
    }
    CHECK_THROWS_AS(p2_bounds(-1), DomainError);
}

TEST_CASE("plane nonreduced codimension")
{
    CHECK(p2_nonreduced_codim(4, 1) == 7);
    CHECK(p2_nonreduced_codim(4, 2) == 9);
    for (long d = 2; d <= 12; ++d) {
        long best = p2_nonreduced_codim(d, 1);
        for (long b = 2; 2 * b <= d; ++b) {
            best = std::min(best, p2_nonreduced_codim(d, b));
        }
        CHECK(best == 2 * d - 1);
        CHECK(*p2_report(d, 0).find("nonreduced")->codim == 2 * d - 1);
    }
    CHECK_THROWS_AS(p2_nonreduced_codim(3, 2), DomainError);
    CHECK_THROWS_AS(p2_nonreduced_codim(3, 0), DomainError);
    CHECK_FALSE(p2_report(1, 0).find("nonreduced")->codim.has_value());
}

TEST_CASE("plane reports")
{
    for (long delta = 0; delta <= 10; ++delta) {
        for (long d = 1; d <= 12; ++d) {
            const auto r = p2_report(d, delta);
            CHECK((r.verdict == Verdict::PlusHolds) == (d >= p2_bounds(delta).goettsche_d_min));
            check_certified(r);
        }
    }
    CHECK_THROWS_AS(p2_report(0, 1), DomainError);
}

TEST_CASE("epsilon")
{
    for (long e = 0; e <= 3; ++e) {
        for (long m = 0; m <= 6; ++m) {
            for (long p = 0; p <= 6; ++p) {
                if (p >= 2) {
                    CHECK(epsilon_f(e, m, p, 1, 0) == 2 * m + 1);
                }
                if (m >= 2) {
                    CHECK(epsilon_f(e, m, p, 0, 1) == 2 * p + 1 + 2 * e * (m - 1));
                }
            }
        }
    }
    CHECK(epsilon_f(1, 2, 2, 1, 1) == 7);
    CHECK_THROWS_AS(epsilon_f(1, 2, 2, 0, 0), DomainError);
    CHECK_THROWS_AS(epsilon_f(1, 2, 1, 1, 0), DomainError);
    CHECK_THROWS_AS(epsilon_f(1, 1, 2, 0, 1), DomainError);
}

TEST_CASE("epsilon is minimized at (1,0) or (0,1)")
{
    for (long e = 0; e <= 3; ++e) {
        for (long m = 0; m <= 6; ++m) {
            for (long p = 0; p <= 6; ++p) {
                const long anchor = std::min(2 * m + 1, 2 * p + 1 + 2 * e * (m - 1));
                std::optional<long> valid_anchor;
                if (p >= 2) {
                    valid_anchor = 2 * m + 1;
                }
                if (m >= 2) {
                    const long other = 2 * p + 1 + 2 * e * (m - 1);
                    valid_anchor = valid_anchor ? std::min(*valid_anchor, other) : other;
                }
                const auto best = min_epsilon(e, m, p);
                CHECK(best.has_value() == valid_anchor.has_value());
                if (best) {
                    CHECK(best->value == *valid_anchor);
                    if (m >= 1) {
                        CHECK(best->value >= anchor);
                    }
                    if (m >= 2 && p >= 2) {
                        CHECK(best->value == anchor);
                    }
                }
            }
        }
    }
}

TEST_CASE("Hirzebruch worked examples")
{
    const auto a = hirzebruch_report(1, 2, 1, 1);
    CHECK(a.verdict == Verdict::PlusHolds);
    CHECK(*a.find("nonreduced")->codim == 5);
    CHECK(*a.find("E-stratum")->codim == 2);
    CHECK(*a.find("2E-stratum")->codim == 5);
    CHECK_FALSE(a.component_structure.has_value());

    const auto b = hirzebruch_report(1, 2, 1, 2);
    CHECK(b.verdict == Verdict::PlusHolds);
    CHECK(b.conclusions == std::vector<Verdict>{Verdict::DegreeFormulaHolds, Verdict::PlusHolds});
    REQUIRE(b.component_structure.has_value());
    CHECK(b.component_structure->e_component_codim == 2);
    CHECK(b.component_structure->other_codim == 2);
    CHECK_FALSE(b.find("E-stratum")->binding);

    const auto c = hirzebruch_report(0, 2, 2, 5);
    CHECK(c.verdict == Verdict::Fails);
    CHECK(c.find("E-stratum") == nullptr);
}

TEST_CASE("Hirzebruch special cases and open regimes")
{
    CHECK(hirzebruch_report(1, 0, 1, 1).verdict == Verdict::PlusHolds);
    CHECK(hirzebruch_report(1, 0, 2, 1).verdict == Verdict::Fails);
    CHECK(hirzebruch_report(1, 0, 2, 0).verdict == Verdict::PlusHolds);
    CHECK(hirzebruch_report(0, 1, 0, 1).verdict == Verdict::PlusHolds);
    CHECK(hirzebruch_report(0, 0, 0, 0).verdict == Verdict::Fails);
    // degree formula without equality: e = 1, delta = p + 2
    const auto d = hirzebruch_report(1, 3, 1, 3);
    CHECK(d.verdict == Verdict::DegreeFormulaHolds);
    CHECK(d.component_structure->e_component_codim == 3);
    // e >= 2 in the same regime
    const auto e = hirzebruch_report(2, 3, 1, 3);
    CHECK(e.verdict == Verdict::NotCovered);
    CHECK(e.component_structure->e_component_codim == 2);
    CHECK_THROWS_AS(hirzebruch_report(-1, 1, 1, 1), DomainError);
}

TEST_CASE("Hirzebruch verdicts are certified and monotone in delta")
{
    for (long e = 0; e <= 3; ++e) {
        for (long m = 0; m <= 6; ++m) {
            for (long p = 0; p <= 6; ++p) {
                bool still_holds = true;
                for (long delta = 0; delta <= 14; ++delta) {
                    const auto r = hirzebruch_report(e, m, p, delta);
                    check_certified(r);
                    const bool holds = r.verdict == Verdict::PlusHolds;
                    CHECK(!(holds && !still_holds));
                    still_holds = holds;
                }
            }
        }
    }
}

TEST_CASE("Hirzebruch symmetry on the quadric")
{
    for (long m = 0; m <= 6; ++m) {
        for (long p = 0; p <= 6; ++p) {
            for (long delta = 0; delta <= 13; ++delta) {
                CHECK(hirzebruch_report(0, m, p, delta).verdict == hirzebruch_report(0, p, m, delta).verdict);
            }
        }
    }
}

TEST_CASE("del Pezzo worked examples")
{
    const auto x6 = SurfaceModel::del_pezzo(6);
    const auto a = delpezzo_report(6, parse_class(x6, "-2K"), 2);
    CHECK(a.verdict == Verdict::PlusHolds);
    CHECK(*a.find("line-stratum")->codim == 3);
    // B = -K gives 2B = L with dim|B| = 3, so 9 - 0 - 3
    CHECK(*a.find("nonreduced")->codim == 6);
    CHECK(a.effectivity == Effectivity::Proxy);

    const auto b = delpezzo_report(6, parse_class(x6, "-K"), 1);
    CHECK(b.verdict == Verdict::PlusHolds);
    CHECK(*b.find("line-stratum")->codim == 2);
    CHECK_FALSE(b.find("nonreduced")->codim.has_value());

    CHECK(delpezzo_report(6, parse_class(x6, "-2K"), 3).verdict == Verdict::Fails);
    CHECK_THROWS_AS(delpezzo_report(7, DivisorClass{{3}}, 1), DomainError);
}

TEST_CASE("del Pezzo reports agree with the plane and F1")
{
    for (long d = 1; d <= 8; ++d) {
        const auto r = delpezzo_report(0, DivisorClass{{d}}, 0);
        const auto expected = d >= 2 ? std::optional<long>(2 * d - 1) : std::nullopt;
        CHECK(r.find("nonreduced")->codim == expected);
        CHECK(r.find("line-stratum") == nullptr);
    }
    // X1 is F1 with E1 = E and H - E1 = F, so pF + mG = (p+m)H - pE1.
    for (long m = 1; m <= 5; ++m) {
        for (long p = 0; p <= 5; ++p) {
            const DivisorClass L{{p + m, -p}};
            const auto r = delpezzo_report(1, L, 0);
            CHECK(*r.find("line-stratum")->codim == *hirzebruch_report(1, m, p, 0).find("E-stratum")->codim);
        }
    }
}

TEST_CASE("del Pezzo verdicts are antitone in delta")
{
    for (int r = 0; r <= 6; ++r) {
        const auto s = SurfaceModel::del_pezzo(r);
        for (const char* text : {"-K", "-2K", "-3K"}) {
            const DivisorClass L = parse_class(s, text);
            bool still_holds = true;
            for (long delta = 0; delta <= 12; ++delta) {
                const auto report = delpezzo_report(r, L, delta);
                check_certified(report);
                const bool holds = report.verdict == Verdict::PlusHolds;
                CHECK(!(holds && !still_holds));
                still_holds = holds;
            }
        }
    }
}

TEST_CASE("report rendering")
{
    const auto r = hirzebruch_report(1, 2, 1, 2);
    const auto j = to_json(r);
    CHECK(j["verdict"] == "plus_holds");
    CHECK(j["certificates"][0]["stratum"] == "nonreduced");
    CHECK(j["component_structure"]["e_component_codim"] == 2);
    CHECK(to_json(p2_report(1, 0))["certificates"][0]["codim"] == "inf");
    const std::string text = explain(r);
    CHECK(text.find("E-stratum: codim 2") != std::string::npos);
    CHECK(text.find("non-binding") != std::string::npos);
}
