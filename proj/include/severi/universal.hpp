#pragma once

// Universal node polynomials from Severi degrees.
//
// The generating series sum_delta N_delta x^delta of a sufficiently ample
// (S, L) has logarithm L^2 a1(x) + (L.K) a2(x) + K^2 a3(x) + c2 a4(x) for four
// universal series a_i. Each order of the a_i is fixed by four inputs with
// independent Chern vectors; every further input is a consistency check.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "severi/exactmath.hpp"
#include "severi/memo.hpp"
#include "severi/surfaces.hpp"
#include "severi/thresholds.hpp"

namespace severi {

/// A surface with a Severi recursion: P2 with O(d), or P1 x P1 with (m, n).
struct FitSource {
    enum class Kind { P2, F0 } kind = Kind::P2;
    int a = 1; // d, or m
    int b = 0; // unused, or n

    static FitSource p2(int d) { return {Kind::P2, d, 0}; }
    static FitSource f0(int m, int n) { return {Kind::F0, m, n}; }
    // "p2:5", "f0:3,3"
    static FitSource parse(const std::string& text);
    std::string label() const;

    friend bool operator==(const FitSource&, const FitSource&) = default;
};

ChernData chern_of(const FitSource& source);
BigInt severi_of(const FitSource& source, int delta, MemoStore& memo);
ThresholdReport threshold_of(const FitSource& source, int delta);

struct FitInput {
    FitSource source;
    ChernData chern;
    std::vector<BigInt> degrees; // N_0 .. N_D
    bool forced = false;         // some delta <= D was not certified
};

/// Severi degrees N_0..N_D of the source. Throws DomainError if some
/// delta <= D is not certified by its threshold report, unless force is set.
FitInput severi_series(const FitSource& source, int D, MemoStore& memo, bool force = false);

// Computes several inputs in parallel over one shared memo.
std::vector<FitInput> severi_series_all(const std::vector<FitSource>& sources, int D, MemoStore& memo,
                                        bool force, unsigned jobs);

// P2(d0), P2(d0+1), P2(d0+2), F0(M,M) with M = max(1, ceil(D/2)), d0 = M+1.
std::vector<FitSource> default_fit_sources(int D);

struct UniversalSeries {
    int order = 0;
    std::array<TruncSeries<BigRat>, 4> a{TruncSeries<BigRat>(0), TruncSeries<BigRat>(0),
                                         TruncSeries<BigRat>(0), TruncSeries<BigRat>(0)};
    std::vector<std::string> inputs;
    bool forced = false;

    // Compares the series only.
    bool same_series(const UniversalSeries& other) const { return order == other.order && a == other.a; }
};

/// Exact solve of the per-order linear systems. DomainError if the Chern
/// vectors have rank < 4; UniversalityViolation if the system is inconsistent.
UniversalSeries fit_universal(int D, const std::vector<FitInput>& inputs);

// [x^delta] exp(w1 a1 + w2 a2 + w3 a3 + w4 a4)
MultiPoly4 goettsche_polynomial(const UniversalSeries& u, int delta);

// G_delta at the Chern data; IntegralityError if the value is not an integer.
BigInt evaluate_G(const UniversalSeries& u, int delta, const ChernData& c);

struct VerifyRecord {
    FitSource source;
    int delta = 0;
    BigInt recursion_value;
    BigInt g_value;
    ThresholdReport predicted;
    bool match = false;
};

VerifyRecord verify_equality(const UniversalSeries& u, const FitSource& source, int delta, MemoStore& memo);

// ---- JSON ------------------------------------------------------------------------

nlohmann::ordered_json to_json(const MultiPoly4& p);
nlohmann::ordered_json to_json(const UniversalSeries& u);
nlohmann::ordered_json to_json(const VerifyRecord& record);
// Reads the "order" and "a1".."a4" fields; DomainError on malformed input.
UniversalSeries universal_from_json(const nlohmann::json& j);

} // namespace severi
