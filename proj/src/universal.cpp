#include "severi/universal.hpp"

#include <charconv>

#include "recursion_detail.hpp"
#include "severi/errors.hpp"
#include "severi/severi_plane.hpp"
#include "severi/severi_quadric.hpp"

namespace severi {

namespace {

int parse_int(std::string_view text, const std::string& context)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError("bad integer in " + context);
    }
    return value;
}

} // namespace

FitSource FitSource::parse(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw DomainError("input must look like p2:D or f0:M,N, got '" + text + "'");
    }
    const std::string kind = text.substr(0, colon);
    const std::string_view rest = std::string_view(text).substr(colon + 1);
    if (kind == "p2") {
        return p2(parse_int(rest, text));
    }
    if (kind == "f0") {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw DomainError("f0 input needs M,N: '" + text + "'");
        }
        return f0(parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text));
    }
    throw DomainError("unknown input surface '" + kind + "'");
}

std::string FitSource::label() const
{
    if (kind == Kind::P2) {
        return "p2:" + std::to_string(a);
    }
    return "f0:" + std::to_string(a) + "," + std::to_string(b);
}

ChernData chern_of(const FitSource& source)
{
    if (source.kind == FitSource::Kind::P2) {
        return chern_data(SurfaceModel::p2(), DivisorClass{{source.a}});
    }
    // (m, n) = nF + mE on F_0
    return chern_data(SurfaceModel::hirzebruch(0), hirzebruch_from_pm(0, source.b, source.a));
}

BigInt severi_of(const FitSource& source, int delta, MemoStore& memo)
{
    if (source.kind == FitSource::Kind::P2) {
        return severi_plane_simple(source.a, delta, memo);
    }
    return severi_quadric_simple(source.a, source.b, delta, memo);
}

ThresholdReport threshold_of(const FitSource& source, int delta)
{
    if (source.kind == FitSource::Kind::P2) {
        return p2_report(source.a, delta);
    }
    if (source.a < 0 || source.b < 0) {
        throw DomainError("f0 bidegree must be non-negative");
    }
    return hirzebruch_report(0, source.a, source.b, delta);
}

FitInput severi_series(const FitSource& source, int D, MemoStore& memo, bool force)
{
    if (D < 0) {
        throw DomainError("delta-max must be >= 0");
    }
    FitInput input{source, chern_of(source), {}, false};
    for (int delta = 0; delta <= D; ++delta) {
        if (threshold_of(source, delta).verdict != Verdict::PlusHolds) {
            if (!force) {
                throw DomainError("input " + source.label() + " is not certified at delta = " +
                                  std::to_string(delta) + " (use --force to override)");
            }
            input.forced = true;
        }
    }
    for (int delta = 0; delta <= D; ++delta) {
        input.degrees.push_back(severi_of(source, delta, memo));
    }
    if (input.degrees[0] != 1) {
        throw InternalError("N_0 != 1 for " + source.label());
    }
    return input;
}

std::vector<FitInput> severi_series_all(const std::vector<FitSource>& sources, int D, MemoStore& memo,
                                        bool force, unsigned jobs)
{
    std::vector<FitInput> out(sources.size());
    detail::parallel_for(sources.size(), jobs,
                         [&](std::size_t i) { out[i] = severi_series(sources[i], D, memo, force); });
    return out;
}

std::vector<FitSource> default_fit_sources(int D)
{
    const int half = std::max(1, (D + 1) / 2);
    const int d0 = half + 1;
    return {FitSource::p2(d0), FitSource::p2(d0 + 1), FitSource::p2(d0 + 2), FitSource::f0(half, half)};
}

UniversalSeries fit_universal(int D, const std::vector<FitInput>& inputs)
{
    if (D < 0) {
        throw DomainError("delta-max must be >= 0");
    }
    if (inputs.size() < 4) {
        throw DomainError("the universal fit needs at least 4 inputs");
    }
    // Augmented rows [l2 lk k2 c2 | [x^1] log .. [x^D] log].
    const std::size_t width = 4 + static_cast<std::size_t>(D);
    std::vector<std::vector<BigRat>> rows;
    UniversalSeries u;
    u.order = D;
    for (const auto& input : inputs) {
        if (static_cast<int>(input.degrees.size()) < D + 1) {
            throw DomainError("input " + input.source.label() + " has too few degrees");
        }
        std::vector<BigRat> series(input.degrees.begin(), input.degrees.begin() + D + 1);
        const auto log = series_log(TruncSeries<BigRat>(static_cast<std::size_t>(D), series));
        std::vector<BigRat> row{BigRat(input.chern.l2), BigRat(input.chern.lk), BigRat(input.chern.k2),
                                BigRat(input.chern.c2)};
        for (int j = 1; j <= D; ++j) {
            row.push_back(log[static_cast<std::size_t>(j)]);
        }
        rows.push_back(std::move(row));
        u.inputs.push_back(input.source.label());
        u.forced = u.forced || input.forced;
    }

    // Gauss-Jordan on the four Chern columns. P2 and F0 Chern vectors all lie
    // on a two-parameter family, so only the linear structure of log N can be
    // pinned down, and even that requires all four columns independent.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            throw DomainError("Chern vectors of the fit inputs have rank < 4");
        }
        std::swap(rows[rank], rows[pivot]);
        const BigRat inv = 1 / rows[rank][col];
        for (auto& v : rows[rank]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) {
                continue;
            }
            const BigRat factor = rows[r][col];
            for (std::size_t c = 0; c < width; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        for (int j = 1; j <= D; ++j) {
            if (rows[r][3 + static_cast<std::size_t>(j)] != 0) {
                throw UniversalityViolation("inputs disagree at order " + std::to_string(j));
            }
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        u.a[i] = TruncSeries<BigRat>(static_cast<std::size_t>(D));
        for (int j = 1; j <= D; ++j) {
            u.a[i][static_cast<std::size_t>(j)] = rows[i][3 + static_cast<std::size_t>(j)];
        }
    }
    return u;
}

MultiPoly4 goettsche_polynomial(const UniversalSeries& u, int delta)
{
    if (delta < 0 || delta > u.order) {
        throw DomainError("delta must lie in 0.." + std::to_string(u.order));
    }
    const auto order = static_cast<std::size_t>(u.order);
    TruncSeries<MultiPoly4> exponent(order);
    for (std::size_t j = 1; j <= order; ++j) {
        MultiPoly4 term;
        for (std::size_t i = 0; i < 4; ++i) {
            term = term + scale(MultiPoly4::variable(i), u.a[i][j]);
        }
        exponent[j] = term;
    }
    return series_exp(exponent)[static_cast<std::size_t>(delta)];
}

BigInt evaluate_G(const UniversalSeries& u, int delta, const ChernData& c)
{
    const std::array<BigRat, 4> point{BigRat(c.l2), BigRat(c.lk), BigRat(c.k2), BigRat(c.c2)};
    const BigRat value = goettsche_polynomial(u, delta).evaluate(point);
    if (!is_integer(value)) {
        throw IntegralityError("G_" + std::to_string(delta) + " = " + to_fraction_string(value));
    }
    return value.get_num();
}

VerifyRecord verify_equality(const UniversalSeries& u, const FitSource& source, int delta, MemoStore& memo)
{
    VerifyRecord record;
    record.source = source;
    record.delta = delta;
    record.predicted = threshold_of(source, delta);
    record.g_value = evaluate_G(u, delta, chern_of(source));
    record.recursion_value = severi_of(source, delta, memo);
    record.match = record.recursion_value == record.g_value;
    return record;
}

// ---- JSON ------------------------------------------------------------------------

nlohmann::ordered_json to_json(const MultiPoly4& p)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& [exps, coef] : p.terms()) {
        out.push_back({{"exps", exps}, {"coef", to_fraction_string(coef)}});
    }
    return out;
}

nlohmann::ordered_json to_json(const UniversalSeries& u)
{
    nlohmann::ordered_json j;
    j["order"] = u.order;
    j["inputs"] = u.inputs;
    j["forced"] = u.forced;
    for (std::size_t i = 0; i < 4; ++i) {
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : u.a[i].coeffs()) {
            coeffs.push_back(to_fraction_string(c));
        }
        j["a" + std::to_string(i + 1)] = coeffs;
    }
    auto polys = nlohmann::ordered_json::array();
    for (int delta = 0; delta <= u.order; ++delta) {
        const MultiPoly4 g = goettsche_polynomial(u, delta);
        polys.push_back({{"delta", delta}, {"text", g.to_string()}, {"terms", to_json(g)}});
    }
    j["polynomials"] = polys;
    return j;
}

nlohmann::ordered_json to_json(const VerifyRecord& record)
{
    nlohmann::ordered_json j;
    j["source"] = record.source.label();
    j["delta"] = record.delta;
    j["recursion_value"] = to_decimal(record.recursion_value);
    j["G_value"] = to_decimal(record.g_value);
    j["match"] = record.match;
    j["predicted"] = to_json(record.predicted);
    return j;
}

UniversalSeries universal_from_json(const nlohmann::json& j)
{
    try {
        UniversalSeries u;
        u.order = j.at("order").get<int>();
        if (u.order < 0) {
            throw DomainError("series order must be >= 0");
        }
        if (j.contains("inputs")) {
            u.inputs = j.at("inputs").get<std::vector<std::string>>();
        }
        u.forced = j.value("forced", false);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& arr = j.at("a" + std::to_string(i + 1));
            if (!arr.is_array() || static_cast<int>(arr.size()) != u.order + 1) {
                throw DomainError("series a" + std::to_string(i + 1) + " has the wrong length");
            }
            std::vector<BigRat> coeffs;
            for (const auto& c : arr) {
                coeffs.push_back(parse_bigrat(c.get<std::string>()));
            }
            if (coeffs[0] != 0) {
                throw DomainError("series constant terms must be 0");
            }
            u.a[i] = TruncSeries<BigRat>(static_cast<std::size_t>(u.order), coeffs);
        }
        return u;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed series file: ") + e.what());
    }
}

} // namespace severi
