#include "severi/surfaces.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "severi/errors.hpp"

namespace severi {

SurfaceModel SurfaceModel::p2() { return SurfaceModel(SurfaceKind::P2, 0); }

SurfaceModel SurfaceModel::hirzebruch(int e)
{
    if (e < 0) {
        throw DomainError("Hirzebruch surface needs e >= 0");
    }
    return SurfaceModel(SurfaceKind::Hirzebruch, e);
}

SurfaceModel SurfaceModel::del_pezzo(int r)
{
    if (r < 0 || r > 6) {
        throw DomainError("del Pezzo model needs 0 <= r <= 6 (anticanonical very ample)");
    }
    return SurfaceModel(SurfaceKind::DelPezzo, r);
}

int SurfaceModel::picard_rank() const
{
    switch (kind_) {
    case SurfaceKind::P2:
        return 1;
    case SurfaceKind::Hirzebruch:
        return 2;
    case SurfaceKind::DelPezzo:
        return 1 + param_;
    }
    return 0;
}

int SurfaceModel::euler_number() const
{
    switch (kind_) {
    case SurfaceKind::P2:
        return 3;
    case SurfaceKind::Hirzebruch:
        return 4;
    case SurfaceKind::DelPezzo:
        return 3 + param_;
    }
    return 0;
}

long SurfaceModel::gram(int i, int j) const
{
    switch (kind_) {
    case SurfaceKind::P2:
        return 1;
    case SurfaceKind::Hirzebruch:
        // F^2 = 0, F.E = 1, E^2 = -e
        if (i == 0 && j == 0) {
            return 0;
        }
        if (i == 1 && j == 1) {
            return -param_;
        }
        return 1;
    case SurfaceKind::DelPezzo:
        if (i != j) {
            return 0;
        }
        return i == 0 ? 1 : -1;
    }
    return 0;
}

std::string SurfaceModel::name() const
{
    switch (kind_) {
    case SurfaceKind::P2:
        return "P2";
    case SurfaceKind::Hirzebruch:
        return "F" + std::to_string(param_);
    case SurfaceKind::DelPezzo:
        return "X" + std::to_string(param_);
    }
    return "?";
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b)
{
    if (a.coords.size() != b.coords.size()) {
        throw DomainError("divisor classes of different Picard rank");
    }
    DivisorClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] += b.coords[i];
    }
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

DivisorClass operator*(long k, const DivisorClass& a)
{
    DivisorClass out = a;
    for (auto& c : out.coords) {
        c *= k;
    }
    return out;
}

namespace {

void check_class(const SurfaceModel& s, const DivisorClass& D)
{
    if (static_cast<int>(D.coords.size()) != s.picard_rank()) {
        throw DomainError("class has " + std::to_string(D.coords.size()) + " coordinates but " +
                          s.name() + " has Picard rank " + std::to_string(s.picard_rank()));
    }
}

} // namespace

long intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b)
{
    check_class(s, a);
    check_class(s, b);
    const int rank = s.picard_rank();
    long total = 0;
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            total += a.coords[i] * s.gram(i, j) * b.coords[j];
        }
    }
    return total;
}

DivisorClass canonical_class(const SurfaceModel& s)
{
    switch (s.kind()) {
    case SurfaceKind::P2:
        return DivisorClass{{-3}};
    case SurfaceKind::Hirzebruch:
        // -K = (e+2)F + 2E
        return DivisorClass{{-(s.parameter() + 2), -2}};
    case SurfaceKind::DelPezzo: {
        DivisorClass K{std::vector<long>(1 + s.parameter(), 1)};
        K.coords[0] = -3;
        return K;
    }
    }
    return {};
}

DivisorClass zero_class(const SurfaceModel& s)
{
    return DivisorClass{std::vector<long>(s.picard_rank(), 0)};
}

ChernData chern_data(const SurfaceModel& s, const DivisorClass& L)
{
    const DivisorClass K = canonical_class(s);
    return ChernData{intersect(s, L, L), intersect(s, L, K), intersect(s, K, K), s.euler_number()};
}

long riemann_roch_dim(const SurfaceModel& s, const DivisorClass& D)
{
    const long twice = intersect(s, D, D - canonical_class(s));
    if (twice % 2 != 0) {
        throw InternalError("D.(D-K) is odd for " + format_class(s, D));
    }
    return twice / 2;
}

bool proxy_effective(const SurfaceModel& s, const DivisorClass& D)
{
    if (D == zero_class(s)) {
        return true;
    }
    const long minus_k_dot = -intersect(s, canonical_class(s), D);
    return riemann_roch_dim(s, D) >= 0 && minus_k_dot > 0;
}

bool del_pezzo_nef(const SurfaceModel& s, const DivisorClass& L)
{
    if (s.kind() != SurfaceKind::DelPezzo) {
        throw DomainError("del_pezzo_nef: not a del Pezzo model");
    }
    std::vector<DivisorClass> generators;
    const int r = s.parameter();
    if (r == 0) {
        generators.push_back(DivisorClass{{1}});
    } else if (r == 1) {
        generators.push_back(DivisorClass{{0, 1}});
        generators.push_back(DivisorClass{{1, -1}});
    } else {
        static const std::vector<std::vector<DivisorClass>> lines = [] {
            std::vector<std::vector<DivisorClass>> table;
            for (int k = 0; k <= 6; ++k) {
                table.push_back(k >= 2 ? minus_one_classes(SurfaceModel::del_pezzo(k))
                                       : std::vector<DivisorClass>{});
            }
            return table;
        }();
        generators = lines[r];
    }
    return std::all_of(generators.begin(), generators.end(),
                       [&](const DivisorClass& c) { return intersect(s, L, c) >= 0; });
}

HirzebruchPM hirzebruch_pm(const SurfaceModel& s, const DivisorClass& L)
{
    if (s.kind() != SurfaceKind::Hirzebruch) {
        throw DomainError("hirzebruch_pm: not a Hirzebruch model");
    }
    check_class(s, L);
    const long n = L.coords[0];
    const long m = L.coords[1];
    return HirzebruchPM{n - s.parameter() * m, m};
}

DivisorClass hirzebruch_from_pm(int e, long p, long m) { return DivisorClass{{p + e * m, m}}; }

LinearSystemDim dim_linear_system(const SurfaceModel& s, const DivisorClass& L)
{
    check_class(s, L);
    LinearSystemDim out;
    switch (s.kind()) {
    case SurfaceKind::P2: {
        const long d = L.coords[0];
        out.value = d < 0 ? -1 : riemann_roch_dim(s, L);
        return out;
    }
    case SurfaceKind::Hirzebruch: {
        const long e = s.parameter();
        const long n = L.coords[0];
        const long m = L.coords[1];
        if (n < 0 || m < 0) {
            return out;
        }
        const long p = n - e * m;
        if (p < 0) {
            throw DomainError("Hirzebruch rule: p = n - em must be >= 0 (got p = " +
                              std::to_string(p) + "; every member contains E)");
        }
        const long closed = p * m + p + m + m * e * (1 + m) / 2;
        const long rr = riemann_roch_dim(s, L);
        if (closed != rr) {
            throw InternalError("Hirzebruch closed form disagrees with Riemann-Roch");
        }
        out.value = closed;
        return out;
    }
    case SurfaceKind::DelPezzo:
        out.effectivity = Effectivity::Proxy;
        if (!proxy_effective(s, L)) {
            return out;
        }
        out.value = riemann_roch_dim(s, L);
        out.lower_bound_only = !del_pezzo_nef(s, L);
        return out;
    }
    return out;
}

long arithmetic_genus(const SurfaceModel& s, const DivisorClass& L)
{
    const long twice = intersect(s, L, L + canonical_class(s));
    return twice / 2 + 1;
}

long expected_severi_dim(const SurfaceModel& s, const DivisorClass& L, long delta)
{
    if (delta < 0) {
        throw DomainError("delta must be >= 0");
    }
    return dim_linear_system(s, L).value - delta;
}

namespace {

// Enumerates the integer box prod [-bound_i, bound_i] and collects the hits.
template <typename Pred>
std::vector<DivisorClass> box_search(const std::vector<long>& bounds, Pred&& pred, bool& shell_hit)
{
    std::vector<DivisorClass> hits;
    std::vector<long> v(bounds.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = -bounds[i];
    }
    shell_hit = false;
    while (true) {
        DivisorClass D{v};
        if (pred(D)) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == bounds[i] || v[i] == -bounds[i]) {
                    shell_hit = true;
                }
            }
            hits.push_back(std::move(D));
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == bounds[i]) {
            v[i] = -bounds[i];
            ++i;
        }
        if (i == v.size()) {
            break;
        }
        ++v[i];
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace

std::vector<DivisorClass> minus_one_classes(const SurfaceModel& s)
{
    std::vector<long> bounds;
    if (s.kind() == SurfaceKind::DelPezzo) {
        bounds.assign(1 + s.parameter(), 2);
        bounds[0] = 3;
    } else if (s.kind() == SurfaceKind::Hirzebruch && s.parameter() == 1) {
        bounds = {3, 3};
    } else {
        throw DomainError("minus_one_classes: supported on X_r and F_1 only, not " + s.name());
    }
    const DivisorClass K = canonical_class(s);
    bool shell_hit = false;
    auto hits = box_search(
        bounds,
        [&](const DivisorClass& D) { return intersect(s, D, D) == -1 && intersect(s, K, D) == -1; },
        shell_hit);
    if (shell_hit) {
        throw InternalError("minus_one_classes: search box too small for " + s.name());
    }
    return hits;
}

// ---- text form ---------------------------------------------------------------

namespace {

long parse_long(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') {
        t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
        t.remove_suffix(1);
    }
    if (!t.empty() && t.front() == '+') {
        t.remove_prefix(1);
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<long> split_longs(std::string_view text, char sep)
{
    std::vector<long> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(parse_long(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

} // namespace

DivisorClass parse_class(const SurfaceModel& s, std::string_view text, ClassBasis basis)
{
    if (!text.empty() && text.back() == 'K') {
        std::string_view mult = text.substr(0, text.size() - 1);
        long k = 1;
        if (mult == "-") {
            k = -1;
        } else if (!mult.empty() && mult != "+") {
            k = parse_long(mult);
        }
        return k * canonical_class(s);
    }
    switch (s.kind()) {
    case SurfaceKind::P2:
        return DivisorClass{{parse_long(text)}};
    case SurfaceKind::Hirzebruch: {
        auto v = split_longs(text, ',');
        if (v.size() != 2) {
            throw DomainError("Hirzebruch class must be 'p,m' (or 'n,m' with --basis fe)");
        }
        if (basis == ClassBasis::FE) {
            return DivisorClass{{v[0], v[1]}};
        }
        return hirzebruch_from_pm(s.parameter(), v[0], v[1]);
    }
    case SurfaceKind::DelPezzo: {
        const auto semi = text.find(';');
        const long a0 = parse_long(text.substr(0, semi));
        std::vector<long> rest;
        if (semi != std::string_view::npos) {
            rest = split_longs(text.substr(semi + 1), ',');
        }
        if (static_cast<int>(rest.size()) != s.parameter()) {
            throw DomainError(s.name() + " class must be 'a0;a1,...,a" + std::to_string(s.parameter()) +
                              "'");
        }
        DivisorClass D{{a0}};
        D.coords.insert(D.coords.end(), rest.begin(), rest.end());
        return D;
    }
    }
    throw DomainError("unknown surface");
}

std::string format_class(const SurfaceModel& s, const DivisorClass& D)
{
    std::vector<std::string> names;
    switch (s.kind()) {
    case SurfaceKind::P2:
        names = {"H"};
        break;
    case SurfaceKind::Hirzebruch:
        names = {"F", "E"};
        break;
    case SurfaceKind::DelPezzo:
        names.push_back("H");
        for (int i = 1; i <= s.parameter(); ++i) {
            names.push_back("E" + std::to_string(i));
        }
        break;
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < D.coords.size() && i < names.size(); ++i) {
        const long c = D.coords[i];
        if (c == 0) {
            continue;
        }
        if (c < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        if (c != 1 && c != -1) {
            os << (c < 0 ? -c : c);
        }
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace severi
