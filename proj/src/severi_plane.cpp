#include "severi/severi_plane.hpp"

#include <sstream>

#include "recursion_detail.hpp"
#include "severi/errors.hpp"

namespace severi {

std::string PlaneKey::canonical() const
{
    std::ostringstream os;
    os << "p2|" << d << "|" << delta << "|" << alpha.to_string() << "|" << beta.to_string();
    return os.str();
}

PlaneKey PlaneKey::parse_canonical(const std::string& key)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = key.find('|', start);
        parts.push_back(key.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    if (parts.size() != 5 || parts[0] != "p2") {
        throw DomainError("not a plane key: " + key);
    }
    PlaneKey k;
    try {
        k.d = std::stoi(parts[1]);
        k.delta = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw DomainError("bad plane key: " + key);
    }
    k.alpha = TangencyProfile::parse(parts[3]);
    k.beta = TangencyProfile::parse(parts[4]);
    if (k.canonical() != key) {
        throw DomainError("non-canonical plane key: " + key);
    }
    return k;
}

long point_count_plane(const PlaneKey& key)
{
    if (key.alpha.weight() + key.beta.weight() != key.d) {
        throw DomainError("tangency budget violated: I(alpha) + I(beta) must equal d = " +
                          std::to_string(key.d));
    }
    const long d = key.d;
    return d * (d + 3) / 2 - key.delta - key.alpha.weight() - key.beta.weight() + key.beta.count();
}

namespace {

long max_nodes(long d) { return d * (d - 1) / 2; }

void check_edge(const PlaneKey& parent, long parent_points, const PlaneKey& child)
{
    if (point_count_plane(child) != parent_points - 1) {
        throw InternalError("point-count bookkeeping broken on edge " + parent.canonical() + " -> " +
                            child.canonical());
    }
}

BigInt evaluate(const PlaneKey& key, MemoStore& memo)
{
    const long points = point_count_plane(key);
    if (key.delta < 0 || key.delta > max_nodes(key.d)) {
        return 0;
    }
    if (points < 0) {
        return 0;
    }
    if (key.d == 1) {
        return key.delta == 0 ? 1 : 0;
    }
    const std::string ck = key.canonical();
    if (auto cached = memo.find(ck)) {
        return *cached;
    }
    if (points == 0) {
        throw UnsupportedRecursionState(ck);
    }
    memo.count_expansion();

    BigInt total = 0;

    // The specialized point lands on a moving contact of order k.
    for (int k = 1; k <= key.beta.max_order(); ++k) {
        if (key.beta[k] == 0) {
            continue;
        }
        PlaneKey child{key.d, key.delta, key.alpha.plus_unit(k), key.beta.minus_unit(k)};
        check_edge(key, points, child);
        total += k * evaluate(child, memo);
    }

    // The curve breaks into L plus a degree d-1 residual curve.
    const int beta_weight = key.beta.weight();
    for (const auto& alpha_sub : subprofiles(key.alpha)) {
        const int remaining = key.d - 1 - alpha_sub.weight() - beta_weight;
        if (remaining < 0) {
            continue;
        }
        for (const auto& gained : profiles_of_weight(remaining)) {
            const int child_delta = key.delta + gained.count() + 1 - key.d;
            if (child_delta < 0) {
                continue;
            }
            const TangencyProfile beta_sup = detail::add_profiles(key.beta, gained);
            PlaneKey child{key.d - 1, child_delta, alpha_sub, beta_sup};
            check_edge(key, points, child);
            const BigInt value = evaluate(child, memo);
            if (value != 0) {
                total += detail::degeneration_weight(key.alpha, alpha_sub, key.beta, beta_sup) * value;
            }
        }
    }
    return memo.insert(ck, total);
}

} // namespace

BigInt severi_plane(const PlaneKey& key, MemoStore& memo)
{
    if (key.d < 1) {
        throw DomainError("plane Severi degree needs d >= 1");
    }
    return evaluate(key, memo);
}

BigInt severi_plane_simple(int d, int delta, MemoStore& memo)
{
    if (d < 1) {
        throw DomainError("plane Severi degree needs d >= 1");
    }
    if (delta < 0) {
        throw DomainError("delta must be >= 0");
    }
    std::vector<int> beta{d};
    return severi_plane(PlaneKey{d, delta, TangencyProfile(), TangencyProfile(beta)}, memo);
}

std::vector<std::vector<BigInt>> severi_plane_table(int d_max, int delta_max, MemoStore& memo,
                                                    unsigned jobs)
{
    if (d_max < 1 || delta_max < 0) {
        throw DomainError("table needs d_max >= 1 and delta_max >= 0");
    }
    std::vector<std::vector<BigInt>> rows(d_max, std::vector<BigInt>(delta_max + 1));
    const std::size_t width = delta_max + 1;
    detail::parallel_for(rows.size() * width, jobs, [&](std::size_t cell) {
        const int d = static_cast<int>(cell / width) + 1;
        const int delta = static_cast<int>(cell % width);
        rows[d - 1][delta] = severi_plane_simple(d, delta, memo);
    });
    return rows;
}

} // namespace severi
