#include "severi/severi_quadric.hpp"

#include <sstream>

#include "recursion_detail.hpp"
#include "severi/errors.hpp"

namespace severi {

std::string QuadricKey::canonical() const
{
    std::ostringstream os;
    os << "f0|" << m << "|" << n << "|" << delta << "|" << alpha.to_string() << "|" << beta.to_string();
    return os.str();
}

QuadricKey QuadricKey::parse_canonical(const std::string& key)
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
    if (parts.size() != 6 || parts[0] != "f0") {
        throw DomainError("not a quadric key: " + key);
    }
    QuadricKey k;
    try {
        k.m = std::stoi(parts[1]);
        k.n = std::stoi(parts[2]);
        k.delta = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw DomainError("bad quadric key: " + key);
    }
    k.alpha = TangencyProfile::parse(parts[4]);
    k.beta = TangencyProfile::parse(parts[5]);
    if (k.canonical() != key) {
        throw DomainError("non-canonical quadric key: " + key);
    }
    return k;
}

long point_count_quadric(const QuadricKey& key)
{
    if (key.alpha.weight() + key.beta.weight() != key.n) {
        throw DomainError("tangency budget violated: I(alpha) + I(beta) must equal n = " +
                          std::to_string(key.n));
    }
    const long m = key.m;
    const long n = key.n;
    return m * n + m + n - key.delta - key.alpha.weight() - key.beta.weight() + key.beta.count();
}

namespace {

void check_edge(const QuadricKey& parent, long parent_points, const QuadricKey& child)
{
    if (point_count_quadric(child) != parent_points - 1) {
        throw InternalError("point-count bookkeeping broken on edge " + parent.canonical() + " -> " +
                            child.canonical());
    }
}

BigInt evaluate(const QuadricKey& key, MemoStore& memo)
{
    const long points = point_count_quadric(key);
    // A reduced (m, n) curve has at most mn nodes (the grid of rulings).
    if (key.delta < 0 || key.delta > static_cast<long>(key.m) * key.n) {
        return 0;
    }
    if (points < 0) {
        return 0;
    }
    if (key.m == 0) {
        // n distinct (0,1)-fibers, each meeting L0 transversally
        const bool transverse = key.alpha.max_order() <= 1 && key.beta.max_order() <= 1;
        return key.delta == 0 && transverse ? 1 : 0;
    }
    if (key.n == 0) {
        return key.delta == 0 && key.alpha.empty() && key.beta.empty() ? 1 : 0;
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
    for (int k = 1; k <= key.beta.max_order(); ++k) {
        if (key.beta[k] == 0) {
            continue;
        }
        QuadricKey child{key.m, key.n, key.delta, key.alpha.plus_unit(k), key.beta.minus_unit(k)};
        check_edge(key, points, child);
        total += k * evaluate(child, memo);
    }

    const int beta_weight = key.beta.weight();
    for (const auto& alpha_sub : subprofiles(key.alpha)) {
        const int remaining = key.n - alpha_sub.weight() - beta_weight;
        if (remaining < 0) {
            continue;
        }
        for (const auto& gained : profiles_of_weight(remaining)) {
            const int child_delta = key.delta + gained.count() - key.n;
            if (child_delta < 0) {
                continue;
            }
            const TangencyProfile beta_sup = detail::add_profiles(key.beta, gained);
            QuadricKey child{key.m - 1, key.n, child_delta, alpha_sub, beta_sup};
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

BigInt severi_quadric(const QuadricKey& key, MemoStore& memo)
{
    if (key.m < 0 || key.n < 0) {
        throw DomainError("quadric bidegree must be non-negative");
    }
    return evaluate(key, memo);
}

BigInt severi_quadric_simple(int m, int n, int delta, MemoStore& memo)
{
    if (m < 0 || n < 0) {
        throw DomainError("quadric bidegree must be non-negative");
    }
    if (delta < 0) {
        throw DomainError("delta must be >= 0");
    }
    TangencyProfile beta = n > 0 ? TangencyProfile(std::vector<int>{n}) : TangencyProfile();
    return severi_quadric(QuadricKey{m, n, delta, TangencyProfile(), beta}, memo);
}

std::vector<std::vector<std::vector<BigInt>>> severi_quadric_table(int m_max, int n_max, int delta_max,
                                                                   MemoStore& memo, unsigned jobs)
{
    if (m_max < 0 || n_max < 0 || delta_max < 0) {
        throw DomainError("table bounds must be non-negative");
    }
    const std::size_t rows = m_max + 1;
    const std::size_t cols = n_max + 1;
    const std::size_t depth = delta_max + 1;
    std::vector cells(rows, std::vector(cols, std::vector<BigInt>(depth)));
    detail::parallel_for(rows * cols * depth, jobs, [&](std::size_t cell) {
        const std::size_t m = cell / (cols * depth);
        const std::size_t n = cell / depth % cols;
        const std::size_t delta = cell % depth;
        cells[m][n][delta] = severi_quadric_simple(static_cast<int>(m), static_cast<int>(n),
                                                   static_cast<int>(delta), memo);
    });
    return cells;
}

} // namespace severi
