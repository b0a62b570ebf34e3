#include <doctest.h>

#include <set>
#include <thread>

#include "recursion_detail.hpp"
#include "severi/errors.hpp"
#include "severi/memo.hpp"
#include "severi/profile.hpp"

using namespace severi;

TEST_CASE("tangency profiles")
{
    const TangencyProfile a(std::vector<int>{2, 0, 1, 0, 0});
    CHECK(a.to_string() == "2,0,1");
    CHECK(a.max_order() == 3);
    CHECK(a.weight() == 5);
    CHECK(a.count() == 3);
    CHECK(a[1] == 2);
    CHECK(a[7] == 0);
    CHECK(a.minus_unit(3) == TangencyProfile(std::vector<int>{2}));
    CHECK(a.plus_unit(2).to_string() == "2,1,1");
    CHECK(TangencyProfile::parse("2,0,1") == a);
    CHECK(TangencyProfile::parse("").empty());
    CHECK(TangencyProfile(std::vector<int>{0, 0}).empty());
    CHECK_THROWS_AS(TangencyProfile::parse("1,x"), DomainError);
    CHECK_THROWS_AS(TangencyProfile::parse("-1"), DomainError);
    CHECK_THROWS_AS(TangencyProfile().minus_unit(1), InternalError);
}

TEST_CASE("profiles of a given weight are the integer partitions")
{
    const std::vector<std::size_t> partitions{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        const auto all = profiles_of_weight(n);
        CHECK(all.size() == partitions[n]);
        std::set<std::string> distinct;
        for (const auto& p : all) {
            CHECK(p.weight() == n);
            distinct.insert(p.to_string());
        }
        CHECK(distinct.size() == all.size());
    }
    CHECK(profiles_of_weight(-1).empty());
}

TEST_CASE("subprofiles fill the box")
{
    const TangencyProfile a(std::vector<int>{2, 1, 3});
    const auto subs = subprofiles(a);
    CHECK(subs.size() == 3 * 2 * 4);
    for (const auto& s : subs) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(s[k] <= a[k]);
        }
    }
    CHECK(subprofiles(TangencyProfile()).size() == 1);
}

TEST_CASE("degeneration weight")
{
    // C(2,1) * C(2,1) * 1^1 for alpha=(2), alpha'=(1), beta=(1), beta'=(2)
    const TangencyProfile two(std::vector<int>{2});
    const TangencyProfile one(std::vector<int>{1});
    CHECK(detail::degeneration_weight(two, one, one, two) == 4);
    // a new contact of order 3 contributes a factor 3
    CHECK(detail::degeneration_weight(TangencyProfile(), TangencyProfile(), TangencyProfile(),
                                      TangencyProfile(std::vector<int>{0, 0, 1})) == 3);
}

TEST_CASE("memo store is first-writer-wins across threads")
{
    MemoStore memo;
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&memo] {
            for (int i = 0; i < 200; ++i) {
                memo.insert("k" + std::to_string(i), i);
                CHECK(*memo.find("k" + std::to_string(i)) == i);
            }
        });
    }
    threads.clear();
    CHECK(memo.size() == 200);
    CHECK(memo.fresh_records().size() == 200);
    CHECK(memo.fresh_records().front().first == "k0");
    CHECK(memo.insert("k5", 99) == 5);
}

TEST_CASE("memo preload")
{
    MemoStore memo;
    memo.preload("a", 1);
    memo.preload("a", 1);
    CHECK(memo.stats().preloaded == 1);
    CHECK(memo.fresh_records().empty());
    CHECK_THROWS_AS(memo.preload("a", 2), CacheConflict);
    CHECK(memo.find("missing") == std::nullopt);
    CHECK(memo.find("a") == BigInt(1));
    CHECK(memo.stats().hits == 1);
}

TEST_CASE("parallel_for propagates the first failure")
{
    std::atomic<int> sum{0};
    detail::parallel_for(100, 4, [&](std::size_t i) { sum += static_cast<int>(i); });
    CHECK(sum == 4950);
    CHECK_THROWS_AS(detail::parallel_for(100, 4,
                                         [](std::size_t i) {
                                             if (i == 37) {
                                                 throw DomainError("boom");
                                             }
                                         }),
                    DomainError);
}
