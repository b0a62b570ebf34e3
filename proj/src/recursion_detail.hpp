#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "severi/exactmath.hpp"
#include "severi/profile.hpp"

namespace severi::detail {

// prod_k C(alpha_k, alpha'_k) * C(beta'_k, beta_k) * k^(beta'_k - beta_k)
inline BigInt degeneration_weight(const TangencyProfile& alpha, const TangencyProfile& alpha_sub,
                                  const TangencyProfile& beta, const TangencyProfile& beta_sup)
{
    BigInt w = 1;
    const int top = std::max({alpha.max_order(), beta_sup.max_order()});
    for (int k = 1; k <= top; ++k) {
        w *= binomial(alpha[k], alpha_sub[k]);
        w *= binomial(beta_sup[k], beta[k]);
        for (int i = beta[k]; i < beta_sup[k]; ++i) {
            w *= k;
        }
    }
    return w;
}

inline TangencyProfile add_profiles(const TangencyProfile& a, const TangencyProfile& b)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(a.max_order(), b.max_order())), 0);
    for (int k = 1; k <= static_cast<int>(v.size()); ++k) {
        v[k - 1] = a[k] + b[k];
    }
    return TangencyProfile(std::move(v));
}

// Runs task(i) for i in [0, count) on up to `jobs` threads; rethrows the
// first exception.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next.store(count);
                }
            }
        });
    }
    workers.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace severi::detail
