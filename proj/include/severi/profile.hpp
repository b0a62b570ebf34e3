#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace severi {

/// Contact-order bookkeeping against a fixed line: entry k-1 is the number of
/// contact points of order k. Trailing zeros are always trimmed, so (2,0) and
/// (2) are the same profile.
class TangencyProfile {
public:
    TangencyProfile() = default;
    explicit TangencyProfile(std::vector<int> multiplicities);

    // a_k, zero beyond the support
    int operator[](int k) const;
    // largest k with a_k > 0, or 0
    int max_order() const { return static_cast<int>(mult_.size()); }
    bool empty() const { return mult_.empty(); }
    const std::vector<int>& multiplicities() const { return mult_; }

    // I = sum k a_k
    int weight() const;
    // |a| = sum a_k
    int count() const;

    TangencyProfile plus_unit(int k) const;
    TangencyProfile minus_unit(int k) const;

    // comma-joined multiplicities, "" for the empty profile
    std::string to_string() const;
    static TangencyProfile parse(std::string_view text);

    friend bool operator==(const TangencyProfile&, const TangencyProfile&) = default;
    friend auto operator<=>(const TangencyProfile&, const TangencyProfile&) = default;

private:
    void trim();

    std::vector<int> mult_;
};

// All profiles g >= 0 with weight(g) == total.
std::vector<TangencyProfile> profiles_of_weight(int total);

// All profiles a' with 0 <= a'_k <= a_k for every k.
std::vector<TangencyProfile> subprofiles(const TangencyProfile& a);

} // namespace severi
