#include "severi/profile.hpp"

#include <numeric>
#include <sstream>

#include "severi/errors.hpp"

namespace severi {

TangencyProfile::TangencyProfile(std::vector<int> multiplicities) : mult_(std::move(multiplicities))
{
    for (int a : mult_) {
        if (a < 0) {
            throw DomainError("tangency profile entries must be non-negative");
        }
    }
    trim();
}

void TangencyProfile::trim()
{
    while (!mult_.empty() && mult_.back() == 0) {
        mult_.pop_back();
    }
}

int TangencyProfile::operator[](int k) const
{
    if (k < 1 || k > static_cast<int>(mult_.size())) {
        return 0;
    }
    return mult_[k - 1];
}

int TangencyProfile::weight() const
{
    int total = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        total += static_cast<int>(i + 1) * mult_[i];
    }
    return total;
}

int TangencyProfile::count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

TangencyProfile TangencyProfile::plus_unit(int k) const
{
    std::vector<int> v = mult_;
    if (static_cast<int>(v.size()) < k) {
        v.resize(k, 0);
    }
    ++v[k - 1];
    return TangencyProfile(std::move(v));
}

TangencyProfile TangencyProfile::minus_unit(int k) const
{
    if ((*this)[k] == 0) {
        throw InternalError("minus_unit on an empty slot");
    }
    std::vector<int> v = mult_;
    --v[k - 1];
    return TangencyProfile(std::move(v));
}

std::string TangencyProfile::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << mult_[i];
    }
    return os.str();
}

TangencyProfile TangencyProfile::parse(std::string_view text)
{
    std::vector<int> v;
    if (text.empty()) {
        return TangencyProfile();
    }
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(',', start);
        const std::string item(text.substr(start, pos - start));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (item.empty() || used != item.size()) {
            throw DomainError("bad tangency profile '" + std::string(text) + "'");
        }
        v.push_back(value);
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return TangencyProfile(std::move(v));
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& mult, std::vector<TangencyProfile>& out)
{
    if (remaining == 0) {
        out.emplace_back(mult);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++mult[part - 1];
        partitions_into(remaining - part, part, mult, out);
        --mult[part - 1];
    }
}

} // namespace

std::vector<TangencyProfile> profiles_of_weight(int total)
{
    std::vector<TangencyProfile> out;
    if (total < 0) {
        return out;
    }
    std::vector<int> mult(static_cast<std::size_t>(total), 0);
    partitions_into(total, total, mult, out);
    return out;
}

std::vector<TangencyProfile> subprofiles(const TangencyProfile& a)
{
    const auto& bound = a.multiplicities();
    std::vector<int> v(bound.size(), 0);
    std::vector<TangencyProfile> out;
    while (true) {
        out.emplace_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == bound[i]) {
            v[i] = 0;
            ++i;
        }
        if (i == v.size()) {
            break;
        }
        ++v[i];
    }
    return out;
}

} // namespace severi
