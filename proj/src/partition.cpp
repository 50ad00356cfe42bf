#include "schurkit/partition.hpp"

#include "schurkit/errors.hpp"

#include <numeric>

namespace schurkit {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw UsageError("partition parts must be positive (got " +
                             std::to_string(parts[i]) + ")");
        if (i > 0 && parts[i] > parts[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 0 || i >= static_cast<int>(parts_.size()))
        return 0;
    return parts_[i];
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++cols[j];
    }
    return Partition(std::move(cols));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> Partition::enumerate(int weight, int max_part) {
    if (weight < 0)
        throw UsageError("partition weight must be nonnegative");
    if (max_part < 1)
        throw UsageError("partition max part must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(weight, max_part, prefix, out);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

} // namespace schurkit
