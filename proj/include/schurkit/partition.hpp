#ifndef SCHURKIT_PARTITION_HPP
#define SCHURKIT_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace schurkit {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// implicit and never stored, so each partition has one canonical form.
class Partition {
public:
    Partition() = default;

    // Strips trailing zeros; throws UsageError unless weakly decreasing
    // and nonnegative.
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; returns 0 beyond the stored parts.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // Transpose of the Young diagram. Involutive.
    Partition conjugate() const;

    // All partitions of `weight` with every part <= max_part, in
    // lexicographically decreasing order. weight = 0 yields {()}.
    static std::vector<Partition> enumerate(int weight, int max_part);

    std::string to_string() const; // "(2,1)", "()" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the parts vector; used only as a container ordering.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

} // namespace schurkit

#endif
