#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace setgraph {

class Subset;

// Hard cap on ground-set size: subsets are two 64-bit words.
inline constexpr int kMaxGroundSize = 128;
// Full power-set materialization refuses above this width.
inline constexpr int kMaxMaterializedPowerSet = 20;

/// Ordered universe of named elements. Names are cosmetic; all set algebra
/// runs on positions.
class GroundSet {
public:
    /// Ground set of the given size with default names "a1".."am".
    explicit GroundSet(int size);
    /// Ground set with explicit, pairwise distinct names.
    explicit GroundSet(std::vector<std::string> names);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(int element) const;
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<int> index_of(std::string_view name) const;

    Subset empty_set() const;
    Subset full_set() const;
    Subset make(std::initializer_list<int> elements) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> names_;
};

/// Subset of a ground set as a characteristic bit vector. Bit i set means
/// element i is present; only the low `width` bits may be set.
class Subset {
public:
    Subset() = default;
    Subset(std::uint64_t low, std::uint64_t high, int width);

    static Subset empty_of(int width);
    static Subset full_of(int width);
    static Subset single(int element, int width);
    static Subset of(std::initializer_list<int> elements, int width);
    static Subset from_low_bits(std::uint64_t low, int width);

    int width() const noexcept { return width_; }
    bool contains(int element) const;
    bool empty() const noexcept { return low_ == 0 && high_ == 0; }
    bool full() const noexcept;
    int count() const noexcept;
    std::uint64_t low_bits() const noexcept { return low_; }
    std::uint64_t high_bits() const noexcept { return high_; }

    Subset complement() const noexcept;

    friend Subset operator|(const Subset& a, const Subset& b);
    friend Subset operator&(const Subset& a, const Subset& b);

    // Equality and ordering look at bit patterns only; element names and
    // widths never participate.
    friend bool operator==(const Subset& a, const Subset& b) noexcept {
        return a.low_ == b.low_ && a.high_ == b.high_;
    }
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
        if (auto c = a.high_ <=> b.high_; c != std::strong_ordering::equal) return c;
        return a.low_ <=> b.low_;
    }

private:
    std::uint64_t low_ = 0;
    std::uint64_t high_ = 0;
    int width_ = 0;
};

/// Renders a subset as "{a1,a2}"; the empty set renders as "{}".
std::string format_subset(const Subset& s, const GroundSet& ground);

/// Family of distinct subsets over one ground set. Members are kept in
/// ascending bit order.
class SetFamily {
public:
    explicit SetFamily(GroundSet ground);
    SetFamily(GroundSet ground, const std::vector<Subset>& members);

    const GroundSet& ground() const noexcept { return ground_; }
    void insert(const Subset& s);
    bool contains(const Subset& s) const { return members_.contains(s); }
    std::size_t size() const noexcept { return members_.size(); }
    const std::set<Subset>& members() const noexcept { return members_; }

private:
    GroundSet ground_;
    std::set<Subset> members_;
};

struct TopologyResult {
    enum class Axiom {
        none,
        missing_empty_set,
        missing_ground_set,
        union_not_closed,
        intersection_not_closed,
    };

    bool ok = false;
    Axiom failed = Axiom::none;
    std::optional<Subset> lhs;  // offending pair for closure failures
    std::optional<Subset> rhs;

    std::string describe(const GroundSet& ground) const;
};

/// Finite topology test: the empty set and the ground set are members and
/// the family is closed under pairwise union and intersection (sufficient
/// for finite families). The witness is the first failure with members
/// scanned in ascending bit order.
TopologyResult is_topology(const SetFamily& family);

/// All 2^m subsets in ascending bit order. Refuses widths above
/// kMaxMaterializedPowerSet.
std::vector<Subset> power_set_vector(const GroundSet& ground);

/// Lazy power-set walk in ascending bit order, usable up to width 63.
class PowerSetRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Subset;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Subset;

        iterator() = default;
        iterator(std::uint64_t value, int width) : value_(value), width_(width) {}

        Subset operator*() const { return Subset(value_, 0, width_); }
        iterator& operator++() {
            ++value_;
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++value_;
            return t;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        std::uint64_t value_ = 0;
        int width_ = 0;
    };

    explicit PowerSetRange(int width);
    iterator begin() const { return {0, width_}; }
    iterator end() const { return {std::uint64_t{1} << width_, width_}; }
    std::uint64_t size() const { return std::uint64_t{1} << width_; }

private:
    int width_;
};

PowerSetRange power_set(const GroundSet& ground);

}  // namespace setgraph

template <>
struct std::hash<setgraph::Subset> {
    std::size_t operator()(const setgraph::Subset& s) const noexcept {
        std::uint64_t h = s.low_bits() * 0x9e3779b97f4a7c15ull;
        h ^= s.high_bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
