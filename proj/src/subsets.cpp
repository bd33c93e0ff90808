#include "setgraph/subsets.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace setgraph {

namespace {

void check_width(int width) {
    if (width < 0 || width > kMaxGroundSize)
        throw std::invalid_argument("subset width out of range [0, 128]: " + std::to_string(width));
}

std::uint64_t low_mask(int width) {
    if (width <= 0) return 0;
    if (width >= 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << width) - 1;
}

std::uint64_t high_mask(int width) {
    if (width <= 64) return 0;
    return low_mask(width - 64);
}

}  // namespace

GroundSet::GroundSet(int size) {
    if (size < 1 || size > kMaxGroundSize)
        throw std::invalid_argument("ground set size out of range [1, 128]: " + std::to_string(size));
    names_.reserve(size);
    for (int i = 1; i <= size; ++i) names_.push_back("a" + std::to_string(i));
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || static_cast<int>(names_.size()) > kMaxGroundSize)
        throw std::invalid_argument("ground set size out of range [1, 128]: " + std::to_string(names_.size()));
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate ground element name: " + n);
}

const std::string& GroundSet::name(int element) const {
    if (element < 0 || element >= size())
        throw std::out_of_range("ground element index out of range: " + std::to_string(element));
    return names_[element];
}

std::optional<int> GroundSet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Subset GroundSet::empty_set() const { return Subset::empty_of(size()); }

Subset GroundSet::full_set() const { return Subset::full_of(size()); }

Subset GroundSet::make(std::initializer_list<int> elements) const {
    return Subset::of(elements, size());
}

Subset::Subset(std::uint64_t low, std::uint64_t high, int width) : low_(low), high_(high), width_(width) {
    check_width(width);
    if ((low_ & ~low_mask(width)) != 0 || (high_ & ~high_mask(width)) != 0)
        throw std::invalid_argument("subset has bits beyond the ground set width");
}

Subset Subset::empty_of(int width) { return Subset(0, 0, width); }

Subset Subset::full_of(int width) { return Subset(low_mask(width), high_mask(width), width); }

Subset Subset::single(int element, int width) {
    Subset s = empty_of(width);
    if (element < 0 || element >= width)
        throw std::invalid_argument("element index out of range: " + std::to_string(element));
    if (element < 64)
        s.low_ |= std::uint64_t{1} << element;
    else
        s.high_ |= std::uint64_t{1} << (element - 64);
    return s;
}

Subset Subset::of(std::initializer_list<int> elements, int width) {
    Subset s = empty_of(width);
    for (int e : elements) s = s | single(e, width);
    return s;
}

Subset Subset::from_low_bits(std::uint64_t low, int width) { return Subset(low, 0, width); }

bool Subset::contains(int element) const {
    if (element < 0 || element >= width_) return false;
    if (element < 64) return (low_ >> element) & 1;
    return (high_ >> (element - 64)) & 1;
}

bool Subset::full() const noexcept {
    return low_ == low_mask(width_) && high_ == high_mask(width_);
}

int Subset::count() const noexcept { return std::popcount(low_) + std::popcount(high_); }

Subset Subset::complement() const noexcept {
    Subset s = *this;
    s.low_ = ~low_ & low_mask(width_);
    s.high_ = ~high_ & high_mask(width_);
    return s;
}

Subset operator|(const Subset& a, const Subset& b) {
    if (a.width_ != b.width_)
        throw std::invalid_argument("set operation over mismatched ground sets");
    Subset s = a;
    s.low_ |= b.low_;
    s.high_ |= b.high_;
    return s;
}

Subset operator&(const Subset& a, const Subset& b) {
    if (a.width_ != b.width_)
        throw std::invalid_argument("set operation over mismatched ground sets");
    Subset s = a;
    s.low_ &= b.low_;
    s.high_ &= b.high_;
    return s;
}

std::string format_subset(const Subset& s, const GroundSet& ground) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < ground.size(); ++i) {
        if (!s.contains(i)) continue;
        if (!first) out += ",";
        out += ground.name(i);
        first = false;
    }
    out += "}";
    return out;
}

SetFamily::SetFamily(GroundSet ground) : ground_(std::move(ground)) {}

SetFamily::SetFamily(GroundSet ground, const std::vector<Subset>& members) : ground_(std::move(ground)) {
    for (const auto& s : members) insert(s);
}

void SetFamily::insert(const Subset& s) {
    if (s.width() != ground_.size())
        throw std::invalid_argument("family member width does not match the ground set");
    members_.insert(s);
}

std::string TopologyResult::describe(const GroundSet& ground) const {
    switch (failed) {
        case Axiom::none:
            return "topology";
        case Axiom::missing_empty_set:
            return "the empty set is not a member";
        case Axiom::missing_ground_set:
            return "the ground set " + format_subset(ground.full_set(), ground) + " is not a member";
        case Axiom::union_not_closed:
            return "union " + format_subset(*lhs, ground) + " | " + format_subset(*rhs, ground) +
                   " = " + format_subset(*lhs | *rhs, ground) + " is not a member";
        case Axiom::intersection_not_closed:
            return "intersection " + format_subset(*lhs, ground) + " & " + format_subset(*rhs, ground) +
                   " = " + format_subset(*lhs & *rhs, ground) + " is not a member";
    }
    return "";
}

TopologyResult is_topology(const SetFamily& family) {
    TopologyResult res;
    const Subset empty = family.ground().empty_set();
    const Subset full = family.ground().full_set();
    if (!family.contains(empty)) {
        res.failed = TopologyResult::Axiom::missing_empty_set;
        return res;
    }
    if (!family.contains(full)) {
        res.failed = TopologyResult::Axiom::missing_ground_set;
        return res;
    }
    // Pairwise closure suffices for finite families.
    for (auto a = family.members().begin(); a != family.members().end(); ++a) {
        for (auto b = std::next(a); b != family.members().end(); ++b) {
            if (!family.contains(*a | *b)) {
                res.failed = TopologyResult::Axiom::union_not_closed;
                res.lhs = *a;
                res.rhs = *b;
                return res;
            }
            if (!family.contains(*a & *b)) {
                res.failed = TopologyResult::Axiom::intersection_not_closed;
                res.lhs = *a;
                res.rhs = *b;
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::vector<Subset> power_set_vector(const GroundSet& ground) {
    if (ground.size() > kMaxMaterializedPowerSet)
        throw std::length_error("power set materialization limited to ground sets of size <= " +
                                std::to_string(kMaxMaterializedPowerSet));
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << ground.size());
    for (const Subset& s : power_set(ground)) out.push_back(s);
    return out;
}

PowerSetRange::PowerSetRange(int width) : width_(width) {
    if (width < 1 || width > 63)
        throw std::length_error("power set iteration limited to ground sets of size <= 63");
}

PowerSetRange power_set(const GroundSet& ground) { return PowerSetRange(ground.size()); }

}  // namespace setgraph
