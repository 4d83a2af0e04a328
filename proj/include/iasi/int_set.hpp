#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace iasi {

using Element = std::uint64_t;

/// Largest element any set may hold. Two such elements still add without
/// wrapping, which is what every sumset relies on.
inline constexpr Element max_element = std::numeric_limits<Element>::max() / 2;

/// A finite, non-empty set of non-negative integers, stored strictly
/// increasing.
class IntSet {
public:
    /// Sorts and deduplicates; throws invalid_argument when empty.
    explicit IntSet(std::vector<Element> elems);
    IntSet(std::initializer_list<Element> elems);

    /// Rejects input that is not already strictly increasing.
    static auto from_sorted(std::vector<Element> elems) -> IntSet;

    auto size() const noexcept -> std::size_t { return _elems.size(); }
    auto min() const noexcept -> Element { return _elems.front(); }
    auto max() const noexcept -> Element { return _elems.back(); }
    auto elements() const noexcept -> std::span<const Element> { return _elems; }
    auto begin() const noexcept { return _elems.begin(); }
    auto end() const noexcept { return _elems.end(); }
    auto contains(Element x) const -> bool;

    /// Adds c to every element.
    auto shifted(Element c) const -> IntSet;

    auto to_string() const -> std::string;

    friend auto operator==(const IntSet &, const IntSet &) -> bool = default;
    friend auto operator<=>(const IntSet &, const IntSet &) = default;

private:
    struct Trusted {};
    IntSet(Trusted, std::vector<Element> elems) : _elems(std::move(elems)) {}

    std::vector<Element> _elems;

    friend auto sumset(const IntSet &, const IntSet &) -> IntSet;
};

/// {first, first + diff, ..., first + (len - 1) diff}.
struct APSet {
    Element first = 0;
    Element diff = 1;
    std::size_t len = 1;

    /// Validates diff >= 1, len >= 1 and that the last term fits.
    static auto make(Element first, Element diff, std::size_t len) -> APSet;

    auto last() const noexcept -> Element { return first + diff * (len - 1); }
    auto to_set() const -> IntSet;

    friend auto operator==(const APSet &, const APSet &) -> bool = default;
};

/// Shorthand for APSet::make(first, diff, len).to_set().
auto ap_set(Element first, Element diff, std::size_t len) -> IntSet;

/// First term and common difference of an AP-set. diff is 0 for singletons,
/// meaning "undefined".
struct ApParams {
    Element first = 0;
    Element diff = 0;

    friend auto operator==(const ApParams &, const ApParams &) -> bool = default;
};

/// A + B, sorted ascending. Throws overflow if max(A) + max(B) exceeds
/// max_element.
auto sumset(const IntSet & a, const IntSet & b) -> IntSet;

auto detect_ap(const IntSet & s) -> std::optional<ApParams>;

/// |A + B| for two AP-sets of sizes m and n sharing a common difference.
auto ap_sumset_size(std::size_t m, std::size_t n) -> std::size_t;

/// Checks one instance of the inverse statement: if |A+B| = |A|+|B|-1 then A
/// and B are APs with the same difference. Vacuously true when the premise
/// fails. Both sets need at least two elements.
auto check_freiman_converse(const IntSet & a, const IntSet & b) -> bool;

}
