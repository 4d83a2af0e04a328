#include "iasi/int_set.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace iasi {

namespace {
    auto check_bounds(const std::vector<Element> & elems) -> void
    {
        if (elems.empty())
            throw Error(ErrorCode::invalid_argument, "integer set must be non-empty");
        for (auto x : elems)
            if (x > max_element)
                throw Error(ErrorCode::overflow, "element " + std::to_string(x) + " exceeds the supported range");
    }
}

IntSet::IntSet(std::vector<Element> elems) : _elems(std::move(elems))
{
    check_bounds(_elems);
    std::ranges::sort(_elems);
    auto dup = std::ranges::unique(_elems);
    _elems.erase(dup.begin(), dup.end());
}

IntSet::IntSet(std::initializer_list<Element> elems) : IntSet(std::vector<Element>(elems))
{
}

auto IntSet::from_sorted(std::vector<Element> elems) -> IntSet
{
    check_bounds(elems);
    if (std::ranges::adjacent_find(elems, std::greater_equal<>{}) != elems.end())
        throw Error(ErrorCode::invalid_argument, "elements are not strictly increasing");
    return IntSet(Trusted{}, std::move(elems));
}

auto IntSet::contains(Element x) const -> bool
{
    return std::ranges::binary_search(_elems, x);
}

auto IntSet::shifted(Element c) const -> IntSet
{
    if (c > max_element - max())
        throw Error(ErrorCode::overflow, "shift by " + std::to_string(c) + " leaves the supported range");
    std::vector<Element> out(_elems);
    for (auto & x : out)
        x += c;
    return IntSet(Trusted{}, std::move(out));
}

auto IntSet::to_string() const -> std::string
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < _elems.size(); ++i)
        out << (i ? "," : "") << _elems[i];
    out << '}';
    return out.str();
}

auto APSet::make(Element first, Element diff, std::size_t len) -> APSet
{
    if (diff < 1)
        throw Error(ErrorCode::invalid_argument, "common difference must be at least 1");
    if (len < 1)
        throw Error(ErrorCode::invalid_argument, "AP-set length must be at least 1");
    if (first > max_element || (len > 1 && (max_element - first) / diff < len - 1))
        throw Error(ErrorCode::overflow, "AP-set last term leaves the supported range");
    return APSet{first, diff, len};
}

auto APSet::to_set() const -> IntSet
{
    std::vector<Element> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = first + diff * i;
    return IntSet::from_sorted(std::move(out));
}

auto ap_set(Element first, Element diff, std::size_t len) -> IntSet
{
    return APSet::make(first, diff, len).to_set();
}

auto sumset(const IntSet & a, const IntSet & b) -> IntSet
{
    if (a.max() > max_element - b.max())
        throw Error(ErrorCode::overflow, "sumset would leave the supported range");

    // Merge |B| shifted copies of A; each copy is already sorted.
    const auto & small = a.size() <= b.size() ? a : b;
    const auto & large = a.size() <= b.size() ? b : a;
    std::vector<Element> acc, shifted, merged;
    shifted.resize(large.size());
    for (auto s : small) {
        std::ranges::transform(large._elems, shifted.begin(), [s] (Element x) { return x + s; });
        merged.clear();
        std::ranges::set_union(acc, shifted, std::back_inserter(merged));
        acc.swap(merged);
    }
    return IntSet(IntSet::Trusted{}, std::move(acc));
}

auto detect_ap(const IntSet & s) -> std::optional<ApParams>
{
    auto e = s.elements();
    if (e.size() == 1)
        return ApParams{e[0], 0};
    const Element diff = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] - e[i - 1] != diff)
            return std::nullopt;
    return ApParams{e[0], diff};
}

auto ap_sumset_size(std::size_t m, std::size_t n) -> std::size_t
{
    if (m < 1 || n < 1)
        throw Error(ErrorCode::invalid_argument, "AP sizes must be at least 1");
    return m + n - 1;
}

auto check_freiman_converse(const IntSet & a, const IntSet & b) -> bool
{
    if (a.size() < 2 || b.size() < 2)
        throw Error(ErrorCode::invalid_argument, "both sets need at least two elements");
    if (sumset(a, b).size() != a.size() + b.size() - 1)
        return true;
    auto pa = detect_ap(a), pb = detect_ap(b);
    return pa && pb && pa->diff == pb->diff;
}

}
