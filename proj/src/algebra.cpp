#include "bck/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bck {

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries))
{
    if (order_ == 0)
        throw FormatError("table order must be positive");
    if (entries_.size() != order_ * order_)
        throw FormatError("table of order " + std::to_string(order_) + " needs " +
                          std::to_string(order_ * order_) + " entries, got " + std::to_string(entries_.size()));
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] >= order_)
            throw FormatError("entry (" + std::to_string(i / order_) + ", " + std::to_string(i % order_) +
                              ") = " + std::to_string(entries_[i]) + " is out of range for order " +
                              std::to_string(order_));
    }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows)
{
    std::vector<Element> flat;
    flat.reserve(rows.size() * rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw FormatError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " entries; table is not square");
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return CayleyTable(rows.size(), std::move(flat));
}

std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b)
{
    if (auto c = a.order_ <=> b.order_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::string_view axiom_name(Axiom a) noexcept
{
    switch (a) {
    case Axiom::BCK1: return "BCK1";
    case Axiom::BCK2: return "BCK2";
    case Axiom::BCK3: return "BCK3";
    case Axiom::BCK4: return "BCK4";
    case Axiom::BCK5: return "BCK5";
    case Axiom::RightIdentity: return "x*0=x";
    }
    return "?";
}

std::string AxiomViolation::describe() const
{
    static constexpr const char* names[] = {"x", "y", "z"};
    std::ostringstream os;
    os << axiom_name(axiom) << " violated at";
    for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? ", " : " ") << names[i] << "=" << witness[i];
    return os.str();
}

AxiomError::AxiomError(AxiomViolation v) : std::runtime_error(v.describe()), violation_(std::move(v)) {}

std::optional<AxiomViolation> find_violation(const CayleyTable& t)
{
    const auto n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x)
        if (t.at(x, x) != 0)
            return AxiomViolation{Axiom::BCK3, {x}};
    for (Element x = 0; x < n; ++x)
        if (t.at(0, x) != 0)
            return AxiomViolation{Axiom::BCK4, {x}};
    for (Element x = 0; x < n; ++x)
        if (t.at(x, 0) != x)
            return AxiomViolation{Axiom::RightIdentity, {x}};
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (x != y && t.at(x, y) == 0 && t.at(y, x) == 0)
                return AxiomViolation{Axiom::BCK5, {x, y}};
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (t.at(t.at(x, t.at(x, y)), y) != 0)
                return AxiomViolation{Axiom::BCK2, {x, y}};
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (t.at(t.at(t.at(x, y), t.at(x, z)), t.at(z, y)) != 0)
                    return AxiomViolation{Axiom::BCK1, {x, y, z}};
    return std::nullopt;
}

BckAlgebra validate(CayleyTable table)
{
    if (auto v = find_violation(table))
        throw AxiomError(std::move(*v));
    return BckAlgebra(std::move(table));
}

BckAlgebra::BckAlgebra() : table_(1, {0}) {}

namespace {

void check_index(const BckAlgebra& a, Element x)
{
    if (x >= a.order())
        throw std::out_of_range("element " + std::to_string(x) + " is not below order " + std::to_string(a.order()));
}

} // namespace

bool leq(const BckAlgebra& a, Element x, Element y)
{
    check_index(a, x);
    check_index(a, y);
    return a(x, y) == 0;
}

Element meet(const BckAlgebra& a, Element x, Element y)
{
    check_index(a, x);
    check_index(a, y);
    return a(y, a(y, x));
}

bool commutes(const BckAlgebra& a, Element x, Element y)
{
    return meet(a, x, y) == meet(a, y, x);
}

CommutingReport commuting_degree(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    std::uint64_t pairs = 0;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            pairs += a(y, a(y, x)) == a(x, a(x, y));
    return {a.order(), pairs, Ratio(pairs, checked_mul(n, n))};
}

bool is_commutative(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (a(y, a(y, x)) != a(x, a(x, y)))
                return false;
    return true;
}

bool is_positive_implicative(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (a(x, y) != a(a(x, y), y))
                return false;
    return true;
}

std::optional<Element> top_element(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    for (Element t = 0; t < n; ++t) {
        bool top = true;
        for (Element x = 0; x < n && top; ++x)
            top = a(x, t) == 0;
        if (top)
            return t;
    }
    return std::nullopt;
}

std::vector<std::pair<Element, Element>> hasse_covers(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    auto below = [&](Element x, Element y) { return x != y && a(x, y) == 0; };
    std::vector<std::pair<Element, Element>> covers;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (!below(x, y))
                continue;
            bool cover = true;
            for (Element z = 0; z < n && cover; ++z)
                cover = !(below(x, z) && below(z, y));
            if (cover)
                covers.emplace_back(x, y);
        }
    }
    return covers;
}

const StandardAlgebras& standard_algebras()
{
    static const StandardAlgebras algebras{
        validate(CayleyTable::from_rows({{0, 0}, {1, 0}})),
        validate(CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 2, 0}})),
        validate(CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}})),
    };
    return algebras;
}

} // namespace bck
