#pragma once

#include "bck/ratio.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bck {

/// Element index. Index 0 is always the constant 0 of the algebra.
using Element = std::uint32_t;

/// Malformed table shape or entry; distinct from an axiom failure.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw n x n operation table, entry(x, y) = x * y. Not checked against any axiom.
class CayleyTable {
public:
    CayleyTable() = default;
    /// `entries` is row-major and must hold order*order values in [0, order).
    CayleyTable(std::size_t order, std::vector<Element> entries);

    static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

    std::size_t order() const noexcept { return order_; }
    Element at(Element x, Element y) const noexcept { return entries_[x * order_ + y]; }
    std::span<const Element> entries() const noexcept { return entries_; }
    std::span<const Element> row(Element x) const noexcept { return {entries_.data() + x * order_, order_}; }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
    /// Orders by size first, then by the flattened row-major entries.
    friend std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b);

private:
    std::size_t order_ = 0;
    std::vector<Element> entries_;
};

enum class Axiom {
    BCK1,          // ((x*y)*(x*z))*(z*y) = 0
    BCK2,          // (x*(x*y))*y = 0
    BCK3,          // x*x = 0
    BCK4,          // 0*x = 0
    BCK5,          // x*y = 0 and y*x = 0 imply x = y
    RightIdentity, // x*0 = x
};

std::string_view axiom_name(Axiom a) noexcept;

struct AxiomViolation {
    Axiom axiom;
    std::vector<Element> witness;

    std::string describe() const;
    friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(AxiomViolation v);
    const AxiomViolation& violation() const noexcept { return violation_; }

private:
    AxiomViolation violation_;
};

/// First failed axiom in the order BCK3, BCK4, x*0=x, BCK5, BCK2, BCK1, with the
/// lexicographically least witness tuple; nullopt when the table is a BCK-algebra.
std::optional<AxiomViolation> find_violation(const CayleyTable& table);

class BckAlgebra;

/// Throws AxiomError when the table is not a BCK-algebra.
BckAlgebra validate(CayleyTable table);

/// A Cayley table known to satisfy every BCK axiom. Immutable.
class BckAlgebra {
public:
    /// The one-element algebra {0}.
    BckAlgebra();

    std::size_t order() const noexcept { return table_.order(); }
    const CayleyTable& table() const noexcept { return table_; }
    /// x * y without bounds checking.
    Element operator()(Element x, Element y) const noexcept { return table_.at(x, y); }

    friend bool operator==(const BckAlgebra&, const BckAlgebra&) = default;

private:
    friend BckAlgebra validate(CayleyTable table);
    explicit BckAlgebra(CayleyTable table) : table_(std::move(table)) {}

    CayleyTable table_;
};

// Element-level queries. All throw std::out_of_range for indices >= order.

/// x <= y iff x * y = 0.
bool leq(const BckAlgebra& a, Element x, Element y);
/// x meet y := y * (y * x).
Element meet(const BckAlgebra& a, Element x, Element y);
bool commutes(const BckAlgebra& a, Element x, Element y);

struct CommutingReport {
    std::size_t order = 0;
    /// Number of ordered pairs (x, y) with x meet y = y meet x.
    std::uint64_t pair_count = 0;
    /// pair_count / order^2, reduced.
    Ratio degree;
};

CommutingReport commuting_degree(const BckAlgebra& a);

bool is_commutative(const BckAlgebra& a);
bool is_positive_implicative(const BckAlgebra& a);
/// The element T with x * T = 0 for all x, when one exists.
std::optional<Element> top_element(const BckAlgebra& a);
inline bool is_bounded(const BckAlgebra& a) { return top_element(a).has_value(); }

/// Covering pairs (x, y) of the induced order, sorted lexicographically.
std::vector<std::pair<Element, Element>> hasse_covers(const BckAlgebra& a);

struct StandardAlgebras {
    BckAlgebra two;
    BckAlgebra pi;
    BckAlgebra tc;
};

/// The chain algebras 2, PI and TC.
const StandardAlgebras& standard_algebras();

} // namespace bck
