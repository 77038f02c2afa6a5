#pragma once

#include "bck/algebra.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bck {

/// BCK-union: the parts glued at their common 0, with x * y = x across parts.
///
/// The first part keeps its labels; the nonzero elements of every later part are
/// appended in part order, each part keeping its internal order. The result has
/// order 1 + sum(order_i - 1). Throws std::invalid_argument for an empty input.
BckAlgebra bck_union(std::span<const BckAlgebra> parts);

/// Iseki's extension: adjoin a new top T (label = old order) with x * T = 0 and
/// T * x = T. Old labels are preserved.
BckAlgebra extend_top(const BckAlgebra& a);

/// `a` glued with the two-element algebra.
BckAlgebra union_two(const BckAlgebra& a);

/// Degree of A (+) 2 from A's report alone: (k + 2n + 1) / (n + 1)^2.
Ratio predict_union2_degree(const CommutingReport& r);
/// Degree of Iseki's extension of A from A's report alone: (k + 3) / (n + 1)^2.
Ratio predict_extend_degree(const CommutingReport& r);

/// The chain x * y = x if y < x, else 0. Minimum commuting degree (3n - 2) / n^2.
BckAlgebra m_chain(std::size_t n);
/// PI glued with n - 3 copies of 2. Maximum non-commutative degree (n^2 - 2) / n^2.
BckAlgebra b_star(std::size_t n);

/// m(m + 1) / 2.
constexpr std::uint64_t triangular(std::uint64_t m) noexcept { return m * (m + 1) / 2; }

/// Unreduced numerators 3n - 2, 3n, ..., n^2 - 2 (over n^2) of the achievable
/// non-commutative degrees at order n, in increasing order.
std::vector<std::uint64_t> cd_numerators(std::size_t n);
/// The same degrees, reduced.
std::vector<Ratio> cd_set(std::size_t n);

// ---------------------------------------------------------------------------
// Construction expressions

enum class Leaf { Two, Pi, Tc };
enum class Step { ExtendTop, UnionTwo };

enum class Notation {
    Ascii,   // "((PI+T)+2)"
    Unicode, // "((PI⊕⊤)⊔2)"
    Display, // Unicode without the outermost parentheses: "(PI⊕⊤)⊔2"
};

/// A leaf algebra followed by a chain of unary constructors, innermost first.
struct ConstructionExpr {
    Leaf leaf = Leaf::Pi;
    std::vector<Step> steps;

    /// Accepts the ASCII grammar
    ///   expr := "2" | "PI" | "TC" | "(" expr "+T" ")" | "(" expr "+2" ")"
    /// (and the Unicode spellings of +T and +2); whitespace is ignored.
    /// Throws std::invalid_argument with the offending byte offset.
    static ConstructionExpr parse(std::string_view text);

    std::string to_string(Notation notation = Notation::Ascii) const;
    std::size_t order() const noexcept;
    BckAlgebra evaluate() const;

    ConstructionExpr then(Step s) const;

    friend bool operator==(const ConstructionExpr&, const ConstructionExpr&) = default;
};

const BckAlgebra& leaf_algebra(Leaf leaf);
BckAlgebra apply_step(const BckAlgebra& a, Step s);

/// Raw commuting-pair counts of the leaf and of each intermediate algebra.
std::vector<std::uint64_t> numerator_trace(const ConstructionExpr& e);

// ---------------------------------------------------------------------------
// The degree-covering family

struct FamilyEntry {
    ConstructionExpr expr;
    BckAlgebra algebra;
    CommutingReport report;
};

/// T_{n-2} algebras of order n, one per achievable non-commutative degree, in
/// increasing degree order.
struct FamilyLevel {
    std::size_t order = 0;
    std::vector<FamilyEntry> entries;
};

/// Level 3 is [PI]; level 4 is [PI+T, TC+T, PI+2]. Level m+1 (t = T_{m-2}) takes
/// every level-m entry under +T, then the last m-1 entries under +2.
/// Throws std::invalid_argument for n < 3.
FamilyLevel family(std::size_t n);

/// Expression of family(n) entry j (1-based) by walking the schedule backwards,
/// without building the level. Throws std::invalid_argument when out of range.
ConstructionExpr trace_family_index(std::size_t n, std::uint64_t j);

struct Synthesis {
    Ratio target;
    std::size_t order = 0;
    /// Raw numerator deficit: degree = (order^2 - 2k) / order^2. Zero for the commutative case.
    std::uint64_t k = 0;
    /// 1-based family index; zero for the commutative case.
    std::uint64_t index = 0;
    /// True when order != 2q (the smallest candidate order was out of range).
    bool escalated = false;
    ConstructionExpr expr;
    BckAlgebra algebra;
};

/// An algebra whose commuting degree is exactly p/q (0 < p <= q), built from the
/// covering family at the smallest order in 2q, 4q, 6q, ... that has the degree.
/// p/q = 1 yields TC. Throws std::invalid_argument for p <= 0, q <= 0 or p > q.
Synthesis synthesize(std::int64_t p, std::int64_t q);

} // namespace bck
