#pragma once

#include "bck/algebra.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bck {

/// Bijection on elements, source label -> target label, fixing 0.
struct IsoWitness {
    std::vector<Element> permutation;
    friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// Relabels every argument and value of `a` through `sigma` (old -> new).
/// Throws std::invalid_argument unless sigma is a bijection fixing 0.
BckAlgebra relabel(const BckAlgebra& a, std::span<const Element> sigma);

/// Lexicographically least row-major table over all relabelings fixing 0.
/// Two algebras are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
    CayleyTable table;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const BckAlgebra& a);

/// A witness mapping `a` onto `b`, or nullopt when they are not isomorphic.
std::optional<IsoWitness> is_isomorphic(const BckAlgebra& a, const BckAlgebra& b);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    /// Largest order accepted. Orders above 6 run but are not validated for runtime.
    std::size_t max_order = 6;
    /// Worker threads for the subtree search; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// One canonical representative per isomorphism class of BCK-algebras of order n,
/// sorted by canonical table. Output does not depend on the worker count.
/// Throws BudgetExceeded when n > options.max_order.
std::vector<BckAlgebra> enumerate(std::size_t n, const EnumerateOptions& options = {});

/// Commuting degree -> number of classes, over enumerate(n).
std::map<Ratio, std::size_t> degree_census(std::size_t n, const EnumerateOptions& options = {});
std::map<Ratio, std::size_t> degree_census(std::span<const BckAlgebra> classes);

struct UniqueMinimumReport {
    std::size_t order = 0;
    Ratio minimum_degree;
    /// Classes whose degree equals (3n - 2) / n^2.
    std::size_t class_count = 0;
    std::optional<BckAlgebra> representative;
    /// Maps the representative onto m_chain(order).
    std::optional<IsoWitness> witness;

    bool unique() const noexcept { return class_count == 1 && witness.has_value(); }
};

/// Checks that exactly one class attains the minimum degree and that it is the chain.
UniqueMinimumReport verify_unique_minimum(std::size_t n, const EnumerateOptions& options = {});
/// Same check over an already enumerated order-n corpus.
UniqueMinimumReport verify_unique_minimum(std::size_t n, std::span<const BckAlgebra> classes);

struct Subalgebra {
    std::vector<Element> elements;
    /// The restriction, relabeled to 0..k-1 in increasing element order.
    BckAlgebra algebra;
};

/// A subset of size order-1 containing 0 and closed under the operation. Removals
/// are tried from the highest label down. Throws std::invalid_argument for order 1
/// and std::logic_error if no such subset exists.
Subalgebra find_maximal_subalgebra(const BckAlgebra& a);

/// True when `elements` (sorted, containing 0) is closed under the operation.
bool is_closed(const BckAlgebra& a, std::span<const Element> elements);

} // namespace bck
