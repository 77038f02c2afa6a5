#include "bck/classify.hpp"

#include "bck/construct.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace bck {

BckAlgebra relabel(const BckAlgebra& a, std::span<const Element> sigma)
{
    const std::size_t n = a.order();
    if (sigma.size() != n || sigma[0] != 0)
        throw std::invalid_argument("relabel: permutation must have one entry per element and fix 0");
    std::vector<bool> seen(n, false);
    for (Element s : sigma) {
        if (s >= n || seen[s])
            throw std::invalid_argument("relabel: not a bijection");
        seen[s] = true;
    }
    std::vector<Element> entries(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            entries[sigma[x] * n + sigma[y]] = sigma[a(x, y)];
    return validate(CayleyTable(n, std::move(entries)));
}

namespace {

// Lexicographically least relabeling of a raw row-major table. Row 0, column 0 and
// the diagonal are identical under every 0-fixing relabeling, so only the
// remaining cells are compared.
template <typename T>
void minimize_table(const T* table, std::size_t n, T* best)
{
    std::vector<T> perm(n);   // new label -> old label
    std::vector<T> inv(n);    // old label -> new label
    std::iota(perm.begin(), perm.end(), T{0});
    std::copy(table, table + n * n, best);
    if (n <= 2)
        return;

    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        for (std::size_t i = 0; i < n; ++i)
            inv[perm[i]] = static_cast<T>(i);
        int cmp = 0;
        for (std::size_t i = 1; i < n && cmp == 0; ++i) {
            const T* row = table + perm[i] * n;
            for (std::size_t j = 1; j < n; ++j) {
                if (i == j)
                    continue;
                const T c = inv[row[perm[j]]];
                const T b = best[i * n + j];
                if (c != b) {
                    cmp = c < b ? -1 : 1;
                    break;
                }
            }
        }
        if (cmp < 0) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    best[i * n + j] = inv[table[perm[i] * n + perm[j]]];
        }
    }
}

struct Signature {
    std::size_t above = 0;   // #{y : x <= y}
    std::size_t below = 0;   // #{y : y <= x}
    std::size_t rank = 0;    // longest chain from 0 to x
    std::size_t fixed = 0;   // #{y : x * y = x}
    std::size_t images = 0;  // #{y : x * y = y}

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const BckAlgebra& a)
{
    const auto n = static_cast<Element>(a.order());
    std::vector<Signature> sig(n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            sig[x].above += a(x, y) == 0;
            sig[x].below += a(y, x) == 0;
            sig[x].fixed += a(x, y) == x;
            sig[x].images += a(x, y) == y;
        }
    }
    // Ranks by increasing down-set size: every strict predecessor has a smaller down-set.
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::sort(order.begin(), order.end(), [&](Element l, Element r) { return sig[l].below < sig[r].below; });
    for (Element x : order)
        for (Element y = 0; y < n; ++y)
            if (y != x && a(y, x) == 0)
                sig[x].rank = std::max(sig[x].rank, sig[y].rank + 1);
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const BckAlgebra& a, const BckAlgebra& b)
        : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), n_(a.order()),
          map_(n_, kUnset), used_(n_, false)
    {
    }

    std::optional<IsoWitness> run()
    {
        auto ms = sa_;
        auto mt = sb_;
        std::sort(ms.begin(), ms.end());
        std::sort(mt.begin(), mt.end());
        if (ms != mt)
            return std::nullopt;
        map_[0] = 0;
        used_[0] = true;
        if (!extend(1))
            return std::nullopt;
        return IsoWitness{map_};
    }

private:
    static constexpr Element kUnset = ~Element{0};

    bool extend(Element x)
    {
        if (x == n_)
            return true;
        for (Element cand = 1; cand < n_; ++cand) {
            if (used_[cand] || sa_[x] != sb_[cand])
                continue;
            map_[x] = cand;
            used_[cand] = true;
            if (consistent(x) && extend(x + 1))
                return true;
            used_[cand] = false;
            map_[x] = kUnset;
        }
        return false;
    }

    // Checks every product whose two arguments are mapped and that involves x.
    bool consistent(Element x) const
    {
        for (Element y = 0; y <= x; ++y) {
            if (!check(x, y) || !check(y, x))
                return false;
        }
        return true;
    }

    bool check(Element u, Element v) const
    {
        const Element value = a_(u, v);
        const Element image = b_(map_[u], map_[v]);
        if (map_[value] != kUnset)
            return map_[value] == image;
        return !used_[image];
    }

    const BckAlgebra& a_;
    const BckAlgebra& b_;
    std::vector<Signature> sa_;
    std::vector<Signature> sb_;
    Element n_;
    std::vector<Element> map_;
    std::vector<bool> used_;
};

} // namespace

CanonicalForm canonical_form(const BckAlgebra& a)
{
    const std::size_t n = a.order();
    std::vector<Element> best(n * n);
    minimize_table(a.table().entries().data(), n, best.data());
    return {CayleyTable(n, std::move(best))};
}

std::optional<IsoWitness> is_isomorphic(const BckAlgebra& a, const BckAlgebra& b)
{
    if (a.order() != b.order())
        return std::nullopt;
    if (commuting_degree(a).pair_count != commuting_degree(b).pair_count)
        return std::nullopt;
    return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kHardMaxOrder = 8;
using Cell = std::int8_t;
constexpr Cell kFree = -1;
using RawTable = std::array<Cell, kHardMaxOrder * kHardMaxOrder>;
using Key = std::vector<std::uint8_t>;

class Enumerator {
public:
    explicit Enumerator(std::size_t n) : n_(static_cast<int>(n))
    {
        for (int x = 1; x < n_; ++x)
            for (int y = 1; y < n_; ++y)
                if (x != y)
                    cells_.emplace_back(x, y);
        // Cells of row 1 form the split point between the serial prefix and the workers.
        split_ = std::min<std::size_t>(cells_.size(), static_cast<std::size_t>(std::max(0, n_ - 2)));
    }

    std::set<Key> run(unsigned threads)
    {
        RawTable start;
        start.fill(kFree);
        for (int x = 0; x < n_; ++x) {
            at(start, 0, x) = 0;
            at(start, x, 0) = static_cast<Cell>(x);
            at(start, x, x) = 0;
        }

        std::vector<RawTable> prefixes;
        collect_prefixes(start, 0, prefixes);

        std::set<Key> merged;
        std::mutex merge_mutex;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            std::set<Key> local;
            for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                RawTable t = prefixes[i];
                search(t, split_, local);
            }
            std::lock_guard lock(merge_mutex);
            merged.merge(local);
        };

        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size()))));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < threads; ++w)
            pool.emplace_back(worker);
        worker();
        for (auto& th : pool)
            th.join();
        return merged;
    }

private:
    Cell& at(RawTable& t, int x, int y) const { return t[x * n_ + y]; }
    Cell at(const RawTable& t, int x, int y) const { return t[x * n_ + y]; }

    void collect_prefixes(RawTable& t, std::size_t depth, std::vector<RawTable>& out) const
    {
        if (depth == split_) {
            out.push_back(t);
            return;
        }
        const auto [x, y] = cells_[depth];
        for (int v = 0; v < n_; ++v) {
            at(t, x, y) = static_cast<Cell>(v);
            if (consistent(t, x, y))
                collect_prefixes(t, depth + 1, out);
        }
        at(t, x, y) = kFree;
    }

    void search(RawTable& t, std::size_t depth, std::set<Key>& found) const
    {
        if (depth == cells_.size()) {
            found.insert(canonical_key(t));
            return;
        }
        const auto [x, y] = cells_[depth];
        for (int v = 0; v < n_; ++v) {
            at(t, x, y) = static_cast<Cell>(v);
            if (consistent(t, x, y))
                search(t, depth + 1, found);
        }
        at(t, x, y) = kFree;
    }

    // BCK2 at (a, b); free cells count as satisfied.
    bool bck2_holds(const RawTable& t, int a, int b) const
    {
        const Cell ab = at(t, a, b);
        if (ab == kFree)
            return true;
        const Cell aab = at(t, a, ab);
        if (aab == kFree)
            return true;
        const Cell r = at(t, aab, b);
        return r == kFree || r == 0;
    }

    // BCK1 at (a, b, c); free cells count as satisfied.
    bool bck1_holds(const RawTable& t, int a, int b, int c) const
    {
        const Cell ab = at(t, a, b);
        const Cell ac = at(t, a, c);
        const Cell cb = at(t, c, b);
        if (ab == kFree || ac == kFree || cb == kFree)
            return true;
        const Cell w = at(t, ab, ac);
        if (w == kFree)
            return true;
        const Cell r = at(t, w, cb);
        return r == kFree || r == 0;
    }

    // Every axiom instance that reads cell (x, y). Instances not reading it were
    // already checked when their last cell was assigned.
    bool consistent(const RawTable& t, int x, int y) const
    {
        if (at(t, x, y) == 0 && at(t, y, x) == 0)
            return false;

        // BCK2 reads (a, b), (a, a*b) and (a*(a*b), b).
        if (!bck2_holds(t, x, y))
            return false;
        for (int b = 0; b < n_; ++b)
            if (at(t, x, b) == y && !bck2_holds(t, x, b))
                return false;
        for (int a = 0; a < n_; ++a) {
            const Cell ay = at(t, a, y);
            if (ay != kFree && at(t, a, ay) == x && !bck2_holds(t, a, y))
                return false;
        }

        // BCK1 reads (a, b), (a, c), (c, b), (a*b, a*c) and (w, c*b).
        for (int k = 0; k < n_; ++k) {
            if (!bck1_holds(t, x, y, k) || !bck1_holds(t, x, k, y) || !bck1_holds(t, k, y, x))
                return false;
        }
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if (at(t, a, b) != x)
                    continue;
                for (int c = 0; c < n_; ++c)
                    if (at(t, a, c) == y && !bck1_holds(t, a, b, c))
                        return false;
            }
        }
        for (int c = 0; c < n_; ++c) {
            for (int b = 0; b < n_; ++b) {
                if (at(t, c, b) != y)
                    continue;
                for (int a = 0; a < n_; ++a) {
                    const Cell ab = at(t, a, b);
                    const Cell ac = at(t, a, c);
                    if (ab != kFree && ac != kFree && at(t, ab, ac) == x && !bck1_holds(t, a, b, c))
                        return false;
                }
            }
        }
        return true;
    }

    Key canonical_key(const RawTable& t) const
    {
        const auto nn = static_cast<std::size_t>(n_ * n_);
        Key raw(nn);
        for (std::size_t i = 0; i < nn; ++i)
            raw[i] = static_cast<std::uint8_t>(t[i]);
        Key best(nn);
        minimize_table(raw.data(), static_cast<std::size_t>(n_), best.data());
        return best;
    }

    int n_;
    std::vector<std::pair<int, int>> cells_;
    std::size_t split_ = 0;
};

} // namespace

std::vector<BckAlgebra> enumerate(std::size_t n, const EnumerateOptions& options)
{
    if (n == 0)
        throw std::invalid_argument("enumerate: order must be positive");
    if (n > options.max_order)
        throw BudgetExceeded("enumerate: order " + std::to_string(n) + " exceeds the enumeration budget of " +
                             std::to_string(options.max_order) + "; raise the budget explicitly to proceed");
    if (n > kHardMaxOrder)
        throw BudgetExceeded("enumerate: orders above " + std::to_string(kHardMaxOrder) + " are not supported");

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const auto keys = Enumerator(n).run(threads);

    std::vector<BckAlgebra> out;
    out.reserve(keys.size());
    for (const auto& key : keys)
        out.push_back(validate(CayleyTable(n, std::vector<Element>(key.begin(), key.end()))));
    return out;
}

std::map<Ratio, std::size_t> degree_census(std::span<const BckAlgebra> classes)
{
    std::map<Ratio, std::size_t> census;
    for (const auto& a : classes)
        ++census[commuting_degree(a).degree];
    return census;
}

std::map<Ratio, std::size_t> degree_census(std::size_t n, const EnumerateOptions& options)
{
    const auto classes = enumerate(n, options);
    return degree_census(classes);
}

UniqueMinimumReport verify_unique_minimum(std::size_t n, std::span<const BckAlgebra> classes)
{
    if (n < 2)
        throw std::invalid_argument("verify_unique_minimum: order must be at least 2");
    UniqueMinimumReport report;
    report.order = n;
    report.minimum_degree = Ratio(3 * n - 2, n * n);
    for (const auto& a : classes) {
        if (a.order() != n || commuting_degree(a).pair_count != 3 * n - 2)
            continue;
        if (report.class_count++ == 0)
            report.representative = a;
    }
    if (report.representative)
        report.witness = is_isomorphic(*report.representative, m_chain(n));
    return report;
}

UniqueMinimumReport verify_unique_minimum(std::size_t n, const EnumerateOptions& options)
{
    const auto classes = enumerate(n, options);
    return verify_unique_minimum(n, classes);
}

bool is_closed(const BckAlgebra& a, std::span<const Element> elements)
{
    std::vector<bool> member(a.order(), false);
    for (Element e : elements)
        member.at(e) = true;
    for (Element x : elements)
        for (Element y : elements)
            if (!member[a(x, y)])
                return false;
    return true;
}

Subalgebra find_maximal_subalgebra(const BckAlgebra& a)
{
    const std::size_t n = a.order();
    if (n < 2)
        throw std::invalid_argument("find_maximal_subalgebra: order must be at least 2");

    for (auto removed = static_cast<Element>(n - 1); removed >= 1; --removed) {
        std::vector<Element> keep;
        for (Element e = 0; e < n; ++e)
            if (e != removed)
                keep.push_back(e);
        if (!is_closed(a, keep))
            continue;
        std::vector<Element> index(n, 0);
        for (Element i = 0; i < keep.size(); ++i)
            index[keep[i]] = i;
        std::vector<Element> entries;
        entries.reserve(keep.size() * keep.size());
        for (Element x : keep)
            for (Element y : keep)
                entries.push_back(index[a(x, y)]);
        return {std::move(keep), validate(CayleyTable(n - 1, std::move(entries)))};
    }
    throw std::logic_error("find_maximal_subalgebra: no closed subset of order " + std::to_string(n - 1) +
                           " exists; every finite BCK-algebra should have one");
}

} // namespace bck
