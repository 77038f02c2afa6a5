#include "bck/construct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace bck {

BckAlgebra bck_union(std::span<const BckAlgebra> parts)
{
    if (parts.empty())
        throw std::invalid_argument("bck_union: at least one part is required");

    // Global label of each (part, local element); component of each global label.
    std::vector<std::vector<Element>> label(parts.size());
    std::vector<std::size_t> component{0};
    std::vector<Element> local{0};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        label[p].push_back(0);
        for (Element e = 1; e < parts[p].order(); ++e) {
            label[p].push_back(static_cast<Element>(component.size()));
            component.push_back(p);
            local.push_back(e);
        }
    }

    const std::size_t n = component.size();
    std::vector<Element> entries(n * n, 0);
    for (Element x = 1; x < n; ++x) {
        entries[x * n] = x;
        for (Element y = 1; y < n; ++y) {
            const std::size_t c = component[x];
            entries[x * n + y] = c == component[y] ? label[c][parts[c](local[x], local[y])] : x;
        }
    }
    return validate(CayleyTable(n, std::move(entries)));
}

BckAlgebra extend_top(const BckAlgebra& a)
{
    const std::size_t old = a.order();
    const std::size_t n = old + 1;
    const auto top = static_cast<Element>(old);
    std::vector<Element> entries(n * n, 0);
    for (Element x = 0; x < old; ++x)
        for (Element y = 0; y < old; ++y)
            entries[x * n + y] = a(x, y);
    for (Element y = 0; y < old; ++y)
        entries[top * n + y] = top;
    return validate(CayleyTable(n, std::move(entries)));
}

BckAlgebra union_two(const BckAlgebra& a)
{
    const BckAlgebra parts[] = {a, standard_algebras().two};
    return bck_union(parts);
}

Ratio predict_union2_degree(const CommutingReport& r)
{
    const std::uint64_t n = r.order;
    return Ratio(r.pair_count + 2 * n + 1, checked_mul(n + 1, n + 1));
}

Ratio predict_extend_degree(const CommutingReport& r)
{
    const std::uint64_t n = r.order;
    return Ratio(r.pair_count + 3, checked_mul(n + 1, n + 1));
}

BckAlgebra m_chain(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("m_chain: order must be at least 2");
    std::vector<Element> entries(n * n, 0);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < x; ++y)
            entries[x * n + y] = x;
    return validate(CayleyTable(n, std::move(entries)));
}

BckAlgebra b_star(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("b_star: order must be at least 3");
    std::vector<BckAlgebra> parts{standard_algebras().pi};
    parts.resize(n - 2, standard_algebras().two);
    return bck_union(parts);
}

std::vector<std::uint64_t> cd_numerators(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cd_set: order must be at least 3");
    const std::uint64_t sq = checked_mul(n, n);
    std::vector<std::uint64_t> out;
    out.reserve(triangular(n - 2));
    for (std::uint64_t k = 3 * n - 2; k <= sq - 2; k += 2)
        out.push_back(k);
    return out;
}

std::vector<Ratio> cd_set(std::size_t n)
{
    const std::uint64_t sq = checked_mul(n, n);
    std::vector<Ratio> out;
    for (auto k : cd_numerators(n))
        out.emplace_back(k, sq);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ConstructionExpr parse_all()
    {
        ConstructionExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    ConstructionExpr parse_expr()
    {
        skip_ws();
        if (accept("(")) {
            ConstructionExpr inner = parse_expr();
            skip_ws();
            if (accept("+T") || accept("⊕⊤"))
                inner.steps.push_back(Step::ExtendTop);
            else if (accept("+2") || accept("⊔2"))
                inner.steps.push_back(Step::UnionTwo);
            else
                fail("expected '+T' or '+2'");
            skip_ws();
            if (!accept(")"))
                fail("expected ')'");
            return inner;
        }
        if (accept("2"))
            return {Leaf::Two, {}};
        if (accept("PI"))
            return {Leaf::Pi, {}};
        if (accept("TC"))
            return {Leaf::Tc, {}};
        fail("expected '2', 'PI', 'TC' or '('");
    }

    bool accept(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        skip_ws();
        return true;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("construction expression: " + what + " at offset " + std::to_string(pos_) +
                                    " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string_view leaf_name(Leaf l)
{
    switch (l) {
    case Leaf::Two: return "2";
    case Leaf::Pi: return "PI";
    case Leaf::Tc: return "TC";
    }
    return "?";
}

} // namespace

ConstructionExpr ConstructionExpr::parse(std::string_view text)
{
    return ExprParser(text).parse_all();
}

std::string ConstructionExpr::to_string(Notation notation) const
{
    const bool ascii = notation == Notation::Ascii;
    const std::size_t opens = notation == Notation::Display && !steps.empty() ? steps.size() - 1 : steps.size();
    std::string out(opens, '(');
    out += leaf_name(leaf);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::ExtendTop)
            out += ascii ? "+T" : "⊕⊤";
        else
            out += ascii ? "+2" : "⊔2";
        if (i < opens)
            out += ')';
    }
    return out;
}

std::size_t ConstructionExpr::order() const noexcept
{
    return leaf_algebra(leaf).order() + steps.size();
}

BckAlgebra ConstructionExpr::evaluate() const
{
    BckAlgebra a = leaf_algebra(leaf);
    for (Step s : steps)
        a = apply_step(a, s);
    return a;
}

ConstructionExpr ConstructionExpr::then(Step s) const
{
    ConstructionExpr e = *this;
    e.steps.push_back(s);
    return e;
}

const BckAlgebra& leaf_algebra(Leaf leaf)
{
    const auto& std_algebras = standard_algebras();
    switch (leaf) {
    case Leaf::Two: return std_algebras.two;
    case Leaf::Pi: return std_algebras.pi;
    case Leaf::Tc: return std_algebras.tc;
    }
    throw std::logic_error("unknown leaf");
}

BckAlgebra apply_step(const BckAlgebra& a, Step s)
{
    return s == Step::ExtendTop ? extend_top(a) : union_two(a);
}

std::vector<std::uint64_t> numerator_trace(const ConstructionExpr& e)
{
    BckAlgebra a = leaf_algebra(e.leaf);
    std::vector<std::uint64_t> trace{commuting_degree(a).pair_count};
    for (Step s : e.steps) {
        a = apply_step(a, s);
        trace.push_back(commuting_degree(a).pair_count);
    }
    return trace;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ConstructionExpr> base_level_four()
{
    return {
        ConstructionExpr{Leaf::Pi, {Step::ExtendTop}},
        ConstructionExpr{Leaf::Tc, {Step::ExtendTop}},
        ConstructionExpr{Leaf::Pi, {Step::UnionTwo}},
    };
}

FamilyEntry make_entry(ConstructionExpr expr, BckAlgebra algebra)
{
    auto report = commuting_degree(algebra);
    return {std::move(expr), std::move(algebra), report};
}

} // namespace

FamilyLevel family(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("family: order must be at least 3");

    FamilyLevel level{3, {}};
    level.entries.push_back(make_entry({Leaf::Pi, {}}, standard_algebras().pi));
    if (n == 3)
        return level;

    level.order = 4;
    level.entries.clear();
    for (auto& e : base_level_four())
        level.entries.push_back(make_entry(e, e.evaluate()));

    for (std::size_t m = 4; m < n; ++m) {
        const std::size_t t = triangular(m - 2);
        FamilyLevel next{m + 1, {}};
        next.entries.reserve(triangular(m - 1));
        for (const auto& e : level.entries)
            next.entries.push_back(make_entry(e.expr.then(Step::ExtendTop), extend_top(e.algebra)));
        for (std::size_t i = t - (m - 1); i < t; ++i) {
            const auto& e = level.entries[i];
            next.entries.push_back(make_entry(e.expr.then(Step::UnionTwo), union_two(e.algebra)));
        }
        level = std::move(next);
    }
    return level;
}

ConstructionExpr trace_family_index(std::size_t n, std::uint64_t j)
{
    if (n < 3)
        throw std::invalid_argument("trace_family_index: order must be at least 3");
    if (j < 1 || j > triangular(n - 2))
        throw std::invalid_argument("trace_family_index: index " + std::to_string(j) + " outside 1.." +
                                    std::to_string(triangular(n - 2)) + " at order " + std::to_string(n));

    std::vector<Step> reversed;
    std::uint64_t i = j;
    for (std::size_t level = n; level > 4; --level) {
        const std::size_t m = level - 1;
        const std::uint64_t t = triangular(m - 2);
        if (i <= t) {
            reversed.push_back(Step::ExtendTop);
        } else {
            reversed.push_back(Step::UnionTwo);
            i = t - (m - 1) + (i - t);
        }
    }

    ConstructionExpr expr = n == 3 ? ConstructionExpr{Leaf::Pi, {}} : base_level_four()[i - 1];
    expr.steps.insert(expr.steps.end(), reversed.rbegin(), reversed.rend());
    return expr;
}

Synthesis synthesize(std::int64_t p, std::int64_t q)
{
    if (p <= 0 || q <= 0)
        throw std::invalid_argument("synthesize: numerator and denominator must be positive");
    if (p > q)
        throw std::invalid_argument("synthesize: degree " + std::to_string(p) + "/" + std::to_string(q) +
                                    " exceeds 1");

    const Ratio target(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q));
    const std::uint64_t rp = target.numerator();
    const std::uint64_t rq = target.denominator();
    if (rp == rq) {
        const ConstructionExpr tc{Leaf::Tc, {}};
        return {target, 3, 0, 0, false, tc, tc.evaluate()};
    }

    // order n = 2qm gives k = n^2 (q - p) / (2q) = 2 q m^2 (q - p); m = 2 always fits.
    for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t n = checked_mul(2 * rq, m);
        const std::uint64_t k = checked_mul(checked_mul(2 * rq, m * m), rq - rp);
        const std::uint64_t t = triangular(n - 2);
        if (k < 1 || k > t)
            continue;
        const std::uint64_t j = t - k + 1;
        ConstructionExpr expr = trace_family_index(n, j);
        BckAlgebra algebra = expr.evaluate();
        return {target, static_cast<std::size_t>(n), k, j, m > 1, std::move(expr), std::move(algebra)};
    }
}

} // namespace bck
