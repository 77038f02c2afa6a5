#include "bck/ratio.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bck {

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("Ratio: zero denominator");
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

namespace {

std::uint64_t parse_u64(std::string_view part, std::string_view whole)
{
    std::uint64_t value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (part.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a fraction P/Q: '" + std::string(whole) + "'");
    return value;
}

} // namespace

Ratio Ratio::from_string(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Ratio(parse_u64(text, text), 1);
    return Ratio(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
}

std::string Ratio::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept
{
    using wide = unsigned __int128;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r)
{
    return os << r.numerator() << '/' << r.denominator();
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

} // namespace bck
