#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bck {

/// Exact non-negative rational in lowest terms.
///
/// Construction reduces by the gcd; all arithmetic that could exceed 64 bits
/// is carried out in 128-bit intermediates and checked.
class Ratio {
public:
    Ratio() = default;
    /// Throws std::invalid_argument on a zero denominator.
    Ratio(std::uint64_t numerator, std::uint64_t denominator);

    static Ratio from_string(std::string_view text);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Product of two 64-bit factors; throws std::overflow_error if it does not fit.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

} // namespace bck
