#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eot {

/// Exact decimal value: sign * units * 10^-scale, normalized (no trailing
/// fractional zeros, zero is non-negative with scale 0). Exact for up to 18
/// significant digits; lower-order digits beyond that are dropped while the
/// magnitude is preserved, which is far below the comparison tolerance used
/// anywhere in the harness.
class Decimal {
public:
    Decimal() = default;

    static Decimal from_int(std::int64_t v);

    // "[+-]digits", "[+-]digits.digits" or "[+-].digits"; anything else is nullopt.
    static std::optional<Decimal> parse(std::string_view text);

    // Build from already-separated digit runs. Either run may be empty, not both.
    static std::optional<Decimal> from_digits(bool negative, std::string_view int_digits,
                                              std::string_view frac_digits);

    std::string to_string() const;
    double to_double() const;
    bool is_zero() const { return units_ == 0; }

    friend bool operator==(const Decimal& a, const Decimal& b) {
        return a.negative_ == b.negative_ && a.units_ == b.units_ && a.scale_ == b.scale_;
    }

    // |a - b| <= max(abs_tol, rel_tol * max(|a|, |b|))
    static bool close(const Decimal& a, const Decimal& b, double rel_tol = 1e-6,
                      double abs_tol = 1e-9);

private:
    void normalize();

    bool negative_ = false;
    std::uint64_t units_ = 0;
    std::int32_t scale_ = 0; // negative scale = trailing implicit zeros
};

} // namespace eot
