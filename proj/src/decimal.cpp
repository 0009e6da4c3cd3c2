#include "eot/decimal.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace eot {

namespace {

constexpr std::uint64_t kUnitsCap = 1000000000000000000ull; // 10^18

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Decimal Decimal::from_int(std::int64_t v) {
    Decimal d;
    d.negative_ = v < 0;
    d.units_ = d.negative_ ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    d.scale_ = 0;
    d.normalize();
    return d;
}

std::optional<Decimal> Decimal::from_digits(bool negative, std::string_view int_digits,
                                            std::string_view frac_digits) {
    if (int_digits.empty() && frac_digits.empty()) return std::nullopt;
    if (!all_digits(int_digits) || !all_digits(frac_digits)) return std::nullopt;

    Decimal d;
    d.negative_ = negative;
    for (char c : int_digits) {
        auto digit = static_cast<std::uint64_t>(c - '0');
        if (d.units_ < kUnitsCap) {
            d.units_ = d.units_ * 10 + digit;
        } else {
            d.scale_--; // digit dropped, keep magnitude
        }
    }
    for (char c : frac_digits) {
        auto digit = static_cast<std::uint64_t>(c - '0');
        if (d.units_ >= kUnitsCap) break; // precision exhausted
        d.units_ = d.units_ * 10 + digit;
        d.scale_++;
    }
    d.normalize();
    return d;
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        i++;
    }
    std::size_t int_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
    std::string_view int_digits = text.substr(int_begin, i - int_begin);
    std::string_view frac_digits;
    if (i < text.size() && text[i] == '.') {
        i++;
        std::size_t frac_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
        frac_digits = text.substr(frac_begin, i - frac_begin);
    }
    if (i != text.size()) return std::nullopt;
    return from_digits(negative, int_digits, frac_digits);
}

void Decimal::normalize() {
    while (scale_ > 0 && units_ != 0 && units_ % 10 == 0) {
        units_ /= 10;
        scale_--;
    }
    if (units_ == 0) {
        scale_ = 0;
        negative_ = false;
    }
}

std::string Decimal::to_string() const {
    std::string digits = std::to_string(units_);
    std::string out;
    if (scale_ <= 0) {
        out = digits;
        out.append(static_cast<std::size_t>(-scale_), '0');
    } else {
        auto scale = static_cast<std::size_t>(scale_);
        if (digits.size() <= scale) {
            digits.insert(0, scale - digits.size() + 1, '0');
        }
        out = digits.substr(0, digits.size() - scale);
        out.push_back('.');
        out.append(digits.substr(digits.size() - scale));
    }
    if (negative_) out.insert(out.begin(), '-');
    return out;
}

double Decimal::to_double() const {
    double v = static_cast<double>(units_) * std::pow(10.0, -static_cast<double>(scale_));
    return negative_ ? -v : v;
}

bool Decimal::close(const Decimal& a, const Decimal& b, double rel_tol, double abs_tol) {
    if (a == b) return true;
    double x = a.to_double();
    double y = b.to_double();
    double diff = std::fabs(x - y);
    double bound = std::max(abs_tol, rel_tol * std::max(std::fabs(x), std::fabs(y)));
    return diff <= bound;
}

} // namespace eot
