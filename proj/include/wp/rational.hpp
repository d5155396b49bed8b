#pragma once

#include <charconv>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wp {

// Exact signed rational over 64-bit integers, always reduced with den > 0.
// Quasi-regularizability thresholds are ratios of vertex counts, so the
// magnitudes involved never approach the 64-bit range.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    // "a/b" or bare integer "a"
    static std::optional<Rational> parse(std::string_view text) {
        long long n = 0, d = 1;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        auto [p, ec] = std::from_chars(first, last, n);
        if (ec != std::errc()) return std::nullopt;
        if (p != last) {
            if (*p != '/') return std::nullopt;
            auto [q, ec2] = std::from_chars(p + 1, last, d);
            if (ec2 != std::errc() || q != last || d == 0) return std::nullopt;
        }
        return Rational(n, d);
    }
};

}  // namespace wp
