#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "wp/rational.hpp"

namespace wp {

// Dense polynomial with exact non-negative integer coefficients. The zero
// polynomial is the empty coefficient vector; otherwise the trailing
// coefficient is nonzero. Graph independence polynomials additionally have
// s_0 = 1 and every coefficient up to the degree positive.
class Polynomial {
public:
    Polynomial() = default;  // zero

    explicit Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero

    const mpz_class& coef(int k) const {
        static const mpz_class kZero = 0;
        return (k >= 0 && k < int(c_.size())) ? c_[size_t(k)] : kZero;
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const mpz_class& s);
    Polynomial pow(unsigned e) const;

    mpz_class eval(const mpz_class& x) const;

    // multiply by x^k
    Polynomial shifted(int k) const;

    bool operator==(const Polynomial&) const = default;

    // "s0 s1 s2 ..." in decimal; zero polynomial prints "0"
    std::string text() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// p(q(x) - 1); requires q(0) == 1 (a graph polynomial), throws otherwise.
Polynomial compose_shifted(const Polynomial& p, const Polynomial& q);

// I(G1 + G2) for the join: p + q - 1; requires p(0) == q(0) == 1.
Polynomial join_polynomial(const Polynomial& p, const Polynomial& q);

struct LogConcavityResult {
    bool log_concave;
    int violating_k;  // least k with s_k^2 < s_{k-1} s_{k+1}; -1 when log-concave
};
LogConcavityResult is_log_concave(const Polynomial& p);

struct UnimodalityResult {
    bool unimodal;
    int mode;  // least index attaining the maximum; -1 when not unimodal
};
UnimodalityResult is_unimodal(const Polynomial& p);

// alpha * s_alpha <= n * s_{alpha-1}, with alpha = deg(p); requires deg >= 1
bool top_coefficient_bound_holds(const Polynomial& p, int n);

// (k+1) s_{k+1} <= (n - (lambda+1) k) s_k for all 0 <= k <= deg-1,
// evaluated in exact rational arithmetic.
bool quasireg_coefficient_bounds_hold(const Polynomial& p, int n, const Rational& lambda);

// p_level * (alpha - k) * s_k <= (k+1) s_{k+1} for all 1 <= k <= alpha-1
bool wp_coefficient_bounds_hold(const Polynomial& p, int alpha, int p_level);

// Interval classification for the log-concavity guarantee. All square-root
// comparisons are done by integer squaring; boundary cases are exact.
//   CaseA:  alpha^2 <= 4p(alpha+1)  and  (p+1)alpha <= n <= p alpha + 2 sqrt(p alpha + p)
//   CaseB:  alpha(alpha-1) <= p(alpha+1)  and
//           p alpha + 2 sqrt(p alpha + p) < n <= ((alpha^2+1)p + (alpha-1)^2)/(alpha-1)
enum class IntervalCase { Outside, CaseA, CaseB };
IntervalCase log_concavity_interval(long n, long alpha, long p);

}  // namespace wp
