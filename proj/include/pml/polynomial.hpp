#pragma once

// Exact integer-coefficient polynomials in q, the standard q-analogues, and
// the q-hook-length polynomial for rooted trees.

#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pml/bigint.hpp"
#include "pml/error.hpp"
#include "pml/labeling.hpp"
#include "pml/poset.hpp"

namespace pml {

class IntPolynomial {
public:
    IntPolynomial() = default;

    // Coefficients in ascending degree order; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& coefficient(int k) const {
        static const BigInt zero = 0;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[k];
    }

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    IntPolynomial operator+(const IntPolynomial& other) const {
        std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-(const IntPolynomial& other) const {
        std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator*(const IntPolynomial& other) const {
        if (is_zero() || other.is_zero()) return {};
        std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * other.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    // Long division; exact over the integers whenever the divisor is monic.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const {
        if (divisor.is_zero()) fail(ErrorCode::InvalidParameter, "division by zero polynomial");
        std::vector<BigInt> rem = coeffs_;
        std::vector<BigInt> quot;
        const auto& d = divisor.coeffs_;
        if (rem.size() >= d.size()) {
            quot.assign(rem.size() - d.size() + 1, BigInt(0));
            for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
                BigInt lead = rem[k + d.size() - 1];
                if (lead == 0) continue;
                if (lead % d.back() != 0)
                    fail(ErrorCode::NonzeroRemainder, "leading coefficient does not divide");
                BigInt factor = lead / d.back();
                quot[k] = factor;
                for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= factor * d[i];
            }
        }
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    IntPolynomial divide_exact(const IntPolynomial& divisor) const {
        auto [quot, rem] = divmod(divisor);
        if (!rem.is_zero()) fail(ErrorCode::NonzeroRemainder, "polynomial division left a remainder");
        return quot;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + std::complex<double>(static_cast<double>(*it), 0.0);
        return acc;
    }

    // "1 + 2q + q^2" style, for reports.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            BigInt c = coeffs_[k];
            if (!first) out << (c < 0 ? " - " : " + ");
            else if (c < 0) out << "-";
            first = false;
            BigInt a = abs(c);
            if (a != 1 || k == 0) out << a.str();
            if (k >= 1) out << "q";
            if (k >= 2) out << "^" << k;
        }
        return out.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// [n]_q = 1 + q + ... + q^(n-1); [0]_q is the zero polynomial.
inline IntPolynomial q_int(int n) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "q_int needs n >= 0");
    return IntPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

// [n]_q! = [1]_q [2]_q ... [n]_q; empty product for n = 0.
inline IntPolynomial q_factorial(int n) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "q_factorial needs n >= 0");
    IntPolynomial out = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) out = out * q_int(i);
    return out;
}

// f^T(q) = [n]_q! / prod_x [h_x]_q.  The quotient is a polynomial for every
// rooted tree; a nonzero remainder can only mean a bug upstream.
inline IntPolynomial q_hook_polynomial(const Poset& t) {
    std::vector<int> hooks = hook_lengths(t);  // throws NotRootedTree
    IntPolynomial out = q_factorial(t.size());
    for (int h : hooks) out = out.divide_exact(q_int(h));
    return out;
}

// n (n-2) (n-4) ... (n-2k+2), the k-step double falling factorial.
inline BigInt double_falling(long long n, int k) {
    if (k < 0) fail(ErrorCode::InvalidParameter, "double_falling needs k >= 0");
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= BigInt(n - 2 * i);
    return out;
}

// Greedy factorization into q-integers, largest factor first.  Returns the
// factor sizes when the polynomial is exactly such a product (e.g. the hook
// polynomial of comb(3) is [5]_q [3]_q), nothing otherwise.
inline std::optional<std::vector<int>> q_int_factorization(const IntPolynomial& f) {
    if (f.is_zero() || f.coefficient(0) != 1) return std::nullopt;
    std::vector<int> factors;
    IntPolynomial rest = f;
    while (rest.degree() > 0) {
        bool found = false;
        for (int k = rest.degree() + 1; k >= 2; --k) {
            auto [quot, rem] = rest.divmod(q_int(k));
            if (rem.is_zero()) {
                factors.push_back(k);
                rest = quot;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    if (!(rest == IntPolynomial::constant(1))) return std::nullopt;
    return factors;
}

inline std::string q_product_string(const std::vector<int>& factors) {
    std::string out;
    for (int k : factors) out += "[" + std::to_string(k) + "]_q ";
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace pml
