#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.
// Canonical form trims trailing zeros; the zero polynomial is the empty list.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchrome {

using BigInt = boost::multiprecision::cpp_int;

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
        trim();
    }

    static Polynomial monomial(unsigned exponent, BigInt coefficient = 1) {
        if (coefficient == 0) return {};
        std::vector<BigInt> c(exponent + 1, BigInt{0});
        c[exponent] = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Constant term first, trailing zeros trimmed.
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(unsigned exponent) const {
        return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt{0};
    }

    void add_term(unsigned exponent, const BigInt& delta) {
        if (delta == 0) return;
        if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1, BigInt{0});
        coeffs_[exponent] += delta;
        trim();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt{0});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt{0});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Decimal strings, constant term first; the wire form of a polynomial.
    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.str());
        return out;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            const BigInt& c = coeffs_[e];
            if (c == 0) continue;
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (mag != 1 || e == 0) out += mag.str();
            if (e >= 1) out += "x";
            if (e >= 2) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline BigInt evaluate(const Polynomial& p, const BigInt& x) { return p.evaluate(x); }

}  // namespace hyperchrome
