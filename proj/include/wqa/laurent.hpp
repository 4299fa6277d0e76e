#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace wqa {

using BigInt = mpz_class;

// Laurent polynomial in q with integer coefficients.  Terms are kept sorted
// by exponent, coefficients are never zero.
class Laurent {
public:
    using Term = std::pair<long, BigInt>;  // (exponent, coefficient)

    Laurent() = default;
    explicit Laurent(long value) { if (value != 0) terms_.emplace_back(0, value); }
    explicit Laurent(const BigInt& value) { if (value != 0) terms_.emplace_back(0, value); }

    static Laurent monomial(BigInt coeff, long exp);
    static Laurent one() { return Laurent(1); }

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    bool isMonomial() const { return terms_.size() == 1; }

    // Exponent range; both require a nonzero polynomial.
    long lowExp() const { return terms_.front().first; }
    long highExp() const { return terms_.back().first; }

    const std::vector<Term>& terms() const { return terms_; }
    const BigInt& leadingCoeff() const { return terms_.back().second; }
    BigInt coeff(long exp) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;

    // Multiply by q^k.
    Laurent shifted(long k) const;

    // gcd of all coefficients, positive; zero polynomial has content 0.
    BigInt content() const;
    Laurent dividedByContent(const BigInt& c) const;

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const;  // arbitrary total order for maps

    size_t hash() const;

    // Exact division; throws Error if the division is not exact.
    static Laurent divExact(const Laurent& a, const Laurent& b);

    // gcd over Z[q, q^-1]; the result is normalized to valuation 0 and
    // positive leading coefficient.
    static Laurent gcd(const Laurent& a, const Laurent& b);

    // Evaluate at a rational q-value (q != 0); used as a numeric spot check.
    mpq_class evaluate(const mpq_class& q) const;

    std::string render() const;

private:
    std::vector<Term> terms_;

    void pushTerm(long exp, BigInt coeff);
    friend class LaurentBuilder;
};

}  // namespace wqa
