#pragma once

#include <string>

#include "wqa/laurent.hpp"

namespace wqa {

// Element of Q(q) held as num/den in canonical form: the fraction is reduced
// (no common polynomial factor, no common integer content), the denominator
// is an ordinary polynomial with nonzero constant term and positive leading
// coefficient.  The numerator may be a genuine Laurent polynomial.  Equality
// is literal equality of the canonical form.
class QScalar {
public:
    QScalar() = default;
    QScalar(long value) : num_(value) {}  // NOLINT: implicit by design
    explicit QScalar(const BigInt& value) : num_(value) {}
    QScalar(Laurent num, Laurent den);  // canonicalizes

    static QScalar q(long exp = 1) { return QScalar(Laurent::monomial(1, exp), Laurent::one()); }
    static QScalar rational(const BigInt& num, const BigInt& den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isLaurent() const { return den_.isOne(); }

    QScalar operator-() const;
    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    QScalar inverse() const;
    QScalar pow(long e) const;

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }
    bool operator<(const QScalar& o) const {
        return den_ < o.den_ || (den_ == o.den_ && num_ < o.num_);
    }

    size_t hash() const { return num_.hash() * 31 + den_.hash(); }

    // Numeric spot check: substitute a rational value for q.
    mpq_class evaluate(const mpq_class& qval) const;

    std::string render() const;

private:
    Laurent num_;
    Laurent den_ = Laurent::one();

    void canonicalize();
};

// [m] with respect to the base q^baseExp:
//   (v^m - v^-m) / (v - v^-1),  v = q^baseExp.
QScalar quantumInteger(long m, long baseExp = 1);

// [m]! = [m][m-1]...[1], [0]! = 1.
QScalar quantumFactorial(long m, long baseExp = 1);

// [m]! / ([k]! [m-k]!); requires 0 <= k <= m, always a Laurent polynomial.
QScalar quantumBinomial(long m, long k, long baseExp = 1);

}  // namespace wqa
