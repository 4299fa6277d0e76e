#include "wqa/qscalar.hpp"

#include <sstream>

#include "wqa/errors.hpp"

namespace wqa {

QScalar::QScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

QScalar QScalar::rational(const BigInt& num, const BigInt& den) {
    return QScalar(Laurent(num), Laurent(den));
}

void QScalar::canonicalize() {
    if (den_.isZero()) throw DivisionByZero();
    if (num_.isZero()) { den_ = Laurent::one(); return; }
    if (den_.isOne()) return;

    // Pull the q-power out of the denominator so its constant term is nonzero.
    const long vd = den_.lowExp();
    if (vd != 0) { den_ = den_.shifted(-vd); num_ = num_.shifted(-vd); }

    if (!den_.isMonomial() || !num_.isMonomial()) {
        Laurent g = Laurent::gcd(num_, den_);
        if (!g.isOne() && !g.isZero()) {
            num_ = Laurent::divExact(num_, g);
            den_ = Laurent::divExact(den_, g);
        }
    }
    BigInt c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.leadingCoeff() < 0) c = -c;
    if (c != 1) {
        num_ = num_.dividedByContent(c);
        den_ = den_.dividedByContent(c);
    }
}

QScalar QScalar::operator-() const {
    QScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
    if (isZero()) return o;
    if (o.isZero()) return *this;
    if (den_.isOne() && o.den_.isOne()) {
        QScalar r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator*(const QScalar& o) const {
    if (isZero() || o.isZero()) return QScalar();
    if (den_.isOne() && o.den_.isOne()) {
        QScalar r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.isZero()) throw DivisionByZero();
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::inverse() const {
    if (isZero()) throw DivisionByZero();
    return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
    if (e == 0) return QScalar(1);
    QScalar base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    QScalar acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

mpq_class QScalar::evaluate(const mpq_class& qval) const {
    mpq_class d = den_.evaluate(qval);
    if (d == 0) throw DivisionByZero();
    return num_.evaluate(qval) / d;
}

std::string QScalar::render() const {
    if (den_.isOne()) {
        if (num_.isZero() || num_.isMonomial()) return num_.render();
        return "(" + num_.render() + ")";
    }
    std::ostringstream out;
    out << "(" << num_.render() << ")/(" << den_.render() << ")";
    return out.str();
}

QScalar quantumInteger(long m, long baseExp) {
    if (baseExp <= 0) throw OutOfRange("quantum integer base exponent must be positive");
    if (m == 0) return QScalar();
    Laurent num = Laurent::monomial(1, baseExp * m) - Laurent::monomial(1, -baseExp * m);
    Laurent den = Laurent::monomial(1, baseExp) - Laurent::monomial(1, -baseExp);
    return QScalar(std::move(num), std::move(den));
}

QScalar quantumFactorial(long m, long baseExp) {
    if (m < 0) throw OutOfRange("quantum factorial of a negative integer");
    QScalar acc(1);
    for (long k = 2; k <= m; ++k) acc *= quantumInteger(k, baseExp);
    return acc;
}

QScalar quantumBinomial(long m, long k, long baseExp) {
    if (m < 0 || k < 0 || k > m)
        throw OutOfRange("quantum binomial arguments out of range");
    if (k > m - k) k = m - k;
    QScalar acc(1);
    for (long t = 1; t <= k; ++t)
        acc = acc * quantumInteger(m - k + t, baseExp) / quantumInteger(t, baseExp);
    return acc;
}

}  // namespace wqa
