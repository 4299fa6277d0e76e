#include "wqa/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wqa/errors.hpp"

namespace wqa {

Laurent Laurent::monomial(BigInt coeff, long exp) {
    Laurent r;
    if (coeff != 0) r.terms_.emplace_back(exp, std::move(coeff));
    return r;
}

bool Laurent::isOne() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

BigInt Laurent::coeff(long exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return BigInt(0);
}

void Laurent::pushTerm(long exp, BigInt coeff) {
    if (coeff != 0) terms_.emplace_back(exp, std::move(coeff));
}

Laurent Laurent::operator-() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) {
            r.terms_.push_back(terms_[i++]);
        } else if (terms_[i].first > o.terms_[j].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            BigInt c = terms_[i].second + o.terms_[j].second;
            r.pushTerm(terms_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (isZero() || o.isZero()) return Laurent();
    if (isMonomial()) {
        Laurent r;
        r.terms_.reserve(o.terms_.size());
        for (const auto& [e, c] : o.terms_) r.pushTerm(e + terms_[0].first, c * terms_[0].second);
        return r;
    }
    if (o.isMonomial()) return o * *this;
    std::map<long, BigInt> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    Laurent r;
    for (auto& [e, c] : acc) r.pushTerm(e, std::move(c));
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e + k, c);
    return r;
}

BigInt Laurent::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Laurent Laurent::dividedByContent(const BigInt& c) const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, co] : terms_) r.terms_.emplace_back(e, co / c);
    return r;
}

bool Laurent::operator<(const Laurent& o) const {
    return terms_ < o.terms_;
}

size_t Laurent::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& [e, c] : terms_) {
        h = (h ^ static_cast<size_t>(e)) * 1099511628211ull;
        h = (h ^ mpz_get_ui(c.get_mpz_t())) * 1099511628211ull;
        h = (h ^ static_cast<size_t>(mpz_sgn(c.get_mpz_t()) < 0)) * 1099511628211ull;
    }
    return h;
}

Laurent Laurent::divExact(const Laurent& a, const Laurent& b) {
    if (b.isZero()) throw DivisionByZero();
    if (a.isZero()) return Laurent();
    if (b.isMonomial()) {
        Laurent r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& [e, c] : a.terms_) {
            BigInt quo, rem;
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(),
                        b.terms_[0].second.get_mpz_t());
            if (rem != 0) throw Error("inexact polynomial division");
            r.terms_.emplace_back(e - b.terms_[0].first, std::move(quo));
        }
        return r;
    }
    // Shift both to valuation 0 and long-divide from the top.
    long va = a.lowExp(), vb = b.lowExp();
    std::vector<BigInt> num(static_cast<size_t>(a.highExp() - va) + 1);
    for (const auto& [e, c] : a.terms_) num[static_cast<size_t>(e - va)] = c;
    const long db = b.highExp() - vb;
    std::vector<BigInt> den(static_cast<size_t>(db) + 1);
    for (const auto& [e, c] : b.terms_) den[static_cast<size_t>(e - vb)] = c;

    long da = static_cast<long>(num.size()) - 1;
    if (da < db) throw Error("inexact polynomial division");
    std::vector<BigInt> quot(static_cast<size_t>(da - db) + 1);
    for (long k = da - db; k >= 0; --k) {
        BigInt lead = num[static_cast<size_t>(k + db)];
        if (lead == 0) continue;
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), lead.get_mpz_t(), den[db].get_mpz_t());
        if (rem != 0) throw Error("inexact polynomial division");
        quot[static_cast<size_t>(k)] = q;
        for (long t = 0; t <= db; ++t) num[static_cast<size_t>(k + t)] -= q * den[static_cast<size_t>(t)];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("inexact polynomial division");
    Laurent r;
    for (size_t k = 0; k < quot.size(); ++k)
        r.pushTerm(static_cast<long>(k) + va - vb, std::move(quot[k]));
    return r;
}

namespace {

// Primitive part with positive leading coefficient; input nonzero, val 0.
Laurent primitivePart(const Laurent& p) {
    BigInt c = p.content();
    if (p.leadingCoeff() < 0) c = -c;
    return p.dividedByContent(c);
}

// Pseudo-remainder of a by b (deg a >= deg b), ordinary polynomials.
Laurent pseudoRem(Laurent a, const Laurent& b) {
    const long db = b.highExp();
    const Laurent lcB = Laurent::monomial(b.leadingCoeff(), 0);
    while (!a.isZero() && a.highExp() >= db) {
        Laurent t = Laurent::monomial(a.leadingCoeff(), a.highExp() - db);
        a = a * lcB - t * b;
    }
    return a;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.isZero() && b.isZero()) return Laurent();
    if (a.isZero()) return primitivePart(b.shifted(-b.lowExp())) *
                           Laurent::monomial(b.content(), 0);
    if (b.isZero()) return gcd(b, a);

    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    if (a.isMonomial() || b.isMonomial()) return monomial(cont, 0);

    Laurent A = primitivePart(a.shifted(-a.lowExp()));
    Laurent B = primitivePart(b.shifted(-b.lowExp()));
    if (A.highExp() < B.highExp()) std::swap(A, B);
    while (true) {
        Laurent r = pseudoRem(A, B);
        if (r.isZero()) break;
        A = B;
        B = primitivePart(r.shifted(-r.lowExp()));
        if (B.highExp() == 0) { B = one(); break; }
        if (A.highExp() < B.highExp()) std::swap(A, B);
    }
    return B * monomial(cont, 0);
}

mpq_class Laurent::evaluate(const mpq_class& q) const {
    if (q == 0) throw DivisionByZero();
    mpq_class acc = 0, pw;
    for (const auto& [e, c] : terms_) {
        mpz_class num = q.get_num(), den = q.get_den();
        if (e >= 0) {
            mpz_pow_ui(pw.get_num_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(pw.get_den_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
        } else {
            mpz_pow_ui(pw.get_num_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e));
            mpz_pow_ui(pw.get_den_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-e));
        }
        pw.canonicalize();
        acc += mpq_class(c) * pw;
    }
    return acc;
}

std::string Laurent::render() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unitCoeff = (abs == 1) && e != 0;
        if (!unitCoeff) out << abs.get_str();
        if (e != 0) {
            if (!unitCoeff) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace wqa
