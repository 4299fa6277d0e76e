#pragma once

#include <map>
#include <string>
#include <vector>

#include "wqa/qscalar.hpp"
#include "wqa/word.hpp"

namespace wqa {

// Finite linear combination of words with Q(q) coefficients.  Zero
// coefficients are never stored.  `reduced` marks elements whose words are
// all in canonical form for some presentation.
class AlgebraElement {
public:
    using TermMap = std::map<Word, QScalar, WordLess>;

    AlgebraElement() = default;
    explicit AlgebraElement(const Word& w, QScalar c = QScalar(1)) { add(w, std::move(c)); }

    static AlgebraElement unit() { return AlgebraElement(Word()); }
    static AlgebraElement zero() { return AlgebraElement(); }

    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }

    void add(const Word& w, QScalar c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const QScalar& c) const;

    // Free (unreduced) concatenation product.
    AlgebraElement freeProduct(const AlgebraElement& o) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    QScalar coeff(const Word& w) const;

    bool reduced = false;

    std::string render() const;

private:
    TermMap terms_;
};

// Element of a tensor power of the algebra.  Arity 1 embeds plain elements,
// arity 0 is a scalar (the empty tensor product); both let generator maps of
// every codomain share one extension mechanism.
class TensorElement {
public:
    using Key = std::vector<Word>;
    using TermMap = std::map<Key, QScalar>;

    explicit TensorElement(int arity = 1) : arity_(arity) {}

    static TensorElement unit(int arity);
    static TensorElement scalar(QScalar c);
    static TensorElement fromElement(const AlgebraElement& x);
    static TensorElement pure(std::vector<Word> legs, QScalar c = QScalar(1));

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void add(const Key& k, QScalar c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const QScalar& c) const;

    // Componentwise concatenation, unreduced: (a (x) b)(c (x) d) = ac (x) bd.
    TensorElement freeProduct(const TensorElement& o) const;

    // Only meaningful for arity 0.
    QScalar scalarValue() const;
    // Only meaningful for arity 1.
    AlgebraElement toElement() const;

    bool operator==(const TensorElement& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    bool reduced = false;

    std::string render() const;

private:
    int arity_;
    TermMap terms_;
};

}  // namespace wqa
