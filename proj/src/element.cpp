#include "wqa/element.hpp"

#include <sstream>

#include "wqa/errors.hpp"

namespace wqa {

void AlgebraElement::add(const Word& w, QScalar c) {
    if (c.isZero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, std::move(c));
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r.reduced = false;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    r.reduced = reduced && o.reduced;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    r.reduced = reduced && o.reduced;
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    r.reduced = reduced;
    return r;
}

AlgebraElement AlgebraElement::scaled(const QScalar& c) const {
    AlgebraElement r;
    if (c.isZero()) return r;
    for (const auto& [w, co] : terms_) r.terms_.emplace(w, co * c);
    r.reduced = reduced;
    return r;
}

AlgebraElement AlgebraElement::freeProduct(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add(wa.concat(wb), ca * cb);
    return r;
}

QScalar AlgebraElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

std::string AlgebraElement::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) out << " + ";
        first = false;
        if (w.empty()) {
            out << c.render();
        } else if (c.isOne()) {
            out << w.render();
        } else {
            out << c.render() << "*" << w.render();
        }
    }
    return out.str();
}

TensorElement TensorElement::unit(int arity) {
    TensorElement t(arity);
    t.terms_.emplace(Key(static_cast<size_t>(arity)), QScalar(1));
    return t;
}

TensorElement TensorElement::scalar(QScalar c) {
    TensorElement t(0);
    t.add({}, std::move(c));
    return t;
}

TensorElement TensorElement::fromElement(const AlgebraElement& x) {
    TensorElement t(1);
    for (const auto& [w, c] : x.terms()) t.terms_.emplace(Key{w}, c);
    t.reduced = x.reduced;
    return t;
}

TensorElement TensorElement::pure(std::vector<Word> legs, QScalar c) {
    TensorElement t(static_cast<int>(legs.size()));
    t.add(std::move(legs), std::move(c));
    return t;
}

void TensorElement::add(const Key& k, QScalar c) {
    if (c.isZero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::move(c));
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    r.reduced = reduced && o.reduced;
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    r.reduced = reduced && o.reduced;
    return r;
}

TensorElement TensorElement::scaled(const QScalar& c) const {
    TensorElement r(arity_);
    if (c.isZero()) return r;
    for (const auto& [k, co] : terms_) r.terms_.emplace(k, co * c);
    r.reduced = reduced;
    return r;
}

TensorElement TensorElement::freeProduct(const TensorElement& o) const {
    TensorElement r(arity_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k(static_cast<size_t>(arity_));
            for (size_t leg = 0; leg < k.size(); ++leg) k[leg] = ka[leg].concat(kb[leg]);
            r.add(k, ca * cb);
        }
    return r;
}

QScalar TensorElement::scalarValue() const {
    if (arity_ != 0) throw Error("scalarValue on tensor of arity " + std::to_string(arity_));
    if (terms_.empty()) return QScalar();
    return terms_.begin()->second;
}

AlgebraElement TensorElement::toElement() const {
    if (arity_ != 1) throw Error("toElement on tensor of arity " + std::to_string(arity_));
    AlgebraElement x;
    for (const auto& [k, c] : terms_) x.add(k[0], c);
    x.reduced = reduced;
    return x;
}

std::string TensorElement::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        const bool showCoeff = !c.isOne() || k.empty();
        if (showCoeff) out << c.render();
        for (size_t leg = 0; leg < k.size(); ++leg) {
            if (leg) out << " (x) ";
            else if (showCoeff) out << "*";
            out << k[leg].render();
        }
    }
    return out.str();
}

}  // namespace wqa
