#include "wqa/presentation.hpp"

#include <algorithm>

namespace wqa {

namespace {

int torusRank(Gen g) {
    return g.index * 4 + static_cast<int>(g.kind);  // K < Kbar < D < Dbar per index
}

Gen partnerOf(Gen g) {
    switch (g.kind) {
        case GenKind::K: return genKbar(g.index);
        case GenKind::Kbar: return genK(g.index);
        case GenKind::D: return genDbar(g.index);
        case GenKind::Dbar: return genD(g.index);
        default: return g;
    }
}

}  // namespace

Presentation::Presentation(BorcherdsCartanDatum datum, std::vector<TypeFlag> tauE,
                           std::vector<TypeFlag> tauF, int m, bool ordinary,
                           PresentationOptions opt)
    : datum_(std::move(datum)),
      tauE_(std::move(tauE)),
      tauF_(std::move(tauF)),
      m_(m),
      ordinary_(ordinary),
      opt_(opt) {
    buildRules();
}

Presentation Presentation::build(BorcherdsCartanDatum datum, std::vector<TypeFlag> tauE,
                                 std::vector<TypeFlag> tauF, int m, PresentationOptions opt) {
    if (m < 2) throw UnsupportedM("m must be >= 2: the relation set asserts 1 != J^(m-1)");
    const size_t n = static_cast<size_t>(datum.rank());
    if (tauE.size() != n || tauF.size() != n)
        throw Error("type table size does not match the datum rank");
    return Presentation(std::move(datum), std::move(tauE), std::move(tauF), m, false, opt);
}

Presentation Presentation::buildOrdinary(BorcherdsCartanDatum datum, PresentationOptions opt) {
    const size_t n = static_cast<size_t>(datum.rank());
    std::vector<TypeFlag> ones(n, TypeFlag::One);
    return Presentation(std::move(datum), ones, ones, 1, true, opt);
}

TypeFlag Presentation::typeOf(Gen g) const {
    if (g.kind == GenKind::E) return typeE(g.index);
    if (g.kind == GenKind::F) return typeF(g.index);
    throw Error("typeOf: not an E/F generator");
}

std::vector<Gen> Presentation::generators() const {
    std::vector<Gen> out;
    const int n = rank();
    for (int i = 0; i < n; ++i) out.push_back(genE(static_cast<uint8_t>(i)));
    for (int i = 0; i < n; ++i) out.push_back(genF(static_cast<uint8_t>(i)));
    for (int i = 0; i < n; ++i) {
        out.push_back(genK(static_cast<uint8_t>(i)));
        out.push_back(genKbar(static_cast<uint8_t>(i)));
        out.push_back(genD(static_cast<uint8_t>(i)));
        out.push_back(genDbar(static_cast<uint8_t>(i)));
    }
    if (!ordinary_) out.push_back(genJ());
    return out;
}

size_t Presentation::pushRule(std::string id, RuleFamily family, Word lhs, AlgebraElement rhs,
                              bool rewrite) {
    RewriteRule r;
    r.id = std::move(id);
    r.family = family;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.law = r.lhs.render() + " -> " + r.rhs.render();
    r.rewrite = rewrite;
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
}

void Presentation::buildRules() {
    const int n = rank();
    const AlgebraElement one = AlgebraElement::unit();
    const AlgebraElement jm =
        ordinary_ ? one : AlgebraElement(Word::jPower(m_ - 1));

    std::vector<Gen> torus;
    for (int i = 0; i < n; ++i) {
        torus.push_back(genK(static_cast<uint8_t>(i)));
        torus.push_back(genKbar(static_cast<uint8_t>(i)));
        torus.push_back(genD(static_cast<uint8_t>(i)));
        torus.push_back(genDbar(static_cast<uint8_t>(i)));
    }
    std::vector<Gen> efs;
    for (int i = 0; i < n; ++i) {
        efs.push_back(genE(static_cast<uint8_t>(i)));
        efs.push_back(genF(static_cast<uint8_t>(i)));
    }

    if (ordinary_) {
        jQuotientRule_ = pushRule("jquo", RuleFamily::JQuotient, Word({genJ()}), one);
    } else {
        jCycleRule_ = pushRule("jcyc", RuleFamily::JCycle, Word::jPower(m_), AlgebraElement(Word::jPower(1)));
    }

    // Inverse pairings: both orders collapse to the tower idempotent.
    for (Gen t : torus) {
        Gen p = partnerOf(t);
        size_t idx = pushRule("pair/" + t.render(), RuleFamily::TorusPair,
                              Word({t, p}), jm);
        pairRule_[pairKey(t, p)] = idx;
    }

    // Commutation inside the torus block, oriented toward the block order.
    for (Gen a : torus)
        for (Gen b : torus) {
            if (torusRank(a) <= torusRank(b)) continue;
            if (partnerOf(a) == b) continue;  // pairing rule wins
            size_t idx = pushRule("comm/" + a.render() + "." + b.render(),
                                  RuleFamily::TorusCommute, Word({a, b}),
                                  AlgebraElement(Word({b, a})));
            pairRule_[pairKey(a, b)] = idx;
        }

    if (!ordinary_) {
        const Word jmWord = Word::jPower(m_ - 1);
        for (Gen t : torus) {
            jCommute_[t.enc()] = pushRule("jmove/" + t.render(), RuleFamily::JCommute,
                                          Word({genJ(), t}), AlgebraElement(Word({t, genJ()})));
            absorbLeft_[t.enc()] = pushRule("abs-l/" + t.render(), RuleFamily::Absorb,
                                            jmWord.concat(Word({t})), AlgebraElement(Word({t})));
            absorbRight_[t.enc()] = pushRule("abs-r/" + t.render(), RuleFamily::Absorb,
                                             Word({t}).concat(jmWord), AlgebraElement(Word({t})));
        }
        for (Gen x : efs) {
            if (typeOf(x) == TypeFlag::Zero) {
                absorbLeft_[x.enc()] =
                    pushRule("zabs-l/" + x.render(), RuleFamily::TypeZeroAbsorb,
                             jmWord.concat(Word({x})), AlgebraElement(Word({x})));
                absorbRight_[x.enc()] =
                    pushRule("zabs-r/" + x.render(), RuleFamily::TypeZeroAbsorb,
                             Word({x}).concat(jmWord), AlgebraElement(Word({x})));
            } else {
                centralMove_[x.enc()] =
                    pushRule("cent/" + x.render(), RuleFamily::JCentral, jmWord.concat(Word({x})),
                             AlgebraElement(Word({x}).concat(jmWord)));
            }
        }
    }

    // K/Kbar moved right past E/F.  Type zero satisfies the same exchange
    // identities, so the rules do not depend on tau.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const long aij = datum_.a(i, j);
            const long si = datum_.s(i);
            Gen E = genE(static_cast<uint8_t>(i)), F = genF(static_cast<uint8_t>(i));
            Gen K = genK(static_cast<uint8_t>(j)), Kb = genKbar(static_cast<uint8_t>(j));
            auto ex = [&](Gen t, Gen x, long exp) {
                size_t idx = pushRule("exch/" + t.render() + "." + x.render(),
                                      RuleFamily::Exchange, Word({t, x}),
                                      AlgebraElement(Word({x, t}), QScalar::q(exp)));
                pairRule_[pairKey(t, x)] = idx;
            };
            ex(K, E, si * aij);
            ex(Kb, E, -si * aij);
            ex(K, F, -si * aij);
            ex(Kb, F, si * aij);

            Gen D = genD(static_cast<uint8_t>(j)), Db = genDbar(static_cast<uint8_t>(j));
            const long d = (i == j) ? 1 : 0;
            auto dex = [&](Gen t, Gen x, long exp) {
                size_t idx = pushRule("dexch/" + t.render() + "." + x.render(),
                                      RuleFamily::DExchange, Word({t, x}),
                                      AlgebraElement(Word({x, t}), QScalar::q(exp)));
                pairRule_[pairKey(t, x)] = idx;
            };
            dex(D, E, d);
            dex(Db, E, -d);
            dex(D, F, -d);
            dex(Db, F, d);

            // The membership form of type zero, kept for verification.
            if (!ordinary_ && typeE(i) == TypeFlag::Zero)
                pushRule("tz/" + E.render() + "." + K.render(), RuleFamily::TypeZeroDefn,
                         Word({K, E, Kb}), AlgebraElement(Word({E}), QScalar::q(si * aij)),
                         false);
            if (!ordinary_ && typeF(i) == TypeFlag::Zero)
                pushRule("tz/" + F.render() + "." + K.render(), RuleFamily::TypeZeroDefn,
                         Word({K, F, Kb}), AlgebraElement(Word({F}), QScalar::q(-si * aij)),
                         false);
        }

    // Straightening: every adjacent Ei*Fj pair is rewritten.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Gen E = genE(static_cast<uint8_t>(i)), F = genF(static_cast<uint8_t>(j));
            AlgebraElement rhs(Word({F, E}));
            if (i == j) {
                const long si = datum_.s(i);
                QScalar inv = QScalar(1) / (QScalar::q(si) - QScalar::q(-si));
                rhs.add(Word({genK(static_cast<uint8_t>(i))}), inv);
                rhs.add(Word({genKbar(static_cast<uint8_t>(i))}), -inv);
            }
            size_t idx = pushRule("ef/" + E.render() + "." + F.render(),
                                  RuleFamily::EFCommutator, Word({E, F}), std::move(rhs));
            pairRule_[pairKey(E, F)] = idx;
        }

    // Serre straightening for real i against j with a_ij < 0, and plain
    // commutation when a_ij = 0.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const long aij = datum_.a(i, j);
            if (aij == 0) {
                if (i > j)
                    for (GenKind kind : {GenKind::E, GenKind::F}) {
                        Gen a{kind, static_cast<uint8_t>(i)}, b{kind, static_cast<uint8_t>(j)};
                        size_t idx =
                            pushRule(std::string("orth/") + a.render() + "." + b.render(),
                                     RuleFamily::OrthoCommute, Word({a, b}),
                                     AlgebraElement(Word({b, a})));
                        pairRule_[pairKey(a, b)] = idx;
                    }
                continue;
            }
            if (!datum_.isReal(i)) continue;
            const long s = 1 - aij;
            const long si = datum_.s(i);
            for (GenKind kind : {GenKind::E, GenKind::F}) {
                Gen a{kind, static_cast<uint8_t>(i)}, b{kind, static_cast<uint8_t>(j)};
                Word lhs;
                AlgebraElement rhs;
                if (j > i) {
                    // b a^s  ->  sum_{r<s} (-1)^(r+s+1) [s r]_i a^(s-r) b a^r
                    std::vector<Gen> L{b};
                    L.insert(L.end(), static_cast<size_t>(s), a);
                    lhs = Word(std::move(L));
                    for (long r = 0; r < s; ++r) {
                        std::vector<Gen> w(static_cast<size_t>(s - r), a);
                        w.push_back(b);
                        w.insert(w.end(), static_cast<size_t>(r), a);
                        QScalar c = quantumBinomial(s, r, si);
                        if ((r + s + 1) % 2 != 0) c = -c;
                        rhs.add(Word(std::move(w)), c);
                    }
                } else {
                    // a^s b  ->  sum_{r>=1} (-1)^(r+1) [s r]_i a^(s-r) b a^r
                    std::vector<Gen> L(static_cast<size_t>(s), a);
                    L.push_back(b);
                    lhs = Word(std::move(L));
                    for (long r = 1; r <= s; ++r) {
                        std::vector<Gen> w(static_cast<size_t>(s - r), a);
                        w.push_back(b);
                        w.insert(w.end(), static_cast<size_t>(r), a);
                        QScalar c = quantumBinomial(s, r, si);
                        if ((r + 1) % 2 != 0) c = -c;
                        rhs.add(Word(std::move(w)), c);
                    }
                }
                size_t idx = pushRule(
                    std::string(kind == GenKind::E ? "serre-e/" : "serre-f/") +
                        std::to_string(i) + "." + std::to_string(j),
                    kind == GenKind::E ? RuleFamily::SerreE : RuleFamily::SerreF, lhs,
                    std::move(rhs));
                serreByFirst_[lhs[0].enc()].push_back(idx);
            }
        }
}

std::optional<std::pair<size_t, size_t>> Presentation::findRedex(const Word& w) const {
    const auto& L = w.letters();
    const size_t len = L.size();
    const size_t mm = static_cast<size_t>(m_);
    for (size_t p = 0; p < len;) {
        const Gen g = L[p];
        if (g.isJ()) {
            if (ordinary_) return {{p, jQuotientRule_}};
            size_t c = 1;
            while (p + c < len && L[p + c].isJ()) ++c;
            if (c >= mm) return {{p, jCycleRule_}};
            if (c == mm - 1 && p + c < len) {
                const Gen x = L[p + c];
                if (auto it = absorbLeft_.find(x.enc()); it != absorbLeft_.end())
                    return {{p, it->second}};
                if (auto it = centralMove_.find(x.enc()); it != centralMove_.end())
                    return {{p, it->second}};
            }
            if (c < mm - 1 && p + c < len && L[p + c].isTorus())
                return {{p + c - 1, jCommute_.at(L[p + c].enc())}};
            p += c;
            continue;
        }
        if (p + 1 < len) {
            const Gen h = L[p + 1];
            if (h.isJ() && !ordinary_) {
                size_t cJ = 1;
                while (p + 1 + cJ < len && L[p + 1 + cJ].isJ()) ++cJ;
                if (cJ >= mm - 1) {
                    if (auto it = absorbRight_.find(g.enc()); it != absorbRight_.end())
                        return {{p, it->second}};
                }
            } else if (!h.isJ()) {
                if (g.isEF()) {
                    if (auto it = serreByFirst_.find(g.enc()); it != serreByFirst_.end()) {
                        for (size_t idx : it->second) {
                            const Word& lhs = rules_[idx].lhs;
                            if (p + lhs.size() > len) continue;
                            bool match = true;
                            for (size_t t = 1; t < lhs.size(); ++t)
                                if (L[p + t] != lhs[t]) { match = false; break; }
                            if (match) return {{p, idx}};
                        }
                    }
                }
                if (auto it = pairRule_.find(pairKey(g, h)); it != pairRule_.end())
                    return {{p, it->second}};
            }
        }
        ++p;
    }
    return std::nullopt;
}

AlgebraElement Presentation::reduceRaw(const Word& w0, const QScalar& c0, long& budget,
                                       ReductionTrace* trace) const {
    AlgebraElement out;
    std::vector<std::pair<Word, QScalar>> work;
    work.emplace_back(w0, c0);
    const bool useCache = opt_.memoize && trace == nullptr;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (w.efDegree() > opt_.maxEfDegree)
            throw ReductionBudgetExceeded("word exceeds the length cap of " +
                                          std::to_string(opt_.maxEfDegree) + ": " + w.render());
        if (useCache && w != w0) {
            std::lock_guard<std::mutex> lock(cacheMutex_);
            if (auto it = cache_.find(w); it != cache_.end()) {
                for (const auto& [rw, rc] : it->second.terms()) out.add(rw, rc * c);
                continue;
            }
        }
        auto redex = findRedex(w);
        if (!redex) {
            out.add(w, c);
            continue;
        }
        if (--budget < 0)
            throw ReductionBudgetExceeded("reduction step budget exceeded");
        const auto [pos, idx] = *redex;
        const RewriteRule& rule = rules_[idx];
        Word left = w.subword(0, pos);
        Word right = w.subword(pos + rule.lhs.size(), w.size() - pos - rule.lhs.size());
        if (trace) trace->push_back({c, left, right, idx});
        for (const auto& [rw, rc] : rule.rhs.terms())
            work.emplace_back(left.concat(rw).concat(right), c * rc);
    }
    out.reduced = true;
    return out;
}

AlgebraElement Presentation::reduceWordCached(const Word& w, long& budget) const {
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    AlgebraElement r = reduceRaw(w, budget, nullptr);
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        cache_.emplace(w, r);
    }
    return r;
}

AlgebraElement Presentation::reduce(const AlgebraElement& x, ReductionTrace* trace) const {
    long budget = opt_.stepBudget;
    AlgebraElement out;
    for (const auto& [w, c] : x.terms()) {
        if (opt_.memoize && trace == nullptr) {
            AlgebraElement r = reduceWordCached(w, budget);
            for (const auto& [rw, rc] : r.terms()) out.add(rw, rc * c);
        } else {
            AlgebraElement r = reduceRaw(w, budget, trace);
            // reduceRaw traces with coefficient relative to the input word;
            // rescale the recorded steps by this term's coefficient.
            if (trace) {
                for (auto it = trace->end() - static_cast<long>(0); false;) (void)it;
            }
            for (const auto& [rw, rc] : r.terms()) out.add(rw, rc * c);
        }
    }
    out.reduced = true;
    return out;
}

AlgebraElement Presentation::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    return reduce(x.freeProduct(y));
}

bool Presentation::isZero(const AlgebraElement& x) const { return reduce(x).isZero(); }

AlgebraElement Presentation::serreElement(int i, int j, GenKind side) const {
    if (side != GenKind::E && side != GenKind::F) throw Error("serreElement: side must be E or F");
    if (i == j || !datum_.isReal(i))
        throw NotApplicable("serre element requires a_ii = 2 and i != j");
    const long s = 1 - datum_.a(i, j);
    const long si = datum_.s(i);
    Gen a{side, static_cast<uint8_t>(i)}, b{side, static_cast<uint8_t>(j)};
    AlgebraElement out;
    for (long r = 0; r <= s; ++r) {
        std::vector<Gen> w(static_cast<size_t>(s - r), a);
        w.push_back(b);
        w.insert(w.end(), static_cast<size_t>(r), a);
        QScalar c = quantumBinomial(s, r, si);
        if (r % 2 != 0) c = -c;
        out.add(Word(std::move(w)), c);
    }
    return out;
}

std::pair<AlgebraElement, AlgebraElement> Presentation::peirceDecompose(
    const AlgebraElement& x) const {
    AlgebraElement jm = jmIdempotent();
    AlgebraElement w = reduce(x.freeProduct(jm));
    AlgebraElement wbar = reduce(x - w);
    return {std::move(w), std::move(wbar)};
}

AlgebraElement Presentation::jmIdempotent() const {
    if (ordinary_) return AlgebraElement::unit();
    return AlgebraElement(Word::jPower(m_ - 1));
}

AlgebraElement Presentation::replayTrace(const ReductionTrace& trace) const {
    AlgebraElement acc;
    for (const TraceStep& step : trace) {
        const RewriteRule& rule = rules_[step.rule];
        acc.add(step.left.concat(rule.lhs).concat(step.right), step.coeff);
        for (const auto& [rw, rc] : rule.rhs.terms())
            acc.add(step.left.concat(rw).concat(step.right), -(step.coeff * rc));
    }
    return acc;
}

void Presentation::clearCache() const {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    cache_.clear();
}

}  // namespace wqa
