#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wqa/cartan.hpp"
#include "wqa/element.hpp"

namespace wqa {

enum class TypeFlag : uint8_t { One, Zero };

enum class RuleFamily {
    JCycle,         // J^m -> J
    TorusPair,      // Ki*Kbi -> J^(m-1), both orders, also D
    TorusCommute,   // torus letters sorted into the block order
    JCommute,       // J moves right past torus letters
    Absorb,         // torus letter absorbs an adjacent J^(m-1), both sides
    JCentral,       // J^(m-1) moves right past a type-one E/F letter
    TypeZeroAbsorb, // type-zero E/F absorbs J^(m-1), both sides
    TypeZeroDefn,   // Kj*Ei*Kbj -> qi^aij*Ei; verification only, not rewritten
    Exchange,       // K/Kb moves right past E/F with a q-power
    DExchange,      // D/Db moves right past E/F with a q-power
    EFCommutator,   // Ei*Fj -> Fj*Ei + delta_ij (Ki - Kbi)/(qi - qi^-1)
    SerreE,
    SerreF,
    OrthoCommute,   // Ei*Ej -> Ej*Ei and Fi*Fj -> Fj*Fi when a_ij = 0
    JQuotient,      // J -> 1 in the J=1 quotient presentation
};

struct RewriteRule {
    std::string id;
    RuleFamily family;
    Word lhs;
    AlgebraElement rhs;
    std::string law;      // rendered "lhs -> rhs"
    bool rewrite = true;  // false: checked by verifiers but never applied
};

// One rewrite application: coeff * (left . lhs . right) was replaced by the
// corresponding combination over the rule's rhs.
struct TraceStep {
    QScalar coeff;
    Word left;
    Word right;
    size_t rule;
};
using ReductionTrace = std::vector<TraceStep>;

struct PresentationOptions {
    int maxEfDegree = 12;     // cap on E/F letters per word
    long stepBudget = 1000000;
    bool memoize = true;
};

// The finitely presented algebra: a Borcherds-Cartan datum, the type table
// tau, the order m of the idempotent tower, and the oriented rule set.  The
// object is immutable after construction; reduce/multiply are pure up to the
// internal memo cache, which is lock-protected.
class Presentation {
public:
    static Presentation build(BorcherdsCartanDatum datum, std::vector<TypeFlag> tauE,
                              std::vector<TypeFlag> tauF, int m, PresentationOptions opt = {});

    // The J=1 quotient with Kb_i a genuine inverse of K_i; the comparison
    // target for quotient and corner isomorphism checks.
    static Presentation buildOrdinary(BorcherdsCartanDatum datum, PresentationOptions opt = {});

    const BorcherdsCartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }
    int m() const { return m_; }
    bool isOrdinary() const { return ordinary_; }
    TypeFlag typeE(int i) const { return tauE_[static_cast<size_t>(i)]; }
    TypeFlag typeF(int i) const { return tauF_[static_cast<size_t>(i)]; }
    TypeFlag typeOf(Gen g) const;
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const PresentationOptions& options() const { return opt_; }

    QScalar qi(int i) const { return QScalar::q(datum_.s(i)); }

    std::vector<Gen> generators() const;  // E,F per index, K,Kb,D,Db per index, J

    AlgebraElement reduce(const AlgebraElement& x, ReductionTrace* trace = nullptr) const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    bool isZero(const AlgebraElement& x) const;
    bool isCanonical(const Word& w) const { return !findRedex(w).has_value(); }

    // Alternating q-binomial sum for (i, j); unreduced.
    AlgebraElement serreElement(int i, int j, GenKind side) const;

    // (x J^(m-1), x (1 - J^(m-1))), both reduced.
    std::pair<AlgebraElement, AlgebraElement> peirceDecompose(const AlgebraElement& x) const;

    AlgebraElement jmIdempotent() const;  // J^(m-1)

    // Free element rebuilt from a trace: sum of c*(u.L.v - u.R.v) per step.
    AlgebraElement replayTrace(const ReductionTrace& trace) const;

    void clearCache() const;

private:
    Presentation(BorcherdsCartanDatum datum, std::vector<TypeFlag> tauE,
                 std::vector<TypeFlag> tauF, int m, bool ordinary, PresentationOptions opt);

    void buildRules();
    size_t pushRule(std::string id, RuleFamily family, Word lhs, AlgebraElement rhs,
                    bool rewrite = true);
    std::optional<std::pair<size_t, size_t>> findRedex(const Word& w) const;
    AlgebraElement reduceWordCached(const Word& w, long& budget) const;
    AlgebraElement reduceRaw(const Word& w, long& budget, ReductionTrace* trace) const;

    BorcherdsCartanDatum datum_;
    std::vector<TypeFlag> tauE_, tauF_;
    int m_;
    bool ordinary_;
    PresentationOptions opt_;

    std::vector<RewriteRule> rules_;
    static uint32_t pairKey(Gen a, Gen b) {
        return (static_cast<uint32_t>(a.enc()) << 16) | b.enc();
    }
    std::unordered_map<uint32_t, size_t> pairRule_;
    std::unordered_map<uint16_t, size_t> absorbLeft_;    // J^(m-1) X -> X
    std::unordered_map<uint16_t, size_t> absorbRight_;   // X J^(m-1) -> X
    std::unordered_map<uint16_t, size_t> centralMove_;   // J^(m-1) X -> X J^(m-1)
    std::unordered_map<uint16_t, size_t> jCommute_;      // J t -> t J
    std::unordered_map<uint16_t, std::vector<size_t>> serreByFirst_;
    size_t jCycleRule_ = SIZE_MAX;
    size_t jQuotientRule_ = SIZE_MAX;

    mutable std::mutex cacheMutex_;
    mutable std::unordered_map<Word, AlgebraElement, WordHash> cache_;
};

}  // namespace wqa
