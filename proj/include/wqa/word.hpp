#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wqa {

// Generator alphabet.  The enum order fixes the letter order used by the
// degree-lexicographic word comparison: torus letters first, then F_i < E_i.
enum class GenKind : uint8_t { K = 0, Kbar, D, Dbar, J, F, E };

struct Gen {
    GenKind kind;
    uint8_t index = 0;  // ignored for J

    bool operator==(const Gen& o) const { return kind == o.kind && index == o.index; }
    bool operator!=(const Gen& o) const { return !(*this == o); }
    bool operator<(const Gen& o) const {
        return kind < o.kind || (kind == o.kind && index < o.index);
    }

    bool isTorus() const { return kind <= GenKind::Dbar; }
    bool isEF() const { return kind == GenKind::E || kind == GenKind::F; }
    bool isJ() const { return kind == GenKind::J; }

    uint16_t enc() const { return static_cast<uint16_t>((static_cast<uint16_t>(kind) << 8) | index); }
    std::string render() const;
};

inline Gen genE(uint8_t i) { return {GenKind::E, i}; }
inline Gen genF(uint8_t i) { return {GenKind::F, i}; }
inline Gen genK(uint8_t i) { return {GenKind::K, i}; }
inline Gen genKbar(uint8_t i) { return {GenKind::Kbar, i}; }
inline Gen genD(uint8_t i) { return {GenKind::D, i}; }
inline Gen genDbar(uint8_t i) { return {GenKind::Dbar, i}; }
inline Gen genJ() { return {GenKind::J, 0}; }

// A word in the free monoid on the generators.  The empty word is the unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Gen> letters) : letters_(letters) {}

    static Word jPower(int exp);
    static Word single(Gen g) { return Word({g}); }

    const std::vector<Gen>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Gen& operator[](size_t i) const { return letters_[i]; }

    // Number of E/F letters; torus letters and J carry weight zero.
    int efDegree() const;

    Word concat(const Word& o) const;
    Word subword(size_t from, size_t len) const;
    Word appended(Gen g) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    std::string render() const;  // e.g. "F0*E1*J^2*K0"

private:
    std::vector<Gen> letters_;
};

// Degree-lexicographic order: EF-degree first, then total length, then the
// letter sequence.  Total order; used for term maps and rule orientation.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
    size_t operator()(const Word& w) const;
};

}  // namespace wqa
