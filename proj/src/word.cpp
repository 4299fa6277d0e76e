#include "wqa/word.hpp"

#include <sstream>

namespace wqa {

std::string Gen::render() const {
    switch (kind) {
        case GenKind::E: return "E" + std::to_string(index);
        case GenKind::F: return "F" + std::to_string(index);
        case GenKind::K: return "K" + std::to_string(index);
        case GenKind::Kbar: return "Kb" + std::to_string(index);
        case GenKind::D: return "D" + std::to_string(index);
        case GenKind::Dbar: return "Db" + std::to_string(index);
        case GenKind::J: return "J";
    }
    return "?";
}

Word Word::jPower(int exp) {
    Word w;
    w.letters_.assign(static_cast<size_t>(exp), genJ());
    return w;
}

int Word::efDegree() const {
    int d = 0;
    for (const Gen& g : letters_) d += g.isEF();
    return d;
}

Word Word::concat(const Word& o) const {
    Word w;
    w.letters_.reserve(letters_.size() + o.letters_.size());
    w.letters_ = letters_;
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    return w;
}

Word Word::subword(size_t from, size_t len) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<long>(from),
                      letters_.begin() + static_cast<long>(from + len));
    return w;
}

Word Word::appended(Gen g) const {
    Word w = *this;
    w.letters_.push_back(g);
    return w;
}

std::string Word::render() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < letters_.size();) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        if (i) out << "*";
        out << letters_[i].render();
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    const int da = a.efDegree(), db = b.efDegree();
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

size_t WordHash::operator()(const Word& w) const {
    size_t h = 14695981039346656037ull;
    for (const Gen& g : w.letters()) {
        h = (h ^ g.enc()) * 1099511628211ull;
    }
    return h;
}

}  // namespace wqa
