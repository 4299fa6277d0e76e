#include "wqa/cartan.hpp"

#include <numeric>
#include <sstream>

namespace wqa {

std::string DatumViolation::message() const {
    std::ostringstream out;
    switch (kind) {
        case NonSquare: out << "matrix is not square or symmetrizer length mismatches"; break;
        case DiagonalViolation: out << "a[" << i << "][" << i << "] is neither 2 nor <= 0"; break;
        case SignViolation: out << "a[" << i << "][" << j << "] > 0 off the diagonal"; break;
        case ZeroPairViolation:
            out << "a[" << i << "][" << j << "] = 0 but a[" << j << "][" << i << "] != 0";
            break;
        case NotSymmetrizable:
            out << "s[" << i << "]*a[" << i << "][" << j << "] != s[" << j << "]*a[" << j << "]["
                << i << "]";
            break;
        case NonPositiveSymmetrizer: out << "s[" << i << "] is not positive"; break;
    }
    return out.str();
}

namespace {
std::string joinViolations(const std::vector<DatumViolation>& v) {
    std::ostringstream out;
    out << "invalid Borcherds-Cartan datum:";
    for (const auto& x : v) out << "\n  - " << x.message();
    return out.str();
}
}  // namespace

DatumError::DatumError(std::vector<DatumViolation> v)
    : Error(joinViolations(v)), violations(std::move(v)) {}

long RootVector::height() const {
    long h = 0;
    for (long c : coeffs) h += c;
    return h;
}

bool RootVector::isZero() const {
    for (long c : coeffs)
        if (c != 0) return false;
    return true;
}

bool RootVector::allNonNegative() const {
    for (long c : coeffs)
        if (c < 0) return false;
    return true;
}

RootVector RootVector::operator+(const RootVector& o) const {
    RootVector r(coeffs);
    for (size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] += o.coeffs[k];
    return r;
}

RootVector RootVector::operator-(const RootVector& o) const {
    RootVector r(coeffs);
    for (size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] -= o.coeffs[k];
    return r;
}

std::string RootVector::render() const {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k) out << ",";
        out << coeffs[k];
    }
    out << ")";
    return out.str();
}

std::vector<DatumViolation> BorcherdsCartanDatum::check(const IntMatrix& a,
                                                        const std::vector<long>& s) {
    std::vector<DatumViolation> out;
    const int n = static_cast<int>(a.size());
    if (n == 0 || s.size() != a.size()) {
        out.push_back({DatumViolation::NonSquare});
        return out;
    }
    for (const auto& row : a)
        if (row.size() != a.size()) {
            out.push_back({DatumViolation::NonSquare});
            return out;
        }

    for (int i = 0; i < n; ++i)
        if (a[i][i] != 2 && a[i][i] > 0)
            out.push_back({DatumViolation::DiagonalViolation, i, i});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) out.push_back({DatumViolation::SignViolation, i, j});
            if (a[i][j] == 0 && a[j][i] != 0)
                out.push_back({DatumViolation::ZeroPairViolation, i, j});
        }
    for (int i = 0; i < n; ++i)
        if (s[i] <= 0) out.push_back({DatumViolation::NonPositiveSymmetrizer, i, i});

    // Symmetrizability presupposes a structurally sound matrix.
    if (!out.empty()) return out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s[i] * a[i][j] != s[j] * a[j][i])
                out.push_back({DatumViolation::NotSymmetrizable, i, j});
    return out;
}

BorcherdsCartanDatum BorcherdsCartanDatum::validate(IntMatrix a, std::vector<long> s) {
    auto violations = check(a, s);
    if (!violations.empty()) throw DatumError(std::move(violations));
    const int n = static_cast<int>(a.size());
    if (n > 64) throw DatumError({{DatumViolation::NonSquare}});
    return BorcherdsCartanDatum(std::move(a), std::move(s), n);
}

void BorcherdsCartanDatum::checkIndex(int i) const {
    if (i < 0 || i >= n_)
        throw IndexOutOfRange("index " + std::to_string(i) + " out of range for rank " +
                              std::to_string(n_));
}

long BorcherdsCartanDatum::a(int i, int j) const {
    checkIndex(i);
    checkIndex(j);
    return a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

long BorcherdsCartanDatum::s(int i) const {
    checkIndex(i);
    return s_[static_cast<size_t>(i)];
}

IndexClassification BorcherdsCartanDatum::classifyIndices() const {
    IndexClassification c;
    for (int i = 0; i < n_; ++i)
        (isReal(i) ? c.real : c.imaginary).push_back(i);
    return c;
}

long BorcherdsCartanDatum::bilinear(int i, int j) const { return s(i) * a(i, j); }

std::optional<std::vector<long>> findSymmetrizers(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0 || n > 8) return std::nullopt;
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) return std::nullopt;

    // Propagate ratios s_j/s_i = a_ij/a_ji across the nonzero pattern, then
    // scale to integers by the lcm of denominators.
    std::vector<std::pair<long, long>> ratio(static_cast<size_t>(n), {0, 0});  // (num, den)
    ratio[0] = {1, 1};
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (ratio[static_cast<size_t>(i)].first == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (i == j || a[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                if (a[static_cast<size_t>(j)][static_cast<size_t>(i)] == 0) return std::nullopt;
                long num = ratio[static_cast<size_t>(i)].first *
                           a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                long den = ratio[static_cast<size_t>(i)].second *
                           a[static_cast<size_t>(j)][static_cast<size_t>(i)];
                if (num < 0) { num = -num; den = -den; }
                if (den < 0) return std::nullopt;
                long g = std::gcd(num, den);
                num /= g;
                den /= g;
                auto& rj = ratio[static_cast<size_t>(j)];
                if (rj.first == 0) {
                    rj = {num, den};
                    progress = true;
                } else if (rj.first * den != num * rj.second) {
                    return std::nullopt;
                }
            }
        }
        // Disconnected components start fresh at ratio 1.
        for (int i = 0; i < n && !progress; ++i)
            if (ratio[static_cast<size_t>(i)].first == 0) {
                ratio[static_cast<size_t>(i)] = {1, 1};
                progress = true;
            }
    }
    long scale = 1;
    for (const auto& [num, den] : ratio) scale = std::lcm(scale, num);
    std::vector<long> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& [num, den] = ratio[static_cast<size_t>(i)];
        s[static_cast<size_t>(i)] = den * (scale / num);
    }
    if (!BorcherdsCartanDatum::check(a, s).empty()) return std::nullopt;
    return s;
}

}  // namespace wqa
