#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqa/errors.hpp"

namespace wqa {

using IntMatrix = std::vector<std::vector<long>>;

struct DatumViolation {
    enum Kind {
        NonSquare,
        DiagonalViolation,
        SignViolation,
        ZeroPairViolation,
        NotSymmetrizable,
        NonPositiveSymmetrizer,
    };
    Kind kind;
    int i = -1;
    int j = -1;

    std::string message() const;
    bool operator==(const DatumViolation& o) const {
        return kind == o.kind && i == o.i && j == o.j;
    }
};

struct DatumError : Error {
    std::vector<DatumViolation> violations;
    explicit DatumError(std::vector<DatumViolation> v);
};

// Integer coordinates in the simple-root basis.
struct RootVector {
    std::vector<long> coeffs;

    RootVector() = default;
    explicit RootVector(size_t n) : coeffs(n, 0) {}
    explicit RootVector(std::vector<long> c) : coeffs(std::move(c)) {}

    long height() const;
    bool isZero() const;
    bool allNonNegative() const;

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;
    bool operator==(const RootVector& o) const { return coeffs == o.coeffs; }
    bool operator<(const RootVector& o) const { return coeffs < o.coeffs; }

    std::string render() const;
};

struct IndexClassification {
    std::vector<int> real;
    std::vector<int> imaginary;
};

// Validated Borcherds-Cartan matrix with its symmetrizers.  Diagonal entries
// are 2 or <= 0, off-diagonal entries <= 0 with a symmetric zero pattern, and
// diag(s) * A is symmetric.
class BorcherdsCartanDatum {
public:
    // Returns every violated condition; empty means the datum is valid.
    static std::vector<DatumViolation> check(const IntMatrix& a, const std::vector<long>& s);

    // Throws DatumError listing all violations.
    static BorcherdsCartanDatum validate(IntMatrix a, std::vector<long> s);

    int rank() const { return n_; }
    long a(int i, int j) const;
    long s(int i) const;
    bool isReal(int i) const { return a(i, i) == 2; }

    IndexClassification classifyIndices() const;

    // (alpha_i | alpha_j) = s_i a_ij; symmetric by the datum invariant.
    long bilinear(int i, int j) const;

    const IntMatrix& matrix() const { return a_; }
    const std::vector<long>& symmetrizers() const { return s_; }

private:
    BorcherdsCartanDatum(IntMatrix a, std::vector<long> s, int n)
        : a_(std::move(a)), s_(std::move(s)), n_(n) {}
    void checkIndex(int i) const;

    IntMatrix a_;
    std::vector<long> s_;
    int n_ = 0;
};

// Searches positive integer symmetrizers for a matrix satisfying conditions
// (1)-(4); rank capped at 8.  Existence is a property of the input data.
std::optional<std::vector<long>> findSymmetrizers(const IntMatrix& a);

}  // namespace wqa
