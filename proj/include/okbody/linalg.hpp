#ifndef OKBODY_LINALG_HPP
#define OKBODY_LINALG_HPP

#include <optional>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

// Dense rational vector, dimension >= 1.
class QVec {
public:
    explicit QVec(std::vector<Rat> coords);
    static QVec zeros(int dim);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rat& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool operator==(const QVec& other) const { return coords_ == other.coords_; }
    bool operator!=(const QVec& other) const { return coords_ != other.coords_; }

private:
    std::vector<Rat> coords_;
};

// Standard lexicographic order on coordinates (position 0 first).
bool lex_less(const QVec& a, const QVec& b);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& c, const QVec& v);
Rat dot(const QVec& a, const QVec& b);

// Dense rational matrix stored as a list of row vectors; at least one row
// and one column.
class QMat {
public:
    QMat(int rows, int cols); // zero-filled
    explicit QMat(std::vector<QVec> rows);
    static QMat identity(int n);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_[0].dim(); }
    const Rat& at(int r, int c) const { return rows_[static_cast<size_t>(r)][c]; }
    Rat& at(int r, int c) { return rows_[static_cast<size_t>(r)][c]; }
    const QVec& row(int r) const { return rows_[static_cast<size_t>(r)]; }

    QMat transposed() const;

private:
    std::vector<QVec> rows_;
};

// Solves A x = b exactly. Returns one solution (free variables set to 0) or
// nullopt when the system is inconsistent. Dimensions must agree.
std::optional<QVec> gauss_solve(const QMat& A, const QVec& b);

int rank(const QMat& A);

// A deterministic nonzero kernel vector of A (first free column set to 1,
// remaining free columns 0), or nullopt when the kernel is trivial.
std::optional<QVec> kernel_vector(const QMat& A);

// Certificate-producing convex membership test.
//
// When `inside`, `coefficients` holds one exact convex combination of the
// generators equal to p. Otherwise `separator` holds (h, h0) with
// h . g + h0 <= 0 for every generator g and h . p + h0 > 0, normalized so
// the entries' absolute values sum to 1.
struct HullMembership {
    bool inside = false;
    std::vector<Rat> coefficients;
    std::vector<Rat> separator;
};

HullMembership in_convex_hull(const QVec& p, const std::vector<QVec>& generators);

} // namespace okb

#endif
