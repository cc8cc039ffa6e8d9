#include "okbody/linalg.hpp"

#include <algorithm>

namespace okb {

QVec::QVec(std::vector<Rat> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) fail_config("QVec requires dimension >= 1");
}

QVec QVec::zeros(int dim) {
    if (dim < 1) fail_config("QVec requires dimension >= 1");
    return QVec(std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
}

bool lex_less(const QVec& a, const QVec& b) {
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                        b.coords().begin(), b.coords().end());
}

static void check_same_dim(const QVec& a, const QVec& b, const char* op) {
    if (a.dim() != b.dim()) {
        fail_config(std::string("dimension mismatch in ") + op);
    }
}

QVec operator+(const QVec& a, const QVec& b) {
    check_same_dim(a, b, "vector addition");
    std::vector<Rat> out(a.coords());
    for (int i = 0; i < a.dim(); ++i) out[static_cast<size_t>(i)] += b[i];
    return QVec(std::move(out));
}

QVec operator-(const QVec& a, const QVec& b) {
    check_same_dim(a, b, "vector subtraction");
    std::vector<Rat> out(a.coords());
    for (int i = 0; i < a.dim(); ++i) out[static_cast<size_t>(i)] -= b[i];
    return QVec(std::move(out));
}

QVec operator*(const Rat& c, const QVec& v) {
    std::vector<Rat> out(v.coords());
    for (auto& x : out) x *= c;
    return QVec(std::move(out));
}

Rat dot(const QVec& a, const QVec& b) {
    check_same_dim(a, b, "dot product");
    Rat s(0);
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

QMat::QMat(int rows, int cols) {
    if (rows < 1 || cols < 1) fail_config("QMat requires at least one row and one column");
    rows_.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) rows_.push_back(QVec::zeros(cols));
}

QMat::QMat(std::vector<QVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) fail_config("QMat requires at least one row");
    for (const auto& r : rows_) {
        if (r.dim() != rows_[0].dim()) fail_config("QMat rows must share one dimension");
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transposed() const {
    QMat t(cols(), rows());
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

struct Elimination {
    std::vector<std::vector<Rat>> m; // augmented rows
    std::vector<int> pivot_cols;     // pivot column per processed row
};

// Row echelon form by exact fraction arithmetic; deterministic pivoting
// (first usable row per column).
Elimination eliminate(std::vector<std::vector<Rat>> m, size_t coeff_cols) {
    Elimination e;
    e.m = std::move(m);
    size_t row = 0;
    for (size_t col = 0; col < coeff_cols && row < e.m.size(); ++col) {
        size_t piv = row;
        while (piv < e.m.size() && e.m[piv][col] == 0) ++piv;
        if (piv == e.m.size()) continue;
        std::swap(e.m[row], e.m[piv]);
        for (size_t r = row + 1; r < e.m.size(); ++r) {
            if (e.m[r][col] == 0) continue;
            Rat f = e.m[r][col] / e.m[row][col];
            for (size_t c = col; c < e.m[r].size(); ++c) {
                e.m[r][c] -= f * e.m[row][c];
            }
        }
        e.pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    return e;
}

} // namespace

std::optional<QVec> gauss_solve(const QMat& A, const QVec& b) {
    if (A.rows() != b.dim()) fail_config("dimension mismatch in gauss_solve");
    size_t n = static_cast<size_t>(A.cols());
    std::vector<std::vector<Rat>> aug;
    aug.reserve(static_cast<size_t>(A.rows()));
    for (int r = 0; r < A.rows(); ++r) {
        std::vector<Rat> row = A.row(r).coords();
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    Elimination e = eliminate(std::move(aug), n);
    size_t nrank = e.pivot_cols.size();
    for (size_t r = nrank; r < e.m.size(); ++r) {
        if (e.m[r][n] != 0) return std::nullopt; // 0 = nonzero row
    }
    std::vector<Rat> x(n, Rat(0));
    for (size_t i = nrank; i-- > 0;) {
        size_t pc = static_cast<size_t>(e.pivot_cols[i]);
        Rat rhs = e.m[i][n];
        for (size_t c = pc + 1; c < n; ++c) rhs -= e.m[i][c] * x[c];
        x[pc] = rhs / e.m[i][pc];
    }
    return QVec(std::move(x));
}

int rank(const QMat& A) {
    std::vector<std::vector<Rat>> m;
    m.reserve(static_cast<size_t>(A.rows()));
    for (int r = 0; r < A.rows(); ++r) m.push_back(A.row(r).coords());
    return static_cast<int>(eliminate(std::move(m), static_cast<size_t>(A.cols())).pivot_cols.size());
}

std::optional<QVec> kernel_vector(const QMat& A) {
    size_t n = static_cast<size_t>(A.cols());
    std::vector<std::vector<Rat>> m;
    m.reserve(static_cast<size_t>(A.rows()));
    for (int r = 0; r < A.rows(); ++r) m.push_back(A.row(r).coords());
    Elimination e = eliminate(std::move(m), n);
    if (e.pivot_cols.size() == n) return std::nullopt;
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> x(n, Rat(0));
    x[free_col] = 1;
    for (size_t i = e.pivot_cols.size(); i-- > 0;) {
        size_t pc = static_cast<size_t>(e.pivot_cols[i]);
        Rat s(0);
        for (size_t c = pc + 1; c < n; ++c) s += e.m[i][c] * x[c];
        x[pc] = -s / e.m[i][pc];
    }
    return QVec(std::move(x));
}

// Phase-1 simplex with Bland's rule, run on the feasibility system
//   sum_j lambda_j g_j = p,   sum_j lambda_j = 1,   lambda >= 0.
// Infeasibility yields the dual multipliers, which are exactly the Farkas
// separator; both outcomes are re-verified before returning.
HullMembership in_convex_hull(const QVec& p, const std::vector<QVec>& generators) {
    if (generators.empty()) fail_config("convex membership test requires at least one generator");
    int n = p.dim();
    for (const auto& g : generators) {
        if (g.dim() != n) fail_config("dimension mismatch in convex membership test");
    }
    size_t m = generators.size();
    size_t rows = static_cast<size_t>(n) + 1;
    size_t cols = m + rows + 1; // lambda | artificials | rhs

    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols, Rat(0)));
    std::vector<int> flip(rows, 1);
    for (size_t i = 0; i < rows; ++i) {
        Rat rhs = (i < static_cast<size_t>(n)) ? p[static_cast<int>(i)] : Rat(1);
        for (size_t j = 0; j < m; ++j) {
            t[i][j] = (i < static_cast<size_t>(n)) ? generators[j][static_cast<int>(i)] : Rat(1);
        }
        if (rhs < 0) {
            flip[i] = -1;
            rhs = -rhs;
            for (size_t j = 0; j < m; ++j) t[i][j] = -t[i][j];
        }
        t[i][m + i] = 1;
        t[i][cols - 1] = rhs;
    }

    // Reduced-cost row for "minimize sum of artificials" with the artificial
    // basis: rc_j = c_j - sum_i t[i][j].
    std::vector<Rat> obj(cols, Rat(0));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < rows; ++i) obj[j] -= t[i][j];
    for (size_t i = 0; i < rows; ++i) obj[cols - 1] -= t[i][cols - 1];

    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = m + i;

    for (;;) {
        size_t enter = cols - 1;
        for (size_t j = 0; j + 1 < cols; ++j) {
            if (obj[j] < 0) { enter = j; break; } // Bland: smallest index
        }
        if (enter == cols - 1) break;

        size_t leave = rows;
        Rat best(0);
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) fail_internal("phase-1 simplex reported an unbounded direction");

        Rat piv = t[leave][enter];
        for (size_t c = 0; c < cols; ++c) t[leave][c] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t c = 0; c < cols; ++c) t[i][c] -= f * t[leave][c];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (size_t c = 0; c < cols; ++c) obj[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }

    HullMembership result;
    if (obj[cols - 1] == 0) {
        result.inside = true;
        result.coefficients.assign(m, Rat(0));
        for (size_t i = 0; i < rows; ++i) {
            if (basis[i] < m) result.coefficients[basis[i]] = t[i][cols - 1];
        }
        Rat total(0);
        QVec combo = QVec::zeros(n);
        for (size_t j = 0; j < m; ++j) {
            if (result.coefficients[j] < 0) fail_internal("negative convex coefficient");
            total += result.coefficients[j];
            combo = combo + result.coefficients[j] * generators[j];
        }
        if (total != 1 || combo != p) fail_internal("convex combination failed re-verification");
    } else {
        result.inside = false;
        result.separator.reserve(rows);
        Rat norm(0);
        for (size_t i = 0; i < rows; ++i) {
            Rat y = Rat(1) - obj[m + i];
            if (flip[i] < 0) y = -y;
            result.separator.push_back(y);
            norm += y < 0 ? Rat(-y) : y;
        }
        if (norm == 0) fail_internal("zero Farkas certificate");
        for (auto& y : result.separator) y /= norm;
        Rat at_p = result.separator[static_cast<size_t>(n)];
        for (int i = 0; i < n; ++i) at_p += result.separator[static_cast<size_t>(i)] * p[i];
        if (!(at_p > 0)) fail_internal("separator failed re-verification at target point");
        for (const auto& g : generators) {
            Rat v = result.separator[static_cast<size_t>(n)];
            for (int i = 0; i < n; ++i) v += result.separator[static_cast<size_t>(i)] * g[i];
            if (v > 0) fail_internal("separator failed re-verification on a generator");
        }
    }
    return result;
}

} // namespace okb
