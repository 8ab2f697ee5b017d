#pragma once

// Exact linear algebra over grid-indexed function spaces: finite grids,
// stencil operators, dense rational matrices, commutators, zero testing with
// residual witnesses, and the orthogonality-weight solver.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace racah {

struct ClosureError : std::runtime_error {
    explicit ClosureError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularError : std::runtime_error {
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

struct NonDiagonalizableError : std::runtime_error {
    explicit NonDiagonalizableError(const std::string& what)
        : std::runtime_error(what) {}
};

// A finite set of integer points (1-D segments use x2 = 0) with a fixed
// lexicographic indexing so serialized matrices are stable across runs.
struct Grid {
    int dim = 1;
    std::vector<std::array<int, 2>> pts;
    std::map<std::pair<int, int>, int> index;

    static Grid segment(int N) {
        Grid g;
        g.dim = 1;
        for (int x = 0; x <= N; ++x) g.push({x, 0});
        return g;
    }

    // {0 <= x1 <= x2 <= N}, lexicographic in (x1, x2).
    static Grid triangle(int N) {
        Grid g;
        g.dim = 2;
        for (int x1 = 0; x1 <= N; ++x1)
            for (int x2 = x1; x2 <= N; ++x2) g.push({x1, x2});
        return g;
    }

    // degree pairs {n1, n2 >= 0, n1 + n2 <= N}, lexicographic in (n1, n2).
    static Grid degrees(int N) {
        Grid g;
        g.dim = 2;
        for (int n1 = 0; n1 <= N; ++n1)
            for (int n2 = 0; n1 + n2 <= N; ++n2) g.push({n1, n2});
        return g;
    }

    void push(std::array<int, 2> p) {
        index[{p[0], p[1]}] = static_cast<int>(pts.size());
        pts.push_back(p);
    }

    int size() const { return static_cast<int>(pts.size()); }

    bool contains(int x1, int x2) const {
        return index.count({x1, x2}) != 0;
    }

    int at(int x1, int x2) const {
        auto it = index.find({x1, x2});
        if (it == index.end()) throw DimensionError("grid point not present");
        return it->second;
    }
};

struct Matrix {
    int n = 0;
    std::vector<Q> a;

    Matrix() = default;
    explicit Matrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, Q(0)) {}

    static Matrix identity(int dim, const Q& c = Q(1)) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = c;
        return m;
    }

    Q& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Q& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    Matrix operator+(const Matrix& o) const {
        check(o);
        Matrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check(o);
        Matrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check(o);
        Matrix r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Q& f = at(i, k);
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    const Q& g = o.at(k, j);
                    if (g != 0) r.at(i, j) += f * g;
                }
            }
        return r;
    }

    Matrix scaled(const Q& c) const {
        Matrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = c * a[i];
        return r;
    }

    std::vector<Q> apply(const std::vector<Q>& v) const {
        if (static_cast<int>(v.size()) != n)
            throw DimensionError("matrix/vector dimension mismatch");
        std::vector<Q> r(n, Q(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

   private:
    void check(const Matrix& o) const {
        if (n != o.n) throw DimensionError("matrix dimension mismatch");
    }
};

inline Matrix commutator(const Matrix& A, const Matrix& B) {
    return A * B - B * A;
}

inline Matrix anticommutator(const Matrix& A, const Matrix& B) {
    return A * B + B * A;
}

struct ZeroReport {
    bool zero = true;
    Q witness = 0;   // largest-magnitude entry when nonzero
    int row = -1, col = -1;

    std::string describe() const {
        if (zero) return "zero";
        return "residual " + to_string(witness) + " at (" + std::to_string(row) +
               "," + std::to_string(col) + ")";
    }
};

inline ZeroReport is_zero(const Matrix& A) {
    ZeroReport r;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            const Q& v = A.at(i, j);
            if (v == 0) continue;
            r.zero = false;
            if (abs(v) > abs(r.witness)) {
                r.witness = v;
                r.row = i;
                r.col = j;
            }
        }
    return r;
}

// A difference operator  -sum_off c_off(x) (T^off - 1) + constant  given by
// shift offsets and point-dependent coefficient functions. The diagonal picks
// up sum_off c_off(x) + constant, each off-diagonal target -c_off(x).
struct Stencil {
    struct Term {
        int dx1 = 0, dx2 = 0;
        std::function<Q(int, int)> coeff;
    };
    std::vector<Term> terms;
    Q constant = 0;
};

inline Matrix materialize(const Stencil& s, const Grid& g) {
    Matrix A(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const auto& p = g.pts[static_cast<size_t>(i)];
        Q diag = s.constant;
        for (const auto& t : s.terms) {
            Q c = t.coeff(p[0], p[1]);
            diag += c;
            int tx1 = p[0] + t.dx1, tx2 = p[1] + t.dx2;
            if (g.contains(tx1, tx2)) {
                A.at(i, g.at(tx1, tx2)) -= c;
            } else if (c != 0) {
                throw ClosureError("nonzero coefficient " + to_string(c) +
                                   " points off-grid at (" + std::to_string(p[0]) +
                                   "," + std::to_string(p[1]) + ") offset (" +
                                   std::to_string(t.dx1) + "," +
                                   std::to_string(t.dx2) + ")");
            }
        }
        A.at(i, i) += diag;
    }
    return A;
}

// Reduced row echelon form in place; returns pivot column list. Columns past
// `cols` (if >= 0) are treated as augmented right-hand sides.
inline std::vector<int> rref(std::vector<std::vector<Q>>& A, int cols = -1) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    int m = cols < 0 ? static_cast<int>(A[0].size()) : cols;
    size_t r0 = 0;
    for (int col = 0; col < m && r0 < A.size(); ++col) {
        size_t pr = r0;
        while (pr < A.size() && A[pr][static_cast<size_t>(col)] == 0) ++pr;
        if (pr == A.size()) continue;
        std::swap(A[r0], A[pr]);
        Q inv = A[r0][static_cast<size_t>(col)];
        for (auto& v : A[r0]) v /= inv;
        for (size_t r = 0; r < A.size(); ++r) {
            if (r == r0) continue;
            Q f = A[r][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (size_t c = 0; c < A[r].size(); ++c) A[r][c] -= f * A[r0][c];
        }
        pivots.push_back(col);
        ++r0;
    }
    return pivots;
}

struct WeightSolution {
    std::vector<Q> omega;  // indexed by grid column
    std::vector<Q> sigma;  // indexed by degree row
};

// Given a square invertible value table V (rows: degrees, cols: grid points),
// finds diagonal omega, sigma with omega[0] = 1 such that
// V . diag(omega) . V^T = diag(1/sigma). Solves the linear system expressing
// orthogonality of distinct rows by Gaussian elimination over the rationals;
// no root extraction anywhere.
inline WeightSolution solve_weight(const Matrix& V) {
    int T = V.n;
    {
        std::vector<std::vector<Q>> rank(static_cast<size_t>(T),
                                         std::vector<Q>(static_cast<size_t>(T)));
        for (int i = 0; i < T; ++i)
            for (int j = 0; j < T; ++j) rank[static_cast<size_t>(i)][static_cast<size_t>(j)] = V.at(i, j);
        if (static_cast<int>(rref(rank).size()) != T)
            throw SingularError("value table is not invertible");
    }
    // Unknowns omega_p; constraints sum_p omega_p V[n][p] V[m][p] = 0, n < m.
    std::vector<std::vector<Q>> sys;
    for (int n = 0; n < T; ++n)
        for (int m = n + 1; m < T; ++m) {
            std::vector<Q> row(static_cast<size_t>(T));
            for (int p = 0; p < T; ++p)
                row[static_cast<size_t>(p)] = V.at(n, p) * V.at(m, p);
            sys.push_back(std::move(row));
        }
    std::vector<int> pivots = rref(sys);
    if (static_cast<int>(pivots.size()) != T - 1)
        throw NonDiagonalizableError(
            "weight nullspace dimension is " +
            std::to_string(T - static_cast<int>(pivots.size())) + ", expected 1");
    // One free column: reconstruct the nullspace vector with free value 1.
    std::vector<bool> is_pivot(static_cast<size_t>(T), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    int freeCol = 0;
    while (is_pivot[static_cast<size_t>(freeCol)]) ++freeCol;
    std::vector<Q> omega(static_cast<size_t>(T), Q(0));
    omega[static_cast<size_t>(freeCol)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
        omega[static_cast<size_t>(pivots[r])] = -sys[r][static_cast<size_t>(freeCol)];
    if (omega[0] == 0)
        throw NonDiagonalizableError("weight vanishes at the grid origin");
    Q norm = omega[0];
    for (auto& w : omega) w /= norm;
    WeightSolution sol;
    sol.omega = omega;
    sol.sigma.resize(static_cast<size_t>(T));
    for (int n = 0; n < T; ++n) {
        Q s = 0;
        for (int p = 0; p < T; ++p)
            s += omega[static_cast<size_t>(p)] * V.at(n, p) * V.at(n, p);
        if (s == 0)
            throw NonDiagonalizableError("zero diagonal norm at row " +
                                         std::to_string(n));
        sol.sigma[static_cast<size_t>(n)] = 1 / s;
    }
    return sol;
}

}  // namespace racah
