#include "combalg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace combalg::linalg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rat RatMatrix::trace() const {
    Rat t(0);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

RatMatrix multiply(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("multiply: dimension mismatch");
    RatMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

std::size_t rank_rational(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rat inv = 1 / m.at(rank, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace {

/// Reduce to RREF; returns pivot column per pivot row.
std::vector<std::size_t> rref_fp(FpMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        std::uint32_t inv = mod_inv(m.at(rank, col), m.p);
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = mod_mul(m.at(rank, j), inv, m.p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            std::uint32_t f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = mod_sub(m.at(i, j), mod_mul(f, m.at(rank, j), m.p), m.p);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

std::size_t rank_fp(FpMatrix m) {
    require_prime(m.p, "rank_fp");
    return rref_fp(m).size();
}

std::vector<std::vector<std::uint32_t>> nullspace_fp(FpMatrix m) {
    require_prime(m.p, "nullspace_fp");
    const std::uint32_t p = m.p;
    const std::size_t cols = m.cols;
    std::vector<std::size_t> pivots = rref_fp(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = mod_sub(0, m.at(r, free), p);
        // canonical: first nonzero coordinate scaled to 1
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j] == 0) continue;
            std::uint32_t inv = mod_inv(v[j], p);
            for (std::size_t k = j; k < cols; ++k) v[k] = mod_mul(v[k], inv, p);
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> nullspace_rational(RatMatrix m) {
    const std::size_t cols = m.cols;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rat inv = 1 / m.at(rank, col);
        for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j] == 0) continue;
            Rat inv = 1 / v[j];
            for (std::size_t k = j; k < cols; ++k) v[k] *= inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool linear_independent_rational(const std::vector<std::vector<Rat>>& vectors) {
    if (vectors.empty()) return true;
    const std::size_t len = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != len) throw std::invalid_argument("linear_independent: mixed vector lengths");
    RatMatrix m(vectors.size(), len);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m.at(i, j) = vectors[i][j];
    return rank_rational(std::move(m)) == vectors.size();
}

bool linear_independent_fp(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& vectors) {
    require_prime(p, "linear_independent_fp");
    if (vectors.empty()) return true;
    const std::size_t len = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != len) throw std::invalid_argument("linear_independent: mixed vector lengths");
    FpMatrix m(p, vectors.size(), len);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m.at(i, j) = vectors[i][j] % p;
    return rank_fp(std::move(m)) == vectors.size();
}

std::size_t SymSpectrum::multiplicity(double x, double tol) const {
    std::size_t count = 0;
    for (double v : values)
        if (std::abs(v - x) <= tol) ++count;
    return count;
}

EigenSystem jacobi_eigensystem(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m[i][j]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * m[i][j] * m[i][j];
        if (std::sqrt(off) <= 1e-12 * scale) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = m[p][q];
                if (std::abs(apq) <= 1e-300) continue;
                double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return m[x][x] > m[y][y]; });

    EigenSystem sys;
    sys.values.reserve(n);
    sys.vectors.reserve(n);
    for (std::size_t k : order) {
        sys.values.push_back(m[k][k]);
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
        sys.vectors.push_back(std::move(col));
    }
    return sys;
}

SymSpectrum sym_eigenvalues(const std::vector<std::vector<double>>& m, double sym_tol) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("sym_eigenvalues: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m[i][j] - m[j][i]) > sym_tol)
                throw std::invalid_argument("sym_eigenvalues: matrix is not symmetric");
    EigenSystem sys = jacobi_eigensystem(m);
    return SymSpectrum{n, std::move(sys.values)};
}

std::vector<std::vector<double>> to_double(const RatMatrix& m) {
    std::vector<std::vector<double>> d(m.rows, std::vector<double>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) d[i][j] = m.at(i, j).get_d();
    return d;
}

SymSpectrum sym_eigenvalues(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("sym_eigenvalues: matrix is not symmetric");
    return sym_eigenvalues(to_double(m), 0.0);
}

bool interlacing_check(const std::vector<std::vector<double>>& a, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("interlacing_check: empty index subset");
    const std::size_t n = a.size();
    for (std::size_t k : keep)
        if (k >= n) throw std::invalid_argument("interlacing_check: index out of range");

    SymSpectrum full = sym_eigenvalues(a);
    std::vector<std::vector<double>> sub(keep.size(), std::vector<double>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) sub[i][j] = a[keep[i]][keep[j]];
    SymSpectrum part = sym_eigenvalues(sub);

    const std::size_t r = n - keep.size();
    const double tol = 1e-6;
    for (std::size_t j = 0; j < keep.size(); ++j) {
        double lam_j = full.values[j];
        double lam_jr = full.values[j + r];
        double mu_j = part.values[j];
        if (!(lam_j >= mu_j - tol && mu_j >= lam_jr - tol)) return false;
    }
    return true;
}

RankTraceBound rank_trace_bound(const RatMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("rank_trace_bound: matrix is not symmetric");
    Rat tr(0), tr2(0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        tr += a.at(i, i);
        for (std::size_t j = 0; j < a.cols; ++j) tr2 += a.at(i, j) * a.at(i, j);
    }
    RankTraceBound out;
    out.rank = rank_rational(a);
    if (tr2 == 0) {
        if (out.rank != 0) throw std::invalid_argument("rank_trace_bound: tr(A^2) = 0 for nonzero A");
        out.bound = 0;
        return out;
    }
    out.bound = tr * tr / tr2;
    if (Rat(static_cast<unsigned long>(out.rank)) < out.bound)
        throw std::logic_error("rank_trace_bound: rank below the trace bound");
    return out;
}

double binom_upper_bound(unsigned long n, unsigned long k) {
    if (k == 0) return 1.0;
    // computed in logs so large n does not overflow
    double lg = k + k * std::log(static_cast<double>(n) / static_cast<double>(k));
    return std::exp(lg);
}

}  // namespace combalg::linalg
