#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combalg/numeric.hpp"

namespace combalg::linalg {

/// Dense matrix of exact rationals, row-major. Entries are kept canonical
/// (reduced, positive denominator) by mpq_class.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMatrix identity(std::size_t n);
    bool is_symmetric() const;
    Rat trace() const;
};

RatMatrix transpose(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& x, const RatMatrix& y);

/// Matrix over the prime field F_p; entries are residues in [0, p).
struct FpMatrix {
    std::uint32_t p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    FpMatrix() = default;
    FpMatrix(std::uint32_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Exact rank by rational Gaussian elimination. Empty matrix has rank 0.
std::size_t rank_rational(RatMatrix m);

std::size_t rank_fp(FpMatrix m);

/// Basis of { x : Mx = 0 } over F_p. Throws if the modulus is not prime.
/// Basis vectors are canonical: first nonzero coordinate scaled to 1,
/// ordered by free column.
std::vector<std::vector<std::uint32_t>> nullspace_fp(FpMatrix m);

/// Basis of the rational kernel, same canonicalization.
std::vector<std::vector<Rat>> nullspace_rational(RatMatrix m);

bool linear_independent_rational(const std::vector<std::vector<Rat>>& vectors);
bool linear_independent_fp(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& vectors);

/// Eigenvalues of a graph-sized symmetric matrix, sorted descending.
struct SymSpectrum {
    std::size_t dim = 0;
    std::vector<double> values;  // descending

    /// Multiplicity of `x` under the 1e-6 comparison policy.
    std::size_t multiplicity(double x, double tol = 1e-6) const;
};

struct EigenSystem {
    std::vector<double> values;                 // descending
    std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
/// drops below 1e-12 * scale, hard cap 100 sweeps. Matrices in scope are
/// small (n <= ~100) and symmetric, where Jacobi is accurate to ~1e-12.
EigenSystem jacobi_eigensystem(std::vector<std::vector<double>> m);

/// Throws if the input is not symmetric within `sym_tol`.
SymSpectrum sym_eigenvalues(const std::vector<std::vector<double>>& m, double sym_tol = 1e-9);
SymSpectrum sym_eigenvalues(const RatMatrix& m);

std::vector<std::vector<double>> to_double(const RatMatrix& m);

/// True iff the spectrum of the principal submatrix on `keep` interlaces the
/// spectrum of `a`: lambda_j >= mu_j >= lambda_{j+r} within 1e-6.
/// Throws on empty `keep`.
bool interlacing_check(const std::vector<std::vector<double>>& a, const std::vector<std::size_t>& keep);

struct RankTraceBound {
    std::size_t rank = 0;
    Rat bound;  // (tr A)^2 / tr(A^2), exact
};

/// Exact rank plus the trace-squared lower bound; verifies rank >= bound.
/// Throws if A is not symmetric. The zero matrix reports (0, 0).
RankTraceBound rank_trace_bound(const RatMatrix& a);

/// e^k (n/k)^k, an elementary upper bound for C(n, k); defined as 1 at k = 0.
double binom_upper_bound(unsigned long n, unsigned long k);

}  // namespace combalg::linalg
