#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "combalg/numeric.hpp"

namespace combalg::ffpoly {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lex.
/// This is the canonical term order used for serialization.
struct GradedLexLess {
    bool operator()(const Exponents& x, const Exponents& y) const;
};

/// Sparse multivariate polynomial over F_p. No zero coefficients are stored;
/// all exponent vectors have length nvars.
class MultiPoly {
   public:
    MultiPoly(std::uint32_t p, std::uint32_t nvars);

    static MultiPoly constant(std::uint32_t p, std::uint32_t nvars, std::uint32_t c);
    static MultiPoly variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 stands for the zero polynomial (the -infinity
    /// sentinel of the usual convention).
    int total_degree() const;
    int degree_in(std::uint32_t var) const;

    /// Adds c * x^e, combining with an existing term and dropping zeros.
    void add_term(const Exponents& e, std::uint32_t c);
    std::uint32_t coeff(const Exponents& e) const;

    const std::map<Exponents, std::uint32_t, GradedLexLess>& terms() const { return terms_; }

    std::uint32_t eval(const std::vector<std::uint32_t>& x) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(std::uint32_t c) const;
    bool operator==(const MultiPoly& o) const { return p_ == o.p_ && n_ == o.n_ && terms_ == o.terms_; }

   private:
    std::uint32_t p_;
    std::uint32_t n_;
    std::map<Exponents, std::uint32_t, GradedLexLess> terms_;
};

/// Clamp every exponent to min(e, 1), summing coefficients of collapsing
/// monomials mod p. Agrees with the input on all 0/1 points.
MultiPoly multilinear_reduce(const MultiPoly& f);

/// Finite point set in F_p^n (no duplicates, coordinates reduced mod p).
struct PointSetFq {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<std::vector<std::uint32_t>> points;
};

/// Exact zero count over F_p^n; also asserts the root-count bound
/// count <= deg(f) * p^(n-1) for nonzero f. Guard: p^n <= `guard`.
std::uint64_t count_roots_brute(const MultiPoly& f, std::uint64_t guard = 10'000'000);

/// Number of monomials of total degree <= d in n variables: C(d+n, n).
Int monomial_count(unsigned d, unsigned n);

/// A nonzero polynomial of total degree <= max_degree vanishing on all the
/// points, found from the kernel of the evaluation matrix. Returns nullopt
/// only when the evaluation matrix has full column rank.
std::optional<MultiPoly> vanishing_poly(const PointSetFq& points, unsigned max_degree);

struct KakeyaCheck {
    bool is_kakeya = false;
    /// A projective direction with no full line inside the set, when any.
    std::optional<std::vector<std::uint32_t>> missing_direction;
};

/// True iff every direction (one representative per projective class) has a
/// full line {w + t v} inside the set.
KakeyaCheck is_kakeya(const PointSetFq& a);

/// Definition-literal oracle: scans all q^n - 1 nonzero directions without
/// projective dedup. Test reference for is_kakeya.
KakeyaCheck is_kakeya_literal(const PointSetFq& a);

/// Exact minimum Kakeya size in F_p^n by full subset enumeration; asserts the
/// minimum is >= C(n+p-1, n). Guard: p^n <= 12.
std::size_t kakeya_min_brute(std::uint32_t p, unsigned n);

/// Sum of x^r over F_p.
std::uint32_t power_sum(std::uint32_t p, std::uint64_t r);

/// Exact count of common zeros of the system over F_p^n (everything for the
/// empty system). When the total degree of the system is below n, the count
/// is checked to be divisible by p. Guard: p^n <= `guard`.
std::uint64_t chevalley_warning_count(std::uint32_t p, std::uint32_t n, const std::vector<MultiPoly>& polys,
                                      std::uint64_t guard = 10'000'000);

/// C(a, b) mod p via the base-p digit product.
std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p);

/// a^p == a mod p, and a^(p-1) == 1 for a not divisible by p.
bool fermat_check(std::uint64_t a, std::uint32_t p);

/// Odometer over F_p^n in lexicographic order; returns false after the last
/// tuple.
bool next_tuple(std::vector<std::uint32_t>& x, std::uint32_t p);

/// All exponent vectors of total degree <= d in n variables, graded-lex.
std::vector<Exponents> monomials_up_to(unsigned d, unsigned n);

}  // namespace combalg::ffpoly
