#include "combalg/ffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "combalg/linalg.hpp"

namespace combalg::ffpoly {

bool GradedLexLess::operator()(const Exponents& x, const Exponents& y) const {
    std::uint64_t dx = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
    std::uint64_t dy = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
    if (dx != dy) return dx < dy;
    return x < y;
}

MultiPoly::MultiPoly(std::uint32_t p, std::uint32_t nvars) : p_(p), n_(nvars) {
    require_prime(p, "MultiPoly");
}

MultiPoly MultiPoly::constant(std::uint32_t p, std::uint32_t nvars, std::uint32_t c) {
    MultiPoly f(p, nvars);
    f.add_term(Exponents(nvars, 0), c);
    return f;
}

MultiPoly MultiPoly::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly f(p, nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    f.add_term(e, 1);
    return f;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded-lex keeps the highest total degree last
    const Exponents& top = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(top.begin(), top.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(std::uint32_t var) const {
    if (terms_.empty()) return -1;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return static_cast<int>(d);
}

void MultiPoly::add_term(const Exponents& e, std::uint32_t c) {
    if (e.size() != n_) throw std::invalid_argument("MultiPoly::add_term: wrong exponent arity");
    c %= p_;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second = mod_add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
}

std::uint32_t MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t MultiPoly::eval(const std::vector<std::uint32_t>& x) const {
    if (x.size() != n_) throw std::invalid_argument("MultiPoly::eval: wrong point arity");
    std::uint32_t value = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t m = c;
        for (std::uint32_t i = 0; i < n_; ++i)
            if (e[i] != 0) m = mod_mul(m, mod_pow(x[i] % p_, e[i], p_), p_);
        value = mod_add(value, m, p_);
    }
    return value;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("MultiPoly: mixed modulus or arity");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("MultiPoly: mixed modulus or arity");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, p_ - c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("MultiPoly: mixed modulus or arity");
    MultiPoly r(p_, n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(n_);
            for (std::uint32_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, mod_mul(c1, c2, p_));
        }
    return r;
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
    MultiPoly r(p_, n_);
    c %= p_;
    for (const auto& [e, coef] : terms_) r.add_term(e, mod_mul(coef, c, p_));
    return r;
}

MultiPoly multilinear_reduce(const MultiPoly& f) {
    MultiPoly r(f.modulus(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponents clamped(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) clamped[i] = e[i] > 0 ? 1 : 0;
        r.add_term(clamped, c);
    }
    return r;
}

bool next_tuple(std::vector<std::uint32_t>& x, std::uint32_t p) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < p) return true;
        x[i] = 0;
    }
    return false;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t guard, const char* what) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > guard / base) throw std::invalid_argument(std::string(what) + ": domain exceeds brute-force guard");
        v *= base;
    }
    if (v > guard) throw std::invalid_argument(std::string(what) + ": domain exceeds brute-force guard");
    return v;
}

}  // namespace

std::uint64_t count_roots_brute(const MultiPoly& f, std::uint64_t guard) {
    const std::uint32_t p = f.modulus(), n = f.nvars();
    checked_pow(p, n, guard, "count_roots_brute");
    std::uint64_t zeros = 0;
    std::vector<std::uint32_t> x(n, 0);
    do {
        if (f.eval(x) == 0) ++zeros;
    } while (next_tuple(x, p));

    if (!f.is_zero() && n >= 1) {
        std::uint64_t bound = static_cast<std::uint64_t>(f.total_degree());
        for (std::uint32_t i = 0; i + 1 < n; ++i) bound *= p;
        if (zeros > bound)
            throw std::logic_error("count_roots_brute: root count exceeds deg(f) * p^(n-1)");
    }
    return zeros;
}

Int monomial_count(unsigned d, unsigned n) { return binomial(d + n, n); }

std::vector<Exponents> monomials_up_to(unsigned d, unsigned n) {
    std::vector<Exponents> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Exponents e(n, 0);
    while (true) {
        unsigned total = std::accumulate(e.begin(), e.end(), 0u);
        if (total <= d) out.push_back(e);
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++e[i] <= d) {
                done = false;
                break;
            }
            e[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::optional<MultiPoly> vanishing_poly(const PointSetFq& points, unsigned max_degree) {
    const std::uint32_t p = points.p, n = points.n;
    require_prime(p, "vanishing_poly");
    std::vector<Exponents> monos = monomials_up_to(max_degree, n);

    linalg::FpMatrix m(p, points.points.size(), monos.size());
    for (std::size_t r = 0; r < points.points.size(); ++r) {
        const auto& pt = points.points[r];
        if (pt.size() != n) throw std::invalid_argument("vanishing_poly: wrong point arity");
        for (std::size_t c = 0; c < monos.size(); ++c) {
            std::uint32_t v = 1;
            for (std::uint32_t i = 0; i < n; ++i)
                if (monos[c][i] != 0) v = mod_mul(v, mod_pow(pt[i] % p, monos[c][i], p), p);
            m.at(r, c) = v;
        }
    }
    auto kernel = linalg::nullspace_fp(std::move(m));
    if (kernel.empty()) return std::nullopt;
    MultiPoly f(p, n);
    for (std::size_t c = 0; c < monos.size(); ++c)
        if (kernel[0][c] != 0) f.add_term(monos[c], kernel[0][c]);
    return f;
}

namespace {

bool line_in_set(const std::set<std::vector<std::uint32_t>>& members, const std::vector<std::uint32_t>& w,
                 const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::vector<std::uint32_t> pt(w.size());
    for (std::uint32_t t = 0; t < p; ++t) {
        for (std::size_t i = 0; i < w.size(); ++i) pt[i] = mod_add(w[i], mod_mul(t, v[i], p), p);
        if (members.find(pt) == members.end()) return false;
    }
    return true;
}

KakeyaCheck kakeya_scan(const PointSetFq& a, bool projective_dedup) {
    const std::uint32_t p = a.p, n = a.n;
    require_prime(p, "is_kakeya");
    std::set<std::vector<std::uint32_t>> members(a.points.begin(), a.points.end());

    std::vector<std::uint32_t> v(n, 0);
    while (next_tuple(v, p)) {
        if (projective_dedup) {
            // representative: first nonzero coordinate equals 1
            std::size_t first = 0;
            while (v[first] == 0) ++first;
            if (v[first] != 1) continue;
        }
        bool found = false;
        for (const auto& w : a.points) {
            if (line_in_set(members, w, v, p)) {
                found = true;
                break;
            }
        }
        if (!found) return {false, v};
    }
    return {true, std::nullopt};
}

}  // namespace

KakeyaCheck is_kakeya(const PointSetFq& a) { return kakeya_scan(a, true); }

KakeyaCheck is_kakeya_literal(const PointSetFq& a) { return kakeya_scan(a, false); }

std::size_t kakeya_min_brute(std::uint32_t p, unsigned n) {
    require_prime(p, "kakeya_min_brute");
    std::uint64_t domain = checked_pow(p, n, 12, "kakeya_min_brute");

    std::vector<std::vector<std::uint32_t>> all_points;
    std::vector<std::uint32_t> x(n, 0);
    do {
        all_points.push_back(x);
    } while (next_tuple(x, p));

    std::size_t best = all_points.size();
    for (std::uint64_t mask = 1; mask < (1ull << domain); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= best) continue;
        PointSetFq subset{p, n, {}};
        for (std::uint64_t i = 0; i < domain; ++i)
            if (mask & (1ull << i)) subset.points.push_back(all_points[i]);
        if (is_kakeya(subset).is_kakeya) best = size;
    }

    Int lower = binomial(n + p - 1, n);
    if (Int(static_cast<unsigned long>(best)) < lower)
        throw std::logic_error("kakeya_min_brute: minimum below C(n+p-1, n)");
    return best;
}

std::uint32_t power_sum(std::uint32_t p, std::uint64_t r) {
    require_prime(p, "power_sum");
    if (r == 0) throw std::invalid_argument("power_sum: exponent must be positive");
    std::uint32_t s = 0;
    for (std::uint32_t x = 0; x < p; ++x) s = mod_add(s, mod_pow(x, r, p), p);
    return s;
}

std::uint64_t chevalley_warning_count(std::uint32_t p, std::uint32_t n, const std::vector<MultiPoly>& polys,
                                      std::uint64_t guard) {
    require_prime(p, "chevalley_warning_count");
    for (const auto& f : polys)
        if (f.modulus() != p || f.nvars() != n)
            throw std::invalid_argument("chevalley_warning_count: mixed moduli or arity");
    checked_pow(p, n, guard, "chevalley_warning_count");

    std::uint64_t count = 0;
    std::vector<std::uint32_t> x(n, 0);
    do {
        bool common = true;
        for (const auto& f : polys)
            if (f.eval(x) != 0) {
                common = false;
                break;
            }
        if (common) ++count;
    } while (next_tuple(x, p));

    // zero polynomials impose nothing and do not enter the degree sum
    std::uint64_t degree_sum = 0;
    for (const auto& f : polys)
        if (!f.is_zero()) degree_sum += static_cast<std::uint64_t>(f.total_degree());
    if (degree_sum < n && count % p != 0)
        throw std::logic_error("chevalley_warning_count: count not divisible by p under the degree condition");
    return count;
}

std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    require_prime(p, "lucas_binom");
    std::uint32_t r = 1;
    while (a > 0 || b > 0) {
        std::uint64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        Int digit = binomial(static_cast<unsigned long>(ad), static_cast<unsigned long>(bd));
        r = mod_mul(r, static_cast<std::uint32_t>(mpz_fdiv_ui(digit.get_mpz_t(), p)), p);
        a /= p;
        b /= p;
    }
    return r;
}

bool fermat_check(std::uint64_t a, std::uint32_t p) {
    require_prime(p, "fermat_check");
    std::uint32_t ap = static_cast<std::uint32_t>(a % p);
    if (mod_pow(ap, p, p) != ap) return false;
    if (ap != 0 && mod_pow(ap, p - 1, p) != 1) return false;
    return true;
}

}  // namespace combalg::ffpoly
