#include "combalg/setfam.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace combalg::setfam {

void SetFamily::validate() const {
    if (ground > 64) throw std::invalid_argument("SetFamily: ground set larger than 64");
    std::uint64_t universe = ground == 64 ? ~0ull : (1ull << ground) - 1;
    std::set<std::uint64_t> seen;
    for (std::uint64_t s : sets) {
        if ((s & ~universe) != 0) throw std::invalid_argument("SetFamily: subset leaves the ground set");
        if (!seen.insert(s).second) throw std::invalid_argument("SetFamily: duplicate subset");
    }
}

void FamilyKind::validate() const {
    switch (tag) {
        case Kind::l_fischer_modp: {
            require_prime(p, "FamilyKind");
            if (l.empty()) throw std::invalid_argument("FamilyKind: L must be nonempty");
            std::set<unsigned> dedup(l.begin(), l.end());
            if (dedup.size() != l.size()) throw std::invalid_argument("FamilyKind: L has repeated elements");
            for (unsigned v : l)
                if (v >= p) throw std::invalid_argument("FamilyKind: L element outside [0, p)");
            break;
        }
        case Kind::l_fischer_int: {
            if (l.empty()) throw std::invalid_argument("FamilyKind: L must be nonempty");
            std::set<unsigned> dedup(l.begin(), l.end());
            if (dedup.size() != l.size()) throw std::invalid_argument("FamilyKind: L has repeated elements");
            break;
        }
        default:
            break;
    }
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::oddtown: return "oddtown";
        case Kind::separated: return "separated";
        case Kind::weakly_separated: return "weakly_separated";
        case Kind::lambda_fischer: return "lambda_fischer";
        case Kind::l_fischer_modp: return "l_fischer_modp";
        case Kind::l_fischer_int: return "l_fischer_int";
        case Kind::uniform_intersecting: return "uniform_intersecting";
    }
    return "?";
}

namespace {

unsigned popcount(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

bool in_list(const std::vector<unsigned>& l, unsigned v) {
    return std::find(l.begin(), l.end(), v) != l.end();
}

CheckResult fail(std::string reason, std::vector<std::size_t> first, std::vector<std::size_t> second = {}) {
    return CheckResult{false, Violation{std::move(reason), std::move(first), std::move(second)}};
}

/// Pairwise kinds: smallest violating index or pair.
CheckResult check_pairwise(const SetFamily& f, const FamilyKind& kind) {
    const auto& s = f.sets;
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned size = popcount(s[i]);
        switch (kind.tag) {
            case Kind::oddtown:
                if (size % 2 == 0) return fail("member has even size", {i});
                break;
            case Kind::l_fischer_modp:
                if (in_list(kind.l, size % kind.p)) return fail("member size mod p lies in L", {i});
                if (kind.uniform_size && size != *kind.uniform_size) return fail("member size differs from the fixed size", {i});
                break;
            case Kind::l_fischer_int:
                if (kind.uniform_size && size != *kind.uniform_size) return fail("member size differs from the fixed size", {i});
                break;
            case Kind::uniform_intersecting:
                if (size != kind.lambda) return fail("member size differs from lambda", {i});
                break;
            default:
                break;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            unsigned meet = popcount(s[i] & s[j]);
            switch (kind.tag) {
                case Kind::oddtown:
                    if (meet % 2 != 0) return fail("pair has odd intersection", {i}, {j});
                    break;
                case Kind::lambda_fischer:
                    if (meet != kind.lambda) return fail("pair intersection differs from lambda", {i}, {j});
                    break;
                case Kind::l_fischer_modp:
                    if (!in_list(kind.l, meet % kind.p)) return fail("pair intersection mod p outside L", {i}, {j});
                    break;
                case Kind::l_fischer_int:
                    if (!in_list(kind.l, meet)) return fail("pair intersection outside L", {i}, {j});
                    break;
                case Kind::uniform_intersecting:
                    if ((s[i] & s[j]) == 0) return fail("disjoint pair", {i}, {j});
                    break;
                default:
                    break;
            }
        }
    }
    return {};
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
    std::vector<std::size_t> idx;
    for (unsigned i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) idx.push_back(i);
    return idx;
}

/// Separated / weakly separated: enumerate ordered pairs of disjoint
/// subfamilies via submask walks over union/intersection tables (3^|F|).
CheckResult check_subfamilies(const SetFamily& f, const FamilyKind& kind) {
    const std::size_t k = f.sets.size();
    if (k > 16)
        throw std::invalid_argument("check_family: subfamily enumeration needs |F| <= 16 (3^|F| pairs)");

    // The separated bound argument needs nonzero incidence vectors; the
    // empty set is rejected as a member (the bound is false without this).
    if (kind.tag == Kind::separated)
        for (std::size_t i = 0; i < k; ++i)
            if (f.sets[i] == 0) return fail("empty set cannot belong to a separated family", {i});

    const std::uint64_t full = k == 0 ? 0 : (1ull << k) - 1;
    std::vector<std::uint64_t> uni(1ull << k, 0), inter(1ull << k, ~0ull);
    for (std::uint64_t m = 1; m <= full && k > 0; ++m) {
        std::uint64_t low = m & (~m + 1);
        unsigned idx = static_cast<unsigned>(std::countr_zero(low));
        uni[m] = uni[m ^ low] | f.sets[idx];
        inter[m] = inter[m ^ low] & f.sets[idx];
    }

    for (std::uint64_t mi = 1; mi <= full && k > 0; ++mi) {
        std::uint64_t rest = full & ~mi;
        // submasks of the complement, visited largest-first; track smallest hit
        std::uint64_t best = 0;
        bool found = false;
        for (std::uint64_t mj = rest;; mj = (mj - 1) & rest) {
            if (mj != 0) {
                bool violating = uni[mi] == uni[mj];
                if (violating && kind.tag == Kind::weakly_separated) violating = inter[mi] == inter[mj];
                if (violating && (!found || mj < best)) {
                    best = mj;
                    found = true;
                }
            }
            if (mj == 0) break;
        }
        if (found) {
            const char* why = kind.tag == Kind::separated ? "two disjoint subfamilies share their union"
                                                          : "two disjoint subfamilies share union and intersection";
            return fail(why, mask_to_indices(mi), mask_to_indices(best));
        }
    }
    return {};
}

}  // namespace

CheckResult check_family(const SetFamily& family, const FamilyKind& kind) {
    family.validate();
    kind.validate();
    if (kind.tag == Kind::separated || kind.tag == Kind::weakly_separated)
        return check_subfamilies(family, kind);
    return check_pairwise(family, kind);
}

Int theorem_bound(const FamilyKind& kind, unsigned m) {
    kind.validate();
    switch (kind.tag) {
        case Kind::oddtown:
        case Kind::separated:
            return Int(m);
        case Kind::weakly_separated:
            return Int(m) + 1;
        case Kind::lambda_fischer:
            if (kind.lambda == 0)
                throw std::invalid_argument("theorem_bound: the Fischer bound needs lambda != 0");
            return Int(m);
        case Kind::l_fischer_modp: {
            if (kind.uniform_size) {
                // fixed-size mod-p bound needs |L| <= lambda < p and lambda mod p outside L
                unsigned lambda = *kind.uniform_size;
                if (in_list(kind.l, lambda % kind.p))
                    throw std::invalid_argument("theorem_bound: fixed size mod p lies in L");
                if (!(kind.l.size() <= lambda && lambda < kind.p))
                    throw std::invalid_argument("theorem_bound: needs |L| <= lambda < p");
                return binomial(m, kind.l.size());
            }
            Int total = 0;
            for (unsigned i = 0; i <= kind.l.size(); ++i) total += binomial(m, i);
            return total;
        }
        case Kind::l_fischer_int: {
            if (kind.uniform_size) {
                // uniform-size integer bound needs L positive and below the size
                unsigned lambda = *kind.uniform_size;
                for (unsigned v : kind.l)
                    if (v == 0 || v >= lambda)
                        throw std::invalid_argument("theorem_bound: needs 0 < l < size for all l in L");
                return binomial(m, kind.l.size());
            }
            Int total = 0;
            for (unsigned i = 0; i <= kind.l.size(); ++i) total += binomial(m, i);
            return total;
        }
        case Kind::uniform_intersecting: {
            if (kind.lambda == 0 || 2 * kind.lambda > m)
                throw std::invalid_argument("theorem_bound: intersecting bound needs 1 <= lambda <= m/2");
            return binomial(m - 1, kind.lambda - 1);
        }
    }
    throw std::invalid_argument("theorem_bound: unknown kind");
}

Int fw_generalisation_bound(unsigned m, const std::vector<unsigned>& l, std::uint32_t p, unsigned lambda) {
    FamilyKind base{Kind::l_fischer_modp, 0, l, p, lambda};
    Int total = theorem_bound(base, m);  // C(m, |L|), validates the conditions
    for (unsigned i = 0; i < l.size(); ++i)
        if (i % p == lambda % p) total += binomial(m, i);
    return total;
}

BruteResult max_family_brute(unsigned m, const FamilyKind& kind) {
    if (m > 5) throw std::invalid_argument("max_family_brute: guard m <= 5 exceeded");
    kind.validate();

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t s = 0; s < (1ull << m); ++s) candidates.push_back(s);

    SetFamily current{m, {}};
    BruteResult best;
    best.example = SetFamily{m, {}};

    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (current.sets.size() > best.max_size) {
            best.max_size = current.sets.size();
            best.example = current;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (current.sets.size() + (candidates.size() - i) <= best.max_size) break;
            current.sets.push_back(candidates[i]);
            if (check_family(current, kind).ok) self(self, i + 1);
            current.sets.pop_back();
        }
    };
    extend(extend, 0);
    return best;
}

linalg::RatMatrix incidence_matrix_rational(const SetFamily& family) {
    family.validate();
    linalg::RatMatrix m(family.ground, family.sets.size());
    for (std::size_t c = 0; c < family.sets.size(); ++c)
        for (unsigned r = 0; r < family.ground; ++r)
            if (family.sets[c] & (1ull << r)) m.at(r, c) = 1;
    return m;
}

linalg::FpMatrix incidence_matrix_fp(const SetFamily& family, std::uint32_t p) {
    family.validate();
    require_prime(p, "incidence_matrix_fp");
    linalg::FpMatrix m(p, family.ground, family.sets.size());
    for (std::size_t c = 0; c < family.sets.size(); ++c)
        for (unsigned r = 0; r < family.ground; ++r)
            if (family.sets[c] & (1ull << r)) m.at(r, c) = 1;
    return m;
}

}  // namespace combalg::setfam
