#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combalg/linalg.hpp"
#include "combalg/numeric.hpp"

namespace combalg::setfam {

/// Family of distinct subsets of [m] (1-indexed elements externally,
/// bit i-1 internally), ground size at most 64.
struct SetFamily {
    unsigned ground = 0;
    std::vector<std::uint64_t> sets;

    /// Throws when a subset leaves the ground set or a duplicate appears.
    void validate() const;
};

enum class Kind {
    oddtown,
    separated,
    weakly_separated,
    lambda_fischer,
    l_fischer_modp,
    l_fischer_int,
    uniform_intersecting,
};

struct FamilyKind {
    Kind tag = Kind::oddtown;
    unsigned lambda = 0;               // lambda_fischer, uniform_intersecting
    std::vector<unsigned> l;           // l_fischer_*
    std::uint32_t p = 0;               // l_fischer_modp
    std::optional<unsigned> uniform_size;  // fixed-size variants of the L kinds

    void validate() const;
};

const char* kind_name(Kind k);

/// Indices into the family; unary violations leave `second` empty,
/// subfamily violations may list several indices per side.
struct Violation {
    std::string reason;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

struct CheckResult {
    bool ok = true;
    std::optional<Violation> witness;
};

/// True iff the family satisfies the kind's defining property; on false the
/// smallest violating pair (by index, then mask order for subfamilies) is
/// reported. The separated / weakly separated checks enumerate subfamily
/// pairs, guarded at |F| <= 16.
CheckResult check_family(const SetFamily& family, const FamilyKind& kind);

/// The extremal bound for the kind on ground size m, as an exact integer.
/// Throws when the bound is undefined for the parameters (for example
/// lambda = 0 Fischer, or 2*lambda > m for the intersecting bound).
Int theorem_bound(const FamilyKind& kind, unsigned m);

/// The weaker corollary bound C(m,|L|) + sum of C(m,i) over i < |L| with
/// i congruent to lambda mod p. Same applicability conditions as the
/// fixed-size mod-p bound.
Int fw_generalisation_bound(unsigned m, const std::vector<unsigned>& l, std::uint32_t p, unsigned lambda);

struct BruteResult {
    std::size_t max_size = 0;
    SetFamily example;
};

/// Exact maximum family size under the kind predicate, by depth-first search
/// with size pruning over all candidate subsets. Guard: m <= 5.
BruteResult max_family_brute(unsigned m, const FamilyKind& kind);

/// m x |F| 0/1 incidence matrix, one column per set.
linalg::RatMatrix incidence_matrix_rational(const SetFamily& family);
linalg::FpMatrix incidence_matrix_fp(const SetFamily& family, std::uint32_t p);

}  // namespace combalg::setfam
