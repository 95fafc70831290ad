#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combalg/linalg.hpp"

namespace combalg::specgraph {

/// Graph on vertices 0..n-1 with an edge multiset; loops and parallel edges
/// are allowed (the chromatic recursion and the Berge-Sauer input need them).
struct Graph {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;

    void validate() const;
    bool is_simple() const;
    std::vector<unsigned> degrees() const;  // a loop adds 2
    unsigned max_degree() const;
    std::optional<unsigned> regular_degree() const;
    std::uint64_t neighbours_mask(unsigned v) const;  // simple graphs, n <= 64
};

Graph complete(unsigned n);
Graph cycle(unsigned n);
Graph path(unsigned n);
Graph star(unsigned leaves);
Graph petersen();
Graph kneser(unsigned m, unsigned r);
Graph hypercube(unsigned n);
Graph windmill(unsigned blades);
Graph complement(const Graph& g);

linalg::RatMatrix adjacency(const Graph& g);
linalg::RatMatrix incidence(const Graph& g);

struct IncidenceIdentities {
    bool line_graph_side = false;  // B^T B = A_{L(G)} + 2 Id over edges
    bool vertex_side = false;      // B B^T = A_G + Deg(G) over vertices
};
IncidenceIdentities incidence_identities_check(const Graph& g);

linalg::SymSpectrum spectrum(const Graph& g);

/// Spectrum of the Kneser graph K(m, r) by the closed formula, returned as a
/// descending multiset. Requires m >= 2r.
std::vector<double> kneser_spectrum_formula(unsigned m, unsigned r);

/// n * (-lambda_min) / (d - lambda_min) for a d-regular graph.
double hoffman_bound(const Graph& g);

/// Exact independence number by branch and bound; guard n <= 40.
unsigned independence_brute(const Graph& g);

/// Evaluates the Hoffman bound on K(m, r) with exact binomials and checks it
/// equals C(m-1, r-1); returns that value.
Int ekr_via_kneser(unsigned m, unsigned r);

/// Exact max cut over all bipartitions; guard n <= 24.
unsigned maxcut_brute(const Graph& g);

/// n (d - lambda_min) / 4 for a d-regular graph.
double maxcut_spectral_bound(const Graph& g);

struct SchwenkReport {
    double distance_to_minus3 = 0;   // min |lambda + 3| over spec(P)
    std::size_t multiplicity_of_one = 0;
    int intersection_dim_lower = 0;  // 5 + 5 - 9
    bool ok = false;
};
/// Machine-checks the three facts behind the no-cover-of-K10 argument.
SchwenkReport schwenk_obstruction_check();

/// Any two distinct vertices have exactly one common neighbour.
bool friendship_check(const Graph& g);
bool is_windmill(const Graph& g);

struct FriendshipScan {
    unsigned nmax = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t friendship_found = 0;
    bool all_windmills = true;
};
/// Scans every labelled simple graph on up to nmax vertices; guard nmax <= 7.
FriendshipScan friendship_brute_scan(unsigned nmax);

/// Chromatic polynomial coefficients, ascending degree, by
/// deletion-contraction with memoization. Loops give the zero polynomial;
/// parallel edges collapse. Guard: n + |E| <= 30.
std::vector<long long> chromatic_polynomial(const Graph& g);

long long eval_poly(const std::vector<long long>& coeffs, long long x);

/// Exhaustive stable-colouring count (test oracle for the recursion).
long long count_colorings_brute(const Graph& g, unsigned colors);

/// Smallest k with a proper colouring; throws for graphs with loops.
unsigned chromatic_number(const Graph& g);

/// Colours used by the greedy pass in vertex order; at most max degree + 1.
unsigned greedy_coloring_bound(const Graph& g);

std::size_t pair_index(unsigned i, unsigned j, unsigned n);

/// Edge colouring of K_n, one colour id per unordered pair.
struct EdgeColoring {
    unsigned n = 0;
    std::vector<unsigned> colors;  // size C(n,2), row-major pair order

    unsigned color(unsigned i, unsigned j) const { return colors[pair_index(i, j, n)]; }
    unsigned color_count() const;
};

/// The difference colouring of K_{2^t} over F_2^t (colour of u -- v is
/// u xor v), which uses exactly 2^t - 1 colours. Guard t <= 5.
EdgeColoring consistent_coloring(unsigned t);

/// Proper at every vertex, and each 4-subset is either rainbow or carries
/// exactly three colours, one per perfect matching of the K_4.
bool is_consistent(const EdgeColoring& c);

/// Symmetric sign matrix with zero diagonal; support is a simple graph.
struct SignedAdjacency {
    unsigned n = 0;
    std::vector<int> a;  // row-major, entries -1, 0, 1

    int at(unsigned i, unsigned j) const { return a[std::size_t(i) * n + j]; }
    void validate() const;
};

/// The recursively signed hypercube matrix with B^2 = n Id. Guard n <= 10.
SignedAdjacency signed_hypercube(unsigned n);

struct SensitivityReport {
    unsigned n = 0;
    bool square_identity = false;       // B_n^2 = n Id, integer arithmetic
    unsigned min_induced_max_degree = 0;  // over all W with |W| = 2^(n-1)+1
    bool degree_bound_ok = false;       // min >= sqrt(n)
    bool even_weight_independent = false;
};
/// Exhaustive W-scan needs n <= 4; the square identity alone allows n <= 10
/// (scan skipped above 4, reported as vacuously true fields).
SensitivityReport sensitivity_check(unsigned n, bool scan_subsets = true);

struct SignedMaxdegReport {
    double lambda_max = 0;
    unsigned max_degree = 0;
    bool ok = false;  // max_degree >= lambda_max - 1e-6
};
SignedMaxdegReport signed_maxdeg_bound(const SignedAdjacency& b);

struct ComplementSpectrumReport {
    std::vector<double> expected;  // n-d-1 and -1-lambda_i, descending
    std::vector<double> computed;
    bool ok = false;
};
ComplementSpectrumReport complement_spectrum_check(const Graph& g);

/// Backtracking isomorphism test for small graphs (simple graphs only).
bool is_isomorphic(const Graph& g, const Graph& h);

/// Minimum adjacency bitstring over all vertex permutations; n <= 8.
std::uint64_t canonical_form(const Graph& g);

}  // namespace combalg::specgraph
