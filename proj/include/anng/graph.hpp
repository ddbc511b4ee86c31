#ifndef ANNG_GRAPH_HPP
#define ANNG_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anng/partition.hpp"
#include "anng/pgroup.hpp"

namespace anng {

inline constexpr long long kDefaultVertexBudget = 20000;
inline constexpr long long kDefaultSearchBudget = 10'000'000;
inline constexpr long long kDefaultRankBudget = 1000;

/// Undirected simple graph on vertices 0..n-1 with a packed adjacency matrix.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1;
    }
    void add_edge(int u, int v);
    /// Marks u adjacent to every vertex below `count` (used by builders whose
    /// vertex order makes neighborhoods prefixes); stays symmetric only if the
    /// caller fills every row consistently.
    void set_row_prefix(int u, int count);
    void clear_bit(int u, int v);

    long long degree(int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    std::size_t words() const { return words_; }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Annihilator graph of a finite abelian p-group: vertices are the group
/// elements in canonical order (annihilator exponent descending, then
/// coordinates ascending; the zero element is vertex 0), and two vertices are
/// adjacent iff their annihilator exponents sum to at least the top exponent.
class AnnGraph {
public:
    const PGroup& group() const { return group_; }
    const Graph& graph() const { return g_; }
    int size() const { return g_.size(); }
    const std::vector<long long>& coords(int v) const { return coords_[static_cast<std::size_t>(v)]; }
    long long exponent(int v) const { return exps_[static_cast<std::size_t>(v)]; }
    int zero_vertex() const { return 0; }
    int index_of(const std::vector<long long>& coords) const;
    std::string vertex_label(int v) const;

    friend AnnGraph build_graph(const PGroup&, long long);

private:
    AnnGraph(PGroup group, Graph g, std::vector<std::vector<long long>> coords,
             std::vector<long long> exps);

    PGroup group_;
    Graph g_;
    std::vector<std::vector<long long>> coords_;
    std::vector<long long> exps_;
    std::map<std::vector<long long>, int> index_;
};

AnnGraph build_graph(const PGroup& g, long long max_vertices = kDefaultVertexBudget);

/// Non-increasing sequence of the nonzero vertex degrees.
Partition degree_partition(const Graph& g);

bool is_threshold(const Graph& g);

/// Binary creation code in addition order; 0 adds an isolated vertex,
/// 1 a dominating one. The first vertex is emitted as 0.
struct CreationSequence {
    std::vector<std::uint8_t> code;

    auto operator<=>(const CreationSequence&) const = default;
};

CreationSequence creation_sequence(const Graph& g);
Graph replay_creation(const CreationSequence& seq);

/// Laplacian eigenvalues, descending, one entry per vertex.
struct Spectrum {
    std::vector<long long> values;

    std::vector<long long> support() const;
    /// The eigenvalues without their zeros, as a partition.
    Partition nonzero() const;
};

/// Spectrum of a threshold graph: the conjugate of its degree sequence padded
/// with zeros. Non-threshold graphs are rejected.
Spectrum laplacian_spectrum(const Graph& g);

/// Multiplicity of lambda as a Laplacian eigenvalue of an arbitrary graph,
/// by exact rational elimination on L - lambda*I.
long long laplacian_multiplicity_exact(const Graph& g, long long lambda,
                                       long long max_vertices = kDefaultRankBudget);

/// Every edge must land on an edge (equal endpoints are a failure).
bool is_graph_hom(const Graph& g1, const Graph& g2, const std::vector<int>& map);

/// Edge endpoints may coincide, but may not land on a distinct non-edge.
bool is_graph_hom_reflexive(const Graph& g1, const Graph& g2, const std::vector<int>& map);

struct HomSearchOptions {
    long long node_budget = kDefaultSearchBudget;
};

/// Backtracking search for a homomorphism g1 -> g2 with per-vertex candidate
/// lists; source vertices are processed by descending degree.
std::optional<std::vector<int>> find_graph_hom(const Graph& g1, const Graph& g2,
                                               const std::vector<std::vector<int>>& allowed,
                                               HomSearchOptions opts = {});

/// Enumerates homomorphisms until fn returns false.
void for_each_graph_hom(const Graph& g1, const Graph& g2,
                        const std::vector<std::vector<int>>& allowed,
                        const std::function<bool(const std::vector<int>&)>& fn,
                        HomSearchOptions opts = {});

/// Constraints for degeneration searches between annihilator graphs.
enum class HomSearchMode {
    General,            // any vertex map
    ZeroPreserving,     // zero maps to zero, nothing else does
    ValuationMonotone,  // zero-preserving and exponents never drop
};

std::vector<std::vector<int>> hom_candidates(const AnnGraph& a, const AnnGraph& b,
                                             HomSearchMode mode);

bool graph_degenerates(const AnnGraph& a, const AnnGraph& b,
                       HomSearchMode mode = HomSearchMode::General,
                       HomSearchOptions opts = {});

/// Edge-to-edge degeneration: some homomorphism maps e1 onto e2 (either
/// orientation). In the valuation-monotone mode the exponent-comparison
/// criterion is used as a sound fast reject before searching.
bool edge_degenerates(const AnnGraph& a, std::pair<int, int> e1, const AnnGraph& b,
                      std::pair<int, int> e2, HomSearchMode mode = HomSearchMode::General,
                      HomSearchOptions opts = {});

/// r <= r' and s <= s' on annihilator exponents, with zero endpoints matched
/// to zero endpoints; decides edge degeneration under the valuation-monotone
/// constraint.
bool edge_degeneration_criterion(const AnnGraph& a, std::pair<int, int> e1, const AnnGraph& b,
                                 std::pair<int, int> e2);

struct GroupHomGraphReport {
    long long hom_count = 0;
    long long strict_graph_homs = 0;  // every edge lands on an edge
    long long collapsing_homs = 0;    // some edge endpoints merge, rest are edges
    long long violations = 0;         // some edge lands on a distinct non-edge
    std::vector<long long> violating_images; // images of 1 for the violations
};

/// Runs every group homomorphism Z/p^k -> Z/p^l through the graph-hom checks
/// on the induced vertex maps.
GroupHomGraphReport check_group_homs_as_graph_homs(long long p, long long k, long long l,
                                                   long long max_maps = kDefaultHomBudget);

/// A vertex map that is a strict graph homomorphism but not additive on the
/// underlying groups, if one exists.
std::optional<std::vector<int>> find_nonadditive_graph_hom(long long p, long long k, long long l,
                                                           HomSearchOptions opts = {});

/// DOT rendering with elements and orbit exponents as labels.
std::string graph_dot(const AnnGraph& g);

/// JSON with group, size, edges, degree partition and spectrum.
std::string graph_json(const AnnGraph& g);

} // namespace anng

#endif
