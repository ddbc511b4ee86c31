#ifndef ANNG_LATTICE_HPP
#define ANNG_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "anng/partition.hpp"
#include "anng/pgroup.hpp"

namespace anng {

inline constexpr long long kDefaultShiftedSumBudget = 20;

/// Node of the threshold-eigenvalue lattice: the partition, the rank-1
/// groups realizing it, and the edge count of the realizing graph.
struct LatticeNode {
    Partition partition;
    std::vector<std::pair<long long, long long>> witnesses; // (p, k)
    long long edge_count = 0;

    auto operator<=>(const LatticeNode&) const = default;
};

/// Threshold eigenvalues partition determined by a strict partition: rows
/// lambda_i + i on the diagonal range, completed below the diagonal by the
/// transpose of the piece right of the darkened column.
Partition threshold_partition_from_strict(const StrictPartition& lambda);

/// Finite piece of the lattice of threshold eigenvalue partitions under
/// "fits in". Realized lattices hold the partitions of the graphs of
/// Z/p^kZ with p^k bounded; universal ones hold every partition whose
/// strict partition sums to at most a bound.
class ThresholdLattice {
public:
    static ThresholdLattice build(const std::vector<long long>& primes, long long max_order,
                                  long long max_vertices = 20000);
    static ThresholdLattice build_universal(long long max_sum);

    const std::vector<long long>& primes() const { return primes_; }
    long long bound() const { return bound_; }
    bool universal() const { return universal_; }
    const std::vector<LatticeNode>& nodes() const { return nodes_; }
    /// Cover pairs (lower, upper), lexicographically sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    int bottom() const { return 0; }
    int index_of(const Partition& partition) const;
    int find(const Partition& partition) const; // -1 when absent
    bool le(int a, int b) const;

    /// Saturated chains from the bottom to each node, along cover steps.
    mpz_class count_chains(int node) const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    ThresholdLattice() = default;
    void finish(std::vector<LatticeNode> nodes);

    std::vector<long long> primes_;
    long long bound_ = 0;
    bool universal_ = false;
    std::vector<LatticeNode> nodes_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<mpz_class> chains_;
};

/// Saturated chains from the empty shape to lambda in the lattice of strict
/// partitions, where each cover adds one block.
mpz_class count_chains_shifted_dfs(const StrictPartition& lambda,
                                   long long max_sum = kDefaultShiftedSumBudget);

/// Closed form for the same count:
/// t! / prod(lambda_i!) * prod_{r<s} (lambda_r - lambda_s)/(lambda_r + lambda_s).
mpz_class schur_chain_count(const StrictPartition& lambda);

/// Chain count of the graph with threshold eigenvalues partition pi, through
/// the strict partition under the chosen convention.
mpz_class chain_count_for_graph(const Partition& pi,
                                StrictConvention conv = kDefaultConvention);

/// Length of any saturated chain for a rank-n group chain: the top exponent.
long long rank_function(const std::vector<long long>& exponents, long long p);

struct GroupChain {
    std::vector<LatticeNode> nodes; // one per exponent, ascending
    bool repeated_exponents = false;
};

/// Identifies a rank-n group with the node sequence of its exponents.
GroupChain group_to_chain(const PGroup& g, long long max_vertices = 20000);

struct GfReport {
    struct Row {
        long long q = 0;
        long long lattice_count = 0;
        mpz_class expected; // distinct_part_count(q)
        bool match = false;
    };
    std::vector<Row> rows;
    bool saturating = false;      // universal lattices saturate every level
    long long saturated_up_to = 0;
};

/// Compares the per-edge-count node counts against the coefficients of
/// prod (1 + z^t). Realized lattices may undershoot.
GfReport rank_gf_check(const ThresholdLattice& lattice, long long max_q);

} // namespace anng

#endif
