#include "anng/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "anng/errors.hpp"
#include "anng/graph.hpp"

namespace anng {

Partition threshold_partition_from_strict(const StrictPartition& lambda) {
    if (lambda.empty()) return {};
    const long long t = static_cast<long long>(lambda.size());
    std::vector<Part> parts;
    for (long long i = 0; i < t; ++i)
        parts.push_back(lambda[static_cast<std::size_t>(i)] + i + 1);
    // Right-of-column-(t+1) piece, transposed below the trace square.
    std::vector<Part> right;
    for (long long i = 0; i < t; ++i)
        right.push_back(parts[static_cast<std::size_t>(i)] - (t + 1));
    for (Part r = 1; right[0] >= r; ++r) {
        Part count = 0;
        for (Part v : right)
            if (v >= r) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

void ThresholdLattice::finish(std::vector<LatticeNode> nodes) {
    std::sort(nodes.begin(), nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
        if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
        return a.partition < b.partition;
    });
    nodes_ = std::move(nodes);

    const int n = static_cast<int>(nodes_.size());
    std::vector<std::vector<char>> below(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                fits_in(nodes_[static_cast<std::size_t>(i)].partition,
                        nodes_[static_cast<std::size_t>(j)].partition);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                continue;
            bool cover = true;
            for (int m = 0; cover && m < n; ++m)
                if (m != i && m != j &&
                    below[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] &&
                    below[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])
                    cover = false;
            if (cover) covers_.emplace_back(i, j);
        }
    std::sort(covers_.begin(), covers_.end());

    chains_.assign(static_cast<std::size_t>(n), 0);
    chains_[0] = 1; // the empty chain to the bottom
    for (const auto& [lo, hi] : covers_) chains_[static_cast<std::size_t>(hi)] += chains_[static_cast<std::size_t>(lo)];
}

ThresholdLattice ThresholdLattice::build(const std::vector<long long>& primes,
                                         long long max_order, long long max_vertices) {
    if (primes.empty()) throw DomainError("lattice needs at least one prime");
    std::vector<long long> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("lattice primes must be distinct");
    for (long long p : sorted)
        if (!is_prime(p)) throw DomainError("lattice requires primes, got " + std::to_string(p));

    ThresholdLattice lattice;
    lattice.primes_ = sorted;
    lattice.bound_ = max_order;

    std::vector<LatticeNode> nodes;
    nodes.push_back(LatticeNode{Partition{}, {}, 0});
    std::map<Partition, std::pair<long long, long long>> seen;
    for (long long p : sorted)
        for (long long pk = p, k = 1; pk <= max_order; ++k) {
            const AnnGraph graph = build_graph(PGroup(p, Partition{k}), max_vertices);
            const Partition pi = laplacian_spectrum(graph.graph()).nonzero();
            const auto [it, fresh] = seen.emplace(pi, std::make_pair(p, k));
            if (!fresh)
                throw DomainError("threshold eigenvalues partition " + pi.str() +
                                  " is realized twice; uniqueness is violated");
            nodes.push_back(LatticeNode{pi, {{p, k}}, graph.graph().edge_count()});
            if (pk > max_order / p) break;
            pk *= p;
        }
    lattice.finish(std::move(nodes));
    return lattice;
}

ThresholdLattice ThresholdLattice::build_universal(long long max_sum) {
    if (max_sum < 0) throw DomainError("universal lattice needs a non-negative bound");
    ThresholdLattice lattice;
    lattice.bound_ = max_sum;
    lattice.universal_ = true;
    std::vector<LatticeNode> nodes;
    nodes.push_back(LatticeNode{Partition{}, {}, 0});
    for (long long q = 1; q <= max_sum; ++q)
        for_each_strict_partition(q, [&](const StrictPartition& lambda) {
            nodes.push_back(LatticeNode{threshold_partition_from_strict(lambda), {}, q});
        });
    lattice.finish(std::move(nodes));
    return lattice;
}

int ThresholdLattice::find(const Partition& partition) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].partition == partition) return static_cast<int>(i);
    return -1;
}

int ThresholdLattice::index_of(const Partition& partition) const {
    const int i = find(partition);
    if (i < 0) throw DomainError("partition " + partition.str() + " is not a lattice node");
    return i;
}

bool ThresholdLattice::le(int a, int b) const {
    return fits_in(nodes_[static_cast<std::size_t>(a)].partition,
                   nodes_[static_cast<std::size_t>(b)].partition);
}

mpz_class ThresholdLattice::count_chains(int node) const {
    if (node < 0 || node >= static_cast<int>(nodes_.size()))
        throw DomainError("node index out of range");
    return chains_[static_cast<std::size_t>(node)];
}

std::string ThresholdLattice::to_dot() const {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        out << "  n" << i << " [label=\"";
        if (nodes_[i].partition.empty())
            out << "empty";
        else
            out << nodes_[i].partition.str();
        for (const auto& [p, k] : nodes_[i].witnesses) out << "\\n" << p << '^' << k;
        out << "\"];\n";
    }
    for (const auto& [lo, hi] : covers_) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string ThresholdLattice::to_json() const {
    nlohmann::ordered_json j;
    j["primes"] = primes_;
    j["max_order"] = bound_;
    j["universal"] = universal_;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const LatticeNode& node : nodes_) {
        nlohmann::ordered_json n;
        n["partition"] = node.partition.parts();
        n["witnesses"] = node.witnesses;
        n["q"] = node.edge_count;
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    j["covers"] = covers_;
    return j.dump();
}

namespace {

mpz_class shifted_chains(std::vector<Part>& shape, std::map<std::vector<Part>, mpz_class>& memo) {
    if (shape.empty()) return 1;
    const auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i + 1 < shape.size()) {
            if (shape[i] - 1 <= shape[i + 1]) continue;
            --shape[i];
            total += shifted_chains(shape, memo);
            ++shape[i];
        } else if (shape[i] > 1) {
            --shape[i];
            total += shifted_chains(shape, memo);
            ++shape[i];
        } else {
            shape.pop_back();
            total += shifted_chains(shape, memo);
            shape.push_back(1);
        }
    }
    memo.emplace(shape, total);
    return total;
}

} // namespace

mpz_class count_chains_shifted_dfs(const StrictPartition& lambda, long long max_sum) {
    if (lambda.sum() > max_sum)
        throw BudgetError("strict partition sum " + std::to_string(lambda.sum()) +
                          " exceeds the chain-count budget " + std::to_string(max_sum));
    std::vector<Part> shape = lambda.parts();
    std::map<std::vector<Part>, mpz_class> memo;
    return shifted_chains(shape, memo);
}

mpz_class schur_chain_count(const StrictPartition& lambda) {
    const long long t = lambda.sum();
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(t));
    mpq_class value(numerator);
    for (Part part : lambda.parts()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        value /= mpq_class(f);
    }
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (std::size_t s = r + 1; s < lambda.size(); ++s)
            value *= mpq_class(static_cast<long>(lambda[r] - lambda[s]),
                               static_cast<long>(lambda[r] + lambda[s]));
    value.canonicalize();
    if (value.get_den() != 1)
        throw DomainError("chain-count formula produced a non-integer for " + lambda.str());
    return value.get_num();
}

mpz_class chain_count_for_graph(const Partition& pi, StrictConvention conv) {
    return schur_chain_count(strict_from_threshold(pi, conv));
}

long long rank_function(const std::vector<long long>& exponents, long long p) {
    if (!is_prime(p)) throw DomainError("rank_function: p must be prime");
    if (exponents.empty()) throw DomainError("rank_function: empty exponent chain");
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i)
        if (exponents[i] > exponents[i + 1])
            throw DomainError("rank_function: exponents must be non-decreasing");
    return exponents.back();
}

GroupChain group_to_chain(const PGroup& g, long long max_vertices) {
    std::vector<long long> exps(g.exponents().parts().begin(), g.exponents().parts().end());
    std::sort(exps.begin(), exps.end());
    GroupChain chain;
    chain.repeated_exponents =
        std::adjacent_find(exps.begin(), exps.end()) != exps.end();
    for (long long k : exps) {
        const AnnGraph graph = build_graph(PGroup(g.p(), Partition{k}), max_vertices);
        chain.nodes.push_back(LatticeNode{laplacian_spectrum(graph.graph()).nonzero(),
                                          {{g.p(), k}},
                                          graph.graph().edge_count()});
    }
    return chain;
}

GfReport rank_gf_check(const ThresholdLattice& lattice, long long max_q) {
    GfReport report;
    report.saturating = lattice.universal();
    report.saturated_up_to = lattice.universal() ? std::min(max_q, lattice.bound()) : 0;
    for (long long q = 0; q <= max_q; ++q) {
        GfReport::Row row;
        row.q = q;
        for (const LatticeNode& node : lattice.nodes())
            if (node.edge_count == q) ++row.lattice_count;
        row.expected = distinct_part_count(q);
        row.match = (row.expected == row.lattice_count);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace anng
