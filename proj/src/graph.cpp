#include "anng/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "anng/errors.hpp"
#include "anng/rational_rank.hpp"

namespace anng {

Graph::Graph(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 0) throw DomainError("graph size must be non-negative");
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw DomainError("bad edge endpoints");
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |= 1ULL << (u & 63);
}

void Graph::set_row_prefix(int u, int count) {
    std::uint64_t* row = rows_.data() + static_cast<std::size_t>(u) * words_;
    int full = count / 64;
    std::fill(row, row + full, ~0ULL);
    if (count % 64) row[full] |= (1ULL << (count % 64)) - 1;
}

void Graph::clear_bit(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] &=
        ~(1ULL << (v & 63));
}

long long Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    long long d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

AnnGraph::AnnGraph(PGroup group, Graph g, std::vector<std::vector<long long>> coords,
                   std::vector<long long> exps)
    : group_(std::move(group)), g_(std::move(g)), coords_(std::move(coords)),
      exps_(std::move(exps)) {
    for (int v = 0; v < g_.size(); ++v) index_[coords_[static_cast<std::size_t>(v)]] = v;
}

int AnnGraph::index_of(const std::vector<long long>& coords) const {
    std::vector<long long> reduced = coords;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        reduced[i] %= group_.modulus(i);
        if (reduced[i] < 0) reduced[i] += group_.modulus(i);
    }
    const auto it = index_.find(reduced);
    if (it == index_.end()) throw DomainError("element is not a vertex of this graph");
    return it->second;
}

std::string AnnGraph::vertex_label(int v) const {
    std::ostringstream out;
    const auto& c = coords_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    return out.str();
}

AnnGraph build_graph(const PGroup& g, long long max_vertices) {
    if (g.order() > static_cast<long>(max_vertices))
        throw BudgetError("group of order " + g.order().get_str() +
                          " exceeds the vertex budget " + std::to_string(max_vertices));
    const int n = static_cast<int>(g.order().get_si());
    const long long top = g.max_exponent();

    std::vector<std::vector<long long>> coords;
    coords.reserve(static_cast<std::size_t>(n));
    {
        std::vector<long long> cur(g.rank(), 0);
        for (int c = 0; c < n; ++c) {
            coords.push_back(cur);
            std::size_t i = g.rank();
            while (i > 0) {
                --i;
                if (++cur[i] < g.modulus(i)) break;
                cur[i] = 0;
            }
        }
    }
    std::vector<long long> exps(coords.size());
    for (std::size_t v = 0; v < coords.size(); ++v)
        exps[v] = annihilator_exponent(GroupElement(g, coords[v]));

    std::vector<int> order(coords.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (exps[static_cast<std::size_t>(x)] != exps[static_cast<std::size_t>(y)])
            return exps[static_cast<std::size_t>(x)] > exps[static_cast<std::size_t>(y)];
        return coords[static_cast<std::size_t>(x)] < coords[static_cast<std::size_t>(y)];
    });
    std::vector<std::vector<long long>> sorted_coords(coords.size());
    std::vector<long long> sorted_exps(coords.size());
    for (std::size_t v = 0; v < order.size(); ++v) {
        sorted_coords[v] = std::move(coords[static_cast<std::size_t>(order[v])]);
        sorted_exps[v] = exps[static_cast<std::size_t>(order[v])];
    }

    // With exponents descending, each neighborhood {w : e_v + e_w >= top} is a
    // prefix of the vertex order.
    Graph graph(n);
    for (int v = 0; v < n; ++v) {
        const long long need = top - sorted_exps[static_cast<std::size_t>(v)];
        const auto it = std::upper_bound(sorted_exps.begin(), sorted_exps.end(), need,
                                         std::greater<long long>());
        const int count = static_cast<int>(it - sorted_exps.begin());
        graph.set_row_prefix(v, count);
        if (v < count) graph.clear_bit(v, v);
    }
    return AnnGraph(g, std::move(graph), std::move(sorted_coords), std::move(sorted_exps));
}

Partition degree_partition(const Graph& g) {
    std::vector<Part> degs;
    for (int v = 0; v < g.size(); ++v) {
        const long long d = g.degree(v);
        if (d > 0) degs.push_back(d);
    }
    std::sort(degs.rbegin(), degs.rend());
    return Partition(std::move(degs));
}

namespace {

// Runs the dominating/isolated elimination; returns the removal bits in
// removal order, or nothing if the graph is not threshold.
std::optional<std::vector<std::uint8_t>> eliminate(const Graph& g) {
    const int n = g.size();
    std::vector<long long> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<std::uint64_t> alive(g.words(), 0);
    for (int v = 0; v < n; ++v) alive[static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
    std::vector<char> dead(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n));

    for (int remaining = n; remaining > 0; --remaining) {
        int pick = -1;
        std::uint8_t bit = 0;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!dead[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 0)
                pick = v;
        if (pick < 0) {
            for (int v = 0; v < n && pick < 0; ++v)
                if (!dead[static_cast<std::size_t>(v)] &&
                    deg[static_cast<std::size_t>(v)] == remaining - 1) {
                    pick = v;
                    bit = 1;
                }
        }
        if (pick < 0) return std::nullopt;
        bits.push_back(bit);
        dead[static_cast<std::size_t>(pick)] = 1;
        alive[static_cast<std::size_t>(pick >> 6)] &= ~(1ULL << (pick & 63));
        if (bit) {
            const std::uint64_t* row = g.row(pick);
            for (std::size_t w = 0; w < g.words(); ++w) {
                std::uint64_t live = row[w] & alive[w];
                while (live) {
                    const int v = static_cast<int>(w * 64) + std::countr_zero(live);
                    live &= live - 1;
                    --deg[static_cast<std::size_t>(v)];
                }
            }
        }
    }
    return bits;
}

} // namespace

bool is_threshold(const Graph& g) { return eliminate(g).has_value(); }

CreationSequence creation_sequence(const Graph& g) {
    auto bits = eliminate(g);
    if (!bits) throw DomainError("graph is not threshold");
    std::reverse(bits->begin(), bits->end());
    if (!bits->empty()) bits->front() = 0;
    return CreationSequence{std::move(*bits)};
}

Graph replay_creation(const CreationSequence& seq) {
    const int n = static_cast<int>(seq.code.size());
    Graph g(n);
    for (int v = 0; v < n; ++v)
        if (seq.code[static_cast<std::size_t>(v)]) {
            g.set_row_prefix(v, v);
            for (int u = 0; u < v; ++u)
                g.add_edge(u, v);
        }
    return g;
}

std::vector<long long> Spectrum::support() const {
    std::vector<long long> s = values;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Partition Spectrum::nonzero() const {
    std::vector<Part> parts;
    for (long long v : values)
        if (v != 0) parts.push_back(v);
    return Partition(std::move(parts));
}

Spectrum laplacian_spectrum(const Graph& g) {
    if (!is_threshold(g))
        throw DomainError("combinatorial spectrum requires a threshold graph");
    const Partition conj = conjugate(degree_partition(g));
    std::vector<long long> values(conj.parts().begin(), conj.parts().end());
    values.resize(static_cast<std::size_t>(g.size()), 0);
    return Spectrum{std::move(values)};
}

long long laplacian_multiplicity_exact(const Graph& g, long long lambda, long long max_vertices) {
    if (g.size() > max_vertices)
        throw BudgetError("graph of order " + std::to_string(g.size()) +
                          " exceeds the exact-rank budget " + std::to_string(max_vertices));
    std::vector<SparseRow> rows(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) {
        SparseRow& row = rows[static_cast<std::size_t>(v)];
        const long long diag = g.degree(v) - lambda;
        for (int u = 0; u < g.size(); ++u) {
            if (u == v) {
                if (diag != 0) row.emplace_back(u, mpq_class(static_cast<long>(diag)));
            } else if (g.adjacent(v, u)) {
                row.emplace_back(u, mpq_class(-1));
            }
        }
    }
    return g.size() - rational_rank(std::move(rows), g.size());
}

bool is_graph_hom(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(g1.size()))
        throw DomainError("vertex map must be total");
    for (int v : map)
        if (v < 0 || v >= g2.size()) throw DomainError("vertex map leaves the target graph");
    for (int u = 0; u < g1.size(); ++u)
        for (int v = u + 1; v < g1.size(); ++v)
            if (g1.adjacent(u, v)) {
                const int a = map[static_cast<std::size_t>(u)];
                const int b = map[static_cast<std::size_t>(v)];
                if (a == b || !g2.adjacent(a, b)) return false;
            }
    return true;
}

bool is_graph_hom_reflexive(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(g1.size()))
        throw DomainError("vertex map must be total");
    for (int u = 0; u < g1.size(); ++u)
        for (int v = u + 1; v < g1.size(); ++v)
            if (g1.adjacent(u, v)) {
                const int a = map[static_cast<std::size_t>(u)];
                const int b = map[static_cast<std::size_t>(v)];
                if (a != b && !g2.adjacent(a, b)) return false;
            }
    return true;
}

namespace {

struct HomSearcher {
    const Graph& g1;
    const Graph& g2;
    const std::vector<std::vector<int>>& allowed;
    std::vector<int> order;     // source vertices, singletons first then degree desc
    std::vector<int> map;       // -1 while unassigned
    long long budget;
    const std::function<bool(const std::vector<int>&)>& emit;
    bool stopped = false;

    HomSearcher(const Graph& g1_, const Graph& g2_, const std::vector<std::vector<int>>& allowed_,
                long long budget_, const std::function<bool(const std::vector<int>&)>& emit_)
        : g1(g1_), g2(g2_), allowed(allowed_), budget(budget_), emit(emit_) {
        order.resize(static_cast<std::size_t>(g1.size()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const bool sa = allowed[static_cast<std::size_t>(a)].size() == 1;
            const bool sb = allowed[static_cast<std::size_t>(b)].size() == 1;
            if (sa != sb) return sa;
            return g1.degree(a) > g1.degree(b);
        });
        map.assign(static_cast<std::size_t>(g1.size()), -1);
    }

    bool consistent(int u, int image) const {
        for (int w = 0; w < g1.size(); ++w) {
            const int img = map[static_cast<std::size_t>(w)];
            if (img < 0 || !g1.adjacent(u, w)) continue;
            if (img == image || !g2.adjacent(image, img)) return false;
        }
        return true;
    }

    void run(std::size_t depth) {
        if (stopped) return;
        if (--budget < 0) throw BudgetError("homomorphism search budget exceeded");
        if (depth == order.size()) {
            if (!emit(map)) stopped = true;
            return;
        }
        const int u = order[depth];
        for (int image : allowed[static_cast<std::size_t>(u)]) {
            if (!consistent(u, image)) continue;
            map[static_cast<std::size_t>(u)] = image;
            run(depth + 1);
            map[static_cast<std::size_t>(u)] = -1;
            if (stopped) return;
        }
    }
};

} // namespace

void for_each_graph_hom(const Graph& g1, const Graph& g2,
                        const std::vector<std::vector<int>>& allowed,
                        const std::function<bool(const std::vector<int>&)>& fn,
                        HomSearchOptions opts) {
    if (allowed.size() != static_cast<std::size_t>(g1.size()))
        throw DomainError("candidate lists must cover every source vertex");
    HomSearcher searcher(g1, g2, allowed, opts.node_budget, fn);
    searcher.run(0);
}

std::optional<std::vector<int>> find_graph_hom(const Graph& g1, const Graph& g2,
                                               const std::vector<std::vector<int>>& allowed,
                                               HomSearchOptions opts) {
    std::optional<std::vector<int>> witness;
    for_each_graph_hom(g1, g2, allowed, [&](const std::vector<int>& map) {
        witness = map;
        return false;
    }, opts);
    return witness;
}

std::vector<std::vector<int>> hom_candidates(const AnnGraph& a, const AnnGraph& b,
                                             HomSearchMode mode) {
    std::vector<std::vector<int>> allowed(static_cast<std::size_t>(a.size()));
    for (int u = 0; u < a.size(); ++u) {
        std::vector<int>& list = allowed[static_cast<std::size_t>(u)];
        if (mode != HomSearchMode::General && u == a.zero_vertex()) {
            list.push_back(b.zero_vertex());
            continue;
        }
        for (int w = 0; w < b.size(); ++w) {
            if (mode != HomSearchMode::General && w == b.zero_vertex()) continue;
            if (mode == HomSearchMode::ValuationMonotone && b.exponent(w) < a.exponent(u))
                continue;
            list.push_back(w);
        }
    }
    return allowed;
}

bool graph_degenerates(const AnnGraph& a, const AnnGraph& b, HomSearchMode mode,
                       HomSearchOptions opts) {
    return find_graph_hom(a.graph(), b.graph(), hom_candidates(a, b, mode), opts).has_value();
}

bool edge_degeneration_criterion(const AnnGraph& a, std::pair<int, int> e1, const AnnGraph& b,
                                 std::pair<int, int> e2) {
    if (!a.graph().adjacent(e1.first, e1.second) || !b.graph().adjacent(e2.first, e2.second))
        throw DomainError("edge degeneration requires edges");
    const auto fits = [&](int x, int y) {
        const bool xz = x == a.zero_vertex();
        const bool yz = y == b.zero_vertex();
        return xz == yz && a.exponent(x) <= b.exponent(y);
    };
    return (fits(e1.first, e2.first) && fits(e1.second, e2.second)) ||
           (fits(e1.first, e2.second) && fits(e1.second, e2.first));
}

namespace {

bool edge_hom_exists(const AnnGraph& a, std::pair<int, int> e1, const AnnGraph& b,
                     std::pair<int, int> e2, HomSearchMode mode, HomSearchOptions opts) {
    std::vector<std::vector<int>> allowed = hom_candidates(a, b, mode);
    const auto admissible = [&](int u, int image) {
        const auto& list = allowed[static_cast<std::size_t>(u)];
        return std::find(list.begin(), list.end(), image) != list.end();
    };
    for (const auto& [x, y] : {std::pair{e2.first, e2.second}, std::pair{e2.second, e2.first}}) {
        if (!admissible(e1.first, x) || !admissible(e1.second, y)) continue;
        std::vector<std::vector<int>> pinned = allowed;
        pinned[static_cast<std::size_t>(e1.first)] = {x};
        pinned[static_cast<std::size_t>(e1.second)] = {y};
        if (find_graph_hom(a.graph(), b.graph(), pinned, opts).has_value()) return true;
    }
    return false;
}

} // namespace

bool edge_degenerates(const AnnGraph& a, std::pair<int, int> e1, const AnnGraph& b,
                      std::pair<int, int> e2, HomSearchMode mode, HomSearchOptions opts) {
    if (!a.graph().adjacent(e1.first, e1.second) || !b.graph().adjacent(e2.first, e2.second))
        throw DomainError("edge degeneration requires edges");
    if (mode == HomSearchMode::ValuationMonotone &&
        !edge_degeneration_criterion(a, e1, b, e2))
        return false;
    return edge_hom_exists(a, e1, b, e2, mode, opts);
}

GroupHomGraphReport check_group_homs_as_graph_homs(long long p, long long k, long long l,
                                                   long long max_maps) {
    const PGroup src(p, Partition{k});
    const PGroup dst(p, Partition{l});
    const AnnGraph ga = build_graph(src);
    const AnnGraph gb = build_graph(dst);
    GroupHomGraphReport report;
    for_each_hom(src, dst, [&](const Homomorphism& hom) {
        ++report.hom_count;
        std::vector<int> map(static_cast<std::size_t>(ga.size()));
        for (int v = 0; v < ga.size(); ++v)
            map[static_cast<std::size_t>(v)] = gb.index_of(hom.apply_coords(ga.coords(v)));
        if (is_graph_hom(ga.graph(), gb.graph(), map)) {
            ++report.strict_graph_homs;
        } else if (is_graph_hom_reflexive(ga.graph(), gb.graph(), map)) {
            ++report.collapsing_homs;
        } else {
            ++report.violations;
            report.violating_images.push_back(hom.generator_images()[0][0]);
        }
        return true;
    }, max_maps);
    return report;
}

std::optional<std::vector<int>> find_nonadditive_graph_hom(long long p, long long k, long long l,
                                                           HomSearchOptions opts) {
    const AnnGraph ga = build_graph(PGroup(p, Partition{k}));
    const AnnGraph gb = build_graph(PGroup(p, Partition{l}));
    const auto additive = [&](const std::vector<int>& map) {
        for (int x = 0; x < ga.size(); ++x)
            for (int y = x; y < ga.size(); ++y) {
                const long long sum =
                    (ga.coords(x)[0] + ga.coords(y)[0]) % ga.group().modulus(0);
                const long long img_sum = (gb.coords(map[static_cast<std::size_t>(x)])[0] +
                                           gb.coords(map[static_cast<std::size_t>(y)])[0]) %
                                          gb.group().modulus(0);
                if (gb.coords(map[static_cast<std::size_t>(ga.index_of({sum}))])[0] != img_sum)
                    return false;
            }
        return true;
    };
    std::optional<std::vector<int>> witness;
    for_each_graph_hom(ga.graph(), gb.graph(), hom_candidates(ga, gb, HomSearchMode::General),
                       [&](const std::vector<int>& map) {
                           if (!additive(map)) {
                               witness = map;
                               return false;
                           }
                           return true;
                       }, opts);
    return witness;
}

std::string graph_dot(const AnnGraph& g) {
    std::ostringstream out;
    out << "graph anngraph {\n";
    for (int v = 0; v < g.size(); ++v)
        out << "  " << v << " [label=\"v=" << g.vertex_label(v) << "\", group=" << g.exponent(v)
            << "];\n";
    for (const auto& [u, v] : g.graph().edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_json(const AnnGraph& g) {
    nlohmann::ordered_json j;
    j["group"]["p"] = g.group().p();
    j["group"]["exponents"] = g.group().exponents().parts();
    j["n"] = g.size();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.graph().edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["degree_partition"] = degree_partition(g.graph()).parts();
    j["spectrum"] = laplacian_spectrum(g.graph()).values;
    return j.dump();
}

} // namespace anng
