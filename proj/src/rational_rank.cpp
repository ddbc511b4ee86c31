#include "anng/rational_rank.hpp"

#include <algorithm>
#include <limits>

#include "anng/errors.hpp"

namespace anng {

namespace {

// other -= factor * pivot, merged by column.
SparseRow axpy(const SparseRow& other, const mpq_class& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(other.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < other.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < other.size() && other[i].first < pivot[j].first)) {
            out.push_back(other[i++]);
        } else if (i == other.size() || pivot[j].first < other[i].first) {
            out.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        } else {
            mpq_class v = other[i].second - factor * pivot[j].second;
            if (v != 0) out.emplace_back(other[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

long long rational_rank(std::vector<SparseRow> rows, int ncols) {
    for (const SparseRow& row : rows)
        for (const auto& [c, v] : row)
            if (c < 0 || c >= ncols || v == 0)
                throw DomainError("malformed sparse row");

    std::vector<long long> colcount(static_cast<std::size_t>(ncols), 0);
    for (const SparseRow& row : rows)
        for (const auto& [c, v] : row) ++colcount[static_cast<std::size_t>(c)];

    std::vector<char> active(rows.size(), 1);
    long long rank = 0;
    while (true) {
        // Shortest active row, then the entry in the thinnest column.
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) break;

        const SparseRow& pivot_row = rows[best];
        int pivot_col = pivot_row[0].first;
        long long thinnest = std::numeric_limits<long long>::max();
        mpq_class pivot_val;
        for (const auto& [c, v] : pivot_row)
            if (colcount[static_cast<std::size_t>(c)] < thinnest) {
                thinnest = colcount[static_cast<std::size_t>(c)];
                pivot_col = c;
                pivot_val = v;
            }

        ++rank;
        active[best] = 0;
        for (const auto& [c, v] : pivot_row) --colcount[static_cast<std::size_t>(c)];

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r]) continue;
            const auto it = std::lower_bound(
                rows[r].begin(), rows[r].end(), pivot_col,
                [](const std::pair<int, mpq_class>& e, int c) { return e.first < c; });
            if (it == rows[r].end() || it->first != pivot_col) continue;
            const mpq_class factor = it->second / pivot_val;
            for (const auto& [c, v] : rows[r]) --colcount[static_cast<std::size_t>(c)];
            rows[r] = axpy(rows[r], factor, pivot_row);
            for (const auto& [c, v] : rows[r]) ++colcount[static_cast<std::size_t>(c)];
        }
    }
    return rank;
}

} // namespace anng
