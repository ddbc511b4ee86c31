#ifndef ANNG_RATIONAL_RANK_HPP
#define ANNG_RATIONAL_RANK_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace anng {

/// Row of a sparse matrix: (column, value) with columns strictly increasing
/// and values nonzero.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

/// Rank over the rationals by Gaussian elimination with sparsity-guided
/// pivoting. Consumes the rows.
long long rational_rank(std::vector<SparseRow> rows, int ncols);

} // namespace anng

#endif
