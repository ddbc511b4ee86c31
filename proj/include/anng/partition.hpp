#ifndef ANNG_PARTITION_HPP
#define ANNG_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace anng {

using Part = long long;

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    /// Parses "16,8,4,2"; the empty string is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<Part>& parts() const { return parts_; }
    Part operator[](std::size_t i) const { return parts_[i]; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long sum() const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Part> parts_;
};

/// Partition with strictly decreasing parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<Part> parts);
    StrictPartition(std::initializer_list<Part> parts);

    static StrictPartition parse(const std::string& text);

    const std::vector<Part>& parts() const { return parts_; }
    Part operator[](std::size_t i) const { return parts_[i]; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long sum() const;
    std::string str() const;
    Partition as_partition() const { return Partition(parts_); }

    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<Part> parts_;
};

/// Split of a Young diagram at its main diagonal: `above` holds the row
/// lengths counted from the diagonal rightwards (one row per diagonal cell),
/// `below` the column lengths strictly under the diagonal.
struct ShiftedDivision {
    StrictPartition above;
    Partition below;
};

/// Conjugate (transpose of the Young diagram): d*_j = #{i : d_i >= j}.
Partition conjugate(const Partition& p);

/// Length of the main diagonal of the Young diagram: #{i : p_i >= i}.
long long trace(const Partition& p);

/// Componentwise containment of Young diagrams.
bool fits_in(const Partition& mu, const Partition& eta);

/// Prefix-sum dominance after zero-padding to a common length.
bool weakly_majorizes(const Partition& b, const Partition& a);

/// Weak majorization plus equal totals.
bool majorizes(const Partition& b, const Partition& a);

/// True iff pi is the conjugate of the degree partition pi_deg and
/// pi_i = pi_deg_i + 1 on the whole diagonal range.
bool is_threshold_eigen_partition(const Partition& pi, const Partition& pi_deg);

ShiftedDivision shifted_division(const Partition& pi);

/// Convention for extracting the strict partition of a threshold
/// eigenvalues partition: parts pi_i - i, or pi_i - i + 1 (the row lengths
/// of the diagonal-and-right piece).
enum class StrictConvention { MinusI, MinusIPlus1 };

/// Default shipped convention; MinusI is the one whose chain counts agree
/// with the shifted-lattice DFS (see lattice tests).
inline constexpr StrictConvention kDefaultConvention = StrictConvention::MinusI;

StrictPartition strict_from_threshold(const Partition& pi, StrictConvention conv);

/// Number of partitions of q into distinct parts, by expanding
/// prod_{t>=1} (1 + z^t) up to degree q.
mpz_class distinct_part_count(long long q);

/// Calls fn for every partition of n (parts bounded by max_part when given).
void for_each_partition(long long n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> all_partitions(long long n);

void for_each_strict_partition(long long n, const std::function<void(const StrictPartition&)>& fn);
std::vector<StrictPartition> all_strict_partitions(long long n);

} // namespace anng

#endif
