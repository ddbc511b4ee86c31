#ifndef ANNG_PGROUP_HPP
#define ANNG_PGROUP_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "anng/partition.hpp"

namespace anng {

inline constexpr long long kDefaultHomBudget = 1'000'000;

bool is_prime(long long n);

/// Finite abelian p-group given by its exponent partition:
/// direct sum of Z/p^{e_1}Z, ..., Z/p^{e_r}Z with e_1 >= ... >= e_r >= 1.
/// Empty exponents give the trivial group.
class PGroup {
public:
    PGroup(long long p, Partition exponents);

    /// Parses "2^3 + 2 + 2"; every summand must be a power of the same prime.
    static PGroup parse(const std::string& text);

    long long p() const { return p_; }
    const Partition& exponents() const { return exponents_; }
    std::size_t rank() const { return exponents_.size(); }
    mpz_class order() const;
    /// p^{e_i} for the i-th cyclic factor.
    long long modulus(std::size_t i) const { return moduli_[i]; }
    long long max_exponent() const { return exponents_.empty() ? 0 : exponents_[0]; }
    std::string str() const;

    auto operator<=>(const PGroup&) const = default;

private:
    long long p_ = 0;
    Partition exponents_;
    std::vector<long long> moduli_;
};

/// Element of a PGroup as a coordinate vector over the cyclic factors.
class GroupElement {
public:
    GroupElement(PGroup group, std::vector<long long> coords);

    const PGroup& group() const { return group_; }
    const std::vector<long long>& coords() const { return coords_; }
    bool is_zero() const;
    std::string str() const;

    auto operator<=>(const GroupElement&) const = default;

private:
    PGroup group_;
    std::vector<long long> coords_;
};

/// All elements in lexicographic coordinate order; errors past the budget.
std::vector<GroupElement> all_elements(const PGroup& g, long long max_elements = 100000);

/// p-adic valuation of x modulo p^k (the zero residue gets valuation k).
long long residue_valuation(long long x, long long p, long long k);

/// Exponent e with [a:G] = p^e Z: the least e such that p^e G lies in Za.
long long annihilator_exponent(const GroupElement& g);

/// Orbit O_{k,p^i} of the symmetric action on a rank-1 group; i = k is the
/// zero orbit.
struct OrbitId {
    long long valuation = 0; // i
    long long ambient = 0;   // k

    auto operator<=>(const OrbitId&) const = default;
};

OrbitId orbit_of(const GroupElement& g);

/// |O_{k,p^i}| = phi(p^k)/p^i for i < k, and 1 for the zero orbit.
mpz_class orbit_size(long long k, long long i, long long p);

struct Orbit {
    OrbitId id;
    std::vector<long long> elements; // ascending residues
};

/// Orbits of Z/p^kZ sorted by valuation ascending; rank-1 groups only.
std::vector<Orbit> all_orbits(const PGroup& g, long long max_elements = 100000);

/// Nonzero-orbit degeneration between cyclic groups: O_{k,p^r} -> O_{l,p^s}
/// holds iff r <= s and k - r >= l - s.
bool degenerates_cyclic(long long r, long long k, long long s, long long l);

/// Point (r, k), r < k, of the fundamental poset.
struct FundamentalPoint {
    long long r = 0;
    long long k = 1;

    auto operator<=>(const FundamentalPoint&) const = default;
};

/// Order on fundamental points; x <= y means the orbit at y degenerates to
/// the orbit at x (valuation grows downward, co-exponent k - r shrinks).
bool fp_le(const FundamentalPoint& x, const FundamentalPoint& y);

/// Order ideal of the fundamental poset, kept as its generator set.
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::vector<FundamentalPoint> generators);

    const std::vector<FundamentalPoint>& generators() const { return generators_; }
    bool empty() const { return generators_.empty(); }
    bool contains_point(const FundamentalPoint& pt) const;
    /// other is a subset of this ideal.
    bool includes(const OrderIdeal& other) const;
    /// Downward closure within the ambient poset {(r, k) : 0 <= r < k <= max_k}.
    std::vector<FundamentalPoint> members(long long max_k) const;

private:
    std::vector<FundamentalPoint> generators_;
};

/// I(a): ideal generated by the points (v_p(a_i), e_i) of the nonzero
/// coordinates; I(0) is empty.
OrderIdeal ideal_of(const GroupElement& g);

/// a degenerates to b iff I(b) is contained in I(a); groups must share p.
bool degenerates_general(const GroupElement& a, const GroupElement& b);

/// Group homomorphism between PGroups, stored as generator images.
class Homomorphism {
public:
    Homomorphism(PGroup source, PGroup target, std::vector<std::vector<long long>> images);

    const PGroup& source() const { return source_; }
    const PGroup& target() const { return target_; }
    const std::vector<std::vector<long long>>& generator_images() const { return images_; }
    std::vector<long long> apply_coords(const std::vector<long long>& coords) const;
    GroupElement apply(const GroupElement& x) const;

private:
    PGroup source_;
    PGroup target_;
    std::vector<std::vector<long long>> images_; // one coord vector per source generator
};

/// Number of candidate maps enumerate_homs would visit.
mpz_class hom_count(const PGroup& g, const PGroup& h);

/// All homomorphisms g -> h in lexicographic generator-image order.
/// Errors when the candidate count exceeds the budget.
std::vector<Homomorphism> enumerate_homs(const PGroup& g, const PGroup& h,
                                         long long max_maps = kDefaultHomBudget);

/// Streaming variant; fn returns false to stop early.
void for_each_hom(const PGroup& g, const PGroup& h,
                  const std::function<bool(const Homomorphism&)>& fn,
                  long long max_maps = kDefaultHomBudget);

/// Brute-force degeneration oracle: some homomorphism maps a to b.
bool exists_hom_mapping(const GroupElement& a, const GroupElement& b,
                        long long max_maps = kDefaultHomBudget);

} // namespace anng

#endif
