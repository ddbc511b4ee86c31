#include "anng/pgroup.hpp"

#include <algorithm>
#include <sstream>

#include "anng/errors.hpp"

namespace anng {

namespace {

constexpr long long kMaxModulus = 1LL << 62;

long long checked_pow(long long p, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > kMaxModulus / p)
            throw DomainError("cyclic factor p^e exceeds the machine-width bound");
        r *= p;
    }
    return r;
}

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PGroup::PGroup(long long p, Partition exponents)
    : p_(p), exponents_(std::move(exponents)) {
    if (!is_prime(p_))
        throw DomainError("p = " + std::to_string(p_) + " is not prime");
    moduli_.reserve(exponents_.size());
    for (Part e : exponents_.parts())
        moduli_.push_back(checked_pow(p_, e));
}

PGroup PGroup::parse(const std::string& text) {
    std::vector<Part> exps;
    long long p = 0;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '+')) {
        const std::string t = trim(token);
        if (t.empty()) throw DomainError("empty summand in group '" + text + "'");
        const std::size_t caret = t.find('^');
        long long base = 0, exp = 1;
        try {
            base = std::stoll(trim(t.substr(0, caret)));
            if (caret != std::string::npos) exp = std::stoll(trim(t.substr(caret + 1)));
        } catch (const std::exception&) {
            throw DomainError("bad summand '" + t + "' in group '" + text + "'");
        }
        if (p == 0) p = base;
        if (base != p)
            throw DomainError("group '" + text + "' mixes primes; one prime per group");
        if (exp < 1) throw DomainError("exponent must be positive in '" + t + "'");
        exps.push_back(exp);
    }
    if (p == 0) throw DomainError("empty group expression");
    std::sort(exps.rbegin(), exps.rend());
    return PGroup(p, Partition(std::move(exps)));
}

mpz_class PGroup::order() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(exponents_.sum()));
    return r;
}

std::string PGroup::str() const {
    if (exponents_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) out << " + ";
        out << p_ << '^' << exponents_[i];
    }
    return out.str();
}

GroupElement::GroupElement(PGroup group, std::vector<long long> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.rank())
        throw DomainError("element has " + std::to_string(coords_.size()) +
                          " coordinates, group has rank " + std::to_string(group_.rank()));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const long long m = group_.modulus(i);
        coords_[i] %= m;
        if (coords_[i] < 0) coords_[i] += m;
    }
}

bool GroupElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c == 0; });
}

std::string GroupElement::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    return out.str();
}

std::vector<GroupElement> all_elements(const PGroup& g, long long max_elements) {
    if (g.order() > static_cast<long>(max_elements))
        throw BudgetError("group of order " + g.order().get_str() +
                          " exceeds the element budget " + std::to_string(max_elements));
    std::vector<GroupElement> out;
    std::vector<long long> coords(g.rank(), 0);
    while (true) {
        out.emplace_back(g, coords);
        std::size_t i = g.rank();
        while (i > 0) {
            --i;
            if (++coords[i] < g.modulus(i)) break;
            coords[i] = 0;
            if (i == 0) return out;
        }
        if (g.rank() == 0) return out;
    }
}

long long residue_valuation(long long x, long long p, long long k) {
    if (x == 0) return k;
    long long v = 0;
    while (v < k && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long annihilator_exponent(const GroupElement& g) {
    const PGroup& G = g.group();
    const std::size_t r = G.rank();
    if (r == 0) return 0;
    std::vector<long long> val(r), ord(r);
    for (std::size_t i = 0; i < r; ++i) {
        val[i] = residue_valuation(g.coords()[i], G.p(), G.exponents()[i]);
        ord[i] = G.exponents()[i] - val[i];
    }
    // p^e x_j is a multiple of a iff e >= e_j, or the congruences
    // m a_j = p^e (mod p^{e_j}), m a_i = 0 (mod p^{e_i}) have a common m.
    for (long long e = 0; e <= G.max_exponent(); ++e) {
        bool all = true;
        for (std::size_t j = 0; all && j < r; ++j) {
            if (e >= G.exponents()[j]) continue;
            long long max_other = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (i != j) max_other = std::max(max_other, ord[i]);
            all = val[j] <= e && e - val[j] >= max_other;
        }
        if (all) return e;
    }
    return G.max_exponent();
}

OrbitId orbit_of(const GroupElement& g) {
    if (g.group().rank() != 1)
        throw DomainError("orbit_of requires a rank-1 group");
    const long long k = g.group().exponents()[0];
    return OrbitId{residue_valuation(g.coords()[0], g.group().p(), k), k};
}

mpz_class orbit_size(long long k, long long i, long long p) {
    if (!is_prime(p)) throw DomainError("orbit_size: p must be prime");
    if (i < 0 || i > k) throw DomainError("orbit_size requires 0 <= i <= k");
    if (i == k) return 1;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k - i - 1));
    return r * static_cast<long>(p - 1);
}

std::vector<Orbit> all_orbits(const PGroup& g, long long max_elements) {
    if (g.rank() != 1)
        throw DomainError("all_orbits requires a rank-1 group");
    if (g.order() > static_cast<long>(max_elements))
        throw BudgetError("group of order " + g.order().get_str() +
                          " exceeds the element budget " + std::to_string(max_elements));
    const long long k = g.exponents()[0];
    const long long n = g.modulus(0);
    std::vector<Orbit> orbits(static_cast<std::size_t>(k) + 1);
    for (long long i = 0; i <= k; ++i)
        orbits[static_cast<std::size_t>(i)].id = OrbitId{i, k};
    for (long long x = 0; x < n; ++x)
        orbits[static_cast<std::size_t>(residue_valuation(x, g.p(), k))].elements.push_back(x);
    return orbits;
}

bool degenerates_cyclic(long long r, long long k, long long s, long long l) {
    if (r < 0 || s < 0 || r >= k || s >= l)
        throw DomainError("degenerates_cyclic requires 0 <= r < k and 0 <= s < l");
    return r <= s && k - r >= l - s;
}

bool fp_le(const FundamentalPoint& x, const FundamentalPoint& y) {
    return x.r >= y.r && x.k - x.r <= y.k - y.r;
}

OrderIdeal::OrderIdeal(std::vector<FundamentalPoint> generators)
    : generators_(std::move(generators)) {
    for (const FundamentalPoint& g : generators_)
        if (g.r < 0 || g.r >= g.k)
            throw DomainError("fundamental point requires 0 <= r < k");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

bool OrderIdeal::contains_point(const FundamentalPoint& pt) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const FundamentalPoint& g) { return fp_le(pt, g); });
}

bool OrderIdeal::includes(const OrderIdeal& other) const {
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const FundamentalPoint& g) { return contains_point(g); });
}

std::vector<FundamentalPoint> OrderIdeal::members(long long max_k) const {
    std::vector<FundamentalPoint> out;
    for (long long k = 1; k <= max_k; ++k)
        for (long long r = 0; r < k; ++r)
            if (contains_point(FundamentalPoint{r, k})) out.push_back(FundamentalPoint{r, k});
    return out;
}

OrderIdeal ideal_of(const GroupElement& g) {
    std::vector<FundamentalPoint> gens;
    for (std::size_t i = 0; i < g.coords().size(); ++i)
        if (g.coords()[i] != 0)
            gens.push_back(FundamentalPoint{
                residue_valuation(g.coords()[i], g.group().p(), g.group().exponents()[i]),
                g.group().exponents()[i]});
    return OrderIdeal(std::move(gens));
}

bool degenerates_general(const GroupElement& a, const GroupElement& b) {
    if (a.group().p() != b.group().p())
        throw DomainError("degeneration is defined within a single prime");
    return ideal_of(a).includes(ideal_of(b));
}

Homomorphism::Homomorphism(PGroup source, PGroup target,
                           std::vector<std::vector<long long>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.rank())
        throw DomainError("homomorphism needs one image per source generator");
    // The order constraint p^{e_j} h_j = 0 makes the linear extension of the
    // generator images well defined.
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j].size() != target_.rank())
            throw DomainError("generator image has wrong rank");
        for (std::size_t i = 0; i < target_.rank(); ++i) {
            const long long need = target_.exponents()[i] - source_.exponents()[j];
            if (need > 0 &&
                residue_valuation(images_[j][i], target_.p(), target_.exponents()[i]) < need)
                throw DomainError("image order does not divide generator order");
        }
    }
}

std::vector<long long> Homomorphism::apply_coords(const std::vector<long long>& coords) const {
    if (coords.size() != source_.rank())
        throw DomainError("coordinate count does not match the source rank");
    std::vector<long long> out(target_.rank(), 0);
    for (std::size_t i = 0; i < target_.rank(); ++i) {
        const long long m = target_.modulus(i);
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < source_.rank(); ++j) {
            acc += static_cast<unsigned __int128>(coords[j] % m) *
                   static_cast<unsigned __int128>(images_[j][i]);
            acc %= static_cast<unsigned __int128>(m);
        }
        out[i] = static_cast<long long>(acc);
    }
    return out;
}

GroupElement Homomorphism::apply(const GroupElement& x) const {
    if (x.group() != source_)
        throw DomainError("element does not belong to the source group");
    return GroupElement(target_, apply_coords(x.coords()));
}

namespace {

// Elements h of the target with p^e h = 0, in lexicographic coordinate order.
std::vector<std::vector<long long>> images_for_order(const PGroup& h, long long e) {
    std::vector<std::vector<long long>> per_coord(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) {
        long long step = 1;
        for (long long t = 0; t < std::max<long long>(0, h.exponents()[i] - e); ++t)
            step *= h.p();
        for (long long v = 0; v < h.modulus(i); v += step)
            per_coord[i].push_back(v);
    }
    std::vector<std::vector<long long>> out;
    std::vector<long long> coords(h.rank(), 0);
    std::vector<std::size_t> idx(h.rank(), 0);
    while (true) {
        for (std::size_t i = 0; i < h.rank(); ++i) coords[i] = per_coord[i][idx[i]];
        out.push_back(coords);
        std::size_t i = h.rank();
        while (i > 0) {
            --i;
            if (++idx[i] < per_coord[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (h.rank() == 0) return out;
    }
}

} // namespace

mpz_class hom_count(const PGroup& g, const PGroup& h) {
    if (g.p() != h.p())
        throw DomainError("homomorphisms are enumerated within a single prime");
    mpz_class count = 1;
    for (std::size_t j = 0; j < g.rank(); ++j)
        for (std::size_t i = 0; i < h.rank(); ++i) {
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(g.p()),
                          static_cast<unsigned long>(
                              std::min(g.exponents()[j], h.exponents()[i])));
            count *= f;
        }
    return count;
}

void for_each_hom(const PGroup& g, const PGroup& h,
                  const std::function<bool(const Homomorphism&)>& fn, long long max_maps) {
    if (hom_count(g, h) > static_cast<long>(max_maps))
        throw BudgetError("candidate map count " + hom_count(g, h).get_str() +
                          " exceeds the budget " + std::to_string(max_maps));
    std::vector<std::vector<std::vector<long long>>> choices(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j)
        choices[j] = images_for_order(h, g.exponents()[j]);
    std::vector<std::size_t> idx(g.rank(), 0);
    while (true) {
        std::vector<std::vector<long long>> images(g.rank());
        for (std::size_t j = 0; j < g.rank(); ++j) images[j] = choices[j][idx[j]];
        if (!fn(Homomorphism(g, h, std::move(images)))) return;
        std::size_t j = g.rank();
        while (j > 0) {
            --j;
            if (++idx[j] < choices[j].size()) break;
            idx[j] = 0;
            if (j == 0) return;
        }
        if (g.rank() == 0) return;
    }
}

std::vector<Homomorphism> enumerate_homs(const PGroup& g, const PGroup& h, long long max_maps) {
    std::vector<Homomorphism> out;
    for_each_hom(g, h, [&](const Homomorphism& hom) {
        out.push_back(hom);
        return true;
    }, max_maps);
    return out;
}

bool exists_hom_mapping(const GroupElement& a, const GroupElement& b, long long max_maps) {
    if (a.group().p() != b.group().p())
        throw DomainError("degeneration is defined within a single prime");
    bool found = false;
    for_each_hom(a.group(), b.group(), [&](const Homomorphism& hom) {
        if (hom.apply_coords(a.coords()) == b.coords()) {
            found = true;
            return false;
        }
        return true;
    }, max_maps);
    return found;
}

} // namespace anng
