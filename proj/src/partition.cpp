#include "anng/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "anng/errors.hpp"

namespace anng {

namespace {

std::vector<Part> parse_parts(const std::string& text) {
    std::vector<Part> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw DomainError("empty entry in partition '" + text + "'");
        std::size_t end = token.find_last_not_of(" \t");
        try {
            parts.push_back(std::stoll(token.substr(begin, end - begin + 1)));
        } catch (const std::exception&) {
            throw DomainError("bad integer '" + token + "' in partition '" + text + "'");
        }
    }
    return parts;
}

std::string join_parts(const std::vector<Part>& parts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

} // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Partition Partition::parse(const std::string& text) {
    return Partition(parse_parts(text));
}

long long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::str() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("strict partition parts must be positive");
        if (i && parts_[i - 1] <= parts_[i])
            throw DomainError("strict partition parts must be strictly decreasing");
    }
}

StrictPartition::StrictPartition(std::initializer_list<Part> parts)
    : StrictPartition(std::vector<Part>(parts)) {}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}

long long StrictPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string StrictPartition::str() const { return join_parts(parts_); }

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const Part max = p[0];
    // freq[v] = number of parts equal to v; conj_j = #{parts >= j} by suffix sums.
    std::vector<Part> freq(static_cast<std::size_t>(max) + 1, 0);
    for (Part v : p.parts()) ++freq[static_cast<std::size_t>(v)];
    std::vector<Part> conj(static_cast<std::size_t>(max));
    Part running = 0;
    for (Part j = max; j >= 1; --j) {
        running += freq[static_cast<std::size_t>(j)];
        conj[static_cast<std::size_t>(j - 1)] = running;
    }
    return Partition(std::move(conj));
}

long long trace(const Partition& p) {
    long long t = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] >= static_cast<Part>(i + 1)) ++t;
    return t;
}

bool fits_in(const Partition& mu, const Partition& eta) {
    if (mu.size() > eta.size()) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > eta[i]) return false;
    return true;
}

bool weakly_majorizes(const Partition& b, const Partition& a) {
    const std::size_t len = std::max(b.size(), a.size());
    long long sb = 0, sa = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sb += i < b.size() ? b[i] : 0;
        sa += i < a.size() ? a[i] : 0;
        if (sb < sa) return false;
    }
    return true;
}

bool majorizes(const Partition& b, const Partition& a) {
    return b.sum() == a.sum() && weakly_majorizes(b, a);
}

bool is_threshold_eigen_partition(const Partition& pi, const Partition& pi_deg) {
    if (conjugate(pi_deg) != pi) return false;
    const long long t = trace(pi);
    for (long long i = 0; i < t; ++i)
        if (pi[static_cast<std::size_t>(i)] != pi_deg[static_cast<std::size_t>(i)] + 1)
            return false;
    return true;
}

ShiftedDivision shifted_division(const Partition& pi) {
    const long long t = trace(pi);
    std::vector<Part> above;
    for (long long i = 0; i < t; ++i)
        above.push_back(pi[static_cast<std::size_t>(i)] - i);
    const Partition conj = conjugate(pi);
    std::vector<Part> below;
    for (long long j = 0; j < t; ++j) {
        const Part len = conj[static_cast<std::size_t>(j)] - (j + 1);
        if (len > 0) below.push_back(len);
    }
    return ShiftedDivision{StrictPartition(std::move(above)), Partition(std::move(below))};
}

StrictPartition strict_from_threshold(const Partition& pi, StrictConvention conv) {
    if (pi.empty())
        throw DomainError("strict_from_threshold: empty partition");
    const long long t = trace(pi);
    const Part offset = conv == StrictConvention::MinusIPlus1 ? 1 : 0;
    std::vector<Part> parts;
    for (long long i = 0; i < t; ++i) {
        const Part v = pi[static_cast<std::size_t>(i)] - (i + 1) + offset;
        if (v < 1 || (!parts.empty() && parts.back() <= v))
            throw DomainError("strict_from_threshold: convention yields a non-strict sequence for " + pi.str());
        parts.push_back(v);
    }
    return StrictPartition(std::move(parts));
}

mpz_class distinct_part_count(long long q) {
    if (q < 0) throw DomainError("distinct_part_count: negative q");
    std::vector<mpz_class> coeff(static_cast<std::size_t>(q) + 1);
    coeff[0] = 1;
    for (long long t = 1; t <= q; ++t)
        for (long long j = q; j >= t; --j)
            coeff[static_cast<std::size_t>(j)] += coeff[static_cast<std::size_t>(j - t)];
    return coeff[static_cast<std::size_t>(q)];
}

namespace {

void gen_partitions(long long n, Part max_part, std::vector<Part>& acc,
                    const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(acc));
        return;
    }
    for (Part first = std::min<Part>(max_part, n); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(n - first, first, acc, fn);
        acc.pop_back();
    }
}

void gen_strict(long long n, Part max_part, std::vector<Part>& acc,
                const std::function<void(const StrictPartition&)>& fn) {
    if (n == 0) {
        fn(StrictPartition(acc));
        return;
    }
    for (Part first = std::min<Part>(max_part, n); first >= 1; --first) {
        acc.push_back(first);
        gen_strict(n - first, first - 1, acc, fn);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw DomainError("for_each_partition: negative n");
    std::vector<Part> acc;
    gen_partitions(n, n, acc, fn);
}

std::vector<Partition> all_partitions(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

void for_each_strict_partition(long long n, const std::function<void(const StrictPartition&)>& fn) {
    if (n < 0) throw DomainError("for_each_strict_partition: negative n");
    std::vector<Part> acc;
    gen_strict(n, n, acc, fn);
}

std::vector<StrictPartition> all_strict_partitions(long long n) {
    std::vector<StrictPartition> out;
    for_each_strict_partition(n, [&](const StrictPartition& p) { out.push_back(p); });
    return out;
}

} // namespace anng
