#include "cohsys/types.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cohsys {

void check_context(const CurveContext& ctx) {
    if (ctx.genus < 2)
        throw std::invalid_argument("curve context: genus must be >= 2, got " +
                                    std::to_string(ctx.genus));
}

void check_type(const CSType& T) {
    if (T.n < 1)
        throw std::invalid_argument("type: rank must be >= 1, got " + std::to_string(T.n));
    if (T.k < 0)
        throw std::invalid_argument("type: section count must be >= 0, got " +
                                    std::to_string(T.k));
}

void check_subtriple(const CSType& T, const SubTriple& s) {
    check_type(T);
    if (s.m <= 0 || s.m >= T.n)
        throw std::invalid_argument("subtriple: rank must satisfy 0 < m < n, got m=" +
                                    std::to_string(s.m) + " against n=" + std::to_string(T.n));
    if (s.t < 0 || s.t > T.k)
        throw std::invalid_argument("subtriple: sections must satisfy 0 <= t <= k, got t=" +
                                    std::to_string(s.t) + " against k=" + std::to_string(T.k));
}

CSType quotient_type(const CSType& T, const SubTriple& sub) {
    check_subtriple(T, sub);
    return CSType{T.n - sub.m, T.d - sub.dprime, T.k - sub.t};
}

static std::size_t seq_index(const SubtypeSequence& s, long long i, long long j) {
    if (i <= 0 || i >= s.n || j < 0 || j > s.k)
        throw std::out_of_range("subtype sequence: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside 0 < i < " + std::to_string(s.n) +
                                ", 0 <= j <= " + std::to_string(s.k));
    return static_cast<std::size_t>((i - 1) * (s.k + 1) + j);
}

const Rational& SubtypeSequence::at(long long i, long long j) const {
    return entries[seq_index(*this, i, j)];
}

Rational& SubtypeSequence::at(long long i, long long j) {
    return entries[seq_index(*this, i, j)];
}

SubtypeSequence make_subtype_sequence(long long n, long long k, std::vector<Rational> entries) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("subtype sequence: need n >= 1, k >= 0");
    auto expected = static_cast<std::size_t>((n - 1) * (k + 1));
    if (entries.size() != expected)
        throw std::invalid_argument("subtype sequence: expected " + std::to_string(expected) +
                                    " entries, got " + std::to_string(entries.size()));
    return SubtypeSequence{n, k, std::move(entries)};
}

}  // namespace cohsys
