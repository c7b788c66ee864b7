#include "cohsys/numerics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace cohsys {

Rational alpha_slope(const CSType& T, const Rational& alpha) {
    check_type(T);
    if (alpha.sign() < 0)
        throw std::invalid_argument("alpha_slope: alpha must be >= 0, got " + alpha.str());
    return (Rational(T.d) + alpha * Rational(T.k)) / Rational(T.n);
}

Rational slope_margin(const CSType& ambient, const SubTriple& sub, const Rational& alpha) {
    check_subtriple(ambient, sub);
    return alpha_slope(ambient, alpha) -
           alpha_slope(CSType{sub.m, sub.dprime, sub.t}, alpha);
}

Rational margin_quantum(long long q, long long n, long long m) {
    if (q < 1 || n < 1 || m < 1)
        throw std::invalid_argument("margin_quantum: q, n, m must all be >= 1");
    return Rational(1, Int(q) * n * m);
}

Int brill_noether_number(const CurveContext& ctx, const CSType& T) {
    check_context(ctx);
    check_type(T);
    Int g1 = ctx.genus - 1;
    return Int(T.n) * T.n * g1 + 1 - Int(T.k) * (Int(T.k) - T.d + Int(T.n) * g1);
}

Int c21(const CurveContext& ctx, const CSType& T1, const CSType& T2) {
    check_context(ctx);
    check_type(T1);
    check_type(T2);
    Int g1 = ctx.genus - 1;
    return Int(T1.n) * T2.n * g1 - Int(T1.d) * T2.n + Int(T2.d) * T1.n + Int(T2.k) * T1.d -
           Int(T2.k) * T1.n * g1 - Int(T1.k) * T2.k;
}

Int ext_positivity(const CurveContext& ctx, const CSType& T1, const CSType& T2) {
    check_context(ctx);
    check_type(T1);
    check_type(T2);
    Int g1 = ctx.genus - 1;
    return Int(T1.n) * T2.n * g1 - Int(T1.d) * T2.n + Int(T2.d) * T1.n +
           Int(T2.k) * T1.n * g1 - Int(T1.k) * T2.k;
}

Int diophantine_unit_value(long long p, long long q, const CSType& T1, const CSType& T2) {
    if (q < 1)
        throw std::invalid_argument("diophantine_unit_value: q must be >= 1");
    if (p < 0)
        throw std::invalid_argument("diophantine_unit_value: p must be >= 0");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("diophantine_unit_value: p/q not in lowest terms: " +
                                    std::to_string(p) + "/" + std::to_string(q));
    check_type(T1);
    check_type(T2);
    return Int(q) * (Int(T1.n) * T2.d - Int(T2.n) * T1.d) +
           Int(p) * (Int(T1.n) * T2.k - Int(T2.n) * T1.k);
}

SubtypeSequence cotype_dual_sequence(const SubtypeSequence& a) {
    SubtypeSequence b = make_subtype_sequence(a.n, a.k, a.entries);  // revalidates shape
    for (long long i = 1; i < a.n; ++i)
        for (long long j = 0; j <= a.k; ++j)
            b.at(i, j) = a.at(a.n - i, a.k - j) * Rational(a.n - i, i);
    return b;
}

EgcdResult extended_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0)
        throw std::invalid_argument("extended_gcd: both arguments zero");
    // iterative Euclid on |x|, |y|; sign fixup at the end
    Int a = x < 0 ? Int(-x) : x, b = y < 0 ? Int(-y) : y;
    Int u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        Int quot = a / b;
        Int r = a - quot * b;
        a = std::exchange(b, r);
        Int u2 = u0 - quot * u1;
        Int v2 = v0 - quot * v1;
        u0 = std::exchange(u1, u2);
        v0 = std::exchange(v1, v2);
    }
    if (x < 0) u0 = -u0;
    if (y < 0) v0 = -v0;
    return EgcdResult{std::move(a), std::move(u0), std::move(v0)};
}

bool rank1_system_exists(const CurveContext& ctx, long long d, long long t) {
    check_context(ctx);
    if (t < 0) throw std::invalid_argument("rank1_system_exists: t must be >= 0");
    if (t == 0) return true;
    return d > 0 && brill_noether_number(ctx, CSType{1, d, t}) >= 0;
}

}  // namespace cohsys
