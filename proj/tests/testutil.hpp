#pragma once

// Deterministic random data and stream printers shared by the test suites.

#include <cohsys/critical.hpp>
#include <cohsys/rational.hpp>
#include <cohsys/segre.hpp>
#include <cohsys/types.hpp>

#include <ostream>
#include <random>

namespace testutil {

using Rng = std::mt19937_64;

inline long long pick(Rng& g, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g);
}

inline cohsys::Rational pick_rational(Rng& g, long long num_lo, long long num_hi,
                                      long long den_hi) {
    return cohsys::Rational(cohsys::Int(pick(g, num_lo, num_hi)),
                            cohsys::Int(pick(g, 1, den_hi)));
}

}  // namespace testutil

namespace cohsys {

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline std::ostream& operator<<(std::ostream& os, const CSType& T) {
    return os << "(" << T.n << "," << T.d << "," << T.k << ")";
}

inline std::ostream& operator<<(std::ostream& os, const SubTriple& s) {
    return os << "(" << s.m << "," << s.dprime << "," << s.t << ")";
}

inline std::ostream& operator<<(std::ostream& os, const StratumLabel& l) {
    os << "[(" << l.m << "," << l.t << ") s=";
    if (l.s) os << l.s->str(); else os << "inf";
    if (l.witness_dprime) os << " d'=" << *l.witness_dprime;
    return os << "]";
}

inline std::ostream& operator<<(std::ostream& os, const MarginSignProfile& p) {
    return os << "(" << p.below << "," << p.at << "," << p.above << ")";
}

}  // namespace cohsys
