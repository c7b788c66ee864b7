#pragma once

// Index data for coherent systems (E,V) on a smooth projective curve:
// curve context, numerical types (n,d,k), subsystem triples (m,d',t),
// and per-subtype rational bound sequences.

#include "cohsys/rational.hpp"

#include <vector>

namespace cohsys {

struct CurveContext {
    long long genus = 2;
    bool general_curve = true;

    bool operator==(const CurveContext&) const = default;
};

// type of a coherent system: rank n, degree d, number of sections k
struct CSType {
    long long n = 1;
    long long d = 0;
    long long k = 0;

    friend bool operator==(const CSType& a, const CSType& b) {
        return a.n == b.n && a.d == b.d && a.k == b.k;
    }
    friend bool operator!=(const CSType& a, const CSType& b) { return !(a == b); }
};

// numerical type of a proper subsystem: rank m, degree d', sections t
struct SubTriple {
    long long m = 1;
    long long dprime = 0;
    long long t = 0;

    friend bool operator==(const SubTriple& a, const SubTriple& b) {
        return a.m == b.m && a.dprime == b.dprime && a.t == b.t;
    }
    friend bool operator!=(const SubTriple& a, const SubTriple& b) { return !(a == b); }
    // enumeration and serialization order
    friend bool operator<(const SubTriple& a, const SubTriple& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.t != b.t) return a.t < b.t;
        return a.dprime < b.dprime;
    }
};

// throw std::invalid_argument on violation
void check_context(const CurveContext& ctx);              // genus >= 2
void check_type(const CSType& T);                         // n >= 1, k >= 0
void check_subtriple(const CSType& T, const SubTriple& s);  // 0 < m < n, 0 <= t <= k

// quotient type of T by a subsystem of type sub
CSType quotient_type(const CSType& T, const SubTriple& sub);

// rational bounds a_{i,j} indexed by subtype profile (i,j), 0 < i < n, 0 <= j <= k;
// stored dense row-major, exactly (n-1)*(k+1) entries
struct SubtypeSequence {
    long long n = 1;
    long long k = 0;
    std::vector<Rational> entries;

    const Rational& at(long long i, long long j) const;
    Rational& at(long long i, long long j);
};

SubtypeSequence make_subtype_sequence(long long n, long long k, std::vector<Rational> entries);

}  // namespace cohsys
