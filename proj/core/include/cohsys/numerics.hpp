#pragma once

// Closed-form invariants of coherent systems: alpha-slopes and margins, the
// Brill-Noether number, the Ext^1 counting form C21, the extension-positivity
// form, Diophantine unit values, and the subtype/cotype duality transform.

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

// mu_alpha = (d + alpha*k)/n; requires alpha >= 0
Rational alpha_slope(const CSType& T, const Rational& alpha);

// mu_alpha(ambient) - mu_alpha((m,d',t)); positive means sub does not destabilize
Rational slope_margin(const CSType& ambient, const SubTriple& sub, const Rational& alpha);

// minimal possible positive margin 1/(q*n*m) at alpha = p/q
Rational margin_quantum(long long q, long long n, long long m);

// beta(n,d,k) = n^2(g-1) + 1 - k(k - d + n(g-1))
Int brill_noether_number(const CurveContext& ctx, const CSType& T);

// C21 = n1n2(g-1) - d1n2 + d2n1 + k2d1 - k2n1(g-1) - k1k2
Int c21(const CurveContext& ctx, const CSType& T1, const CSType& T2);

// extension-positivity form, kept distinct from c21 on purpose:
// n1n2(g-1) - d1n2 + d2n1 + t2n1(g-1) - t1t2   (t := k fields of T1, T2)
Int ext_positivity(const CurveContext& ctx, const CSType& T1, const CSType& T2);

// q(n1d2 - n2d1) + p(n1t2 - n2t1); rejects p/q not reduced or p < 0, q < 1
Int diophantine_unit_value(long long p, long long q, const CSType& T1, const CSType& T2);

// b_{ij} = a_{n-i,k-j} * (n-i)/i, same (n,k) header
SubtypeSequence cotype_dual_sequence(const SubtypeSequence& a);

struct EgcdResult {
    Int g;  // gcd(x,y) > 0
    Int u;  // u*x + v*y = g
    Int v;
};
EgcdResult extended_gcd(const Int& x, const Int& y);  // rejects (0,0)

// classical rank-1 existence on a general curve: (1,d,t) exists iff
// t = 0, or (d > 0 and beta(1,d,t) >= 0)
bool rank1_system_exists(const CurveContext& ctx, long long d, long long t);

}  // namespace cohsys
