#pragma once

// Per-subtype Segre values and bounds, stratum-label enumeration, the
// stability-transfer and extension-stability checkers, recursive
// non-emptiness certificates, and stratum dimension bounds.

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cohsys {

// single-subsystem contribution (m*n)*(mu_alpha(E) - mu_alpha(F)):
// (m*d - n*d') + alpha*(m*k - n*t)
Rational segre_value(const Rational& alpha, const CSType& ambient, const SubTriple& sub);

// m(n-m)(g-1) + (n-1) + alpha*(m*k - n*t); at alpha = 0 this is the classical
// rank-m bound for vector bundles
Rational segre_upper_bound(const CurveContext& ctx, const CSType& ambient, long long m,
                           long long t, const Rational& alpha);

struct StratumLabel {
    long long m = 0;
    long long t = 0;
    std::optional<Rational> s;              // empty = infinity (no subsystem of profile (m,t))
    std::optional<long long> witness_dprime;  // generating d' for finite labels

    bool operator==(const StratumLabel&) const = default;
};

// every finite label s(d') = (m*d - n*d') + alpha*(m*k - n*t) with
// 0 < s <= segre_upper_bound, ascending, infinity last; alpha must lie
// strictly inside a chamber.  prune drops labels whose rank-1 sub or
// quotient type fails the existence test (general curve only).
std::vector<StratumLabel> enumerate_stratum_labels(const CurveContext& ctx, const CSType& ambient,
                                                   long long m, long long t, const Rational& alpha,
                                                   bool prune);

// U = q(m*d - n*d') + p(m*k - n*t); U = 1 makes the subsystem type alpha-stable
// and maximal, the quotient type alpha-stable, and pins the Segre value to 1/q
struct TransferVerdict {
    bool applies = false;
    Int unit_value;     // U
    SubTriple sub;
    CSType quotient;
    Rational segre;     // 1/q, meaningful when applies
};

TransferVerdict stability_transfer_check(const Rational& alpha, const CSType& ambient,
                                         const SubTriple& sub);

// W = q(m*dG - m'*dF) + p(m*t' - m'*t) for sub (m,dF,t), quotient (m',dG,t');
// W = 1 makes every nontrivial extension alpha-stable with Segre value 1/q
struct ExtensionVerdict {
    bool applies = false;
    Int unit_value;     // W
    CSType total;
    Rational segre;     // 1/q, meaningful when applies
};

ExtensionVerdict extension_stability_check(const Rational& alpha, const CSType& subT,
                                           const CSType& quotT);

enum class PieceRule { Rank1BrillNoether, RecursiveCertificate, AssumedNonempty };
const char* to_string(PieceRule r);

struct SplittingCertificate;

struct PieceWitness {
    CSType type;
    PieceRule rule = PieceRule::Rank1BrillNoether;
    std::optional<Int> beta;                            // Rank1BrillNoether
    std::shared_ptr<const SplittingCertificate> cert;   // RecursiveCertificate
};

// witness that the stratum G(alpha; node; n1, t1; 1/q) is non-empty
struct SplittingCertificate {
    Rational alpha;        // p/q > 0, reduced
    CSType node;
    PieceWitness left;     // (n1,d1,t1)
    PieceWitness right;    // (n2,d2,t2)
    Int unit_value;        // recorded, = 1
    Int ext_value;         // recorded, > 0
    bool ext_via_c21 = false;  // which positivity form produced ext_value
    Rational stratum_segre;    // 1/q
};

struct CertificateOptions {
    bool use_c21 = false;        // substitute c21 > 0 for the positivity check
    bool allow_assumed = false;  // permit flagged assumed-nonempty pieces
};

// exhaustive lexicographic search over splittings (n1,d1,t1)+(n2,d2,t2) with
// n1,n2 >= 1, d1,d2 > 0, t1,t2 >= 0; nullopt = unknown (not a non-existence claim)
std::optional<SplittingCertificate> nonemptiness_certificate(const CurveContext& ctx,
                                                             const Rational& alpha,
                                                             const CSType& target,
                                                             long long depth = 2,
                                                             const CertificateOptions& opts = {});

// recompute every recorded check from the certificate's own data
bool revalidate_certificate(const CurveContext& ctx, const SplittingCertificate& cert);

// beta(1,d,k) when the rank-1 existence test passes; nullopt when no such
// system exists on a general curve; refuses for general_curve = false
std::optional<Int> rank1_moduli_dim(const CurveContext& ctx, long long d, long long k);

// dimG1 + dimG2 + c21(T1,T2) + ext2 - 1
Int stratum_dim_bound(const CurveContext& ctx, const CSType& T1, const CSType& T2,
                      long long dim_g1, long long dim_g2, long long ext2);

// rank-2 vector-bundle stratum: 3g+s-2 for s <= g-2, else 4g-3
Int classical_stratum_dim_rank2(long long genus, long long s);

// general form: (n^2+m^2-nm)(g-1)+s-1 for s <= m(n-m)(g-1), else n^2(g-1)+1
Int classical_stratum_dim_general(long long genus, long long n, long long m, long long s);

}  // namespace cohsys
