#include "cohsys/segre.hpp"

#include "cohsys/critical.hpp"
#include "cohsys/numerics.hpp"
#include "cohsys/parallel.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cohsys {

Rational segre_value(const Rational& alpha, const CSType& ambient, const SubTriple& sub) {
    check_subtriple(ambient, sub);
    Rational base(Int(sub.m) * ambient.d - Int(ambient.n) * sub.dprime);
    Rational coef(Int(sub.m) * ambient.k - Int(ambient.n) * sub.t);
    return base + alpha * coef;
}

namespace {

void check_profile(const CSType& ambient, long long m, long long t) {
    check_type(ambient);
    if (m <= 0 || m >= ambient.n)
        throw std::invalid_argument("subtype profile: need 0 < m < n, got m=" +
                                    std::to_string(m));
    if (t < 0 || t > ambient.k)
        throw std::invalid_argument("subtype profile: need 0 <= t <= k, got t=" +
                                    std::to_string(t));
}

}  // namespace

Rational segre_upper_bound(const CurveContext& ctx, const CSType& ambient, long long m,
                           long long t, const Rational& alpha) {
    check_context(ctx);
    check_profile(ambient, m, t);
    Rational flat(Int(m) * (ambient.n - m) * (ctx.genus - 1) + (ambient.n - 1));
    Rational coef(Int(m) * ambient.k - Int(ambient.n) * t);
    return flat + alpha * coef;
}

namespace {

// floor/ceil division, b > 0
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// witnesses of alpha as a wall of ambient (positive-subdegree rule applied),
// then filtered by the rank-1 existence test when the curve is general;
// nonempty result means label/stratum queries at this alpha are ill-posed
std::vector<SubTriple> retained_wall_witnesses(const CurveContext& ctx, const CSType& ambient,
                                               const Rational& alpha) {
    std::vector<SubTriple> retained;
    for (long long m = 1; m < ambient.n; ++m)
        for (long long t = 0; t <= ambient.k; ++t) {
            Int D = Int(ambient.n) * t - Int(m) * ambient.k;
            if (D == 0) continue;
            // d' = (m*d - alpha*D)/n must be an integer
            Rational dp = (Rational(Int(m) * ambient.d) - alpha * Rational(D)) /
                          Rational(ambient.n);
            if (!dp.is_integer()) continue;
            long long dprime = dp.num().convert_to<long long>();
            if (t >= 1 && dprime <= 0) continue;
            SubTriple w{m, dprime, t};
            if (ctx.general_curve) {
                if (w.m == 1 && !rank1_system_exists(ctx, w.dprime, w.t)) continue;
                if (ambient.n - w.m == 1 &&
                    !rank1_system_exists(ctx, ambient.d - w.dprime, ambient.k - w.t))
                    continue;
            }
            retained.push_back(w);
        }
    return retained;
}

}  // namespace

std::vector<StratumLabel> enumerate_stratum_labels(const CurveContext& ctx, const CSType& ambient,
                                                   long long m, long long t, const Rational& alpha,
                                                   bool prune) {
    check_context(ctx);
    check_profile(ambient, m, t);
    if (alpha.sign() <= 0)
        throw std::invalid_argument("enumerate_stratum_labels: alpha must be > 0");
    if (!retained_wall_witnesses(ctx, ambient, alpha).empty())
        throw std::invalid_argument("enumerate_stratum_labels: alpha " + alpha.str() +
                                    " is a retained wall, not interior to a chamber");

    const long long n = ambient.n, d = ambient.d, k = ambient.k;
    // s(d') = base(d') + c with base = m*d - n*d' integral and c = alpha*(mk - nt);
    // 0 < s <= bound caps base by the integer H = m(n-m)(g-1) + (n-1)
    Rational c = alpha * Rational(Int(m) * k - Int(n) * t);
    Int H = Int(m) * (n - m) * (ctx.genus - 1) + (n - 1);

    // base > -c  <=>  d' < (m*d + c)/n ; base <= H  <=>  d' >= (m*d - H)/n
    Rational upper = (Rational(Int(m) * d) + c) / Rational(n);
    Int first = ceil_div(Int(m) * d - H, Int(n));
    Int last = ceil_div(upper.num(), upper.den()) - 1;  // largest integer < upper

    std::vector<StratumLabel> labels;
    for (Int dp = last; dp >= first; --dp) {  // descending d' = ascending s
        long long dprime = dp.convert_to<long long>();
        if (prune && ctx.general_curve) {
            if (m == 1 && !rank1_system_exists(ctx, dprime, t)) continue;
            if (n - m == 1 && !rank1_system_exists(ctx, d - dprime, k - t)) continue;
        }
        Rational s = Rational(Int(m) * d - Int(n) * dprime) + c;
        labels.push_back(StratumLabel{m, t, std::move(s), dprime});
    }
    labels.push_back(StratumLabel{m, t, std::nullopt, std::nullopt});  // empty profile
    return labels;
}

TransferVerdict stability_transfer_check(const Rational& alpha, const CSType& ambient,
                                         const SubTriple& sub) {
    check_subtriple(ambient, sub);
    if (alpha.sign() < 0)
        throw std::invalid_argument("stability_transfer_check: alpha must be >= 0");
    const Int& p = alpha.num();
    const Int& q = alpha.den();
    Int U = q * (Int(sub.m) * ambient.d - Int(ambient.n) * sub.dprime) +
            p * (Int(sub.m) * ambient.k - Int(ambient.n) * sub.t);
    TransferVerdict v;
    v.applies = U == 1;
    v.unit_value = std::move(U);
    v.sub = sub;
    v.quotient = quotient_type(ambient, sub);
    v.segre = Rational(1, q);
    return v;
}

ExtensionVerdict extension_stability_check(const Rational& alpha, const CSType& subT,
                                           const CSType& quotT) {
    check_type(subT);
    check_type(quotT);
    if (alpha.sign() < 0)
        throw std::invalid_argument("extension_stability_check: alpha must be >= 0");
    const Int& p = alpha.num();
    const Int& q = alpha.den();
    Int W = q * (Int(subT.n) * quotT.d - Int(quotT.n) * subT.d) +
            p * (Int(subT.n) * quotT.k - Int(quotT.n) * subT.k);
    ExtensionVerdict v;
    v.applies = W == 1;
    v.unit_value = std::move(W);
    v.total = CSType{subT.n + quotT.n, subT.d + quotT.d, subT.k + quotT.k};
    v.segre = Rational(1, q);
    return v;
}

const char* to_string(PieceRule r) {
    switch (r) {
        case PieceRule::Rank1BrillNoether: return "rank1-brill-noether";
        case PieceRule::RecursiveCertificate: return "recursive-certificate";
        case PieceRule::AssumedNonempty: return "assumed-nonempty";
    }
    return "?";
}

namespace {

std::optional<PieceWitness> justify_piece(const CurveContext& ctx, const Rational& alpha,
                                          const CSType& piece, long long depth,
                                          const CertificateOptions& opts) {
    if (piece.n == 1) {
        if (ctx.general_curve && rank1_system_exists(ctx, piece.d, piece.k))
            return PieceWitness{piece, PieceRule::Rank1BrillNoether,
                                brill_noether_number(ctx, piece), nullptr};
    } else if (depth > 0 && piece.d > 0 && piece.k >= 1) {
        if (auto sub = nonemptiness_certificate(ctx, alpha, piece, depth - 1, opts))
            return PieceWitness{piece, PieceRule::RecursiveCertificate, std::nullopt,
                                std::make_shared<SplittingCertificate>(std::move(*sub))};
    }
    if (opts.allow_assumed)
        return PieceWitness{piece, PieceRule::AssumedNonempty, std::nullopt, nullptr};
    return std::nullopt;
}

}  // namespace

std::optional<SplittingCertificate> nonemptiness_certificate(const CurveContext& ctx,
                                                             const Rational& alpha,
                                                             const CSType& target,
                                                             long long depth,
                                                             const CertificateOptions& opts) {
    check_context(ctx);
    check_type(target);
    if (alpha.sign() <= 0)
        throw std::invalid_argument("nonemptiness_certificate: alpha must be > 0");
    if (target.n < 2 || target.k < 1)
        throw std::invalid_argument("nonemptiness_certificate: target must have n >= 2, k >= 1");
    if (target.d <= 0)
        throw std::invalid_argument("nonemptiness_certificate: target degree must be > 0");
    if (depth < 0) throw std::invalid_argument("nonemptiness_certificate: depth must be >= 0");

    const long long n = target.n, d = target.d, k = target.k;
    const long long p = alpha.num().convert_to<long long>();
    const long long q = alpha.den().convert_to<long long>();

    // lexicographic scan over (n1,d1,t1); jobs keyed by (n1,d1) and reduced in
    // index order, so any thread count returns the same first certificate
    std::size_t jobs = static_cast<std::size_t>(n - 1) * (d - 1);
    if (d <= 1) return std::nullopt;  // d1, d2 > 0 leaves no splitting
    auto found = run_indexed<std::optional<SplittingCertificate>>(jobs, [&](std::size_t job) {
        long long n1 = 1 + static_cast<long long>(job) / (d - 1);
        long long d1 = 1 + static_cast<long long>(job) % (d - 1);
        for (long long t1 = 0; t1 <= k; ++t1) {
            CSType T1{n1, d1, t1};
            CSType T2{n - n1, d - d1, k - t1};
            if (diophantine_unit_value(p, q, T1, T2) != 1) continue;
            Int ext = opts.use_c21 ? c21(ctx, T1, T2) : ext_positivity(ctx, T1, T2);
            if (ext <= 0) continue;
            auto left = justify_piece(ctx, alpha, T1, depth, opts);
            if (!left) continue;
            auto right = justify_piece(ctx, alpha, T2, depth, opts);
            if (!right) continue;
            SplittingCertificate cert;
            cert.alpha = alpha;
            cert.node = target;
            cert.left = std::move(*left);
            cert.right = std::move(*right);
            cert.unit_value = 1;
            cert.ext_value = std::move(ext);
            cert.ext_via_c21 = opts.use_c21;
            cert.stratum_segre = Rational(1, q);
            return std::optional<SplittingCertificate>(std::move(cert));
        }
        return std::optional<SplittingCertificate>{};
    });
    for (auto& c : found)
        if (c) return std::move(c);
    return std::nullopt;
}

bool revalidate_certificate(const CurveContext& ctx, const SplittingCertificate& cert) {
    try {
        const CSType& T1 = cert.left.type;
        const CSType& T2 = cert.right.type;
        if (T1.n + T2.n != cert.node.n || T1.d + T2.d != cert.node.d ||
            T1.k + T2.k != cert.node.k)
            return false;
        if (cert.alpha.sign() <= 0 || T1.d <= 0 || T2.d <= 0) return false;
        long long p = cert.alpha.num().convert_to<long long>();
        long long q = cert.alpha.den().convert_to<long long>();
        if (diophantine_unit_value(p, q, T1, T2) != 1 || cert.unit_value != 1) return false;
        Int ext = cert.ext_via_c21 ? c21(ctx, T1, T2) : ext_positivity(ctx, T1, T2);
        if (ext != cert.ext_value || ext <= 0) return false;
        if (cert.stratum_segre != Rational(1, q)) return false;
        for (const PieceWitness* piece : {&cert.left, &cert.right}) {
            switch (piece->rule) {
                case PieceRule::Rank1BrillNoether:
                    if (piece->type.n != 1 || !ctx.general_curve) return false;
                    if (!rank1_system_exists(ctx, piece->type.d, piece->type.k)) return false;
                    if (!piece->beta ||
                        *piece->beta != brill_noether_number(ctx, piece->type))
                        return false;
                    break;
                case PieceRule::RecursiveCertificate:
                    if (!piece->cert || piece->cert->node != piece->type ||
                        piece->cert->alpha != cert.alpha)
                        return false;
                    if (!revalidate_certificate(ctx, *piece->cert)) return false;
                    break;
                case PieceRule::AssumedNonempty:
                    break;  // flagged, nothing to recheck
            }
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<Int> rank1_moduli_dim(const CurveContext& ctx, long long d, long long k) {
    check_context(ctx);
    if (!ctx.general_curve)
        throw std::invalid_argument(
            "rank1_moduli_dim: existence needs a general curve; no theory available otherwise");
    if (k < 0) throw std::invalid_argument("rank1_moduli_dim: k must be >= 0");
    if (!rank1_system_exists(ctx, d, k)) return std::nullopt;
    return brill_noether_number(ctx, CSType{1, d, k});
}

Int stratum_dim_bound(const CurveContext& ctx, const CSType& T1, const CSType& T2,
                      long long dim_g1, long long dim_g2, long long ext2) {
    if (dim_g1 < 0 || dim_g2 < 0)
        throw std::invalid_argument("stratum_dim_bound: moduli dimensions must be >= 0");
    if (ext2 < 0) throw std::invalid_argument("stratum_dim_bound: ext2 must be >= 0");
    return Int(dim_g1) + dim_g2 + c21(ctx, T1, T2) + ext2 - 1;
}

Int classical_stratum_dim_rank2(long long genus, long long s) {
    if (genus < 2) throw std::invalid_argument("classical_stratum_dim_rank2: genus must be >= 2");
    if (s <= 0) throw std::invalid_argument("classical_stratum_dim_rank2: s must be > 0");
    if (s <= genus - 2) return Int(3) * genus + s - 2;
    return Int(4) * genus - 3;  // s >= g-1
}

Int classical_stratum_dim_general(long long genus, long long n, long long m, long long s) {
    if (genus < 2)
        throw std::invalid_argument("classical_stratum_dim_general: genus must be >= 2");
    if (n < 2 || m <= 0 || m >= n)
        throw std::invalid_argument("classical_stratum_dim_general: need 0 < m < n, n >= 2");
    if (s <= 0) throw std::invalid_argument("classical_stratum_dim_general: s must be > 0");
    Int boundary = Int(m) * (n - m) * (genus - 1);
    if (s <= boundary) return (Int(n) * n + Int(m) * m - Int(n) * m) * (genus - 1) + s - 1;
    return Int(n) * n * (genus - 1) + 1;
}

}  // namespace cohsys
