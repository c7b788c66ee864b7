#include "cohsys/critical.hpp"

#include "cohsys/numerics.hpp"
#include "cohsys/parallel.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace cohsys {

void check_window(const AlphaWindow& w) {
    if (w.lo.sign() < 0)
        throw std::invalid_argument("alpha window: lo must be >= 0, got " + w.lo.str());
    if (w.hi && !(w.lo < *w.hi))
        throw std::invalid_argument("alpha window: need lo < hi, got (" + w.lo.str() + ", " +
                                    w.hi->str() + ")");
}

AlphaWindow default_alpha_window(const CSType& T) {
    check_type(T);
    if (T.k >= T.n)
        throw std::invalid_argument(
            "default_alpha_window: no finite bound is available for k >= n; pass an explicit "
            "window upper bound");
    Rational hi(T.d, T.n - T.k);
    if (!(Rational(0) < hi))
        throw std::invalid_argument("default_alpha_window: d/(n-k) = " + hi.str() +
                                    " leaves no positive alpha range");
    return AlphaWindow{Rational(0), hi};
}

const char* to_string(WallStatus s) {
    switch (s) {
        case WallStatus::Virtual: return "virtual";
        case WallStatus::CandidateActual: return "candidate-actual";
        case WallStatus::Pruned: return "pruned";
    }
    return "?";
}

std::optional<Rational> alpha_of_subtype(const CSType& ambient, const SubTriple& sub) {
    check_subtriple(ambient, sub);
    Int den = Int(ambient.n) * sub.t - Int(sub.m) * ambient.k;
    if (den == 0) return std::nullopt;
    Int num = Int(sub.m) * ambient.d - Int(ambient.n) * sub.dprime;
    return Rational(std::move(num), std::move(den));
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

// largest integer < num/den (den > 0): endpoints are excluded, open interval
Int int_below(const Rational& r) {
    return ceil_div(r.num(), r.den()) - 1;
}

// smallest integer > num/den
Int int_above(const Rational& r) {
    return floor_div(r.num(), r.den()) + 1;
}

}  // namespace

std::vector<CriticalValue> enumerate_virtual_criticals(const CSType& ambient,
                                                       const AlphaWindow& window,
                                                       const WallOptions& opts) {
    check_type(ambient);
    check_window(window);
    if (!window.hi) {
        if (ambient.k >= ambient.n)
            throw std::invalid_argument(
                "enumerate_virtual_criticals: k >= n admits no finite enumeration bound; an "
                "explicit finite window upper bound is required");
        throw std::invalid_argument(
            "enumerate_virtual_criticals: the virtual wall set is unbounded over (lo, inf); use "
            "default_alpha_window for the range holding every actual critical value");
    }
    if (ambient.n < 2 || ambient.k < 0) return {};

    const long long n = ambient.n, d = ambient.d, k = ambient.k;
    const Rational lo = window.lo, hi = *window.hi;

    // one job per subtype profile (m,t); jobs are independent and merged in
    // (m,t) order, so the result is identical for any thread count
    struct Hit {
        Rational alpha;
        SubTriple w;
    };
    std::size_t jobs = static_cast<std::size_t>(n - 1) * (k + 1);
    auto per_profile = run_indexed<std::vector<Hit>>(jobs, [&](std::size_t job) {
        long long m = 1 + static_cast<long long>(job) / (k + 1);
        long long t = static_cast<long long>(job) % (k + 1);
        std::vector<Hit> hits;
        Int D = Int(n) * t - Int(m) * k;
        if (D == 0) return hits;
        // alpha(d') = (m*d - n*d')/D is strictly monotone in d', so the open
        // window pins d' to an open rational interval
        Rational bound_at_hi = Rational(Int(m) * d, 1) - hi * Rational(D);
        Rational bound_at_lo = Rational(Int(m) * d, 1) - lo * Rational(D);
        Rational lo_bound = (D > 0 ? bound_at_hi : bound_at_lo) / Rational(n);
        Rational hi_bound = (D > 0 ? bound_at_lo : bound_at_hi) / Rational(n);
        Int first = int_above(lo_bound);
        Int last = int_below(hi_bound);
        if (t >= 1 && opts.require_positive_subdegree && first < 1) first = 1;
        for (Int dp = first; dp <= last; ++dp) {
            long long dprime = dp.convert_to<long long>();
            Rational alpha(Int(m) * d - Int(n) * dprime, D);
            hits.push_back(Hit{std::move(alpha), SubTriple{m, dprime, t}});
        }
        return hits;
    });

    std::map<Rational, std::vector<SubTriple>> by_value;
    for (const auto& hits : per_profile)
        for (const auto& h : hits) by_value[h.alpha].push_back(h.w);

    std::vector<CriticalValue> walls;
    walls.reserve(by_value.size());
    for (auto& [value, wits] : by_value)
        walls.push_back(CriticalValue{value, std::move(wits), WallStatus::Virtual});
    return walls;
}

namespace {

bool witness_survives(const CurveContext& ctx, const CSType& ambient, const SubTriple& w) {
    if (w.m == 1 && !rank1_system_exists(ctx, w.dprime, w.t)) return false;
    if (ambient.n - w.m == 1 &&
        !rank1_system_exists(ctx, ambient.d - w.dprime, ambient.k - w.t))
        return false;
    return true;  // rank >= 2 sides stay unknown, never pruned
}

}  // namespace

std::vector<CriticalValue> prune_by_brill_noether(const CurveContext& ctx, const CSType& ambient,
                                                  std::vector<CriticalValue> walls) {
    check_context(ctx);
    check_type(ambient);
    for (const auto& wall : walls)
        for (const auto& w : wall.witnesses) {
            check_subtriple(ambient, w);
            auto a = alpha_of_subtype(ambient, w);
            if (!a || *a != wall.value)
                throw std::invalid_argument("prune_by_brill_noether: witness does not solve slope "
                                            "equality at its wall");
        }
    if (!ctx.general_curve) return walls;  // no existence theory to prune with

    for (auto& wall : walls) {
        std::vector<SubTriple> kept;
        for (const auto& w : wall.witnesses)
            if (witness_survives(ctx, ambient, w)) kept.push_back(w);
        if (kept.empty()) {
            wall.status = WallStatus::Pruned;  // witnesses kept for the record
        } else {
            wall.status = WallStatus::CandidateActual;
            wall.witnesses = std::move(kept);
        }
    }
    return walls;
}

ChamberPartition chamber_partition(const CSType& ambient, const AlphaWindow& window,
                                   const std::vector<CriticalValue>& walls) {
    check_type(ambient);
    check_window(window);
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (!window.contains(walls[i].value))
            throw std::invalid_argument("chamber_partition: wall " + walls[i].value.str() +
                                        " outside window");
        if (i > 0 && !(walls[i - 1].value < walls[i].value))
            throw std::invalid_argument("chamber_partition: walls not strictly ascending");
    }
    ChamberPartition part{window, walls, {}};
    Rational left = window.lo;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        part.chambers.push_back(Chamber{"G_" + std::to_string(i), left, walls[i].value});
        left = walls[i].value;
    }
    part.chambers.push_back(Chamber{"G_" + std::to_string(walls.size()), left, window.hi});
    return part;
}

MarginSignProfile margin_sign_profile(const CSType& ambient, const SubTriple& sub,
                                      const Rational& wall) {
    check_subtriple(ambient, sub);
    // margin(alpha) = a + b*alpha
    Rational a(Int(sub.m) * ambient.d - Int(ambient.n) * sub.dprime,
               Int(ambient.n) * sub.m);
    Rational b(Int(sub.m) * ambient.k - Int(ambient.n) * sub.t,
               Int(ambient.n) * sub.m);
    if (b.is_zero()) {
        if (!a.is_zero())
            throw std::invalid_argument(
                "margin_sign_profile: margin is alpha-independent and nonzero; the subtype has "
                "no wall");
        return MarginSignProfile{0, 0, 0};
    }
    if (!(a + b * wall).is_zero())
        throw std::invalid_argument("margin_sign_profile: subtype wall " + (-a / b).str() +
                                    " differs from given wall " + wall.str());
    return MarginSignProfile{-b.sign(), 0, b.sign()};
}

}  // namespace cohsys
