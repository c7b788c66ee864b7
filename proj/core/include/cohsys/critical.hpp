#pragma once

// Virtual critical values (walls) of the stability parameter alpha for a type
// (n,d,k), chamber decomposition of the alpha-range, and rank-1 Brill-Noether
// pruning of walls on general curves.

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohsys {

// open interval (lo, hi); empty hi means +infinity
struct AlphaWindow {
    Rational lo;
    std::optional<Rational> hi;

    bool contains(const Rational& a) const { return lo < a && (!hi || a < *hi); }
    bool operator==(const AlphaWindow&) const = default;
};

void check_window(const AlphaWindow& w);  // lo >= 0, lo < hi

// (0, d/(n-k)) for k < n; the range holding every actual critical value.
// For k >= n no finite enumeration bound is available and the caller must
// choose window.hi explicitly; this helper refuses.
AlphaWindow default_alpha_window(const CSType& T);

enum class WallStatus { Virtual, CandidateActual, Pruned };
const char* to_string(WallStatus s);

struct CriticalValue {
    Rational value;                    // > 0
    std::vector<SubTriple> witnesses;  // sorted by (m, t, dprime)
    WallStatus status = WallStatus::Virtual;

    bool operator==(const CriticalValue&) const = default;
};

struct WallOptions {
    // a subsheaf carrying a nonzero section has positive degree, so witnesses
    // with t >= 1 and d' <= 0 are dropped by default; turn off to audit
    bool require_positive_subdegree = true;
};

// unique alpha with mu_alpha(ambient) = mu_alpha(m,d',t) when n*t != m*k;
// nullopt for alpha-independent (proportional-section) subtypes
std::optional<Rational> alpha_of_subtype(const CSType& ambient, const SubTriple& sub);

// all walls strictly inside the window, ascending, each with its complete
// witness list; requires finite window.hi (the virtual wall set over (0,inf)
// is infinite for every k >= 1)
std::vector<CriticalValue> enumerate_virtual_criticals(const CSType& ambient,
                                                       const AlphaWindow& window,
                                                       const WallOptions& opts = {});

// witness kept iff each rank-1 side (sub and quotient) passes the classical
// existence test; rank >= 2 sides are never pruned.  Walls losing every
// witness keep them for the record but are flagged Pruned; the rest become
// CandidateActual with failing witnesses removed.  No-op unless
// ctx.general_curve.
std::vector<CriticalValue> prune_by_brill_noether(const CurveContext& ctx, const CSType& ambient,
                                                  std::vector<CriticalValue> walls);

struct Chamber {
    std::string label;  // "G_0", "G_1", ...
    Rational lo;
    std::optional<Rational> hi;

    bool operator==(const Chamber&) const = default;
};

struct ChamberPartition {
    AlphaWindow window;
    std::vector<CriticalValue> walls;
    std::vector<Chamber> chambers;  // exactly walls.size() + 1 open intervals

    bool operator==(const ChamberPartition&) const = default;
};

ChamberPartition chamber_partition(const CSType& ambient, const AlphaWindow& window,
                                   const std::vector<CriticalValue>& walls);

// signs of the margin at wall - eps, wall, wall + eps (exact, from the
// margin's alpha-coefficient (m*k - n*t)/(n*m))
struct MarginSignProfile {
    int below = 0;
    int at = 0;
    int above = 0;

    bool operator==(const MarginSignProfile&) const = default;
};

MarginSignProfile margin_sign_profile(const CSType& ambient, const SubTriple& sub,
                                      const Rational& wall);

}  // namespace cohsys
