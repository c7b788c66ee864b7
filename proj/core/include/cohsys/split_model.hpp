#pragma once

// Desk-scale oracle: coherent systems modeled as direct sums of rank-1 line
// systems (d_i, t_i).  Subsystems tested are exactly the coordinate sub-sums,
// which keeps every slope and Segre question finite and exact.

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cohsys {

struct LineSummand {
    long long d = 0;
    long long t = 0;
};

struct SplitModel {
    CurveContext ctx;
    std::vector<LineSummand> summands;
};

// >= 1 summand; 0 <= t_i <= max(0, d_i + 1); on a general curve each summand
// with t_i >= 1 must pass the rank-1 existence test
void check_model(const SplitModel& M);

// (number of summands, sum d_i, sum t_i)
CSType total_type(const SplitModel& M);

// 1-based summand indices, ascending
using Subset = std::vector<int>;

// all 2^l - 2 proper nonempty coordinate sub-sums in binary counting order;
// empty for a single summand; l <= 20 enforced
std::vector<std::pair<Subset, CSType>> coordinate_subtypes(const SplitModel& M);

struct SlopeCoincidences {
    struct Wall {
        Rational alpha;                 // > 0
        std::vector<Subset> witnesses;  // binary counting order
    };
    std::vector<Wall> walls;                    // ascending by alpha
    std::vector<Subset> alpha_independent;      // subsets with slope == total at every alpha
};

// all alpha > 0 where some coordinate sub-sum matches the total slope;
// proportional subsets that match identically are reported separately
SlopeCoincidences equal_slope_alphas(const SplitModel& M);

struct SemistabilityVerdict {
    bool semistable = true;
    std::vector<Subset> violators;  // subsets with slope > total slope
};

SemistabilityVerdict split_semistable(const SplitModel& M, const Rational& alpha);

// min of segre_value over coordinate subsets of cardinality m and section-sum
// t; nullopt = +infinity (no such subset)
std::optional<Rational> split_segre(const SplitModel& M, const Rational& alpha, long long m,
                                    long long t);

}  // namespace cohsys
