#include "cohsys/split_model.hpp"

#include "cohsys/critical.hpp"
#include "cohsys/numerics.hpp"
#include "cohsys/segre.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace cohsys {

void check_model(const SplitModel& M) {
    check_context(M.ctx);
    if (M.summands.empty())
        throw std::invalid_argument("split model: at least one summand required");
    for (std::size_t i = 0; i < M.summands.size(); ++i) {
        const auto& [d, t] = M.summands[i];
        std::string where = "split model summand " + std::to_string(i + 1);
        if (t < 0) throw std::invalid_argument(where + ": sections must be >= 0");
        long long ceiling = d + 1 > 0 ? d + 1 : 0;  // h^0 of a line bundle of degree d
        if (t > ceiling)
            throw std::invalid_argument(where + ": t=" + std::to_string(t) +
                                        " exceeds the section ceiling " + std::to_string(ceiling) +
                                        " for degree " + std::to_string(d));
        if (M.ctx.general_curve && t >= 1 && !rank1_system_exists(M.ctx, d, t))
            throw std::invalid_argument(where + ": no line system of degree " + std::to_string(d) +
                                        " with " + std::to_string(t) +
                                        " sections exists on a general curve");
    }
}

CSType total_type(const SplitModel& M) {
    check_model(M);
    CSType T{static_cast<long long>(M.summands.size()), 0, 0};
    for (const auto& [d, t] : M.summands) {
        T.d += d;
        T.k += t;
    }
    return T;
}

namespace {

constexpr std::size_t kMaxSummands = 20;  // 2^l subsets

void check_enumerable(const SplitModel& M) {
    if (M.summands.size() > kMaxSummands)
        throw std::invalid_argument("split model: subset enumeration capped at " +
                                    std::to_string(kMaxSummands) + " summands, got " +
                                    std::to_string(M.summands.size()));
}

Subset subset_of_mask(unsigned long mask) {
    Subset s;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) s.push_back(i + 1);
    return s;
}

SubTriple subtriple_of_mask(const SplitModel& M, unsigned long mask) {
    SubTriple w{0, 0, 0};
    for (std::size_t i = 0; i < M.summands.size(); ++i)
        if (mask & (1ul << i)) {
            ++w.m;
            w.dprime += M.summands[i].d;
            w.t += M.summands[i].t;
        }
    return w;
}

}  // namespace

std::vector<std::pair<Subset, CSType>> coordinate_subtypes(const SplitModel& M) {
    check_model(M);
    check_enumerable(M);
    std::vector<std::pair<Subset, CSType>> out;
    if (M.summands.size() < 2) return out;
    unsigned long full = (1ul << M.summands.size()) - 1;
    out.reserve(full - 1);
    for (unsigned long mask = 1; mask < full; ++mask) {
        SubTriple w = subtriple_of_mask(M, mask);
        out.emplace_back(subset_of_mask(mask), CSType{w.m, w.dprime, w.t});
    }
    return out;
}

SlopeCoincidences equal_slope_alphas(const SplitModel& M) {
    CSType T = total_type(M);
    check_enumerable(M);
    SlopeCoincidences out;
    if (M.summands.size() < 2) return out;
    std::map<Rational, std::vector<Subset>> walls;
    unsigned long full = (1ul << M.summands.size()) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        SubTriple w = subtriple_of_mask(M, mask);
        auto a = alpha_of_subtype(T, w);
        if (a) {
            if (a->sign() > 0) walls[*a].push_back(subset_of_mask(mask));
        } else if (Int(w.m) * T.d == Int(T.n) * w.dprime) {
            // slope equality holds for every alpha: not a wall
            out.alpha_independent.push_back(subset_of_mask(mask));
        }
    }
    out.walls.reserve(walls.size());
    for (auto& [alpha, wits] : walls)
        out.walls.push_back(SlopeCoincidences::Wall{alpha, std::move(wits)});
    return out;
}

SemistabilityVerdict split_semistable(const SplitModel& M, const Rational& alpha) {
    CSType T = total_type(M);
    check_enumerable(M);
    SemistabilityVerdict v;
    if (M.summands.size() < 2) return v;  // no proper coordinate subsystems
    unsigned long full = (1ul << M.summands.size()) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        SubTriple w = subtriple_of_mask(M, mask);
        if (slope_margin(T, w, alpha).sign() < 0) v.violators.push_back(subset_of_mask(mask));
    }
    v.semistable = v.violators.empty();
    return v;
}

std::optional<Rational> split_segre(const SplitModel& M, const Rational& alpha, long long m,
                                    long long t) {
    CSType T = total_type(M);
    check_enumerable(M);
    if (m <= 0 || m >= T.n)
        throw std::invalid_argument("split_segre: need 0 < m < number of summands");
    if (t < 0 || t > T.k)
        throw std::invalid_argument("split_segre: need 0 <= t <= total sections");
    std::optional<Rational> best;
    unsigned long full = (1ul << M.summands.size()) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        SubTriple w = subtriple_of_mask(M, mask);
        if (w.m != m || w.t != t) continue;
        Rational s = segre_value(alpha, T, w);
        if (!best || s < *best) best = std::move(s);
    }
    return best;
}

}  // namespace cohsys
