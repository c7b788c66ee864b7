#pragma once

// Builders for the per-subcommand documents.  Computed values are canonical
// rational strings; structural integers (genus, ranks, degrees, section
// counts, indices) stay JSON integers; the infinity label is the string
// "inf".

#include "format.hpp"

#include <cohsys/critical.hpp>
#include <cohsys/numerics.hpp>
#include <cohsys/segre.hpp>
#include <cohsys/split_model.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cli {

Doc type_arr(const cohsys::CSType& T);
Doc sub_arr(const cohsys::SubTriple& s);
Doc walls_arr(const std::vector<cohsys::CriticalValue>& walls);
Doc labels_arr(const std::vector<cohsys::StratumLabel>& labels, bool approx);
Doc window_arr(const cohsys::AlphaWindow& w);
Doc certificate_obj(const cohsys::SplittingCertificate& cert);
std::string approx_str(const cohsys::Rational& r);
const char* sign_str(int s);

Doc doc_slope(const cohsys::CSType& T, const cohsys::Rational& alpha, bool approx);

Doc doc_beta(const cohsys::CurveContext& ctx, const cohsys::CSType& T);

Doc doc_walls(const std::optional<cohsys::CurveContext>& ctx, const cohsys::CSType& T,
              const cohsys::AlphaWindow& window, bool prune, bool positive_subdegree,
              const std::vector<cohsys::CriticalValue>& walls);

Doc doc_chambers(const std::optional<cohsys::CurveContext>& ctx, const cohsys::CSType& T,
                 const cohsys::ChamberPartition& part, bool prune);

Doc doc_strata(const cohsys::CurveContext& ctx, const cohsys::CSType& T, long long m, long long t,
               const cohsys::Rational& alpha, bool prune, const cohsys::Rational& bound,
               const std::vector<cohsys::StratumLabel>& labels, bool approx);

Doc doc_transfer(const cohsys::CSType& T, const cohsys::SubTriple& sub,
                 const cohsys::Rational& alpha, const cohsys::TransferVerdict& v);

Doc doc_extension(const cohsys::CSType& subT, const cohsys::CSType& quotT,
                  const cohsys::Rational& alpha, const cohsys::ExtensionVerdict& v);

Doc doc_certify(const cohsys::CurveContext& ctx, const cohsys::CSType& T,
                const cohsys::Rational& alpha, long long depth,
                const cohsys::CertificateOptions& opts,
                const std::optional<cohsys::SplittingCertificate>& cert);

Doc doc_dim_bound(const cohsys::CurveContext& ctx, const cohsys::CSType& T1,
                  const cohsys::CSType& T2, long long dim_g1, long long dim_g2, long long ext2,
                  const cohsys::Int& c21_value, const cohsys::Int& bound);

struct SplitModelResults {
    cohsys::CSType total;
    cohsys::SlopeCoincidences coincidences;
    std::optional<cohsys::Rational> alpha;                     // set when --alpha given
    std::optional<cohsys::SemistabilityVerdict> semistable;    // with --alpha
    std::optional<long long> m, t;                             // set when --m/--t given
    std::optional<std::optional<cohsys::Rational>> segre;      // inner empty = infinity
};

Doc doc_split_model(const cohsys::SplitModel& M, const SplitModelResults& r);

}  // namespace cli
