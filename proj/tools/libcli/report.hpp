#pragma once

// The genus-6 case study for type (2,13,4) over the window (0,1): walls,
// pruning, chambers, stratum labels at the sample points alpha_p = p/(2p+1),
// the splitting certificate, dimension bounds, the wall-crossing profile and
// the recorded discrepancy notes.  Built entirely from library calls; no
// value is hardcoded.

#include "documents.hpp"

#include <string>
#include <vector>

namespace cli {

struct StrataBlock {
    long long p = 0;
    cohsys::Rational alpha;        // p/(2p+1)
    cohsys::Rational upper_bound;  // per-(m,t) Segre bound at alpha
    std::vector<cohsys::StratumLabel> labels;           // pruned
    std::vector<cohsys::StratumLabel> labels_unpruned;

    bool operator==(const StrataBlock&) const = default;
};

struct ReportG6 {
    cohsys::CurveContext ctx;
    cohsys::CSType type;
    cohsys::AlphaWindow window;
    long long m = 0, t = 0;  // profile under study
    cohsys::Int beta;
    std::vector<cohsys::CriticalValue> virtual_walls;
    std::vector<cohsys::CriticalValue> walls;  // pruned statuses
    cohsys::Rational first_critical;
    cohsys::ChamberPartition chambers;
    std::vector<StrataBlock> strata;
    cohsys::SplittingCertificate certificate;
    cohsys::Int dim_bound_ext2_0;
    cohsys::Int dim_bound_ext2_1;
    std::string beta_gate;
    cohsys::SubTriple crossing_sub;
    cohsys::Rational crossing_wall;
    cohsys::MarginSignProfile crossing;
    std::string crossing_conclusion;
    std::vector<std::string> discrepancies;
};

bool operator==(const ReportG6& a, const ReportG6& b);
inline bool operator!=(const ReportG6& a, const ReportG6& b) { return !(a == b); }

ReportG6 build_report_g6();

Doc report_doc(const ReportG6& R);
ReportG6 report_from_doc(const Doc& d);  // exact inverse of report_doc

}  // namespace cli
