#include "report.hpp"

#include <memory>
#include <stdexcept>

namespace cli {

using namespace cohsys;

namespace {

bool cert_equal(const SplittingCertificate& a, const SplittingCertificate& b);

bool piece_equal(const PieceWitness& a, const PieceWitness& b) {
    if (!(a.type == b.type) || a.rule != b.rule || a.beta != b.beta) return false;
    if (!a.cert != !b.cert) return false;
    return !a.cert || cert_equal(*a.cert, *b.cert);
}

bool cert_equal(const SplittingCertificate& a, const SplittingCertificate& b) {
    return a.alpha == b.alpha && a.node == b.node && piece_equal(a.left, b.left) &&
           piece_equal(a.right, b.right) && a.unit_value == b.unit_value &&
           a.ext_value == b.ext_value && a.ext_via_c21 == b.ext_via_c21 &&
           a.stratum_segre == b.stratum_segre;
}

}  // namespace

bool operator==(const ReportG6& a, const ReportG6& b) {
    return a.ctx == b.ctx && a.type == b.type && a.window == b.window && a.m == b.m &&
           a.t == b.t && a.beta == b.beta && a.virtual_walls == b.virtual_walls &&
           a.walls == b.walls && a.first_critical == b.first_critical &&
           a.chambers == b.chambers && a.strata == b.strata &&
           cert_equal(a.certificate, b.certificate) &&
           a.dim_bound_ext2_0 == b.dim_bound_ext2_0 && a.dim_bound_ext2_1 == b.dim_bound_ext2_1 &&
           a.beta_gate == b.beta_gate && a.crossing_sub == b.crossing_sub &&
           a.crossing_wall == b.crossing_wall && a.crossing == b.crossing &&
           a.crossing_conclusion == b.crossing_conclusion && a.discrepancies == b.discrepancies;
}

ReportG6 build_report_g6() {
    ReportG6 R;
    R.ctx = CurveContext{6, true};
    R.type = CSType{2, 13, 4};
    R.window = AlphaWindow{Rational(0), Rational(1)};
    R.m = 1;
    R.t = 3;
    R.beta = brill_noether_number(R.ctx, R.type);

    R.virtual_walls = enumerate_virtual_criticals(R.type, R.window);
    R.walls = prune_by_brill_noether(R.ctx, R.type, R.virtual_walls);
    std::vector<CriticalValue> retained;
    for (const auto& w : R.walls)
        if (w.status == WallStatus::CandidateActual) retained.push_back(w);
    if (retained.empty()) throw std::logic_error("no candidate-actual wall in (0,1)");
    R.first_critical = retained.front().value;
    R.chambers = chamber_partition(R.type, R.window, retained);

    for (long long p = 1; p <= 3; ++p) {
        StrataBlock B;
        B.p = p;
        B.alpha = Rational(p, 2 * p + 1);
        B.upper_bound = segre_upper_bound(R.ctx, R.type, R.m, R.t, B.alpha);
        B.labels = enumerate_stratum_labels(R.ctx, R.type, R.m, R.t, B.alpha, true);
        B.labels_unpruned = enumerate_stratum_labels(R.ctx, R.type, R.m, R.t, B.alpha, false);
        R.strata.push_back(std::move(B));
    }

    auto cert = nonemptiness_certificate(R.ctx, R.strata.front().alpha, R.type);
    if (!cert) throw std::logic_error("certificate search failed on the fixed case");
    R.certificate = *cert;
    if (!R.certificate.left.beta || !R.certificate.right.beta)
        throw std::logic_error("expected rank-1 certificate pieces");
    long long dim_g1 = R.certificate.left.beta->convert_to<long long>();
    long long dim_g2 = R.certificate.right.beta->convert_to<long long>();
    R.dim_bound_ext2_0 = stratum_dim_bound(R.ctx, R.certificate.left.type,
                                           R.certificate.right.type, dim_g1, dim_g2, 0);
    R.dim_bound_ext2_1 = stratum_dim_bound(R.ctx, R.certificate.left.type,
                                           R.certificate.right.type, dim_g1, dim_g2, 1);
    R.beta_gate = "beta(2,13,4) = " + R.beta.str() + " at genus 6; both stratum dimension bounds (" +
                  R.dim_bound_ext2_0.str() + " at ext2=0, " + R.dim_bound_ext2_1.str() +
                  " at ext2=1) lie below it, so the bounds are consistent with the stratum "
                  "sitting inside a moduli space of expected dimension " + R.beta.str();

    // the witness whose margin turns negative above the wall: m*k < n*t
    R.crossing_wall = R.first_critical;
    bool found = false;
    for (const auto& w : retained.front().witnesses) {
        if (Int(w.m) * R.type.k < Int(R.type.n) * w.t) {
            R.crossing_sub = w;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no witness destabilizes above the first wall");
    R.crossing = margin_sign_profile(R.type, R.crossing_sub, R.crossing_wall);
    std::string sub_str = "(" + std::to_string(R.crossing_sub.m) + "," +
                          std::to_string(R.crossing_sub.dprime) + "," +
                          std::to_string(R.crossing_sub.t) + ")";
    R.crossing_conclusion =
        "the slope margin of " + sub_str + " is positive below " + R.crossing_wall.str() +
        ", zero at it and negative above it, so any system containing a subsystem of this type "
        "is alpha-unstable for every alpha > " + R.crossing_wall.str() +
        " and the corresponding stratum does not persist into G_1";

    R.discrepancies = {
        "reference bound 10-2a for the (1,3) Segre invariant at genus 6: the bound formula "
        "m(n-m)(g-1)+(n-1)+a(mk-nt) evaluates to 6-2a at (n,m,k,t)=(2,1,4,3); 6-2a is used",
        "reference stratum dimension 11: the bound dimG1+dimG2+C21-1 evaluates to 10 when Ext^2 "
        "vanishes and to 11 at ext2=1; both values are reported (dim_bound_ext2_0, "
        "dim_bound_ext2_1) and neither is asserted as the true dimension",
        "reference quotient type (1,7,2) for the sub-type (1,6,3) of (2,13,4): section counts "
        "must sum to k=4, so the consistent quotient (1,7,1) is used throughout",
        "reference total slope (13+2a)/2 for type (2,13,4): the alpha-slope (d+ak)/n gives "
        "(13+4a)/2, which is the value consistent with the first critical value 1/2; k=4 is used",
        "the extension positivity count n1n2(g-1)-d1n2+d2n1+t2n1(g-1)-t1t2 differs from "
        "C21 = n1n2(g-1)-d1n2+d2n1+k2d1-k2n1(g-1)-k1k2; certificates record which form was used "
        "(ext_via_c21), the former by default",
    };
    return R;
}

namespace {

Doc label_strings(const std::vector<StratumLabel>& labels) {
    Doc a = Doc::array();
    for (const auto& L : labels) a.push_back(L.s ? L.s->str() : std::string("inf"));
    return a;
}

Doc strata_block_obj(const StrataBlock& B) {
    return Doc{{"p", B.p},
               {"alpha", B.alpha.str()},
               {"upper_bound", B.upper_bound.str()},
               {"labels", labels_arr(B.labels, false)},
               {"labels_unpruned", labels_arr(B.labels_unpruned, false)}};
}

}  // namespace

Doc report_doc(const ReportG6& R) {
    Doc chambers = Doc::array();
    for (const auto& c : R.chambers.chambers)
        chambers.push_back(Doc{{"label", c.label},
                               {"lo", c.lo.str()},
                               {"hi", c.hi ? c.hi->str() : std::string("inf")}});
    Doc alpha_p = Doc::array();
    for (const auto& B : R.strata) alpha_p.push_back(B.alpha.str());

    Doc d{{"schema", kSchema},
          {"command", "report-g6"},
          {"inputs", Doc{{"genus", R.ctx.genus},
                         {"general_curve", R.ctx.general_curve},
                         {"type", type_arr(R.type)},
                         {"window", window_arr(R.window)},
                         {"m", R.m},
                         {"t", R.t}}},
          {"beta", R.beta.str()},
          {"virtual_walls", walls_arr(R.virtual_walls)},
          {"walls", walls_arr(R.walls)},
          {"first_critical", R.first_critical.str()},
          {"chambers", std::move(chambers)},
          {"alpha_p", std::move(alpha_p)}};
    for (const auto& B : R.strata) d["strata_p" + std::to_string(B.p)] = strata_block_obj(B);
    for (const auto& B : R.strata) d["labels_p" + std::to_string(B.p)] = label_strings(B.labels);
    for (const auto& B : R.strata)
        d["labels_unpruned_p" + std::to_string(B.p)] = label_strings(B.labels_unpruned);
    d["certificate"] = certificate_obj(R.certificate);
    d["dim_bound_ext2_0"] = R.dim_bound_ext2_0.str();
    d["dim_bound_ext2_1"] = R.dim_bound_ext2_1.str();
    d["beta_gate"] = R.beta_gate;
    d["crossing"] = Doc{{"sub", sub_arr(R.crossing_sub)},
                        {"wall", R.crossing_wall.str()},
                        {"below", sign_str(R.crossing.below)},
                        {"at", sign_str(R.crossing.at)},
                        {"above", sign_str(R.crossing.above)},
                        {"conclusion", R.crossing_conclusion}};
    d["discrepancies"] = R.discrepancies;
    return d;
}

namespace {

Rational parse_rat(const Doc& v) { return Rational::parse(v.get<std::string>()); }

std::optional<Rational> parse_rat_or_inf(const Doc& v) {
    std::string s = v.get<std::string>();
    if (s == "inf") return std::nullopt;
    return Rational::parse(s);
}

CSType parse_type3(const Doc& v) {
    return CSType{v.at(0).get<long long>(), v.at(1).get<long long>(), v.at(2).get<long long>()};
}

SubTriple parse_sub3(const Doc& v) {
    return SubTriple{v.at(0).get<long long>(), v.at(1).get<long long>(), v.at(2).get<long long>()};
}

WallStatus parse_status(const std::string& s) {
    if (s == "virtual") return WallStatus::Virtual;
    if (s == "candidate-actual") return WallStatus::CandidateActual;
    if (s == "pruned") return WallStatus::Pruned;
    throw std::invalid_argument("unknown wall status: " + s);
}

std::vector<CriticalValue> parse_walls(const Doc& v) {
    std::vector<CriticalValue> out;
    for (const auto& w : v) {
        CriticalValue cv;
        cv.value = parse_rat(w.at("value"));
        cv.status = parse_status(w.at("status").get<std::string>());
        for (const auto& s : w.at("witnesses")) cv.witnesses.push_back(parse_sub3(s));
        out.push_back(std::move(cv));
    }
    return out;
}

std::vector<StratumLabel> parse_labels(const Doc& v, long long m, long long t) {
    std::vector<StratumLabel> out;
    for (const auto& row : v) {
        StratumLabel L;
        L.m = m;
        L.t = t;
        L.s = parse_rat_or_inf(row.at("s"));
        if (!row.at("dprime").is_null()) L.witness_dprime = row.at("dprime").get<long long>();
        out.push_back(std::move(L));
    }
    return out;
}

PieceRule parse_rule(const std::string& s) {
    if (s == "rank1-brill-noether") return PieceRule::Rank1BrillNoether;
    if (s == "recursive-certificate") return PieceRule::RecursiveCertificate;
    if (s == "assumed-nonempty") return PieceRule::AssumedNonempty;
    throw std::invalid_argument("unknown piece rule: " + s);
}

SplittingCertificate parse_cert(const Doc& v);

PieceWitness parse_piece(const Doc& v) {
    PieceWitness p;
    p.type = parse_type3(v.at("type"));
    p.rule = parse_rule(v.at("rule").get<std::string>());
    if (v.contains("beta")) p.beta = Int(v.at("beta").get<std::string>());
    if (v.contains("certificate"))
        p.cert = std::make_shared<SplittingCertificate>(parse_cert(v.at("certificate")));
    return p;
}

SplittingCertificate parse_cert(const Doc& v) {
    SplittingCertificate c;
    c.alpha = parse_rat(v.at("alpha"));
    c.node = parse_type3(v.at("node"));
    c.left = parse_piece(v.at("left"));
    c.right = parse_piece(v.at("right"));
    c.unit_value = Int(v.at("unit_value").get<std::string>());
    c.ext_value = Int(v.at("ext_positivity").get<std::string>());
    c.ext_via_c21 = v.at("ext_via_c21").get<bool>();
    c.stratum_segre = parse_rat(v.at("stratum_segre"));
    return c;
}

int parse_sign(const std::string& s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    if (s == "0") return 0;
    throw std::invalid_argument("unknown sign: " + s);
}

}  // namespace

ReportG6 report_from_doc(const Doc& d) {
    if (d.at("schema").get<std::string>() != kSchema)
        throw std::invalid_argument("unknown schema: " + d.at("schema").get<std::string>());
    ReportG6 R;
    const Doc& in = d.at("inputs");
    R.ctx = CurveContext{in.at("genus").get<long long>(), in.at("general_curve").get<bool>()};
    R.type = parse_type3(in.at("type"));
    R.window.lo = parse_rat(in.at("window").at(0));
    R.window.hi = parse_rat_or_inf(in.at("window").at(1));
    R.m = in.at("m").get<long long>();
    R.t = in.at("t").get<long long>();
    R.beta = Int(d.at("beta").get<std::string>());
    R.virtual_walls = parse_walls(d.at("virtual_walls"));
    R.walls = parse_walls(d.at("walls"));
    R.first_critical = parse_rat(d.at("first_critical"));
    R.chambers.window = R.window;
    for (const auto& w : R.walls)
        if (w.status == WallStatus::CandidateActual) R.chambers.walls.push_back(w);
    for (const auto& c : d.at("chambers")) {
        Chamber ch;
        ch.label = c.at("label").get<std::string>();
        ch.lo = parse_rat(c.at("lo"));
        ch.hi = parse_rat_or_inf(c.at("hi"));
        R.chambers.chambers.push_back(std::move(ch));
    }
    for (long long p = 1; d.contains("strata_p" + std::to_string(p)); ++p) {
        const Doc& b = d.at("strata_p" + std::to_string(p));
        StrataBlock B;
        B.p = b.at("p").get<long long>();
        B.alpha = parse_rat(b.at("alpha"));
        B.upper_bound = parse_rat(b.at("upper_bound"));
        B.labels = parse_labels(b.at("labels"), R.m, R.t);
        B.labels_unpruned = parse_labels(b.at("labels_unpruned"), R.m, R.t);
        R.strata.push_back(std::move(B));
    }
    R.certificate = parse_cert(d.at("certificate"));
    R.dim_bound_ext2_0 = Int(d.at("dim_bound_ext2_0").get<std::string>());
    R.dim_bound_ext2_1 = Int(d.at("dim_bound_ext2_1").get<std::string>());
    R.beta_gate = d.at("beta_gate").get<std::string>();
    const Doc& cr = d.at("crossing");
    R.crossing_sub = parse_sub3(cr.at("sub"));
    R.crossing_wall = parse_rat(cr.at("wall"));
    R.crossing.below = parse_sign(cr.at("below").get<std::string>());
    R.crossing.at = parse_sign(cr.at("at").get<std::string>());
    R.crossing.above = parse_sign(cr.at("above").get<std::string>());
    R.crossing_conclusion = cr.at("conclusion").get<std::string>();
    for (const auto& s : d.at("discrepancies")) R.discrepancies.push_back(s.get<std::string>());
    return R;
}

}  // namespace cli
