#include "documents.hpp"

#include <cstdio>

namespace cli {

using namespace cohsys;

Doc type_arr(const CSType& T) { return Doc::array({T.n, T.d, T.k}); }

Doc sub_arr(const SubTriple& s) { return Doc::array({s.m, s.dprime, s.t}); }

Doc walls_arr(const std::vector<CriticalValue>& walls) {
    Doc a = Doc::array();
    for (const auto& w : walls) {
        Doc wit = Doc::array();
        for (const auto& s : w.witnesses) wit.push_back(sub_arr(s));
        a.push_back(Doc{{"value", w.value.str()}, {"status", to_string(w.status)},
                        {"witnesses", std::move(wit)}});
    }
    return a;
}

Doc labels_arr(const std::vector<StratumLabel>& labels, bool approx) {
    Doc a = Doc::array();
    for (const auto& L : labels) {
        Doc row{{"s", L.s ? Doc(L.s->str()) : Doc("inf")},
                {"dprime", L.witness_dprime ? Doc(*L.witness_dprime) : Doc(nullptr)}};
        if (approx) row["approx_nonauthoritative"] = L.s ? Doc(approx_str(*L.s)) : Doc("inf");
        a.push_back(std::move(row));
    }
    return a;
}

Doc window_arr(const AlphaWindow& w) {
    return Doc::array({w.lo.str(), w.hi ? w.hi->str() : std::string("inf")});
}

std::string approx_str(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", r.approx());
    return buf;
}

const char* sign_str(int s) { return s < 0 ? "-" : s > 0 ? "+" : "0"; }

namespace {

Doc piece_obj(const PieceWitness& p);

Doc cert_obj_inner(const SplittingCertificate& cert) {
    return Doc{{"alpha", cert.alpha.str()},
               {"node", type_arr(cert.node)},
               {"left", piece_obj(cert.left)},
               {"right", piece_obj(cert.right)},
               {"unit_value", cert.unit_value.str()},
               {"ext_positivity", cert.ext_value.str()},
               {"ext_via_c21", cert.ext_via_c21},
               {"stratum_segre", cert.stratum_segre.str()},
               {"asserts", "G(" + cert.alpha.str() + ";" + std::to_string(cert.node.n) + "," +
                               std::to_string(cert.node.d) + "," + std::to_string(cert.node.k) +
                               ";" + std::to_string(cert.left.type.n) + "," +
                               std::to_string(cert.left.type.k) + ";" +
                               cert.stratum_segre.str() + ") is non-empty"}};
}

Doc piece_obj(const PieceWitness& p) {
    Doc o{{"type", type_arr(p.type)}, {"rule", to_string(p.rule)}};
    if (p.beta) o["beta"] = p.beta->str();
    if (p.cert) o["certificate"] = cert_obj_inner(*p.cert);
    return o;
}

}  // namespace

Doc certificate_obj(const SplittingCertificate& cert) { return cert_obj_inner(cert); }

Doc doc_slope(const CSType& T, const Rational& alpha, bool approx) {
    Rational v = alpha_slope(T, alpha);
    Doc d{{"schema", kSchema},
          {"command", "slope"},
          {"inputs", Doc{{"type", type_arr(T)}, {"alpha", alpha.str()}}},
          {"alpha_slope", v.str()}};
    if (approx) d["approx_nonauthoritative"] = approx_str(v);
    return d;
}

Doc doc_beta(const CurveContext& ctx, const CSType& T) {
    return Doc{{"schema", kSchema},
               {"command", "beta"},
               {"inputs", Doc{{"genus", ctx.genus},
                              {"general_curve", ctx.general_curve},
                              {"type", type_arr(T)}}},
               {"beta", brill_noether_number(ctx, T).str()}};
}

namespace {

Doc ctx_inputs(const std::optional<CurveContext>& ctx) {
    Doc inputs = Doc::object();
    if (ctx) {
        inputs["genus"] = ctx->genus;
        inputs["general_curve"] = ctx->general_curve;
    }
    return inputs;
}

}  // namespace

Doc doc_walls(const std::optional<CurveContext>& ctx, const CSType& T, const AlphaWindow& window,
              bool prune, bool positive_subdegree, const std::vector<CriticalValue>& walls) {
    Doc inputs = ctx_inputs(ctx);
    inputs["type"] = type_arr(T);
    inputs["window"] = window_arr(window);
    inputs["prune"] = prune;
    inputs["positive_subdegree"] = positive_subdegree;
    return Doc{{"schema", kSchema},
               {"command", "critical-values"},
               {"inputs", std::move(inputs)},
               {"walls", walls_arr(walls)}};
}

Doc doc_chambers(const std::optional<CurveContext>& ctx, const CSType& T,
                 const ChamberPartition& part, bool prune) {
    Doc chambers = Doc::array();
    for (const auto& c : part.chambers)
        chambers.push_back(Doc{{"label", c.label},
                               {"lo", c.lo.str()},
                               {"hi", c.hi ? c.hi->str() : std::string("inf")}});
    Doc inputs = ctx_inputs(ctx);
    inputs["type"] = type_arr(T);
    inputs["window"] = window_arr(part.window);
    inputs["prune"] = prune;
    return Doc{{"schema", kSchema},
               {"command", "chambers"},
               {"inputs", std::move(inputs)},
               {"walls", walls_arr(part.walls)},
               {"chambers", std::move(chambers)}};
}

Doc doc_strata(const CurveContext& ctx, const CSType& T, long long m, long long t,
               const Rational& alpha, bool prune, const Rational& bound,
               const std::vector<StratumLabel>& labels, bool approx) {
    return Doc{{"schema", kSchema},
               {"command", "strata"},
               {"inputs", Doc{{"genus", ctx.genus},
                              {"general_curve", ctx.general_curve},
                              {"type", type_arr(T)},
                              {"m", m},
                              {"t", t},
                              {"alpha", alpha.str()},
                              {"prune", prune}}},
               {"upper_bound", bound.str()},
               {"labels", labels_arr(labels, approx)}};
}

Doc doc_transfer(const CSType& T, const SubTriple& sub, const Rational& alpha,
                 const TransferVerdict& v) {
    Doc d{{"schema", kSchema},
          {"command", "check-transfer"},
          {"inputs", Doc{{"type", type_arr(T)}, {"sub", sub_arr(sub)}, {"alpha", alpha.str()}}},
          {"applies", v.applies},
          {"unit_value", v.unit_value.str()}};
    if (v.applies)
        d["conclusions"] = Doc{{"sub_alpha_stable", true},
                               {"sub_maximal", true},
                               {"quotient", type_arr(v.quotient)},
                               {"quotient_alpha_stable", true},
                               {"segre", v.segre.str()}};
    return d;
}

Doc doc_extension(const CSType& subT, const CSType& quotT, const Rational& alpha,
                  const ExtensionVerdict& v) {
    Doc d{{"schema", kSchema},
          {"command", "check-extension"},
          {"inputs",
           Doc{{"sub", type_arr(subT)}, {"quotient", type_arr(quotT)}, {"alpha", alpha.str()}}},
          {"applies", v.applies},
          {"unit_value", v.unit_value.str()}};
    if (v.applies)
        d["conclusions"] = Doc{{"total", type_arr(v.total)},
                               {"extensions_alpha_stable", true},
                               {"segre", v.segre.str()}};
    return d;
}

Doc doc_certify(const CurveContext& ctx, const CSType& T, const Rational& alpha, long long depth,
                const CertificateOptions& opts, const std::optional<SplittingCertificate>& cert) {
    Doc d{{"schema", kSchema},
          {"command", "certify"},
          {"inputs", Doc{{"genus", ctx.genus},
                         {"general_curve", ctx.general_curve},
                         {"type", type_arr(T)},
                         {"alpha", alpha.str()},
                         {"depth", depth},
                         {"use_c21", opts.use_c21},
                         {"assume_nonempty", opts.allow_assumed}}},
          {"verdict", cert ? "certificate" : "unknown"}};
    if (cert) d["certificate"] = certificate_obj(*cert);
    return d;
}

Doc doc_dim_bound(const CurveContext& ctx, const CSType& T1, const CSType& T2, long long dim_g1,
                  long long dim_g2, long long ext2, const Int& c21_value, const Int& bound) {
    return Doc{{"schema", kSchema},
               {"command", "dim-bound"},
               {"inputs", Doc{{"genus", ctx.genus},
                              {"general_curve", ctx.general_curve},
                              {"type1", type_arr(T1)},
                              {"type2", type_arr(T2)},
                              {"dim_g1", dim_g1},
                              {"dim_g2", dim_g2},
                              {"ext2", ext2}}},
               {"c21", c21_value.str()},
               {"dim_bound", bound.str()}};
}

Doc doc_split_model(const SplitModel& M, const SplitModelResults& r) {
    Doc summands = Doc::array();
    for (const auto& s : M.summands) summands.push_back(Doc::array({s.d, s.t}));
    Doc inputs{{"genus", M.ctx.genus},
               {"general_curve", M.ctx.general_curve},
               {"summands", std::move(summands)}};
    if (r.alpha) inputs["alpha"] = r.alpha->str();
    if (r.m) inputs["m"] = *r.m;
    if (r.t) inputs["t"] = *r.t;

    Doc walls = Doc::array();
    for (const auto& w : r.coincidences.walls) {
        Doc wit = Doc::array();
        for (const auto& s : w.witnesses) wit.push_back(Doc(s));
        walls.push_back(Doc{{"alpha", w.alpha.str()}, {"witnesses", std::move(wit)}});
    }
    Doc indep = Doc::array();
    for (const auto& s : r.coincidences.alpha_independent) indep.push_back(Doc(s));

    Doc d{{"schema", kSchema},
          {"command", "split-model"},
          {"inputs", std::move(inputs)},
          {"total_type", type_arr(r.total)},
          {"walls", std::move(walls)},
          {"alpha_independent", std::move(indep)}};
    if (r.semistable) {
        d["semistable"] = r.semistable->semistable;
        Doc viol = Doc::array();
        for (const auto& s : r.semistable->violators) viol.push_back(Doc(s));
        d["violators"] = std::move(viol);
    }
    if (r.segre) d["split_segre"] = *r.segre ? (*r.segre)->str() : std::string("inf");
    return d;
}

}  // namespace cli
