#include "dispatch.hpp"

#include "documents.hpp"
#include "report.hpp"

#include <cohsys/parallel.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

using namespace cohsys;

namespace {

long long parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: \"" + s + "\"");
    }
    if (used != s.size())
        throw std::invalid_argument(std::string(what) + ": trailing characters in \"" + s + "\"");
    return v;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (!s.empty() && s.back() == ',') parts.push_back("");
    return parts;
}

CSType parse_type_flag(const std::string& s, const char* flag) {
    auto parts = split_commas(s);
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(flag) + ": expected n,d,k but got \"" + s + "\"");
    return CSType{parse_int(parts[0], flag), parse_int(parts[1], flag), parse_int(parts[2], flag)};
}

SubTriple parse_sub_flag(const std::string& s, const char* flag) {
    auto parts = split_commas(s);
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(flag) + ": expected m,dprime,t but got \"" + s +
                                    "\"");
    return SubTriple{parse_int(parts[0], flag), parse_int(parts[1], flag),
                     parse_int(parts[2], flag)};
}

AlphaWindow parse_window_flag(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 2)
        throw std::invalid_argument("--window: expected lo,hi but got \"" + s + "\"");
    AlphaWindow w;
    w.lo = Rational::parse(parts[0]);
    if (parts[1] != "inf") w.hi = Rational::parse(parts[1]);
    check_window(w);
    return w;
}

bool parse_bool(const std::string& s, const char* flag) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw std::invalid_argument(std::string(flag) + ": expected a boolean, got \"" + s + "\"");
}

// --prune style: absent or bare means true, one value parses as a boolean
bool flag_or_bool(const std::vector<std::string>& args, const char* flag) {
    if (args.empty() || args.front().empty()) return true;
    return parse_bool(args.front(), flag);
}

CurveContext require_genus(long long genus, bool general, const char* why) {
    if (genus < 2)
        throw std::invalid_argument(std::string("--genus (>= 2) is required ") + why);
    return CurveContext{genus, general};
}

}  // namespace

int cmd_dispatch(int argc, const char* const* argv) {
    CLI::App app{"exact invariants of alpha-stability strata for coherent systems on curves"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an ini/toml file (flags win)");

    std::string format = "text";
    bool approx = false;
    unsigned threads = 1;
    app.add_option("--format", format, "output format: text, json or csv")
        ->capture_default_str();
    app.add_flag("--approx", approx, "append non-authoritative decimal approximations");
    app.add_option("--threads", threads, "worker threads for enumerations and searches")
        ->capture_default_str();

    int exit_code = 0;
    auto emit = [&](const Doc& d, std::string_view scalar_key = {}) {
        std::cout << render(d, parse_format(format), scalar_key);
    };

    // slope
    struct {
        std::string type, alpha;
    } slope_o;
    {
        auto* c = app.add_subcommand("slope", "alpha-slope (d + alpha*k)/n of a type");
        c->fallthrough();
        c->add_option("--type", slope_o.type, "type n,d,k")->required();
        c->add_option("--alpha", slope_o.alpha, "stability parameter, e.g. 1/3")->required();
        c->callback([&] {
            set_thread_count(threads);
            emit(doc_slope(parse_type_flag(slope_o.type, "--type"),
                           Rational::parse(slope_o.alpha), approx),
                 "alpha_slope");
        });
    }

    // beta
    struct {
        long long genus = 0;
        bool general = true;
        std::string type;
    } beta_o;
    {
        auto* c = app.add_subcommand("beta", "Brill-Noether number of a type");
        c->fallthrough();
        c->add_option("--genus", beta_o.genus, "curve genus (>= 2)")->required();
        c->add_option("--general-curve", beta_o.general, "assume a general curve");
        c->add_option("--type", beta_o.type, "type n,d,k")->required();
        c->callback([&] {
            set_thread_count(threads);
            CurveContext ctx{beta_o.genus, beta_o.general};
            emit(doc_beta(ctx, parse_type_flag(beta_o.type, "--type")), "beta");
        });
    }

    // critical-values / chambers share options
    struct WallsOpts {
        long long genus = 0;
        bool general = true;
        std::string type, window;
        std::vector<std::string> prune_args;
        bool allow_nonpositive = false;
    };
    auto add_walls_options = [](CLI::App* c, WallsOpts& o) {
        c->fallthrough();
        c->add_option("--genus", o.genus, "curve genus (needed when pruning)");
        c->add_option("--general-curve", o.general, "assume a general curve");
        c->add_option("--type", o.type, "type n,d,k")->required();
        c->add_option("--window", o.window,
                      "open alpha-window lo,hi (default 0,d/(n-k) for k < n)");
        c->add_option("--prune", o.prune_args,
                      "prune walls by the rank-1 existence test (default true)")
            ->expected(0, 1);
        c->add_flag("--allow-nonpositive-subdegree", o.allow_nonpositive,
                    "keep witnesses with t >= 1 and d' <= 0 (audit)");
    };
    auto walls_of = [](const WallsOpts& o, bool prune, std::optional<CurveContext>& ctx) {
        CSType T = parse_type_flag(o.type, "--type");
        AlphaWindow W = o.window.empty() ? default_alpha_window(T) : parse_window_flag(o.window);
        WallOptions wo{!o.allow_nonpositive};
        auto walls = enumerate_virtual_criticals(T, W, wo);
        if (prune) {
            ctx = require_genus(o.genus, o.general, "when pruning (--prune false to skip)");
            walls = prune_by_brill_noether(*ctx, T, std::move(walls));
        }
        return std::tuple{T, W, std::move(walls)};
    };

    WallsOpts cv_o;
    {
        auto* c = app.add_subcommand("critical-values",
                                     "virtual critical values in a window, with witnesses");
        add_walls_options(c, cv_o);
        c->callback([&] {
            set_thread_count(threads);
            bool prune = flag_or_bool(cv_o.prune_args, "--prune");
            std::optional<CurveContext> ctx;
            auto [T, W, walls] = walls_of(cv_o, prune, ctx);
            emit(doc_walls(ctx, T, W, prune, !cv_o.allow_nonpositive, walls));
        });
    }

    WallsOpts ch_o;
    {
        auto* c = app.add_subcommand("chambers", "chamber partition of the alpha-window");
        add_walls_options(c, ch_o);
        c->callback([&] {
            set_thread_count(threads);
            bool prune = flag_or_bool(ch_o.prune_args, "--prune");
            std::optional<CurveContext> ctx;
            auto [T, W, walls] = walls_of(ch_o, prune, ctx);
            std::vector<CriticalValue> retained;
            for (const auto& w : walls)
                if (!prune || w.status == WallStatus::CandidateActual) retained.push_back(w);
            emit(doc_chambers(ctx, T, chamber_partition(T, W, retained), prune));
        });
    }

    // strata
    struct {
        long long genus = 0;
        bool general = true;
        std::string type, alpha;
        long long m = 0, t = 0;
        std::vector<std::string> prune_args;
    } st_o;
    {
        auto* c = app.add_subcommand("strata", "Segre stratum labels for a profile (m,t)");
        c->fallthrough();
        c->add_option("--genus", st_o.genus, "curve genus (>= 2)")->required();
        c->add_option("--general-curve", st_o.general, "assume a general curve");
        c->add_option("--type", st_o.type, "type n,d,k")->required();
        c->add_option("--m", st_o.m, "subsystem rank, 0 < m < n")->required();
        c->add_option("--t", st_o.t, "subsystem section count, 0 <= t <= k")->required();
        c->add_option("--alpha", st_o.alpha, "stability parameter inside a chamber")->required();
        c->add_option("--prune", st_o.prune_args,
                      "drop labels failing the rank-1 existence test (default true)")
            ->expected(0, 1);
        c->callback([&] {
            set_thread_count(threads);
            bool prune = flag_or_bool(st_o.prune_args, "--prune");
            CurveContext ctx{st_o.genus, st_o.general};
            CSType T = parse_type_flag(st_o.type, "--type");
            Rational a = Rational::parse(st_o.alpha);
            Rational bound = segre_upper_bound(ctx, T, st_o.m, st_o.t, a);
            auto labels = enumerate_stratum_labels(ctx, T, st_o.m, st_o.t, a, prune);
            emit(doc_strata(ctx, T, st_o.m, st_o.t, a, prune, bound, labels, approx));
        });
    }

    // check-transfer
    struct {
        std::string type, sub, alpha;
    } tr_o;
    {
        auto* c = app.add_subcommand("check-transfer",
                                     "stability transfer: U = q(md-nd') + p(mk-nt)");
        c->fallthrough();
        c->add_option("--type", tr_o.type, "ambient type n,d,k")->required();
        c->add_option("--sub", tr_o.sub, "subsystem triple m,dprime,t")->required();
        c->add_option("--alpha", tr_o.alpha, "stability parameter p/q")->required();
        c->callback([&] {
            set_thread_count(threads);
            CSType T = parse_type_flag(tr_o.type, "--type");
            SubTriple sub = parse_sub_flag(tr_o.sub, "--sub");
            Rational a = Rational::parse(tr_o.alpha);
            emit(doc_transfer(T, sub, a, stability_transfer_check(a, T, sub)));
        });
    }

    // check-extension
    struct {
        std::string type1, type2, alpha;
    } ex_o;
    {
        auto* c = app.add_subcommand("check-extension",
                                     "extension stability: W = q(m*dG-m'*dF) + p(m*t'-m'*t)");
        c->fallthrough();
        c->add_option("--type1", ex_o.type1, "subsystem type n,d,k")->required();
        c->add_option("--type2", ex_o.type2, "quotient type n,d,k")->required();
        c->add_option("--alpha", ex_o.alpha, "stability parameter p/q")->required();
        c->callback([&] {
            set_thread_count(threads);
            CSType T1 = parse_type_flag(ex_o.type1, "--type1");
            CSType T2 = parse_type_flag(ex_o.type2, "--type2");
            Rational a = Rational::parse(ex_o.alpha);
            emit(doc_extension(T1, T2, a, extension_stability_check(a, T1, T2)));
        });
    }

    // certify
    struct {
        long long genus = 0;
        bool general = true;
        std::string type, alpha;
        long long depth = 2;
        bool use_c21 = false;
        bool assume = false;
    } ce_o;
    {
        auto* c = app.add_subcommand("certify",
                                     "search for a splitting certificate of non-emptiness");
        c->fallthrough();
        c->add_option("--genus", ce_o.genus, "curve genus (>= 2)")->required();
        c->add_option("--general-curve", ce_o.general, "assume a general curve");
        c->add_option("--type", ce_o.type, "target type n,d,k")->required();
        c->add_option("--alpha", ce_o.alpha, "stability parameter p/q > 0")->required();
        c->add_option("--depth", ce_o.depth, "recursion depth for rank >= 2 pieces")
            ->capture_default_str();
        c->add_flag("--use-c21", ce_o.use_c21, "use C21 as the positivity check");
        c->add_flag("--assume-nonempty", ce_o.assume,
                    "permit flagged assumed-nonempty pieces at depth 0");
        c->callback([&] {
            set_thread_count(threads);
            CurveContext ctx{ce_o.genus, ce_o.general};
            CSType T = parse_type_flag(ce_o.type, "--type");
            Rational a = Rational::parse(ce_o.alpha);
            CertificateOptions opts{ce_o.use_c21, ce_o.assume};
            auto cert = nonemptiness_certificate(ctx, a, T, ce_o.depth, opts);
            emit(doc_certify(ctx, T, a, ce_o.depth, opts, cert));
            if (!cert) exit_code = 3;
        });
    }

    // dim-bound
    struct {
        long long genus = 0;
        bool general = true;
        std::string type1, type2;
        long long dim_g1 = -1, dim_g2 = -1, ext2 = 0;
    } db_o;
    {
        auto* c = app.add_subcommand("dim-bound",
                                     "stratum dimension bound dimG1 + dimG2 + C21 + ext2 - 1");
        c->fallthrough();
        c->add_option("--genus", db_o.genus, "curve genus (>= 2)")->required();
        c->add_option("--general-curve", db_o.general, "assume a general curve");
        c->add_option("--type1", db_o.type1, "first piece n,d,k")->required();
        c->add_option("--type2", db_o.type2, "second piece n,d,k")->required();
        c->add_option("--dim-g1", db_o.dim_g1,
                      "dim of the first moduli (default: rank-1 Brill-Noether dim)");
        c->add_option("--dim-g2", db_o.dim_g2, "dim of the second moduli (same default)");
        c->add_option("--ext2", db_o.ext2, "assumed dim Ext^2 constant")->capture_default_str();
        c->callback([&] {
            set_thread_count(threads);
            CurveContext ctx{db_o.genus, db_o.general};
            CSType T1 = parse_type_flag(db_o.type1, "--type1");
            CSType T2 = parse_type_flag(db_o.type2, "--type2");
            auto dim_of = [&](const CSType& P, long long given, const char* flag) -> long long {
                if (given >= 0) return given;
                if (P.n != 1)
                    throw std::invalid_argument(std::string(flag) +
                                                " is required for a rank >= 2 piece");
                auto dim = rank1_moduli_dim(ctx, P.d, P.k);
                if (!dim)
                    throw std::invalid_argument(
                        std::string("no rank-1 system of degree ") + std::to_string(P.d) +
                        " with " + std::to_string(P.k) + " sections exists; pass " + flag);
                return dim->convert_to<long long>();
            };
            long long d1 = dim_of(T1, db_o.dim_g1, "--dim-g1");
            long long d2 = dim_of(T2, db_o.dim_g2, "--dim-g2");
            Int bound = stratum_dim_bound(ctx, T1, T2, d1, d2, db_o.ext2);
            emit(doc_dim_bound(ctx, T1, T2, d1, d2, db_o.ext2, c21(ctx, T1, T2), bound),
                 "dim_bound");
        });
    }

    // split-model
    struct {
        std::string model, alpha;
        long long m = -1, t = -1;
    } sm_o;
    {
        auto* c = app.add_subcommand("split-model",
                                     "direct-sum oracle: walls, semistability, Segre minimum");
        c->fallthrough();
        c->add_option("--model", sm_o.model, "json file with genus, general_curve, summands")
            ->required();
        c->add_option("--alpha", sm_o.alpha, "evaluate semistability at this alpha");
        c->add_option("--m", sm_o.m, "subset cardinality for the Segre minimum");
        c->add_option("--t", sm_o.t, "subset section-sum for the Segre minimum");
        c->callback([&] {
            set_thread_count(threads);
            std::ifstream in(sm_o.model);
            if (!in) throw std::invalid_argument("cannot open model file: " + sm_o.model);
            Doc j = Doc::parse(in);
            SplitModel M;
            M.ctx.genus = j.at("genus").get<long long>();
            M.ctx.general_curve = j.value("general_curve", true);
            for (const auto& s : j.at("summands"))
                M.summands.push_back(
                    LineSummand{s.at(0).get<long long>(), s.at(1).get<long long>()});
            check_model(M);
            SplitModelResults r;
            r.total = total_type(M);
            r.coincidences = equal_slope_alphas(M);
            if (!sm_o.alpha.empty()) {
                r.alpha = Rational::parse(sm_o.alpha);
                r.semistable = split_semistable(M, *r.alpha);
            }
            if (sm_o.m >= 0 || sm_o.t >= 0) {
                if (sm_o.m < 0 || sm_o.t < 0)
                    throw std::invalid_argument("--m and --t must be given together");
                if (!r.alpha)
                    throw std::invalid_argument("--m/--t need --alpha for the Segre minimum");
                r.m = sm_o.m;
                r.t = sm_o.t;
                r.segre = split_segre(M, *r.alpha, sm_o.m, sm_o.t);
            }
            emit(doc_split_model(M, r));
        });
    }

    // report-g6
    {
        auto* c = app.add_subcommand("report-g6",
                                     "the full genus-6 case study for type (2,13,4)");
        c->fallthrough();
        c->callback([&] {
            set_thread_count(threads);
            emit(report_doc(build_report_g6()));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace cli
