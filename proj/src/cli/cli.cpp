#include "denv/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "denv/families.hpp"
#include "denv/jets.hpp"
#include "denv/koenigs.hpp"
#include "denv/parse.hpp"

namespace denv {

using ojson = nlohmann::ordered_json;

namespace {

ojson optional_str(const std::optional<RatFun>& f) { return f ? ojson(f->str()) : ojson(nullptr); }

ojson order_json(const SolveResult& s) {
    ojson o;
    o["particular"] = s.space ? optional_str(s.space->particular) : ojson(nullptr);
    o["kernel"] = ojson::array();
    if (s.space) {
        for (const auto& k : s.space->kernel) o["kernel"].push_back(k.str());
    }
    o["status"] = s.found() ? "found" : s.space ? "none" : "skipped";
    o["reason"] = s.reason;
    o["denominator_degree"] = s.den_degree;
    o["numerator_degree"] = s.num_degree;
    return o;
}

ojson g1_json(const G1Result& g) {
    return ojson{{"n", g.n}, {"eta", g.eta.str()}, {"c", g.c.str()}, {"strict", g.strict()}};
}

std::string space_text(const SolveResult& s) {
    if (!s.space) return "skipped (" + s.reason + ")";
    std::string out = s.space->particular ? s.space->particular->str() : "none";
    out += ", kernel dim " + std::to_string(s.space->kernel.size());
    for (const auto& k : s.space->kernel) out += " [" + k.str() + "]";
    return out;
}

}  // namespace

ojson report_json(const ClassificationReport& rep, const ReportOptions& opt) {
    const SolveCaps& c = rep.caps;
    ojson j;
    j["version"] = kVersion;
    j["input"] = opt.input;
    j["map"] = rep.map.str();
    j["degree"] = rep.degree;
    j["field"] = opt.field.tag();
    j["caps"] = ojson{
        {"max_den_deg", c.max_den_deg},
        {"extra_num_deg", c.extra_num_deg ? ojson(*c.extra_num_deg) : ojson(nullptr)},
        {"pole_mult", c.pole_mult},
        {"n_range", c.n_max},
        {"orbit_cap", c.dynamics.orbit_cap},
        {"height_cap", c.dynamics.height_cap.value_or(default_height_cap(rep.map))},
        {"precision", c.dynamics.precision},
    };
    ojson g1;
    g1["strict"] = rep.g1 ? g1_json(*rep.g1) : ojson(nullptr);
    g1["attempts"] = ojson::array();
    for (const auto& g : rep.g1_attempts) g1["attempts"].push_back(g1_json(g));
    j["orders"] = ojson{{"g1", g1}, {"g2", order_json(rep.g2)}, {"g3", order_json(rep.g3)}};
    j["verdict"] = rep.verdict();
    j["minimal_order"] = rep.minimal_order;
    j["equation"] = rep.equation ? ojson(rep.equation->str()) : ojson(nullptr);
    j["family_guess"] = rep.family_guess;
    j["evidence"] = ojson{{"critical", rep.critical},
                          {"postcritical", rep.postcritical},
                          {"closure_iterations", rep.closure_iterations},
                          {"exceptional", rep.exceptional}};
    j["timings_ms"] = ojson::object();
    for (const auto& [k, v] : opt.timings_ms) j["timings_ms"][k] = v;
    return j;
}

std::string report_text(const ClassificationReport& rep, const ReportOptions& opt) {
    std::ostringstream os;
    os << "map:          " << rep.map.str() << "  (degree " << rep.degree << ", field " << opt.field.tag() << ")\n";
    os << "verdict:      " << rep.verdict() << "\n";
    if (rep.equation) os << "equation:     " << rep.equation->str() << "  (order " << rep.minimal_order << ")\n";
    os << "family guess: " << rep.family_guess << "\n";
    os << "g1:           ";
    if (rep.g1_attempts.empty()) os << "no candidate";
    for (std::size_t i = 0; i < rep.g1_attempts.size(); ++i) {
        const auto& g = rep.g1_attempts[i];
        os << (i ? "; " : "") << "n=" << g.n << " eta=" << g.eta.str() << " c=" << g.c.str();
    }
    os << "\n";
    os << "g2:           " << space_text(rep.g2) << "\n";
    os << "g3:           " << space_text(rep.g3) << "\n";
    os << "critical:     " << rep.critical << "\n";
    os << "postcritical: " << rep.postcritical;
    if (rep.degree >= 2) os << "  (" << rep.closure_iterations << " iterations)";
    os << "\n";
    os << "exceptional:  " << rep.exceptional << "\n";
    for (const auto& [k, v] : opt.timings_ms) os << "time " << k << ": " << v << " ms\n";
    return os.str();
}

namespace {

struct CommonOpts {
    std::string field = "rational";
    bool json = false;
    mpfr_prec_t precision = kDefaultPrecision;
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--field", o.field, "rational | gauss | sqrt:<d>");
    app->add_flag("--json", o.json, "JSON output");
    app->add_option("--precision", o.precision, "bits for numeric work");
}

void check_precision(mpfr_prec_t p) {
    if (p < kMinPrecision) throw Error("precision must be at least " + std::to_string(kMinPrecision) + " bits");
}

Jet parse_jet(const std::string& src, const Field& field) {
    std::string body = src;
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<Scalar> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        parts.push_back(parse_scalar(body.substr(start, comma - start), field));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() < 3) throw Error("a jet needs source, target and at least one derivative");
    return {parts[0], parts[1], std::vector<Scalar>(parts.begin() + 2, parts.end())};
}

ojson jet_json(const Jet& j) {
    ojson d = ojson::array();
    for (const auto& v : j.derivatives()) d.push_back(v.str());
    return ojson{{"source", j.source().str()}, {"target", j.target().str()}, {"derivatives", d}, {"text", j.str()}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"denv: D-envelopes of rational maps of the projective line"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // classify
    CommonOpts cc;
    std::string expr;
    SolveCaps caps;
    int extra = -1;
    long height_cap = 0;
    bool timings = false;
    auto* classify_cmd = app.add_subcommand("classify", "Lowest-order equation satisfied by the map");
    classify_cmd->add_option("map", expr, "rational expression in x")->required();
    add_common(classify_cmd, cc);
    classify_cmd->add_option("--max-den-deg", caps.max_den_deg, "cap on the ansatz denominator degree");
    classify_cmd->add_option("--extra-num-deg", extra, "numerator degree beyond the denominator degree");
    classify_cmd->add_option("--pole-mult", caps.pole_mult, "pole order for G2 (G3 uses twice this)");
    classify_cmd->add_option("--orbit-cap", caps.dynamics.orbit_cap, "cap on postcritical support size");
    classify_cmd->add_option("--height-cap", height_cap, "cap on postcritical coefficient height in bits");
    classify_cmd->add_option("--n-range", caps.n_max, "G1 exponents in [-N, N] without 0");
    classify_cmd->add_flag("--timings", timings, "report wall-clock timings");

    // family
    CommonOpts fc;
    std::string family;
    int k = 2;
    std::string norm = "classical";
    std::string g2s = "0", g3s = "0";
    auto* family_cmd = app.add_subcommand("family", "Family generators: monomial, chebyshev, lattes, mu");
    family_cmd->add_option("name", family, "monomial | chebyshev | lattes | mu")->required();
    family_cmd->add_option("k,--k", k, "degree parameter, or case id for mu");
    family_cmd->add_option("--normalization", norm, "classical | dilated");
    family_cmd->add_option("--g2", g2s, "curve invariant g2 (y^2 = 4x^3 - g2 x - g3)");
    family_cmd->add_option("--g3", g3s, "curve invariant g3");
    add_common(family_cmd, fc);

    // koenigs
    CommonOpts kc;
    std::string kexpr, point;
    int order = kDefaultKoenigsOrder;
    auto* koenigs_cmd = app.add_subcommand("koenigs", "Koenigs linearizer series at a repelling fixed point");
    koenigs_cmd->add_option("map", kexpr, "rational expression in x")->required();
    koenigs_cmd->add_option("--point", point, "fixed point; default: first repelling point found");
    koenigs_cmd->add_option("--order", order, "truncation order");
    add_common(koenigs_cmd, kc);

    // jets
    CommonOpts jc;
    std::string jop;
    std::vector<std::string> jargs;
    std::string jpoint = "0";
    int jorder = 3;
    auto* jets_cmd = app.add_subcommand(
        "jets", "Jet algebra. Jets are written \"x, y, y1, ..., yk\"; compose J H gives the jet of H o J");
    jets_cmd->add_option("op", jop, "compose | invert | identity | of-map")->required();
    jets_cmd->add_option("args", jargs, "jets, or the map for of-map");
    jets_cmd->add_option("--point", jpoint, "source point for identity and of-map");
    jets_cmd->add_option("--order", jorder, "jet order for identity and of-map");
    add_common(jets_cmd, jc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*classify_cmd) {
            check_precision(cc.precision);
            const Field field = Field::parse(cc.field);
            if (extra >= 0) caps.extra_num_deg = extra;
            if (height_cap != 0) {
                if (height_cap < 1) throw Error("caps must be at least 1");
                caps.dynamics.height_cap = static_cast<std::size_t>(height_cap);
            }
            caps.dynamics.field = field;
            caps.dynamics.precision = cc.precision;
            caps.validate();
            using clock = std::chrono::steady_clock;
            const auto t0 = clock::now();
            const RatFun r = parse_ratfun(expr, field);
            const auto t1 = clock::now();
            const ClassificationReport rep = classify(r, caps);
            const auto t2 = clock::now();
            ReportOptions opt{expr, field, {}};
            if (timings) {
                opt.timings_ms["parse"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
                opt.timings_ms["classify"] = std::chrono::duration<double, std::milli>(t2 - t1).count();
            }
            if (cc.json) {
                out << report_json(rep, opt).dump(2) << "\n";
            } else {
                out << report_text(rep, opt);
            }
            return 0;
        }
        if (*family_cmd) {
            const Field field = Field::parse(fc.field);
            RatFun r;
            ojson j{{"family", family}};
            if (family == "monomial") {
                r = monomial(k);
            } else if (family == "chebyshev") {
                r = chebyshev(k, parse_chebyshev_norm(norm));
                j["normalization"] = norm;
            } else if (family == "lattes") {
                r = lattes({parse_scalar(g2s, field), parse_scalar(g3s, field), k});
                j["g2"] = g2s;
                j["g3"] = g3s;
            } else if (family == "mu") {
                const KnownMu m = known_mu({k, parse_scalar(g2s, field), parse_scalar(g3s, field)});
                j["case"] = k;
                j["mu"] = m.mu.str();
                j["verified"] = m.verified;
                j["note"] = m.note;
                if (fc.json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << m.mu.str() << "\n";
                }
                return 0;
            } else {
                throw Error("unknown family '" + family + "' (expected monomial, chebyshev, lattes or mu)");
            }
            j["k"] = k;
            j["map"] = r.str();
            j["degree"] = r.degree();
            if (fc.json) {
                out << j.dump(2) << "\n";
            } else {
                out << r.str() << "\n";
            }
            return 0;
        }
        if (*koenigs_cmd) {
            check_precision(kc.precision);
            const Field field = Field::parse(kc.field);
            const RatFun r = parse_ratfun(kexpr, field);
            KoenigsSeries ks;
            if (point.empty()) {
                DynamicsCaps dc;
                dc.field = field;
                dc.precision = kc.precision;
                ks = koenigs_series(r, repelling_point_avoiding(r, Divisor(), dc), order, kc.precision);
            } else {
                const Scalar p = parse_scalar(point, field);
                if (!(r.eval(PointP1(p)) == PointP1(p))) throw Error("point " + p.str() + " is not fixed by the map");
                ks = koenigs_series(r, p, order);
            }
            const BigFloat res = linearization_residual(r, ks);
            const std::string res_text = ks.is_exact() ? (res.is_zero() ? "0" : res.str(20)) : res.str(6);
            const auto coeffs = ks.coefficient_strings();
            if (kc.json) {
                ojson j{{"map", r.str()},
                        {"point", ks.point},
                        {"multiplier", ks.multiplier},
                        {"mode", ks.is_exact() ? "exact" : "numeric"},
                        {"order", order},
                        {"coefficients", coeffs},
                        {"residual", res_text}};
                out << j.dump(2) << "\n";
            } else {
                out << "point: " << ks.point << "\nmultiplier: " << ks.multiplier << "\nmode: "
                    << (ks.is_exact() ? "exact" : "numeric") << "\n";
                for (std::size_t i = 0; i < coeffs.size(); ++i) out << "a_" << i + 1 << " = " << coeffs[i] << "\n";
                out << "residual: " << res_text << "\n";
            }
            return 0;
        }
        if (*jets_cmd) {
            const Field field = Field::parse(jc.field);
            std::optional<Jet> result;
            auto need = [&](std::size_t n) {
                if (jargs.size() != n) throw Error("jets " + jop + " takes " + std::to_string(n) + " argument(s)");
            };
            if (jop == "compose") {
                need(2);
                result = jet_compose(parse_jet(jargs[0], field), parse_jet(jargs[1], field));
            } else if (jop == "invert") {
                need(1);
                result = jet_invert(parse_jet(jargs[0], field));
            } else if (jop == "identity") {
                need(0);
                result = jet_identity(parse_scalar(jpoint, field), jorder);
            } else if (jop == "of-map") {
                need(1);
                result = jet_of_map(parse_ratfun(jargs[0], field), PointP1(parse_scalar(jpoint, field)), jorder);
            } else {
                throw Error("unknown jets operation '" + jop + "'");
            }
            if (jc.json) {
                out << jet_json(*result).dump(2) << "\n";
            } else {
                out << result->str() << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "denv: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "denv: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace denv
