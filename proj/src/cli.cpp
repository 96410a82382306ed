#include "newton_implicit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "newton_implicit/oracle.hpp"
#include "newton_implicit/subdivisions.hpp"

namespace ni {

using nlohmann::json;

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax:
        case ErrorKind::ZeroPolynomial:
        case ErrorKind::BadCoefficient:
        case ErrorKind::DegreeSubstitutionDetected:
        case ErrorKind::EmptyAfterReduction: return kExitParse;
        case ErrorKind::UnclassifiableConfiguration: return kExitClassification;
        case ErrorKind::ChainMismatch:
        case ErrorKind::InconsistentChains: return kExitContainment;
        case ErrorKind::KernelDimensionNotOne:
        case ErrorKind::ZeroResultant:
        case ErrorKind::FactorSelectionAmbiguous:
        case ErrorKind::ResamplingExhausted: return kExitOracle;
        case ErrorKind::CapExceeded: return kExitCap;
        case ErrorKind::Io: return kExitIo;
        default: return kExitInternal;
    }
}

std::uint64_t default_seed() {
    const char* s = std::getenv("NEWTON_IMPLICIT_SEED");
    if (!s || !*s) return kDefaultSeed;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    return *end == '\0' ? v : kDefaultSeed;
}

namespace {

json point_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<LatticePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

json curve_json(const ParametricCurve& c) { return json::parse(curve_to_json(c)); }

json shape_json(const ShapeReport& r) { return {{"pass", r.pass}, {"clause", r.clause}, {"cuts", r.cuts}}; }

json rat_json(const Rat& q) { return q.get_str(); }

// Interpolation over the degree-bound polygon is skipped beyond this many columns.
constexpr std::size_t kInterpolationColumns = 300;

std::size_t interpolation_columns(const ParametricCurve& c) {
    return lattice_points(degree_bound_polygon(degree_bounds(normalize(c)))).size();
}

struct OracleRun {
    std::optional<ImplicitPolynomial> phi;
    json methods = json::object();
    std::optional<bool> agree;
};

// Sylvester first; interpolation as a second opinion when small enough.
OracleRun run_oracles(const ParametricCurve& c, std::uint64_t seed) {
    OracleRun r;
    std::optional<ImplicitPolynomial> syl, itp;
    std::optional<Error> first;
    try {
        syl = implicitize_sylvester(c, seed);
        r.methods["sylvester"] = "ok";
    } catch (const Error& e) {
        r.methods["sylvester"] = error_kind_name(e.kind());
        first = e;
    }
    if (interpolation_columns(c) <= kInterpolationColumns) {
        try {
            itp = implicitize_interpolation(c, seed);
            r.methods["interpolation"] = "ok";
        } catch (const Error& e) {
            r.methods["interpolation"] = error_kind_name(e.kind());
            if (!first) first = e;
        }
    } else {
        r.methods["interpolation"] = "skipped";
    }
    if (syl && itp) r.agree = same_up_to_scale(*syl, *itp);
    if (syl)
        r.phi = syl;
    else if (itp)
        r.phi = itp;
    else if (first)
        throw *first;
    return r;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json polygon_json(const LatticePolygon& p) { return points_json(p.vertices); }

json predict_report(const ParametricCurve& input) {
    ParametricCurve n = normalize(input);
    PredictedPolygon pp = predict(input);
    json j;
    j["command"] = "predict";
    j["input"] = curve_json(input);
    j["class"] = class_name(pp.cls);
    if (pp.cls == CurveClass::SameDenominator) {
        const auto& c = pp.classification;
        j["case"] = case_name(c.tag);
        j["roles"] = {{"i", c.i}, {"j", c.j}, {"k", c.k}, {"reversed", c.reversed}};
    } else {
        j["case"] = nullptr;
    }
    j["vertices"] = polygon_json(pp.polygon);
    json cands = json::array();
    for (const auto& c : pp.candidates) {
        bool vertex = std::find(pp.polygon.vertices.begin(), pp.polygon.vertices.end(), c.point) !=
                      pp.polygon.vertices.end();
        cands.push_back({{"point", point_json(c.point)}, {"label", c.label}, {"vertex", vertex}});
    }
    j["candidates"] = cands;
    json bps = json::array();
    for (const auto& b : pp.breakpoints)
        bps.push_back({{"corner", b.corner}, {"p", point_json(b.p)}, {"delta", b.delta}});
    j["breakpoints"] = bps;
    if (pp.cls == CurveClass::DifferentDenominators)
        j["chains"] = {{"upper", points_json(pp.upper.points)}, {"lower", points_json(pp.lower.points)}};
    else
        j["chains"] = nullptr;
    j["shape"] = shape_json(shape_check(pp.polygon, pp.cls));
    DegreeBounds db = degree_bounds(n);
    j["degree_bounds"] = {{"total", db.total},
                          {"deg_x", db.deg_x},
                          {"deg_y", db.deg_y},
                          {"polygon", polygon_json(degree_bound_polygon(db))}};
    if (n.cls == CurveClass::Polynomial && !n.supports_only) {
        auto [cx, cy] = extreme_coefficients(n.P0, n.P1);
        j["extreme_coefficients"] = {{"x", rat_json(cx)}, {"y", rat_json(cy)}, {"shared_sign", "unknown"}};
    }
    return j;
}

json verify_report(const ParametricCurve& input, const VerifyOptions& opt) {
    PredictedPolygon pp = predict(input);
    json j;
    j["command"] = "verify";
    j["input"] = curve_json(input);
    j["class"] = class_name(pp.cls);
    j["predicted"] = polygon_json(pp.polygon);
    j["seed"] = opt.seed;
    json draws = json::array();
    int rounds = input.supports_only ? std::max(opt.trials, 1) : 1;
    bool contains_all = true;
    json last;
    for (int r = 0; r < rounds; ++r) {
        ParametricCurve c = input.supports_only ? random_generic_coefficients(input, opt.bound, opt.seed + r) : input;
        OracleRun o = run_oracles(c, opt.seed + r);
        LatticePolygon op = newton_polygon(*o.phi);
        bool cont = contains(pp.polygon, op);
        bool eq = pp.polygon == op;
        json d;
        if (input.supports_only) d["curve"] = curve_json(c);
        d["oracle"] = polygon_json(op);
        d["phi"] = json::parse(o.phi->to_json());
        d["methods"] = o.methods;
        d["methods_agree"] = opt_bool(o.agree);
        d["contains"] = cont;
        d["equals"] = eq;
        draws.push_back(d);
        last = d;
        contains_all = contains_all && cont;
        if (eq || !cont) break;
    }
    j["draws"] = draws;
    j["oracle"] = last["oracle"];
    j["phi"] = last["phi"];
    j["methods_agree"] = last["methods_agree"];
    j["contains"] = contains_all;
    j["equals"] = last["equals"];
    return j;
}

json implicitize_report(const ParametricCurve& input, std::uint64_t seed, int bound) {
    ParametricCurve c = input.supports_only ? random_generic_coefficients(input, bound, seed) : input;
    OracleRun o = run_oracles(c, seed);
    json j;
    j["command"] = "implicitize";
    j["input"] = curve_json(input);
    if (input.supports_only) j["curve"] = curve_json(c);
    j["phi"] = json::parse(o.phi->to_json());
    j["text"] = o.phi->to_text();
    j["newton_polygon"] = polygon_json(newton_polygon(*o.phi));
    j["methods"] = o.methods;
    j["methods_agree"] = opt_bool(o.agree);
    return j;
}

long long enumerate_certificates(const ParametricCurve& input, const EnumerateOptions& opt,
                                 const std::function<void(const json&)>& emit) {
    ParametricCurve n = normalize(input);
    long long count = 0;
    auto room = [&] { return opt.limit < 0 || count < opt.limit; };
    if (n.cls == CurveClass::SameDenominator) {
        SameDenomData d = derive_same_denom(n);
        LiftingHull h = sample_lifting_hull(d, opt.trials, opt.seed);
        for (const auto& [p, w] : h.realized) {
            if (!room()) break;
            MixedSubdivision s = subdivision_from_lifting(d, w);
            auto e = exponent_from_subdivision(s);
            json lifts = json::array();
            for (const auto& v : w.values) lifts.push_back(v);
            json cells = json::array();
            for (const auto& c : s.cells) {
                json faces = json::array();
                for (const auto& f : c.faces) faces.push_back(f);
                cells.push_back({{"faces", faces},
                                 {"kind", cell_kind_name(c.kind)},
                                 {"vertex_support", c.vertex_support},
                                 {"double_area", c.double_area}});
            }
            bool vertex = std::find(h.polygon.vertices.begin(), h.polygon.vertices.end(), p) != h.polygon.vertices.end();
            emit({{"kind", "lifting"},
                  {"index", count},
                  {"exponent", {e[0], e[1], e[2]}},
                  {"point", point_json(p)},
                  {"vertex", vertex},
                  {"lifting", lifts},
                  {"cells", cells}});
            ++count;
        }
        return count;
    }
    DiffDenomData d = derive_diff_denom(n);
    Selection sel = make_selection(d, opt.selection == 2 ? SelectionKind::Selection2 : SelectionKind::Selection1);
    int cap = opt.force ? std::numeric_limits<int>::max() : kDefaultStaircaseCap;
    if (!room()) return 0;
    enumerate_staircases(
        d.A0, d.A1,
        [&](const Staircase& s) {
            json path = json::array();
            for (const auto& [i, k] : s.path) path.push_back({i, k});
            json tris = json::array();
            for (const auto& t : s.triangles(d.A0, d.A1)) {
                const Support& base = t.base_in_A0 ? d.A0 : d.A1;
                const Support& apex = t.base_in_A0 ? d.A1 : d.A0;
                tris.push_back({{"base_support", t.base_in_A0 ? 0 : 1},
                                {"base", {base[t.base_lo], base[t.base_hi]}},
                                {"apex", apex[t.apex]},
                                {"volume", t.volume}});
            }
            emit({{"kind", "staircase"},
                  {"index", count},
                  {"selection", opt.selection == 2 ? 2 : 1},
                  {"path", path},
                  {"triangles", tris},
                  {"exponent", point_json(exponents_from_staircase(s, sel))}});
            ++count;
            return room();
        },
        cap);
    return count;
}

namespace {

constexpr int kSvgScale = 40;
constexpr int kSvgMargin = 40;

void svg_shape(std::ostringstream& os, const LatticePolygon& p, long long H, const char* cls, const char* stroke,
               const char* fill, const char* dash) {
    auto X = [](long long x) { return kSvgMargin + x * kSvgScale; };
    auto Y = [H](long long y) { return kSvgMargin + (H - y) * kSvgScale; };
    std::string extra = *dash ? std::string(" stroke-dasharray=\"") + dash + "\"" : "";
    if (p.size() >= 3) {
        os << "<polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << X(p.vertices[i].x) << "," << Y(p.vertices[i].y);
        os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"3\"" << extra << "/>\n";
    } else if (p.size() == 2) {
        os << "<line class=\"" << cls << "\" x1=\"" << X(p.vertices[0].x) << "\" y1=\"" << Y(p.vertices[0].y)
           << "\" x2=\"" << X(p.vertices[1].x) << "\" y2=\"" << Y(p.vertices[1].y) << "\" stroke=\"" << stroke
           << "\" stroke-width=\"3\"" << extra << "/>\n";
    }
    for (const auto& v : p.vertices)
        os << "<circle class=\"" << cls << "-vertex\" cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\" r=\"5\" fill=\""
           << stroke << "\"/>\n";
}

}  // namespace

std::string render_svg(const LatticePolygon& predicted, const std::optional<LatticePolygon>& oracle) {
    long long W = 1, H = 1;
    for (const auto& v : predicted.vertices) {
        W = std::max(W, v.x);
        H = std::max(H, v.y);
    }
    if (oracle)
        for (const auto& v : oracle->vertices) {
            W = std::max(W, v.x);
            H = std::max(H, v.y);
        }
    long long width = W * kSvgScale + 2 * kSvgMargin, height = H * kSvgScale + 2 * kSvgMargin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (long long x = 0; x <= W; ++x)
        os << "<line x1=\"" << kSvgMargin + x * kSvgScale << "\" y1=\"" << kSvgMargin << "\" x2=\""
           << kSvgMargin + x * kSvgScale << "\" y2=\"" << kSvgMargin + H * kSvgScale << "\"/>\n";
    for (long long y = 0; y <= H; ++y)
        os << "<line x1=\"" << kSvgMargin << "\" y1=\"" << kSvgMargin + y * kSvgScale << "\" x2=\""
           << kSvgMargin + W * kSvgScale << "\" y2=\"" << kSvgMargin + y * kSvgScale << "\"/>\n";
    os << "</g>\n";
    svg_shape(os, predicted, H, "predicted", "#1f4e9c", "#1f4e9c33", "");
    if (oracle) svg_shape(os, *oracle, H, "oracle", "#c0392b", "none", "6,4");
    os << "</svg>\n";
    return os.str();
}

namespace {

std::string text_of(const json& j) {
    std::ostringstream os;
    const std::string cmd = j.value("command", "");
    if (cmd == "predict") {
        os << "class: " << j["class"].get<std::string>() << "\n";
        if (!j["case"].is_null()) os << "case: " << j["case"].get<std::string>() << "\n";
        os << "vertices: " << j["vertices"].dump() << "\n";
        for (const auto& c : j["candidates"])
            os << "  " << c["point"].dump() << " " << c["label"].get<std::string>() << (c["vertex"].get<bool>() ? " *" : "")
               << "\n";
        os << "shape: " << (j["shape"]["pass"].get<bool>() ? "pass" : "FAIL " + j["shape"]["clause"].get<std::string>())
           << "\n";
    } else if (cmd == "verify") {
        os << "predicted: " << j["predicted"].dump() << "\n";
        os << "oracle: " << j["oracle"].dump() << "\n";
        os << (j["contains"].get<bool>() ? "CONTAINS" : "NOT CONTAINED") << " "
           << (j["equals"].get<bool>() ? "EQUALS" : "NOT EQUAL") << "\n";
    } else if (cmd == "implicitize") {
        os << j["text"].get<std::string>() << "\n";
        os << "newton polygon: " << j["newton_polygon"].dump() << "\n";
    } else {
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton polygons of implicit equations of parametric curves", "newton-implicit"};
    app.require_subcommand(1);
    std::string curve, json_file, out_file, format = "json";
    int trials = -1, bound = 16, selection = 1;
    long long limit = -1;
    bool force = false;
    std::uint64_t seed = default_seed();

    auto add_common = [&](CLI::App* s) {
        auto* g = s->add_option_group("input");
        g->add_option("--curve", curve, "curve as \"x=...; y=...\" or JSON");
        g->add_option("--json", json_file, "file holding a JSON curve");
        g->require_option(1);
        s->add_option("--seed", seed, "random seed");
        s->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto* predict_cmd = app.add_subcommand("predict", "predict the implicit polygon");
    add_common(predict_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "compare the prediction with exact implicitization");
    add_common(verify_cmd);
    verify_cmd->add_option("--trials", trials, "coefficient draws for supports-only input");
    verify_cmd->add_option("--bound", bound, "coefficient bound for random draws");
    auto* enum_cmd = app.add_subcommand("enumerate", "stream staircase or lifting certificates");
    add_common(enum_cmd);
    enum_cmd->add_option("--selection", selection)->check(CLI::IsMember({1, 2}));
    enum_cmd->add_option("--limit", limit, "stop after this many certificates");
    enum_cmd->add_option("--trials", trials, "random liftings for same-denominator curves");
    enum_cmd->add_flag("--force", force, "lift the enumeration cap");
    auto* impl_cmd = app.add_subcommand("implicitize", "compute the implicit equation");
    add_common(impl_cmd);
    impl_cmd->add_option("--bound", bound, "coefficient bound for supports-only input");
    auto* plot_cmd = app.add_subcommand("plot", "render the predicted polygon as SVG");
    add_common(plot_cmd);
    plot_cmd->add_option("--out", out_file, "SVG output file (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        ParametricCurve c = parse_curve(json_file.empty() ? curve : read_file(json_file));
        auto write = [&](const json& j) {
            if (format == "text")
                out << text_of(j);
            else
                out << j.dump(2) << "\n";
        };
        if (*predict_cmd) {
            write(predict_report(c));
            return kExitOk;
        }
        if (*verify_cmd) {
            VerifyOptions o;
            if (trials > 0) o.trials = trials;
            o.bound = bound;
            o.seed = seed;
            json j = verify_report(c, o);
            write(j);
            return j["contains"].get<bool>() ? kExitOk : kExitContainment;
        }
        if (*enum_cmd) {
            EnumerateOptions o;
            o.selection = selection;
            o.limit = limit;
            o.force = force;
            o.seed = seed;
            if (trials > 0) o.trials = trials;
            enumerate_certificates(c, o, [&](const json& j) {
                if (format == "text") {
                    out << j["kind"].get<std::string>() << " " << j["index"] << " -> " << j["exponent"].dump() << "\n";
                } else {
                    out << j.dump() << "\n";
                }
            });
            return kExitOk;
        }
        if (*impl_cmd) {
            write(implicitize_report(c, seed, bound));
            return kExitOk;
        }
        if (*plot_cmd) {
            PredictedPolygon pp = predict(c);
            std::optional<LatticePolygon> oracle;
            if (!c.supports_only) {
                try {
                    oracle = newton_polygon(implicitize_sylvester(c, seed));
                } catch (const Error&) {
                }
            }
            std::string svg = render_svg(pp.polygon, oracle);
            if (out_file.empty()) {
                out << svg;
            } else {
                std::ofstream f(out_file, std::ios::binary);
                if (!f) throw Error(ErrorKind::Io, "cannot write " + out_file);
                f << svg;
                if (!f) throw Error(ErrorKind::Io, "write failed for " + out_file);
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace ni
