#include "ulfp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulfp/errors.hpp"
#include "ulfp/graph.hpp"
#include "ulfp/io.hpp"

namespace ulfp::cli {

using nlohmann::json;

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

std::string kind_name(SurfaceKind kind) { return kind == SurfaceKind::Torus11 ? "torus" : "sphere"; }

json config_json(const Config& cfg) {
    return {{"M", cfg.M},
            {"delta", cfg.delta},
            {"kind", kind_name(cfg.kind)},
            {"seed", cfg.seed},
            {"exact_digit_cap", cfg.exact_digit_cap},
            {"provenance", "M and delta are user-chosen placeholders"}};
}

bounds::Surface parse_surface(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("surface must be 'g,n', got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("surface must be 'g,n', got '" + text + "'");
    }
}

json error_json(std::string_view kind, std::string_view message) {
    return {{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Uniform local finiteness toolkit for Farey-graph curve complexes", "ulfp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", tool_version);

    std::string kind = "torus";
    app.add_option("--M", cfg.M, "Bounded geodesic image constant (placeholder default)")
        ->envname("ULFP_M")
        ->check(CLI::PositiveNumber);
    app.add_option("--delta", cfg.delta, "Hyperbolicity constant / slice radius (placeholder default)")
        ->envname("ULFP_DELTA")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "Seed for sampled computations")->envname("ULFP_SEED");
    app.add_option("--kind", kind, "Surface kind: torus (S_1,1) or sphere (S_0,4)")
        ->check(CLI::IsMember({"torus", "sphere"}));
    app.add_option("--digit-cap", cfg.exact_digit_cap, "Exact-mode digit cap before log10 fallback");

    json inputs = json::object();
    json result = json::object();
    std::function<void()> action;

    // dist / geod
    std::string x, y, z;
    auto* dist = app.add_subcommand("dist", "Curve-graph distance between two slopes");
    dist->add_option("x", x)->required();
    dist->add_option("y", y)->required();
    dist->callback([&] {
        action = [&] {
            inputs = {{"x", x}, {"y", y}};
            result["distance"] = distance(parse_slope(x), parse_slope(y));
        };
    });

    auto* geod = app.add_subcommand("geod", "All geodesics between two slopes");
    geod->add_option("x", x)->required();
    geod->add_option("y", y)->required();
    geod->callback([&] {
        action = [&] {
            inputs = {{"x", x}, {"y", y}};
            const auto gs = geodesics(parse_slope(x), parse_slope(y));
            json list = json::array();
            for (const auto& g : gs) list.push_back(to_string(g));
            result["distance"] = gs.front().length();
            result["count"] = gs.size();
            result["geodesics"] = list;
        };
    });

    // twist
    std::int64_t n = 0;
    bool half = false;
    auto* twist = app.add_subcommand("twist", "Apply T_x^n (or H_x^n with --half) to y");
    twist->add_option("x", x)->required();
    twist->add_option("n", n)->required()->allow_extra_args(false);
    twist->add_option("y", y)->required();
    twist->add_flag("--half", half, "Half twist (four-holed sphere)");
    twist->callback([&] {
        action = [&] {
            inputs = {{"x", x}, {"n", n}, {"y", y}, {"half", half}};
            const auto sx = parse_slope(x), sy = parse_slope(y);
            const auto k = half ? SurfaceKind::Sphere04 : cfg.kind;
            const auto image = half ? half_twist(sx, n, sy) : dehn_twist(k, sx, n, sy);
            result["result"] = to_string(image);
            result["kind"] = kind_name(k);
            if (sy != sx) result["annular"] = annular_record(k, Annulus{sx}, sy, image);
        };
    });

    // project
    std::string core;
    auto* project = app.add_subcommand("project", "Annular projection distance d^_Z(y, z) for Z = R(core)");
    project->add_option("--core", core)->required();
    project->add_option("y", y)->required();
    project->add_option("z", z)->required();
    project->callback([&] {
        action = [&] {
            inputs = {{"core", core}, {"y", y}, {"z", z}};
            result["record"] = annular_record(cfg.kind, Annulus{parse_slope(core)}, parse_slope(y), parse_slope(z));
        };
    });

    // ulfp
    std::string set_file, graph_file, pairs_file;
    int l = 0, k = 0;
    auto* ulfp = app.add_subcommand("ulfp", "P(l,k) check with witness or ball-cover certificate");
    ulfp->add_option("--set", set_file)->required();
    ulfp->add_option("--l", l)->required();
    ulfp->add_option("--k", k)->required();
    ulfp->callback([&] {
        action = [&] {
            inputs = {{"set", set_file}, {"l", l}, {"k", k}};
            auto in = open_input(set_file);
            const auto a = read_slope_list(in);
            const auto cert = ulfp_witness(cfg.kind, a, l, k);
            result["holds"] = std::holds_alternative<Covered>(cert);
            result["certificate"] = to_json(cert);
            result["verified"] = verify_certificate(cfg.kind, a, l, k, cert);
        };
    });

    // audit-bgit
    auto* audit = app.add_subcommand("audit-bgit", "Empirical bounded-geodesic-image constant over a pair corpus");
    audit->add_option("--pairs", pairs_file)->required();
    audit->callback([&] {
        action = [&] {
            inputs = {{"pairs", pairs_file}};
            auto in = open_input(pairs_file);
            result["audit"] = to_json(bgit_audit(cfg.kind, read_slope_pairs(in)));
        };
    });

    // slice
    std::string a_text, b_text, c_text;
    int r = 0;
    std::size_t budget = 64;
    std::optional<std::int64_t> weak_d;
    auto* slice = app.add_subcommand("slice", "Slice G(a,b) n N_delta(c) checked against N_S(2M,3)");
    slice->add_option("a", a_text)->required();
    slice->add_option("b", b_text)->required();
    slice->add_option("c", c_text)->required();
    slice->add_option("--r", r, "Endpoint ball radius (sampled lower bound when > 0)")->check(CLI::NonNegativeNumber);
    slice->add_option("--budget", budget, "Number of sampled endpoint pairs when r > 0");
    slice->add_option("--weak", weak_d, "Restrict to D-weakly tight geodesics");
    slice->callback([&] {
        action = [&] {
            // The radius form uses the 2*delta neighbourhood of c.
            const int radius = r == 0 ? cfg.delta : 2 * cfg.delta;
            SliceQuery q{parse_slope(a_text), parse_slope(b_text), parse_slope(c_text), radius, r};
            SliceHarnessOptions opts{cfg.M, weak_d, cfg.delta, budget, cfg.seed};
            inputs = {{"a", a_text}, {"b", b_text}, {"c", c_text}, {"r", r}, {"budget", budget}};
            if (weak_d) inputs["weak"] = *weak_d;
            const json record = to_json(verify_slice_bounds(cfg.kind, q, opts));
            for (const auto& [key, value] : record.items()) result[key] = value;
        };
    });

    // weak-index
    std::string list_text;
    auto* weak = app.add_subcommand("weak-index", "Weak-tightness index of a geodesic");
    weak->add_option("--geodesic", list_text, "Comma-separated slopes")->required();
    weak->callback([&] {
        action = [&] {
            inputs = {{"geodesic", list_text}};
            const auto g = Geodesic::certify(parse_slope_csv(list_text));
            result["report"] = to_json(weak_tight_index(cfg.kind, g));
        };
    });

    // bounds
    std::string surface_text;
    bool slice_form = false, log10_mode = false;
    std::optional<int> weak_bound_d;
    auto* bnd = app.add_subcommand("bounds", "Evaluate N_S(l,k) and slice thresholds");
    bnd->add_option("--surface", surface_text, "g,n")->required();
    bnd->add_option("--l", l);
    bnd->add_option("--k", k);
    bnd->add_flag("--slice", slice_form, "Tight slice thresholds (N_S(2M,3), N_S(4M,3))");
    bnd->add_option("--weak", weak_bound_d, "Weak slice thresholds (N_S(2D,3), N_S(2(D+M),3))");
    bnd->add_flag("--log10", log10_mode, "Report log10 upper bounds only");
    bnd->callback([&] {
        action = [&] {
            const auto s = parse_surface(surface_text);
            const auto mode = log10_mode ? bounds::Mode::Log10 : bounds::Mode::Exact;
            bounds::BoundTable table(cfg.exact_digit_cap);
            inputs = {{"surface", surface_text}};
            result["surface"] = bounds::to_string(s);
            result["complexity"] = bounds::complexity(s);
            auto pair_json = [](const std::pair<bounds::BigBound, bounds::BigBound>& p) {
                return json::array({to_json(p.first), to_json(p.second)});
            };
            if (weak_bound_d) {
                inputs["weak"] = *weak_bound_d;
                result["weak"] = pair_json(bounds::slice_bound_weak(s, *weak_bound_d, cfg.M, mode, table));
            } else if (slice_form) {
                result["slice"] = pair_json(bounds::slice_bound_tight(s, cfg.M, mode, table));
            } else {
                if (l == 0 || k == 0) throw ParseError("bounds needs --l and --k unless --slice or --weak is given");
                inputs["l"] = l;
                inputs["k"] = k;
                const bounds::BoundParams p{l, k, cfg.M};
                const auto value = table.n_bound(s, p, mode);
                result["params"] = {{"l", l}, {"k", k}, {"M", cfg.M}};
                result["mode"] = value.mode() == bounds::Mode::Exact ? "exact" : "log10";
                result["value"] = value.to_string();
                result["growth_upper"] = bounds::growth_upper(s, p).to_string();
            }
        };
    });

    // graph-ulfp
    std::size_t trials = 0;
    auto* gul = app.add_subcommand("graph-ulfp", "Greedy separated set / ball cover on a finite graph");
    gul->add_option("--graph", graph_file)->required();
    gul->add_option("--set", set_file)->required();
    gul->add_option("--l", l)->required();
    gul->add_option("--k", k)->required();
    gul->add_option("--trials", trials, "Also run random trials above the counting threshold");
    gul->callback([&] {
        action = [&] {
            inputs = {{"graph", graph_file}, {"set", set_file}, {"l", l}, {"k", k}};
            auto gin = open_input(graph_file);
            const auto g = graph::read_graph(gin);
            auto sin = open_input(set_file);
            const auto a = graph::read_vertex_set(sin);
            const auto res = graph::greedy_separated(g, a, l, k);
            result["max_valency"] = graph::max_valency(g);
            result["bound"] = graph::ulf_bound(graph::max_valency(g), l, k).str();
            if (const auto* w = std::get_if<graph::SeparatedWitness>(&res))
                result["result"] = {{"type", "witness"}, {"vertices", w->vertices}};
            else {
                const auto& c = std::get<graph::BallCoverCertificate>(res);
                result["result"] = {{"type", "covered"}, {"centers", c.centers}, {"radius", c.radius}};
            }
            result["verified"] = graph::verify(g, a, l, k, res);
            if (trials > 0) {
                inputs["trials"] = trials;
                const auto rep = graph::check_ulfp_theorem(g, trials, l, k, cfg.seed);
                result["trials"] = {{"trials", rep.trials},
                                    {"witnesses", rep.witnesses},
                                    {"failures", rep.failures},
                                    {"skipped", rep.skipped}};
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        err << error_json("parse", e.what()).dump() << '\n';
        return parse_error;
    }
    cfg.kind = kind == "sphere" ? SurfaceKind::Sphere04 : SurfaceKind::Torus11;

    const auto* sub = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const ParseError& e) {
        err << error_json("parse", e.what()).dump() << '\n';
        return parse_error;
    } catch (const PreconditionViolation& e) {
        err << error_json("precondition", e.what()).dump() << '\n';
        return violation;
    } catch (const HypothesisViolation& e) {
        err << error_json("hypothesis", e.what()).dump() << '\n';
        return violation;
    } catch (const EmptyProjection& e) {
        err << error_json("empty_projection", e.what()).dump() << '\n';
        return violation;
    } catch (const DisconnectedQuery& e) {
        err << error_json("disconnected", e.what()).dump() << '\n';
        return violation;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << '\n';
        return failure;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report = result;
    report["tool"] = "ulfp";
    report["version"] = tool_version;
    report["schema_version"] = report_schema_version;
    report["command"] = sub->get_name();
    report["argv"] = args;
    report["inputs"] = inputs;
    report["config"] = config_json(cfg);
    report["timing_ms"] = elapsed;
    out << report.dump(2) << '\n';
    return ok;
}

}  // namespace ulfp::cli
