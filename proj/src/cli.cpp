#include "rimhook/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "rimhook/enumerate.hpp"
#include "rimhook/genfun.hpp"
#include "rimhook/hillman_grassl.hpp"
#include "rimhook/json_io.hpp"
#include "rimhook/sulzgruber.hpp"
#include "rimhook/verify.hpp"

namespace rimhook::cli {

namespace {

constexpr const char* kVersion = "rimhook 0.1.0";

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

json insertion_trace_json(const std::vector<Cell>& hooks,
                          const std::vector<InsertionTrace>& traces) {
    json j = json::array();
    for (std::size_t h = 0; h < traces.size(); ++h) {
        json steps = json::array();
        for (const InsertStep& s : traces[h]) {
            json cells = json::array();
            for (Cell c : s.strip) cells.push_back(to_json(c));
            json broken = json::array();
            for (Cell c : s.broken_off) broken.push_back(to_json(c));
            steps.push_back({{"strip", cells},
                             {"min_height", s.min_height},
                             {"broken_off", broken},
                             {"shifted", s.shifted}});
        }
        j.push_back({{"hook", to_json(hooks[h])}, {"steps", steps}});
    }
    return j;
}

json diag_trace_json(const RimHookMultiset& m, Scheme scheme) {
    json j = json::array();
    for (const auto& [d, word] : diagonal_words(m, scheme))
        j.push_back({{"d", d},
                     {"word", to_json(word)},
                     {"p_shape", to_json(insert_word(word).first.shape())}});
    return j;
}

json path_json(const std::vector<Cell>& path) {
    json j = json::array();
    for (Cell c : path) j.push_back(to_json(c));
    return j;
}

int cmd_hooks(const std::string& shape_text, std::ostream& out) {
    Shape shape = shape_from_json(parse_json(shape_text, "--shape"));
    Numbering sulz(shape, Scheme::sulzgruber);
    Numbering hg(shape, Scheme::hillman_grassl);
    json j = json::array();
    for (Cell c : shape.cells_row_major()) {
        json support = json::array();
        for (Cell s : rim_hook(shape, c).support) support.push_back(to_json(s));
        j.push_back({{"cell", to_json(c)},
                     {"label_sulz", sulz.label(c)},
                     {"order_sulz", sulz.order(c)},
                     {"label_hg", hg.label(c)},
                     {"order_hg", hg.order(c)},
                     {"support", support}});
    }
    emit(out, j);
    return 0;
}

int cmd_build(const std::string& shape_text, const std::string& hooks_text,
              const std::string& algorithm, const std::string& method, bool trace,
              std::ostream& out) {
    Shape shape = shape_from_json(parse_json(shape_text, "--shape"));
    RimHookMultiset m = multiset_from_json(shape, parse_json(hooks_text, "--hooks"));

    ReversePlanePartition result = ReversePlanePartition::zero(shape);
    json trace_doc;
    if (algorithm == "sulzgruber") {
        if (method == "insertion") {
            std::vector<InsertionTrace> traces;
            result = sulz_build(m, trace ? &traces : nullptr);
            if (trace)
                trace_doc = insertion_trace_json(
                    insertion_sorted_cells(m, Numbering(shape, Scheme::sulzgruber)), traces);
        } else {
            result = diag_rsk(m, Scheme::sulzgruber);
            if (trace) trace_doc = diag_trace_json(m, Scheme::sulzgruber);
        }
    } else {
        if (method == "insertion")
            throw usage_error("hillman-grassl builds through diagonal RSK only");
        result = hg_build(m);
        if (trace) trace_doc = diag_trace_json(m, Scheme::hillman_grassl);
    }

    if (trace)
        emit(out, json{{"result", to_json(result)}, {"trace", trace_doc}});
    else
        emit(out, to_json(result));
    return 0;
}

int cmd_decompose(const std::string& rpp_text, const std::string& algorithm, bool trace,
                  std::ostream& out) {
    Grid grid = grid_from_json(parse_json(rpp_text, "--rpp"));
    std::vector<int> parts;
    for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
    ReversePlanePartition pi = validate_rpp(Shape(std::move(parts)), std::move(grid));

    json result, trace_doc = json::array();
    if (algorithm == "sulzgruber") {
        std::vector<ReverseStep> steps;
        result = multiset_to_json(sulz_decompose(pi, trace ? &steps : nullptr),
                                  Scheme::sulzgruber);
        for (const ReverseStep& s : steps)
            trace_doc.push_back({{"candidate", to_json(s.candidate)},
                                 {"path", path_json(s.path)},
                                 {"hook", to_json(s.hook.defining_cell)}});
    } else {
        std::vector<PeelStep> steps;
        result = multiset_to_json(hg_decompose(pi, trace ? &steps : nullptr),
                                  Scheme::hillman_grassl);
        for (const PeelStep& s : steps)
            trace_doc.push_back({{"start", to_json(s.start)},
                                 {"path", path_json(s.path)},
                                 {"hook", to_json(s.hook.defining_cell)}});
    }

    if (trace)
        emit(out, json{{"result", result}, {"trace", trace_doc}});
    else
        emit(out, result);
    return 0;
}

int cmd_rsk(const std::string& word_text, std::ostream& out) {
    Word w = word_from_json(parse_json(word_text, "--word"));
    auto [p, q] = insert_word(w);
    emit(out, json{{"P", to_json(p)}, {"Q", to_json(q)}, {"shape", to_json(p.shape())}});
    return 0;
}

int cmd_gk_profile(const std::string& shape_text, const std::string& hooks_text,
                   const std::string& variant, std::ostream& out) {
    Shape shape = shape_from_json(parse_json(shape_text, "--shape"));
    RimHookMultiset m = multiset_from_json(shape, parse_json(hooks_text, "--hooks"));
    emit(out, profile_to_json(variant == "s" ? gk_profile(m) : hg_gk_profile(m)));
    return 0;
}

int cmd_genfun(const std::string& shape_text, int degree, std::ostream& out) {
    Shape shape = shape_from_json(parse_json(shape_text, "--shape"));
    json j = json::array();
    for (const BigUint& c : genfun_coeffs(shape, degree)) {
        if (c.fits_u64())
            j.push_back(c.to_u64());
        else
            j.push_back(c.str()); // too wide for a JSON number
    }
    emit(out, j);
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& shapes_text, bool has_limit,
               int limit, int jobs, std::ostream& out) {
    VerifyOptions options;
    if (!shapes_text.empty())
        for (const auto& s : parse_json(shapes_text, "--shapes"))
            options.shapes.push_back(shape_from_json(s));
    if (has_limit) options.limit = limit;
    options.jobs = jobs;

    VerifyReport report = run_suite(suite, options);
    json j{{"suite", report.suite}, {"pass", report.pass}, {"checked", report.checked}};
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    if (report.witness) j["witness"] = *report.witness;
    emit(out, j);
    return report.pass ? 0 : 1;
}

int cmd_enumerate(const std::string& kind, const std::string& shape_text, int limit,
                  const std::string& bound_kind, std::ostream& out) {
    Shape shape = shape_from_json(parse_json(shape_text, "--shape"));
    json j = json::array();
    if (kind == "rpps") {
        RppBound bound =
            bound_kind == "entry" ? RppBound::max_entry(limit) : RppBound::sum(limit);
        for (const auto& pi : enumerate_rpps(shape, bound)) j.push_back(to_json(pi));
    } else {
        for (const auto& m : enumerate_multisets(shape, limit))
            j.push_back(multiset_to_json(m, Scheme::sulzgruber));
    }
    emit(out, j);
    return 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rim hook correspondences for reverse plane partitions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string shape_text, hooks_text, rpp_text, word_text, shapes_text;
    std::string algorithm, method, variant = "s", suite, kind, bound_kind = "sum";
    bool trace = false;
    int degree = 0, limit = 0, jobs = 1;

    CLI::App* hooks = app.add_subcommand("hooks", "numberings and supports of every rim hook");
    hooks->add_option("--shape", shape_text, "shape as a JSON array")->required();

    CLI::App* build = app.add_subcommand("build", "multiset of rim hooks to filling");
    build->add_option("--shape", shape_text, "shape as a JSON array")->required();
    build->add_option("--hooks", hooks_text, "defining cells as a JSON array of [row,col]")
        ->required();
    build->add_option("--algorithm", algorithm, "sulzgruber or hillman-grassl")
        ->required()
        ->check(CLI::IsMember({"sulzgruber", "hillman-grassl"}));
    build->add_option("--method", method, "insertion or diagonal-rsk")
        ->check(CLI::IsMember({"insertion", "diagonal-rsk"}));
    build->add_flag("--trace", trace, "emit the step-by-step trace");

    CLI::App* decompose = app.add_subcommand("decompose", "filling to multiset of rim hooks");
    decompose->add_option("--rpp", rpp_text, "filling as a JSON array of rows")->required();
    decompose->add_option("--algorithm", algorithm, "sulzgruber or hillman-grassl")
        ->required()
        ->check(CLI::IsMember({"sulzgruber", "hillman-grassl"}));
    decompose->add_flag("--trace", trace, "emit the step-by-step trace");

    CLI::App* rsk = app.add_subcommand("rsk", "insertion and recording tableaux of a word");
    rsk->add_option("--word", word_text, "word as a JSON array of positive integers")->required();

    CLI::App* gk = app.add_subcommand("gk-profile", "per-diagonal chain-maximum partitions");
    gk->add_option("--shape", shape_text, "shape as a JSON array")->required();
    gk->add_option("--hooks", hooks_text, "defining cells as a JSON array")->required();
    gk->add_option("--variant", variant, "s or hg")
        ->required()
        ->check(CLI::IsMember({"s", "hg"}));

    CLI::App* genfun = app.add_subcommand("genfun", "hook generating-function coefficients");
    genfun->add_option("--shape", shape_text, "shape as a JSON array")->required();
    genfun->add_option("--degree", degree, "truncation degree")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--shapes", shapes_text, "JSON array of shapes");
    CLI::Option* limit_opt = verify->add_option("--limit", limit, "suite bound override");
    verify->add_option("--jobs", jobs, "shard checks across this many threads");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list fillings or multisets");
    enumerate->add_option("kind", kind, "rpps or multisets")
        ->required()
        ->check(CLI::IsMember({"rpps", "multisets"}));
    enumerate->add_option("--shape", shape_text, "shape as a JSON array")->required();
    CLI::Option* enum_limit = enumerate->add_option("--limit", limit, "enumeration bound");
    enum_limit->required();
    enumerate->add_option("--bound", bound_kind, "sum or entry (rpps only)")
        ->check(CLI::IsMember({"sum", "entry"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit(err, json{{"error", "usage"}, {"detail", e.what()}});
        return 2;
    }

    try {
        if (app.got_subcommand(hooks)) return cmd_hooks(shape_text, out);
        if (app.got_subcommand(build)) {
            if (method.empty()) method = algorithm == "sulzgruber" ? "insertion" : "diagonal-rsk";
            return cmd_build(shape_text, hooks_text, algorithm, method, trace, out);
        }
        if (app.got_subcommand(decompose)) return cmd_decompose(rpp_text, algorithm, trace, out);
        if (app.got_subcommand(rsk)) return cmd_rsk(word_text, out);
        if (app.got_subcommand(gk)) return cmd_gk_profile(shape_text, hooks_text, variant, out);
        if (app.got_subcommand(genfun)) return cmd_genfun(shape_text, degree, out);
        if (app.got_subcommand(verify))
            return cmd_verify(suite, shapes_text, limit_opt->count() > 0, limit, jobs, out);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(kind, shape_text, limit, bound_kind, out);
        emit(err, json{{"error", "usage"}, {"detail", "no subcommand given"}});
        return 2;
    } catch (const usage_error& e) {
        emit(err, json{{"error", "usage"}, {"detail", e.what()}});
        return 2;
    } catch (const domain_error& e) {
        emit(err, json{{"error", e.code()}, {"detail", e.detail()}});
        return 1;
    } catch (const std::exception& e) {
        emit(err, json{{"error", "internal"}, {"detail", e.what()}});
        return 1;
    }
}

} // namespace rimhook::cli
