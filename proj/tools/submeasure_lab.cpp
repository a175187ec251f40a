// submeasure-lab: compute, generate, convert and verify the finite calculus
// of lower semicontinuous submeasures. JSON in, JSON out, exact rationals
// rendered as "p/q". Exit codes: 0 ok, 1 verification failure, 2 input
// error, 3 resource guard.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sml/banach.hpp"
#include "sml/coloring.hpp"
#include "sml/io.hpp"
#include "sml/pathology.hpp"
#include "sml/reduction.hpp"
#include "sml/submeasure.hpp"
#include "sml/verify.hpp"
#include "sml/zoo.hpp"

namespace {

using sml::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;

uint32_t default_max_ground() {
    if (const char* env = std::getenv("SUBMEASURE_LAB_MAX_GROUND")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 20) return static_cast<uint32_t>(v);
        throw sml::ParseError("SUBMEASURE_LAB_MAX_GROUND must be an integer in 1..20");
    }
    return 16;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sml::ParseError("cannot open input file \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw sml::ParseError("input file \"" + path + "\" is not valid JSON: " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<uint32_t> parse_uint_list(const std::string& spec, const char* what) {
    std::vector<uint32_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw sml::ParseError(std::string(what) + ": empty entry in \"" + spec + "\"");
        char* end = nullptr;
        const long v = std::strtol(item.c_str(), &end, 10);
        if (!end || *end != '\0' || v < 0)
            throw sml::ParseError(std::string(what) + ": \"" + item + "\" is not a point");
        out.push_back(static_cast<uint32_t>(v));
    }
    return out;
}

sml::PointSet parse_set(const std::string& spec, uint32_t universe, const char* what) {
    if (spec == "all") return sml::PointSet::full(universe);
    if (spec == "empty") return sml::PointSet(universe);
    sml::PointSet s(universe);
    for (uint32_t p : parse_uint_list(spec, what)) {
        if (p >= universe)
            throw sml::ParseError(std::string(what) + ": point " + std::to_string(p) +
                                  " outside ground of size " + std::to_string(universe));
        s.add(p);
    }
    return s;
}

std::string decimal_str(const sml::Rat& r, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, r.to_double());
    return buf;
}

void attach_decimal(Json& obj, const char* key, const sml::RatX& v, int digits) {
    if (digits <= 0) return;
    obj[std::string(key) + "_decimal"] = v.is_inf() ? "inf" : decimal_str(v.finite(), digits);
}

// ---------------------------------------------------------------------------
// compute

int cmd_compute_eval(const std::string& input, const std::string& set_spec, int decimal) {
    const sml::Submeasure phi = sml::submeasure_from_json(load_json(input));
    const sml::RatX v = phi.eval(parse_set(set_spec, phi.ground().size(), "--set"));
    Json out;
    out["value"] = v.str();
    attach_decimal(out, "value", v, decimal);
    emit(out);
    return kExitOk;
}

int cmd_compute_hat(const std::string& input, const std::string& set_spec, int decimal) {
    const sml::Submeasure phi = sml::submeasure_from_json(load_json(input));
    const sml::PointSet a = parse_set(set_spec, phi.ground().size(), "--set");
    const sml::HatResult h = sml::hat(phi, a);
    Json out;
    out["value"] = h.value.str();
    Json witness = Json::array();
    for (const sml::Rat& w : h.witness.weights()) witness.push_back(w.str());
    out["witness"] = std::move(witness);
    out["basis"] = h.basis;
    attach_decimal(out, "value", sml::RatX(h.value), decimal);
    emit(out);
    return kExitOk;
}

int cmd_compute_pathology(const std::string& input, const std::string& scope,
                          const std::string& sets_spec, uint32_t max_ground, int decimal) {
    const sml::Submeasure phi = sml::submeasure_from_json(load_json(input));
    sml::DegreeOptions opts;
    opts.max_ground = max_ground;
    sml::PathologyReport rep = [&] {
        if (scope == "all") return sml::pathology_degree(phi, sml::DegreeScope::AllSubsets, {}, opts);
        if (scope != "family") throw sml::ParseError("--scope must be \"all\" or \"family\"");
        if (sets_spec.empty()) throw sml::ParseError("--sets is required for the family scope");
        std::vector<sml::PointSet> family;
        std::stringstream ss(sets_spec);
        std::string item;
        while (std::getline(ss, item, ';'))
            family.push_back(parse_set(item, phi.ground().size(), "--sets"));
        return sml::pathology_degree(phi, sml::DegreeScope::GivenFamily, family, opts);
    }();
    Json out;
    out["degree"] = rep.defined ? rep.degree.str() : "undefined";
    out["argmax"] = sml::set_to_json(rep.argmax);
    out["scope"] = scope;
    out["global"] = rep.global;
    if (rep.defined) attach_decimal(out, "degree", rep.degree, decimal);
    emit(out);
    return kExitOk;
}

int cmd_compute_cover_stats(const std::string& input, int decimal) {
    const sml::CoveringInstance inst = sml::covering_from_json(load_json(input));
    const sml::CoveringStats st = sml::covering_stats(inst);
    Json out;
    Json b = Json::array();
    for (uint64_t x : st.b) b.push_back(x);
    out["b"] = std::move(b);
    out["m"] = st.m;
    out["family_size"] = inst.family.size();
    out["delta"] = st.delta.str();
    attach_decimal(out, "delta", sml::RatX(st.delta), decimal);
    emit(out);
    return kExitOk;
}

int cmd_compute_metric(const std::string& input, const std::string& a_spec,
                       const std::string& b_spec, int decimal) {
    const sml::Submeasure phi = sml::submeasure_from_json(load_json(input));
    const sml::RatX v = sml::group_metric(phi, parse_set(a_spec, phi.ground().size(), "--a"),
                                          parse_set(b_spec, phi.ground().size(), "--b"));
    Json out;
    out["value"] = v.str();
    attach_decimal(out, "value", v, decimal);
    emit(out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// gen

struct GenSink {
    std::string dir;
    Json manifest;
    Json files = Json::array();

    explicit GenSink(std::string out_dir, std::string generator, Json params)
        : dir(std::move(out_dir)) {
        manifest["generator"] = std::move(generator);
        manifest["params"] = std::move(params);
    }

    void write(const std::string& name, const Json& content) {
        const std::string path = dir.empty() || dir == "." ? name : dir + "/" + name;
        const std::string text = content.dump(2) + "\n";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw sml::ParseError("cannot write \"" + path + "\"");
        out << text;
        Json entry;
        entry["name"] = name;
        entry["path"] = path;
        entry["bytes"] = text.size();
        entry["fnv1a64"] = sml::hex64(sml::fnv1a64(text));
        files.push_back(std::move(entry));
    }

    int finish(const std::string& manifest_name) {
        manifest["files"] = files;
        const std::string path = dir.empty() || dir == "." ? manifest_name : dir + "/" + manifest_name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw sml::ParseError("cannot write \"" + path + "\"");
        out << manifest.dump(2) << "\n";
        emit(manifest);
        return kExitOk;
    }
};

int cmd_gen_mazur(uint32_t n, const std::string& dir) {
    const sml::MazurExample mz = sml::gen_mazur(n);
    GenSink sink(dir, "mazur", Json{{"n", n}});
    const std::string base = "mazur" + std::to_string(n);
    sink.write(base + ".submeasure.json", sml::submeasure_to_json(mz.psi));
    sink.write(base + ".covering.json", sml::covering_to_json(mz.cover));
    return sink.finish(base + ".manifest.json");
}

int cmd_gen_solecki(uint32_t n, const std::string& dir) {
    const sml::SoleckiExample so = sml::gen_solecki(n);
    GenSink sink(dir, "solecki", Json{{"n", n}});
    const std::string base = "solecki" + std::to_string(n);
    sink.write(base + ".submeasure.json", sml::submeasure_to_json(so.chi));
    sink.write(base + ".covering.json", sml::covering_to_json(so.cover));
    return sink.finish(base + ".manifest.json");
}

int cmd_gen_edfin(uint32_t n, const std::string& dir) {
    const sml::EdFinInstance ef = sml::gen_edfin(n);
    GenSink sink(dir, "edfin", Json{{"n", n}});
    const std::string base = "edfin" + std::to_string(n);
    sink.write(base + ".submeasure.json", sml::submeasure_to_json(ef.psi));
    sink.write(base + ".covering.json", sml::covering_to_json(ef.chains));
    return sink.finish(base + ".manifest.json");
}

int cmd_gen_property_a(const std::string& variant, const std::string& stages, const std::string& dir) {
    const auto parts = parse_uint_list(stages, "--stages");
    if (parts.size() != 2) throw sml::ParseError("--stages expects \"n,k\"");
    const sml::PropertyAVariant v = [&] {
        if (variant == "a") return sml::PropertyAVariant::EqualCells;
        if (variant == "b") return sml::PropertyAVariant::GrowingCells;
        throw sml::ParseError("--variant must be \"a\" or \"b\"");
    }();
    const sml::StagedFamily fam = sml::gen_property_a(v, parts[0], parts[1]);
    GenSink sink(dir, "propertyA", Json{{"variant", variant}, {"stages", parts[0]}, {"cells", parts[1]}});
    const std::string base = "propertyA_" + variant + "_" + std::to_string(parts[0]) + "x" +
                             std::to_string(parts[1]);
    sink.write(base + ".submeasure.json", sml::submeasure_to_json(fam.phi));
    Json blocks;
    blocks["ground"] = fam.ground.size();
    Json stage_arr = Json::array();
    for (const sml::PointSet& s : fam.stages) stage_arr.push_back(sml::set_to_json(s));
    blocks["stages"] = std::move(stage_arr);
    Json cells_arr = Json::array();
    for (const auto& row : fam.cells) {
        Json r = Json::array();
        for (const sml::PointSet& s : row) r.push_back(sml::set_to_json(s));
        cells_arr.push_back(std::move(r));
    }
    blocks["cells"] = std::move(cells_arr);
    sink.write(base + ".blocks.json", blocks);
    return sink.finish(base + ".manifest.json");
}

int cmd_gen_finxempty(const std::string& blocks, const std::string& dir) {
    const auto sizes = parse_uint_list(blocks, "--blocks");
    const sml::VectorSequence x = sml::gen_fin_times_empty(sizes);
    std::string tag;
    for (uint32_t s : sizes) tag += "_" + std::to_string(s);
    GenSink sink(dir, "finxempty", Json{{"blocks", sizes}});
    const std::string base = "finxempty" + tag;
    sink.write(base + ".matrix.json", sml::matrix_to_json(x));
    return sink.finish(base + ".manifest.json");
}

int cmd_gen_coloring(const std::string& name, uint32_t n, const std::string& sizes,
                     const std::string& dir) {
    if (name == "sierpinski") {
        GenSink sink(dir, "coloring", Json{{"name", name}, {"n", n}});
        const std::string base = "coloring_sierpinski" + std::to_string(n);
        sink.write(base + ".coloring.json", sml::coloring_to_json(sml::sierpinski_coloring(n)));
        return sink.finish(base + ".manifest.json");
    }
    if (name == "partition") {
        if (sizes.empty()) throw sml::ParseError("--sizes is required for the partition coloring");
        const auto parts = parse_uint_list(sizes, "--sizes");
        GenSink sink(dir, "coloring", Json{{"name", name}, {"sizes", parts}});
        std::string tag;
        for (uint32_t s : parts) tag += "_" + std::to_string(s);
        const std::string base = "coloring_partition" + tag;
        sink.write(base + ".coloring.json", sml::coloring_to_json(sml::partition_coloring(parts)));
        return sink.finish(base + ".manifest.json");
    }
    throw sml::ParseError("--name must be \"sierpinski\" or \"partition\"");
}

// ---------------------------------------------------------------------------
// verify

Json suite_to_json(const sml::VerifySuite& s, int decimal) {
    Json out;
    out["target"] = s.target;
    Json rows = Json::array();
    for (const sml::VerifyRow& r : s.rows) {
        Json row;
        row["name"] = r.name;
        row["expected"] = r.expected;
        row["basis"] = r.basis;
        row["computed"] = r.computed;
        row["pass"] = r.pass;
        if (decimal > 0 && r.expected.find('/') != std::string::npos &&
            r.expected.find(',') == std::string::npos && r.expected.find('[') == std::string::npos) {
            try {
                row["expected_decimal"] = decimal_str(sml::Rat::from_string(r.expected), decimal);
            } catch (const sml::Error&) {
            }
        }
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["all_pass"] = s.all_pass;
    return out;
}

int cmd_verify(const std::string& target, int level, uint64_t seed, bool quick, int decimal) {
    sml::VerifyParams params;
    params.level = level;
    params.seed = seed;
    params.quick = quick;
    if (target == "all") {
        const std::vector<sml::VerifySuite> suites = sml::run_verify_all(params);
        Json out;
        Json arr = Json::array();
        bool all = true;
        for (const sml::VerifySuite& s : suites) {
            all = all && s.all_pass;
            arr.push_back(suite_to_json(s, decimal));
        }
        out["targets"] = std::move(arr);
        out["all_pass"] = all;
        emit(out);
        return all ? kExitOk : kExitVerifyFailure;
    }
    const sml::VerifySuite suite = sml::run_verify_target(target, params);
    emit(suite_to_json(suite, decimal));
    return suite.all_pass ? kExitOk : kExitVerifyFailure;
}

int run(int argc, char** argv) {
    CLI::App app{"submeasure-lab: exact finite calculus of lower semicontinuous submeasures"};
    app.require_subcommand(1);
    int decimal = 0;
    app.add_option("--decimal", decimal, "add a decimal display column with this many digits");

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate submeasures and their invariants");
    compute->require_subcommand(1);
    std::string input, set_spec = "all", scope = "all", sets_spec, a_spec, b_spec;
    uint32_t max_ground = default_max_ground();

    auto* c_eval = compute->add_subcommand("eval", "evaluate phi on a set");
    c_eval->add_option("--input", input, "submeasure JSON file")->required();
    c_eval->add_option("--set", set_spec, "comma-separated points, \"all\" or \"empty\"");

    auto* c_hat = compute->add_subcommand("hat", "largest dominated measure on a set");
    c_hat->add_option("--input", input, "submeasure JSON file")->required();
    c_hat->add_option("--set", set_spec, "comma-separated points, \"all\" or \"empty\"");

    auto* c_path = compute->add_subcommand("pathology", "degree of pathology");
    c_path->add_option("--input", input, "submeasure JSON file")->required();
    c_path->add_option("--scope", scope, "\"all\" (every subset) or \"family\"");
    c_path->add_option("--sets", sets_spec, "semicolon-separated sets for the family scope");
    c_path->add_option("--max-ground", max_ground, "all-subsets guard (env SUBMEASURE_LAB_MAX_GROUND)");

    auto* c_cover = compute->add_subcommand("cover-stats", "covering numbers of an instance");
    c_cover->add_option("--input", input, "covering JSON file")->required();

    auto* c_metric = compute->add_subcommand("metric", "group metric phi(A xor B)");
    c_metric->add_option("--input", input, "submeasure JSON file")->required();
    c_metric->add_option("--a", a_spec, "first set")->required();
    c_metric->add_option("--b", b_spec, "second set")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate the named constructions");
    gen->require_subcommand(1);
    uint32_t gen_n = 2;
    std::string out_dir = ".", variant = "a", stages = "3,3", blocks = "2,3,4";
    std::string coloring_name = "sierpinski", coloring_sizes;

    auto* g_mazur = gen->add_subcommand("mazur", "functions n -> 2n with value-avoiding hats");
    g_mazur->add_option("--n", gen_n, "level (1..4)")->required();
    g_mazur->add_option("--out", out_dir, "output directory");

    auto* g_solecki = gen->add_subcommand("solecki", "clopen-half level sets");
    g_solecki->add_option("--n", gen_n, "level (2..4)")->required();
    g_solecki->add_option("--out", out_dir, "output directory");

    auto* g_edfin = gen->add_subcommand("edfin", "finite blocks with selector chains");
    g_edfin->add_option("--n", gen_n, "level (1..6)")->required();
    g_edfin->add_option("--out", out_dir, "output directory");

    auto* g_propa = gen->add_subcommand("propertyA", "staged block families");
    g_propa->add_option("--variant", variant, "\"a\" or \"b\"");
    g_propa->add_option("--stages", stages, "\"n,k\": stages and cells per stage");
    g_propa->add_option("--out", out_dir, "output directory");

    auto* g_finx = gen->add_subcommand("finxempty", "block-scaled basis matrix");
    g_finx->add_option("--blocks", blocks, "comma-separated block sizes");
    g_finx->add_option("--out", out_dir, "output directory");

    auto* g_color = gen->add_subcommand("coloring", "named pair colorings");
    g_color->add_option("--name", coloring_name, "\"sierpinski\" or \"partition\"");
    g_color->add_option("--n", gen_n, "points (sierpinski)");
    g_color->add_option("--sizes", coloring_sizes, "piece sizes (partition)");
    g_color->add_option("--out", out_dir, "output directory");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string target;
    int level = -1;
    uint64_t seed = 1;
    bool quick = false;
    std::string names;
    for (const std::string& n : sml::verify_target_names()) names += n + " ";
    verify->add_option("target", target, "one of: " + names + "or \"all\"")->required();
    verify->add_option("--level", level, "level parameter where a target takes one");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_flag("--quick", quick, "smaller randomized suites; sweep replaced by family scope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }

    if (c_eval->parsed()) return cmd_compute_eval(input, set_spec, decimal);
    if (c_hat->parsed()) return cmd_compute_hat(input, set_spec, decimal);
    if (c_path->parsed()) return cmd_compute_pathology(input, scope, sets_spec, max_ground, decimal);
    if (c_cover->parsed()) return cmd_compute_cover_stats(input, decimal);
    if (c_metric->parsed()) return cmd_compute_metric(input, a_spec, b_spec, decimal);
    if (g_mazur->parsed()) return cmd_gen_mazur(gen_n, out_dir);
    if (g_solecki->parsed()) return cmd_gen_solecki(gen_n, out_dir);
    if (g_edfin->parsed()) return cmd_gen_edfin(gen_n, out_dir);
    if (g_propa->parsed()) return cmd_gen_property_a(variant, stages, out_dir);
    if (g_finx->parsed()) return cmd_gen_finxempty(blocks, out_dir);
    if (g_color->parsed()) return cmd_gen_coloring(coloring_name, gen_n, coloring_sizes, out_dir);
    if (verify->parsed()) return cmd_verify(target, level, seed, quick, decimal);
    std::cerr << "no subcommand\n";
    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sml::SizeGuard& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const sml::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
