// Command-line front end: ingestion -> statistics -> fits -> simulation ->
// calibration -> group comparison. Every subcommand writes its artifacts
// plus a manifest.json into --out, and identical invocations produce
// byte-identical outputs.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "textlaws/calibrate.hpp"
#include "textlaws/io.hpp"
#include "textlaws/simon.hpp"

namespace fs = std::filesystem;
using namespace textlaws;

namespace {

struct TokenizerFlags {
    bool strip_gutenberg = false;
    bool keep_apostrophes = true;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--strip-gutenberg", strip_gutenberg,
                      "Cut the Project Gutenberg header and footer");
        cmd->add_flag("--keep-apostrophes,!--no-apostrophes", keep_apostrophes,
                      "Keep apostrophes between letters (default on)");
    }
    TokenizerRules rules() const { return TokenizerRules{keep_apostrophes, strip_gutenberg}; }
    nlohmann::json to_json() const {
        return {{"strip_gutenberg", strip_gutenberg}, {"keep_apostrophes", keep_apostrophes}};
    }
};

FitRegion region_from(const std::vector<double>& v, FitRegion fallback) {
    return v.size() == 2 ? FitRegion{v[0], v[1]} : fallback;
}

nlohmann::json region_json(FitRegion r) {
    return {{"lower", r.lower}, {"upper", r.upper}};
}

int run_analyze(const std::vector<std::string>& files, const std::string& out_dir,
                const std::string& kind_name, const TokenizerFlags& tok, double base, double rho,
                const std::vector<double>& spectrum_region, const std::vector<double>& rank_region,
                const std::vector<double>& growth_region, bool normalize_rank) {
    AnalysisOptions opts;
    opts.tokenizer = tok.rules();
    opts.kind = doc_kind_from_string(kind_name);
    opts.base = base;
    opts.rho = rho;
    opts.spectrum_region = region_from(spectrum_region, kSpectrumRegion);
    opts.rank_region = region_from(rank_region, kRankRegion);
    opts.growth_region = region_from(growth_region, kGrowthRegion);
    opts.normalize_rank = normalize_rank;

    fs::create_directories(out_dir);
    std::vector<std::string> errors(files.size());

#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(files.size()); ++i) {
        try {
            RawDocument doc = load_document(files[i], opts.kind);
            AnalysisReport report = analyze_document(doc, opts);
            write_report_files(out_dir, report, opts);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }

    write_manifest(out_dir, "analyze", files,
                   {{"kind", kind_name},
                    {"tokenizer", tok.to_json()},
                    {"base", base},
                    {"rho", rho},
                    {"spectrum_region", region_json(opts.spectrum_region)},
                    {"rank_region", region_json(opts.rank_region)},
                    {"growth_region", region_json(opts.growth_region)},
                    {"normalize_rank", normalize_rank}});

    int failures = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "error: " << files[i] << ": " << errors[i] << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

int run_curve(const std::string& which, const std::string& file, const std::string& out_dir,
              const std::string& kind_name, const TokenizerFlags& tok, double base, double rho,
              const std::vector<double>& region_flag, bool normalize_rank) {
    RawDocument doc = load_document(file, doc_kind_from_string(kind_name));
    EncodedSequence seq = encode(tokenize(doc, tok.rules()));
    if (seq.T() == 0) throw Error("empty corpus: " + file);

    fs::create_directories(out_dir);
    fs::path dir(out_dir);
    nlohmann::json fit_json;

    if (which == "spectrum") {
        auto s = frequency_spectrum(seq);
        write_curve_csv(dir / (doc.id + ".spectrum.csv"), "k", "P(k)", spectrum_rows(s));
        fit_json =
            fit_to_json(fit_spectrum(s, region_from(region_flag, kSpectrumRegion), base), "beta");
    } else if (which == "zipf") {
        auto z = rank_profile(seq);
        write_curve_csv(dir / (doc.id + ".zipf.csv"), "r", "Z(r)", rank_rows(z, normalize_rank));
        fit_json = fit_to_json(fit_rank(z, region_from(region_flag, kRankRegion), base), "alpha");
    } else if (which == "heaps") {
        auto n = growth_curve(seq);
        write_curve_csv(dir / (doc.id + ".heaps.csv"), "t", "N(t)", growth_rows(n));
        fit_json =
            fit_to_json(fit_growth(n, region_from(region_flag, kGrowthRegion), base), "lambda");
    } else {
        auto a = attachment_profile(seq, rho);
        write_curve_csv(dir / (doc.id + ".pa.csv"), "k", "phi(k)", attachment_rows(a));
        fit_json = fit_to_json(fit_attachment(a), "phi");
    }

    write_json(dir / (doc.id + "." + which + ".fit.json"), fit_json);
    write_manifest(out_dir, which, {file},
                   {{"kind", kind_name},
                    {"tokenizer", tok.to_json()},
                    {"base", base},
                    {"rho", rho},
                    {"region", region_flag.size() == 2
                                   ? region_json(FitRegion{region_flag[0], region_flag[1]})
                                   : nlohmann::json("default")},
                    {"normalize_rank", normalize_rank}});
    std::cout << fit_json.dump(2) << "\n";
    return 0;
}

int run_simulate(double k0, double kt, double kp, std::uint64_t length, std::uint64_t seed,
                 const std::string& out_dir, const std::string& name) {
    ModelParams params{k0, kt, kp, length, seed};
    EncodedSequence seq = simulate(params);

    fs::create_directories(out_dir);
    write_corpus_text(fs::path(out_dir) / (name + ".txt"), seq);
    write_manifest(out_dir, "simulate", {},
                   {{"k0", k0},
                    {"kt", kt},
                    {"kp", kp},
                    {"length", length},
                    {"seed", seed},
                    {"name", name}});

    nlohmann::json summary{{"name", name}, {"T", seq.T()}, {"Nt", seq.Nt()}};
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int run_calibrate(const std::string& input, const std::string& out_dir, std::size_t budget,
                  std::size_t ensemble, std::uint64_t seed_base, const std::string& kind_name,
                  const TokenizerFlags& tok, double base) {
    RawDocument doc = load_document(input, doc_kind_from_string(kind_name));
    EncodedSequence seq = encode(tokenize(doc, tok.rules()));
    if (seq.T() == 0) throw Error("empty corpus: " + input);

    CalibrationOptions opts;
    opts.budget = budget;
    opts.ensemble_size = ensemble;
    opts.seed_base = seed_base;
    CalibrationResult result = calibrate(make_target(seq, base), opts);

    fs::create_directories(out_dir);
    nlohmann::json params = params_to_json(result);
    params["input"] = doc.id;
    write_json(fs::path(out_dir) / "params.json", params);
    write_manifest(out_dir, "calibrate", {input},
                   {{"budget", budget},
                    {"ensemble", ensemble},
                    {"seed_base", seed_base},
                    {"kind", kind_name},
                    {"tokenizer", tok.to_json()},
                    {"base", base}});
    std::cout << params.dump(2) << "\n";
    return 0;
}

// Pull one law's value out of every *.report.json (fitted exponents) or
// params.json (model parameters) in a directory.
std::vector<double> collect_law_values(const std::string& dir, const std::string& law) {
    const bool from_reports = law == "beta" || law == "alpha" || law == "lambda";

    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (from_reports ? name.ends_with(".report.json") : name.ends_with("params.json")) {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());

    std::vector<double> values;
    for (const auto& path : paths) {
        std::ifstream in(path);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.contains(law) && j[law].is_number()) values.push_back(j[law].get<double>());
    }
    if (values.size() < 2) {
        throw Error("need at least 2 '" + law + "' values under " + dir);
    }
    return values;
}

int run_compare(const std::string& dir_a, const std::string& dir_b, const std::string& law,
                const std::string& out_dir) {
    ExponentSample a{"a", law, collect_law_values(dir_a, law)};
    ExponentSample b{"b", law, collect_law_values(dir_b, law)};
    nlohmann::json j = ttest_to_json(welch_t_test(a, b), law);
    j["group_a"] = dir_a;
    j["group_b"] = dir_b;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_json(fs::path(out_dir) / "ttest.json", j);
        write_manifest(out_dir, "compare", {dir_a, dir_b}, {{"law", law}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scaling laws of word usage: corpus statistics, power-law fits, "
                 "Yule-Simon simulation and calibration"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_dir = "out";
    std::string kind_name = "book";
    TokenizerFlags tok;
    double base = kDefaultBase;
    double rho = 0.5;
    std::vector<double> spectrum_region, rank_region, growth_region, region_flag;
    bool normalize_rank = false;

    auto* analyze = app.add_subcommand("analyze", "Full per-corpus report plus curve CSVs");
    analyze->add_option("files", files, "UTF-8 text files")->required()->expected(-1);
    analyze->add_option("--out", out_dir, "Output directory");
    analyze->add_option("--kind", kind_name, "book|speech|synthetic");
    tok.attach(analyze);
    analyze->add_option("--base", base, "Log-binning base (> 1)");
    analyze->add_option("--rho", rho, "Split fraction for the attachment profile");
    analyze->add_option("--spectrum-region", spectrum_region, "k range, two numbers")->expected(2);
    analyze->add_option("--rank-region", rank_region, "r range, two numbers")->expected(2);
    analyze->add_option("--growth-region", growth_region, "t range, two numbers")->expected(2);
    analyze->add_flag("--normalize-rank", normalize_rank, "Export Z(r)/T instead of raw counts");

    std::string curve_file;
    for (const std::string which : {"spectrum", "zipf", "heaps", "pa"}) {
        auto* cmd = app.add_subcommand(which, "Emit the " + which + " curve CSV and its fit");
        cmd->add_option("file", curve_file, "UTF-8 text file")->required();
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_option("--kind", kind_name, "book|speech|synthetic");
        tok.attach(cmd);
        cmd->add_option("--base", base, "Log-binning base (> 1)");
        cmd->add_option("--rho", rho, "Split fraction (pa only)");
        cmd->add_option("--region", region_flag, "Fit region, two numbers")->expected(2);
        cmd->add_flag("--normalize-rank", normalize_rank, "Export Z(r)/T (zipf only)");
    }

    double k0 = 1, kt = 0, kp = 1;
    std::uint64_t length = 10000, seed = 42;
    std::string sim_name = "corpus";
    auto* sim = app.add_subcommand("simulate", "Generate a corpus from the growth model");
    sim->add_option("--k0", k0, "Innovation scale")->required();
    sim->add_option("--kt", kt, "Innovation decay exponent")->required();
    sim->add_option("--kp", kp, "Attachment strength")->required();
    sim->add_option("--length", length, "Tokens to generate")->required();
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out", out_dir, "Output directory");
    sim->add_option("--name", sim_name, "Corpus file stem");

    std::string input;
    std::size_t budget = 300, ensemble = 8;
    std::uint64_t seed_base = 1234;
    auto* cal = app.add_subcommand("calibrate", "Recover (k0, kt, kp) for a corpus");
    cal->add_option("--input", input, "UTF-8 text file")->required();
    cal->add_option("--out", out_dir, "Output directory");
    cal->add_option("--budget", budget, "Objective evaluations");
    cal->add_option("--ensemble", ensemble, "Simulation runs per evaluation");
    cal->add_option("--seed-base", seed_base, "Common-random-number seed base");
    cal->add_option("--kind", kind_name, "book|speech|synthetic");
    tok.attach(cal);
    cal->add_option("--base", base, "Log-binning base (> 1)");

    std::string dir_a, dir_b, law = "lambda";
    std::string compare_out;
    auto* cmp = app.add_subcommand("compare", "Welch t-test of one law between two groups");
    cmp->add_option("--group-a", dir_a, "Directory of report/params JSON files")->required();
    cmp->add_option("--group-b", dir_b, "Directory of report/params JSON files")->required();
    cmp->add_option("--law", law, "beta|alpha|lambda|k0|kt|kp");
    cmp->add_option("--out", compare_out, "Optional output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return run_analyze(files, out_dir, kind_name, tok, base, rho, spectrum_region,
                               rank_region, growth_region, normalize_rank);
        }
        for (const std::string which : {"spectrum", "zipf", "heaps", "pa"}) {
            if (app.get_subcommand(which)->parsed()) {
                return run_curve(which, curve_file, out_dir, kind_name, tok, base, rho,
                                 region_flag, normalize_rank);
            }
        }
        if (sim->parsed()) {
            return run_simulate(k0, kt, kp, length, seed, out_dir, sim_name);
        }
        if (cal->parsed()) {
            return run_calibrate(input, out_dir, budget, ensemble, seed_base, kind_name, tok,
                                 base);
        }
        if (cmp->parsed()) {
            return run_compare(dir_a, dir_b, law, compare_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
