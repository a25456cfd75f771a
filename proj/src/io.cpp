#include "textlaws/io.hpp"

#include <cstdio>
#include <fstream>

namespace textlaws {

namespace {

void require_writable(std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw Error("cannot write " + path.string());
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

AnalysisReport analyze_sequence(const std::string& id, DocKind kind, const EncodedSequence& seq,
                                const AnalysisOptions& opts) {
    if (seq.T() == 0) throw Error("empty corpus: " + id);

    AnalysisReport report;
    report.summary = summarize(id, kind, seq);
    report.spectrum = frequency_spectrum(seq);
    report.rank = rank_profile(seq);
    report.growth = growth_curve(seq);
    report.attachment = attachment_profile(seq, opts.rho);

    report.spectrum_fit = fit_spectrum(report.spectrum, opts.spectrum_region, opts.base);
    report.rank_fit = fit_rank(report.rank, opts.rank_region, opts.base);
    report.growth_fit = fit_growth(report.growth, opts.growth_region, opts.base);
    try {
        report.attachment_fit = fit_attachment(report.attachment);
        report.attachment_fitted = true;
    } catch (const Error&) {
        report.attachment_fitted = false;
    }
    return report;
}

AnalysisReport analyze_document(const RawDocument& doc, const AnalysisOptions& opts) {
    EncodedSequence seq = encode(tokenize(doc, opts.tokenizer));
    return analyze_sequence(doc.id, doc.kind, seq, opts);
}

nlohmann::json fit_to_json(const PowerLawFit& fit, const std::string& law) {
    return nlohmann::json{{"law", law},
                          {"exponent", fit.exponent},
                          {"amplitude", fit.amplitude},
                          {"r2", fit.r2},
                          {"region", {{"lower", fit.region.lower}, {"upper", fit.region.upper}}},
                          {"base", fit.base},
                          {"excluded_bins", fit.excluded_bins}};
}

nlohmann::json report_to_json(const AnalysisReport& report) {
    nlohmann::json j{
        {"id", report.summary.id},
        {"kind", to_string(report.summary.kind)},
        {"T", report.summary.T},
        {"Nt", report.summary.Nt},
        {"beta", report.spectrum_fit.exponent},
        {"alpha", report.rank_fit.exponent},
        {"lambda", report.growth_fit.exponent},
        {"r2", {{"beta", report.spectrum_fit.r2},
                {"alpha", report.rank_fit.r2},
                {"lambda", report.growth_fit.r2}}},
        {"fits", {{"spectrum", fit_to_json(report.spectrum_fit, "beta")},
                  {"zipf", fit_to_json(report.rank_fit, "alpha")},
                  {"heaps", fit_to_json(report.growth_fit, "lambda")}}},
    };
    if (report.attachment_fitted) {
        j["phi_slope"] = report.attachment_fit.exponent;
        j["phi_r2"] = report.attachment_fit.r2;
        j["fits"]["attachment"] = fit_to_json(report.attachment_fit, "phi");
    } else {
        j["phi_slope"] = nullptr;
        j["phi_r2"] = nullptr;
    }
    return j;
}

nlohmann::json ttest_to_json(const TTestResult& result, const std::string& law) {
    auto group = [](const GroupSummary& g) {
        return nlohmann::json{{"mean", g.mean}, {"std", g.stddev}, {"n", g.n}};
    };
    return nlohmann::json{{"law", law},
                          {"t", result.t},
                          {"df", result.df},
                          {"p", result.p},
                          {"a", group(result.a)},
                          {"b", group(result.b)}};
}

nlohmann::json params_to_json(const CalibrationResult& result) {
    return nlohmann::json{{"k0", result.params.k0},
                          {"kt", result.params.kt},
                          {"kp", result.params.kp},
                          {"length", result.params.length},
                          {"objective", result.objective},
                          {"per_law", {{"spectrum", result.per_law[0]},
                                       {"zipf", result.per_law[1]},
                                       {"heaps", result.per_law[2]}}},
                          {"evaluations", result.evaluations},
                          {"converged", result.converged}};
}

void write_curve_csv(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name,
                     const std::vector<std::pair<double, double>>& rows) {
    std::ofstream out(path);
    require_writable(out, path);
    out << x_name << ',' << y_name << '\n';
    for (const auto& [x, y] : rows) {
        out << format_number(x) << ',' << format_number(y) << '\n';
    }
}

std::vector<std::pair<double, double>> spectrum_rows(const FrequencySpectrum& s) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(s.counts.size());
    for (const auto& [k, m] : s.counts) {
        rows.emplace_back(static_cast<double>(k),
                          static_cast<double>(m) / static_cast<double>(s.Nt));
    }
    return rows;
}

std::vector<std::pair<double, double>> rank_rows(const RankProfile& z, bool normalize) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(z.Z.size());
    const double scale = normalize ? 1.0 / static_cast<double>(z.T) : 1.0;
    for (std::size_t r = 0; r < z.Z.size(); ++r) {
        rows.emplace_back(static_cast<double>(r + 1), static_cast<double>(z.Z[r]) * scale);
    }
    return rows;
}

std::vector<std::pair<double, double>> growth_rows(const GrowthCurve& n) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(n.N.size());
    for (std::size_t t = 0; t < n.N.size(); ++t) {
        rows.emplace_back(static_cast<double>(t + 1), static_cast<double>(n.N[t]));
    }
    return rows;
}

std::vector<std::pair<double, double>> attachment_rows(const AttachmentProfile& a) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(a.phi.size());
    for (const auto& [k, phi] : a.phi) {
        rows.emplace_back(static_cast<double>(k), phi);
    }
    return rows;
}

std::filesystem::path write_report_files(const std::filesystem::path& out_dir,
                                         const AnalysisReport& report,
                                         const AnalysisOptions& opts) {
    std::filesystem::create_directories(out_dir);
    const std::string& stem = report.summary.id;
    write_curve_csv(out_dir / (stem + ".spectrum.csv"), "k", "P(k)", spectrum_rows(report.spectrum));
    write_curve_csv(out_dir / (stem + ".zipf.csv"), "r", "Z(r)",
                    rank_rows(report.rank, opts.normalize_rank));
    write_curve_csv(out_dir / (stem + ".heaps.csv"), "t", "N(t)", growth_rows(report.growth));
    write_curve_csv(out_dir / (stem + ".pa.csv"), "k", "phi(k)",
                    attachment_rows(report.attachment));
    auto report_path = out_dir / (stem + ".report.json");
    write_json(report_path, report_to_json(report));
    return report_path;
}

void write_manifest(const std::filesystem::path& out_dir, const std::string& command,
                    const std::vector<std::string>& inputs, const nlohmann::json& parameters) {
    std::filesystem::create_directories(out_dir);
    nlohmann::json manifest{{"tool", kToolName},
                            {"version", kToolVersion},
                            {"command", command},
                            {"inputs", inputs},
                            {"parameters", parameters}};
    write_json(out_dir / "manifest.json", manifest);
}

void write_corpus_text(const std::filesystem::path& path, const EncodedSequence& seq) {
    std::ofstream out(path);
    require_writable(out, path);
    for (std::size_t t = 0; t < seq.ids.size(); ++t) {
        out << seq.vocabulary[seq.ids[t]];
        out << ((t + 1) % 20 == 0 ? '\n' : ' ');
    }
    if (seq.ids.size() % 20 != 0) out << '\n';
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
    std::ofstream out(path);
    require_writable(out, path);
    out << value.dump(2) << '\n';
}

}  // namespace textlaws
