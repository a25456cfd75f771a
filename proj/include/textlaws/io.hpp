#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "textlaws/calibrate.hpp"
#include "textlaws/corpus.hpp"
#include "textlaws/fit.hpp"
#include "textlaws/stats.hpp"
#include "textlaws/ttest.hpp"

namespace textlaws {

inline constexpr const char* kToolName = "textlaws";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
    TokenizerRules tokenizer;
    DocKind kind = DocKind::book;
    double base = kDefaultBase;
    FitRegion spectrum_region = kSpectrumRegion;
    FitRegion rank_region = kRankRegion;
    FitRegion growth_region = kGrowthRegion;
    double rho = 0.5;
    bool normalize_rank = false;  // export Z(r)/T instead of raw counts
};

struct AnalysisReport {
    CorpusSummary summary;
    FrequencySpectrum spectrum;
    RankProfile rank;
    GrowthCurve growth;
    AttachmentProfile attachment;
    PowerLawFit spectrum_fit;  // beta
    PowerLawFit rank_fit;      // alpha
    PowerLawFit growth_fit;    // lambda
    PowerLawFit attachment_fit;
    bool attachment_fitted = false;  // too few realized points otherwise
};

AnalysisReport analyze_sequence(const std::string& id, DocKind kind, const EncodedSequence& seq,
                                const AnalysisOptions& opts = {});
AnalysisReport analyze_document(const RawDocument& doc, const AnalysisOptions& opts = {});

nlohmann::json fit_to_json(const PowerLawFit& fit, const std::string& law);
nlohmann::json report_to_json(const AnalysisReport& report);
nlohmann::json ttest_to_json(const TTestResult& result, const std::string& law);
nlohmann::json params_to_json(const CalibrationResult& result);

void write_curve_csv(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name,
                     const std::vector<std::pair<double, double>>& rows);

std::vector<std::pair<double, double>> spectrum_rows(const FrequencySpectrum& s);
std::vector<std::pair<double, double>> rank_rows(const RankProfile& z, bool normalize = false);
std::vector<std::pair<double, double>> growth_rows(const GrowthCurve& n);
std::vector<std::pair<double, double>> attachment_rows(const AttachmentProfile& a);

// Writes the four curve CSVs and the report JSON for one corpus; returns the
// report path.
std::filesystem::path write_report_files(const std::filesystem::path& out_dir,
                                         const AnalysisReport& report,
                                         const AnalysisOptions& opts);

// Deterministic description of a run: command, inputs, every parameter.
// Re-running the recorded command reproduces all outputs byte for byte.
void write_manifest(const std::filesystem::path& out_dir, const std::string& command,
                    const std::vector<std::string>& inputs, const nlohmann::json& parameters);

// Simulated corpus as plain text, 20 words per line.
void write_corpus_text(const std::filesystem::path& path, const EncodedSequence& seq);

void write_json(const std::filesystem::path& path, const nlohmann::json& value);

}  // namespace textlaws
