#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualchoice/batch.hpp"
#include "dualchoice/dataset.hpp"
#include "dualchoice/error.hpp"

namespace {

using namespace dualchoice;
using nlohmann::json;

std::string fmt(const char* spec, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, value);
    return buffer;
}

const char* class_name(QualityClass quality_class) {
    switch (quality_class) {
        case QualityClass::Positive: return "positive";
        case QualityClass::Negative: return "negative";
        case QualityClass::Neutral: break;
    }
    return "neutral";
}

struct Options {
    std::string input;
    std::string input_format = "auto";
    std::string output = "table";
    std::string prior = "quarter";
    double a = 1.0;
    double beta = 1.0;
    double base = kDefaultQualityBase;
    double noise = kDefaultNoise;
    int session = 1; // 1-based; 0 pools all sessions
    int n = 0;
    double lambda = 10.0;
    double p = 0.75;
};

PredictConfig predict_config(const Options& options) {
    PredictConfig config;
    config.base = options.base;
    config.noise = options.noise;
    if (options.prior == "quarter") {
        config.prior_mode = PriorMode::QuarterLaw;
    } else if (options.prior == "multi") {
        config.prior_mode = PriorMode::MultiPrior;
    } else {
        config.prior_mode = PriorMode::Tanh;
        config.tanh = TanhParams{options.a, options.beta};
    }
    return config;
}

// Returns the records to analyze plus the session index to use; session 0
// pools the observations of every session.
std::vector<EmpiricalRecord> load_input(const Options& options) {
    if (options.input.empty()) {
        return kt_suite();
    }
    FileFormat format = FileFormat::Json;
    if (options.input_format == "csv" ||
        (options.input_format == "auto" &&
         std::filesystem::path(options.input).extension() == ".csv")) {
        format = FileFormat::Csv;
    }
    return load_records(options.input, format);
}

std::size_t resolve_session(const Options& options, std::vector<EmpiricalRecord>& records) {
    if (options.session < 0) {
        throw DomainError("session must be >= 0");
    }
    if (options.session == 0) {
        for (EmpiricalRecord& record : records) {
            record = pool_sessions(record);
        }
        return 0;
    }
    return std::size_t(options.session) - 1;
}

void emit(const Options& options, const json& payload, const std::string& table) {
    if (options.output == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << table;
    }
}

int cmd_kt(const Options& options) {
    const std::vector<EmpiricalRecord> records = kt_suite();
    const std::vector<Prediction> predictions = predict_all(records, predict_config(options));
    const AggregateReport report = aggregate(records, predictions, 0);

    json rows = json::array();
    std::string table = "choice  L_opt  f(L_opt)  p(L_opt)  p_exp(L_opt)  q_exp(L_opt)\n";
    std::string csv = "choice,l_opt,f_opt,p_pred,p_exp,q_exp\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Prediction& prediction = predictions[i];
        const std::size_t opt = prediction.optimal_index;
        const double f_opt = prediction.f[opt];
        const double p_pred = prediction.p[opt];
        const double p_exp = records[i].sessions[0][opt];
        const double q_exp = p_exp - f_opt;
        const std::string& label = records[i].choice_set.lotteries()[opt].label();
        rows.push_back({{"choice", i + 1},
                        {"label", records[i].choice_set.label()},
                        {"l_opt", label},
                        {"f_opt", f_opt},
                        {"p_pred", p_pred},
                        {"p_exp", p_exp},
                        {"q_exp", q_exp}});
        char line[128];
        std::snprintf(line, sizeof(line), "%6zu  %5s  %8.2f  %8.2f  %12.2f  %12.2f\n", i + 1,
                      label.c_str(), f_opt, p_pred, p_exp, q_exp);
        table += line;
        csv += std::to_string(i + 1) + "," + label + "," + fmt("%.17g", f_opt) + "," +
               fmt("%.17g", p_pred) + "," + fmt("%.17g", p_exp) + "," + fmt("%.17g", q_exp) + "\n";
    }
    char footer[128];
    std::snprintf(footer, sizeof(footer), "%6s  %5s  %8.2f  %8.2f  %12.2f  %12.2f\n", "avg", "",
                  report.mean_f_opt, report.mean_p_pred_opt, report.mean_p_exp_opt,
                  report.mean_abs_q_exp);
    const json payload = {{"command", "kt"},
                          {"rows", rows},
                          {"averages",
                           {{"f_opt", report.mean_f_opt},
                            {"p_pred", report.mean_p_pred_opt},
                            {"p_exp", report.mean_p_exp_opt},
                            {"abs_q_exp", report.mean_abs_q_exp}}}};
    csv += std::string("avg,,") + fmt("%.17g", report.mean_f_opt) + "," +
           fmt("%.17g", report.mean_p_pred_opt) + "," + fmt("%.17g", report.mean_p_exp_opt) + "," +
           fmt("%.17g", report.mean_abs_q_exp) + "\n";
    if (options.output == "csv") {
        std::cout << csv;
    } else {
        emit(options, payload, table + footer);
    }
    return 0;
}

int cmd_predict(const Options& options) {
    std::vector<EmpiricalRecord> records = load_input(options);
    if (records.empty()) {
        std::cout << "no records\n";
        return 0;
    }
    const std::vector<Prediction> predictions = predict_all(records, predict_config(options));

    json out_records = json::array();
    std::string table;
    std::string csv = "record,lottery,expected_utility,quality,gain_loss,f,q,p,optimal\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ChoiceSet& set = records[i].choice_set;
        const Prediction& prediction = predictions[i];
        table += "choice set: " + set.label() + "\n";
        table += "  lottery          U          Q   N      f      q     p\n";
        json lotteries = json::array();
        for (std::size_t l = 0; l < set.size(); ++l) {
            const Lottery& lottery = set.lotteries()[l];
            const AttractionAssessment& assessment = prediction.assessments[l];
            const double utility = expected_utility(lottery, UtilityFunction{});
            char line[160];
            std::snprintf(line, sizeof(line), "  %-7s  %9.3f  %9.3f  %2d  %5.3f  %5.2f  %4.2f%s\n",
                          lottery.label().c_str(), utility, assessment.quality,
                          assessment.gain_loss, prediction.f[l], prediction.q[l],
                          prediction.p[l], l == prediction.optimal_index ? "  *" : "");
            table += line;
            lotteries.push_back({{"label", lottery.label()},
                                 {"expected_utility", utility},
                                 {"quality", assessment.quality},
                                 {"gain_loss", assessment.gain_loss},
                                 {"class", class_name(assessment.quality_class)},
                                 {"f", prediction.f[l]},
                                 {"q", prediction.q[l]},
                                 {"p", prediction.p[l]}});
            csv += set.label() + "," + lottery.label() + "," + fmt("%.17g", utility) + "," +
                   fmt("%.17g", assessment.quality) + "," + std::to_string(assessment.gain_loss) +
                   "," + fmt("%.17g", prediction.f[l]) + "," + fmt("%.17g", prediction.q[l]) +
                   "," + fmt("%.17g", prediction.p[l]) + "," +
                   (l == prediction.optimal_index ? "1" : "0") + "\n";
        }
        table += "optimal: " + set.lotteries()[prediction.optimal_index].label() +
                 (prediction.argmax_tie ? " (tie)" : "") + "\n";
        out_records.push_back({{"label", set.label()},
                               {"optimal", set.lotteries()[prediction.optimal_index].label()},
                               {"optimal_index", prediction.optimal_index},
                               {"tie", prediction.argmax_tie},
                               {"lotteries", lotteries}});
    }
    const json payload = {{"command", "predict"}, {"records", out_records}};
    if (options.output == "csv") {
        std::cout << csv;
    } else {
        emit(options, payload, table);
    }
    return 0;
}

int cmd_analyze(const Options& options) {
    std::vector<EmpiricalRecord> records = load_input(options);
    if (records.empty()) {
        std::cout << "no records\n";
        return 0;
    }
    const std::size_t session = resolve_session(options, records);
    const std::vector<Prediction> predictions = predict_all(records, predict_config(options));
    const AggregateReport report = aggregate(records, predictions, session);
    const double hits = hit_rate(records, predictions, session);

    json rows = json::array();
    std::string table = "record        L_opt  f(L_opt)  p(L_opt)  p_exp  q_exp  class\n";
    std::string csv = "record,l_opt,f_opt,p_pred,p_exp,q_exp,class\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Prediction& prediction = predictions[i];
        const std::size_t opt = prediction.optimal_index;
        if (session >= records[i].sessions.size()) {
            throw DomainError("record '" + records[i].choice_set.label() +
                              "': session index out of range");
        }
        const double f_opt = prediction.f[opt];
        const double p_exp = records[i].sessions[session][opt];
        const double q_exp = p_exp - f_opt;
        const QualityClass quality_class = classify_empirical(f_opt, p_exp, options.noise);
        const std::string& label = records[i].choice_set.lotteries()[opt].label();
        char line[160];
        std::snprintf(line, sizeof(line), "%-12s  %5s  %8.3f  %8.2f  %5.2f  %5.2f  %s\n",
                      records[i].choice_set.label().c_str(), label.c_str(), f_opt,
                      prediction.p[opt], p_exp, q_exp, class_name(quality_class));
        table += line;
        rows.push_back({{"record", records[i].choice_set.label()},
                        {"l_opt", label},
                        {"f_opt", f_opt},
                        {"p_pred", prediction.p[opt]},
                        {"p_exp", p_exp},
                        {"q_exp", q_exp},
                        {"class", class_name(quality_class)}});
        csv += records[i].choice_set.label() + "," + label + "," + fmt("%.17g", f_opt) + "," +
               fmt("%.17g", prediction.p[opt]) + "," + fmt("%.17g", p_exp) + "," +
               fmt("%.17g", q_exp) + "," + class_name(quality_class) + "\n";
    }
    char footer[160];
    std::snprintf(footer, sizeof(footer), "%-12s  %5s  %8.3f  %8.2f  %5.2f  %5.2f\n", "averages",
                  "", report.mean_f_opt, report.mean_p_pred_opt, report.mean_p_exp_opt,
                  report.mean_abs_q_exp);
    std::string tail = footer;
    tail += "hit rate: " + fmt("%.2f", hits) + " over " + std::to_string(records.size()) +
            " records\n";
    const json payload = {{"command", "analyze"},
                          {"rows", rows},
                          {"averages",
                           {{"f_opt", report.mean_f_opt},
                            {"p_pred", report.mean_p_pred_opt},
                            {"p_exp", report.mean_p_exp_opt},
                            {"abs_q_exp", report.mean_abs_q_exp}}},
                          {"hit_rate", hits},
                          {"records", records.size()}};
    if (options.output == "csv") {
        std::cout << csv;
    } else {
        emit(options, payload, table + tail);
    }
    return 0;
}

int cmd_calibrate(const Options& options) {
    std::vector<EmpiricalRecord> records = load_input(options);
    const std::size_t session = resolve_session(options, records);
    const CalibrationResult result =
        calibrate_tanh(records, CalibrationGrid::default_grid(), session);
    const json payload = {{"command", "calibrate"}, {"a", result.params.a},
                          {"beta", result.params.beta}, {"sse", result.sse},
                          {"records", records.size()}};
    std::string table;
    table += "records: " + std::to_string(records.size()) + "\n";
    table += "a:    " + fmt("%.6f", result.params.a) + "\n";
    table += "beta: " + fmt("%.6f", result.params.beta) + "\n";
    table += "sse:  " + fmt("%.6f", result.sse) + "\n";
    if (options.output == "csv") {
        std::cout << "a,beta,sse,records\n"
                  << fmt("%.17g", result.params.a) << "," << fmt("%.17g", result.params.beta)
                  << "," << fmt("%.17g", result.sse) << "," << records.size() << "\n";
    } else {
        emit(options, payload, table);
    }
    return 0;
}

int cmd_priors(const Options& options) {
    if (options.n < 2) {
        throw DomainError("priors: --n must be >= 2");
    }
    const std::vector<double> priors = multi_priors(std::size_t(options.n));
    std::string table = "rank          q\n";
    std::string csv = "rank,q\n";
    json values = json::array();
    for (std::size_t k = 0; k < priors.size(); ++k) {
        char line[64];
        std::snprintf(line, sizeof(line), "%4zu  %9.6f\n", k + 1, priors[k]);
        table += line;
        csv += std::to_string(k + 1) + "," + fmt("%.17g", priors[k]) + "\n";
        values.push_back(priors[k]);
    }
    const json payload = {{"command", "priors"}, {"n", options.n}, {"q", values}};
    if (options.output == "csv") {
        std::cout << csv;
    } else {
        emit(options, payload, table);
    }
    return 0;
}

int cmd_base(const Options& options) {
    const double value = quality_base(options.lambda, options.p);
    std::string table;
    table += "lambda: " + fmt("%g", options.lambda) + "\n";
    table += "p:      " + fmt("%g", options.p) + "\n";
    table += "base:   " + fmt("%.6f", value) + "\n";
    if (std::abs(value - kDefaultQualityBase) < 0.5) {
        table += "note: rounds to the default quality base 30\n";
    }
    const json payload = {{"command", "base"},
                          {"lambda", options.lambda},
                          {"p", options.p},
                          {"base", value},
                          {"default_base", kDefaultQualityBase}};
    if (options.output == "csv") {
        std::cout << "lambda,p,base\n"
                  << fmt("%.17g", options.lambda) << "," << fmt("%.17g", options.p) << ","
                  << fmt("%.17g", value) << "\n";
    } else {
        emit(options, payload, table);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral lottery-choice prediction from rational fractions "
                 "and attraction-factor priors"};
    app.require_subcommand(1);

    Options options;
    const auto add_io = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("--input", options.input,
                            "records file (defaults to the embedded Kahneman-Tversky suite)");
            cmd->add_option("--format", options.input_format, "input format")
                ->check(CLI::IsMember({"auto", "json", "csv"}));
        }
        cmd->add_option("--output", options.output, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };
    const auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--prior", options.prior, "prior mode")
            ->check(CLI::IsMember({"quarter", "multi", "tanh"}));
        cmd->add_option("--a", options.a, "tanh sensitivity");
        cmd->add_option("--beta", options.beta, "tanh softness");
        cmd->add_option("--base", options.base, "quality-functional base");
    };

    CLI::App* predict_cmd = app.add_subcommand("predict", "predict choices for each record");
    add_io(predict_cmd, true);
    add_model(predict_cmd);

    CLI::App* kt_cmd =
        app.add_subcommand("kt", "replicate the embedded Kahneman-Tversky suite");
    add_io(kt_cmd, false);

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "compare predictions against observed fractions");
    add_io(analyze_cmd, true);
    add_model(analyze_cmd);
    analyze_cmd->add_option("--noise", options.noise, "neutral-band width");
    analyze_cmd->add_option("--session", options.session, "session (1-based, 0 = pooled)");

    CLI::App* calibrate_cmd =
        app.add_subcommand("calibrate", "grid-search the tanh parameters");
    add_io(calibrate_cmd, true);
    calibrate_cmd->add_option("--session", options.session, "session (1-based, 0 = pooled)");

    CLI::App* priors_cmd = app.add_subcommand("priors", "non-informative prior table");
    add_io(priors_cmd, false);
    priors_cmd->add_option("--n", options.n, "number of alternatives")->required();

    CLI::App* base_cmd = app.add_subcommand("base", "derive the quality-functional base");
    add_io(base_cmd, false);
    base_cmd->add_option("--lambda", options.lambda, "payoff scaling");
    base_cmd->add_option("--p", options.p, "reference payoff probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (predict_cmd->parsed()) return cmd_predict(options);
        if (kt_cmd->parsed()) return cmd_kt(options);
        if (analyze_cmd->parsed()) return cmd_analyze(options);
        if (calibrate_cmd->parsed()) return cmd_calibrate(options);
        if (priors_cmd->parsed()) return cmd_priors(options);
        if (base_cmd->parsed()) return cmd_base(options);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
