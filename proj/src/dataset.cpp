#include "dualchoice/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "dualchoice/error.hpp"

namespace dualchoice {

using nlohmann::json;

void EmpiricalRecord::validate() const {
    if (sessions.empty()) {
        throw ValidationError("record '" + choice_set.label() + "': no sessions");
    }
    const std::size_t n = choice_set.size();
    for (std::size_t s = 0; s < sessions.size(); ++s) {
        const auto& fractions = sessions[s];
        if (fractions.size() != n) {
            throw ValidationError("record '" + choice_set.label() + "': session " +
                                  std::to_string(s + 1) + " has " +
                                  std::to_string(fractions.size()) + " fractions for " +
                                  std::to_string(n) + " lotteries");
        }
        double sum = 0.0;
        for (double fraction : fractions) {
            if (!(fraction >= 0.0 && fraction <= 1.0)) {
                throw ValidationError("record '" + choice_set.label() + "': session " +
                                      std::to_string(s + 1) + " fraction " +
                                      std::to_string(fraction) + " outside [0, 1]");
            }
            sum += fraction;
        }
        if (std::abs(sum - 1.0) > kProbabilitySumTol) {
            throw ValidationError("record '" + choice_set.label() + "': session " +
                                  std::to_string(s + 1) + " fractions sum to " +
                                  std::to_string(sum) + ", expected 1");
        }
    }
}

namespace {

double parse_number(std::string_view text, const std::string& where) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(where + ": cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

std::string format_number(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        throw DomainError("cannot format number");
    }
    return std::string(buffer, ptr);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<Payoff> parse_outcomes_cell(std::string_view cell, const std::string& where) {
    std::vector<Payoff> outcomes;
    for (std::string_view token : split(cell, '|')) {
        const std::size_t at = token.find('@');
        if (at == std::string_view::npos) {
            throw ParseError(where + ": outcome '" + std::string(token) +
                             "' is not of the form value@probability");
        }
        Payoff payoff;
        payoff.value = parse_number(token.substr(0, at), where);
        payoff.probability = parse_number(token.substr(at + 1), where);
        outcomes.push_back(payoff);
    }
    return outcomes;
}

std::string outcomes_cell(const Lottery& lottery) {
    std::string cell;
    for (std::size_t i = 0; i < lottery.outcomes().size(); ++i) {
        if (i > 0) cell += '|';
        const Payoff& o = lottery.outcomes()[i];
        cell += format_number(o.value) + "@" + format_number(o.probability);
    }
    return cell;
}

constexpr const char* kCsvHeaderOneSession = "label,l1_outcomes,l2_outcomes,p_exp_1_s1,p_exp_2_s1";
constexpr const char* kCsvHeaderTwoSessions =
    "label,l1_outcomes,l2_outcomes,p_exp_1_s1,p_exp_2_s1,p_exp_1_s2,p_exp_2_s2";

std::vector<EmpiricalRecord> parse_records_csv(std::string_view text) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        return {};
    }
    std::size_t session_count = 0;
    if (lines[0] == kCsvHeaderOneSession) {
        session_count = 1;
    } else if (lines[0] == kCsvHeaderTwoSessions) {
        session_count = 2;
    } else {
        throw ParseError("line 1: unrecognized CSV header '" + std::string(lines[0]) + "'");
    }

    std::vector<EmpiricalRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string where = "line " + std::to_string(i + 1);
        if (lines[i].empty()) {
            continue;
        }
        const std::vector<std::string_view> cells = split(lines[i], ',');
        const std::size_t expected = 3 + 2 * session_count;
        if (cells.size() != expected) {
            throw ParseError(where + ": expected " + std::to_string(expected) +
                             " cells, got " + std::to_string(cells.size()));
        }
        try {
            std::vector<Lottery> lotteries;
            lotteries.push_back(complete_lottery("L1", parse_outcomes_cell(cells[1], where)));
            lotteries.push_back(complete_lottery("L2", parse_outcomes_cell(cells[2], where)));
            std::vector<std::vector<double>> sessions;
            for (std::size_t s = 0; s < session_count; ++s) {
                sessions.push_back({parse_number(cells[3 + 2 * s], where),
                                    parse_number(cells[4 + 2 * s], where)});
            }
            EmpiricalRecord record{ChoiceSet(std::string(cells[0]), std::move(lotteries)),
                                   std::move(sessions), ""};
            record.validate();
            records.push_back(std::move(record));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    return records;
}

} // namespace

std::vector<EmpiricalRecord> parse_records_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!root.is_array()) {
        throw ParseError("JSON root must be an array of records");
    }

    std::vector<EmpiricalRecord> records;
    records.reserve(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        const std::string where = "record " + std::to_string(i + 1);
        const json& entry = root[i];
        try {
            if (!entry.is_object()) {
                throw ParseError(where + ": not an object");
            }
            if (!entry.contains("label") || !entry["label"].is_string()) {
                throw ParseError(where + ": missing string field 'label'");
            }
            if (!entry.contains("lotteries") || !entry["lotteries"].is_array() ||
                entry["lotteries"].empty()) {
                throw ParseError(where + ": missing non-empty array 'lotteries'");
            }
            if (!entry.contains("sessions") || !entry["sessions"].is_array() ||
                entry["sessions"].empty()) {
                throw ParseError(where + ": missing non-empty array 'sessions'");
            }

            std::vector<Lottery> lotteries;
            for (const json& lot : entry["lotteries"]) {
                if (!lot.is_object() || !lot.contains("label") || !lot["label"].is_string() ||
                    !lot.contains("outcomes") || !lot["outcomes"].is_array() ||
                    lot["outcomes"].empty()) {
                    throw ParseError(where + ": each lottery needs a 'label' and a non-empty "
                                             "'outcomes' array");
                }
                std::vector<Payoff> outcomes;
                for (const json& pair : lot["outcomes"]) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                        !pair[1].is_number()) {
                        throw ParseError(where + ": outcomes must be [value, probability] pairs");
                    }
                    outcomes.push_back(Payoff{pair[0].get<double>(), pair[1].get<double>()});
                }
                lotteries.push_back(
                    complete_lottery(lot["label"].get<std::string>(), std::move(outcomes)));
            }

            std::vector<std::vector<double>> sessions;
            for (const json& session : entry["sessions"]) {
                if (!session.is_array()) {
                    throw ParseError(where + ": sessions must be arrays of fractions");
                }
                std::vector<double> fractions;
                for (const json& fraction : session) {
                    if (!fraction.is_number()) {
                        throw ParseError(where + ": session fractions must be numbers");
                    }
                    fractions.push_back(fraction.get<double>());
                }
                sessions.push_back(std::move(fractions));
            }

            EmpiricalRecord record{
                ChoiceSet(entry["label"].get<std::string>(), std::move(lotteries)),
                std::move(sessions), ""};
            record.validate();
            records.push_back(std::move(record));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    return records;
}

std::vector<EmpiricalRecord> load_records(const std::filesystem::path& path, FileFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (format == FileFormat::Json) {
        if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
            return {};
        }
        return parse_records_json(text);
    }
    return parse_records_csv(text);
}

namespace {

json record_to_json(const EmpiricalRecord& record) {
    json lotteries = json::array();
    for (const Lottery& lottery : record.choice_set.lotteries()) {
        json outcomes = json::array();
        for (const Payoff& o : lottery.outcomes()) {
            outcomes.push_back(json::array({o.value, o.probability}));
        }
        lotteries.push_back({{"label", lottery.label()}, {"outcomes", std::move(outcomes)}});
    }
    return {{"label", record.choice_set.label()},
            {"lotteries", std::move(lotteries)},
            {"sessions", record.sessions}};
}

} // namespace

void save_records(std::span<const EmpiricalRecord> records, const std::filesystem::path& path,
                  FileFormat format) {
    std::string text;
    if (format == FileFormat::Json) {
        json root = json::array();
        for (const EmpiricalRecord& record : records) {
            root.push_back(record_to_json(record));
        }
        text = root.dump(2) + "\n";
    } else {
        std::size_t session_count = 0;
        for (const EmpiricalRecord& record : records) {
            if (record.choice_set.size() != 2) {
                throw DomainError("CSV output: record '" + record.choice_set.label() +
                                  "' is not binary");
            }
            if (record.sessions.size() > 2) {
                throw DomainError("CSV output: record '" + record.choice_set.label() +
                                  "' has more than two sessions");
            }
            if (record.choice_set.label().find_first_of(",\n") != std::string::npos) {
                throw DomainError("CSV output: record label '" + record.choice_set.label() +
                                  "' contains a separator");
            }
            session_count = std::max(session_count, record.sessions.size());
        }
        text = session_count == 2 ? kCsvHeaderTwoSessions : kCsvHeaderOneSession;
        text += '\n';
        for (const EmpiricalRecord& record : records) {
            if (record.sessions.size() != session_count) {
                throw DomainError("CSV output: records mix session counts");
            }
            text += record.choice_set.label();
            text += ',' + outcomes_cell(record.choice_set.lotteries()[0]);
            text += ',' + outcomes_cell(record.choice_set.lotteries()[1]);
            for (const auto& session : record.sessions) {
                text += ',' + format_number(session[0]);
                text += ',' + format_number(session[1]);
            }
            text += '\n';
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write '" + path.string() + "'");
    }
    out << text;
}

std::vector<double> empirical_attraction(const EmpiricalRecord& record,
                                         const RationalFractions& f, std::size_t session) {
    if (session >= record.sessions.size()) {
        throw DomainError("record '" + record.choice_set.label() + "': session index " +
                          std::to_string(session) + " out of range");
    }
    const auto& observed = record.sessions[session];
    if (f.size() != observed.size()) {
        throw DomainError("record '" + record.choice_set.label() +
                          "': fraction count does not match the session");
    }
    std::vector<double> q(observed.size());
    for (std::size_t i = 0; i < observed.size(); ++i) {
        q[i] = observed[i] - f[i];
    }
    return q;
}

EmpiricalRecord pool_sessions(const EmpiricalRecord& record) {
    record.validate();
    const std::size_t n = record.choice_set.size();
    std::vector<double> pooled(n, 0.0);
    for (const auto& session : record.sessions) {
        for (std::size_t i = 0; i < n; ++i) {
            pooled[i] += session[i];
        }
    }
    for (double& fraction : pooled) {
        fraction /= double(record.sessions.size());
    }
    return EmpiricalRecord{record.choice_set, {std::move(pooled)}, record.source_tag};
}

namespace {

void check_alignment(std::span<const EmpiricalRecord> records,
                     std::span<const Prediction> predictions) {
    if (records.empty()) {
        throw DomainError("aggregate: no records");
    }
    if (records.size() != predictions.size()) {
        throw DomainError("aggregate: " + std::to_string(records.size()) + " records but " +
                          std::to_string(predictions.size()) + " predictions");
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (predictions[i].p.size() != records[i].choice_set.size()) {
            throw DomainError("aggregate: prediction " + std::to_string(i + 1) +
                              " does not match record '" + records[i].choice_set.label() + "'");
        }
    }
}

std::size_t session_argmax(const std::vector<double>& fractions) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fractions.size(); ++i) {
        if (fractions[i] > fractions[best]) {
            best = i;
        }
    }
    return best;
}

} // namespace

AggregateReport aggregate(std::span<const EmpiricalRecord> records,
                          std::span<const Prediction> predictions, std::size_t session) {
    check_alignment(records, predictions);
    AggregateReport report;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (session >= records[i].sessions.size()) {
            throw DomainError("record '" + records[i].choice_set.label() + "': session index " +
                              std::to_string(session) + " out of range");
        }
        const Prediction& prediction = predictions[i];
        const std::size_t opt = prediction.optimal_index;
        const double p_exp = records[i].sessions[session][opt];
        report.mean_f_opt += prediction.f[opt];
        report.mean_p_pred_opt += prediction.p[opt];
        report.mean_p_exp_opt += p_exp;
        report.mean_abs_q_exp += std::abs(p_exp - prediction.f[opt]);
    }
    const double count = double(records.size());
    report.mean_f_opt /= count;
    report.mean_p_pred_opt /= count;
    report.mean_p_exp_opt /= count;
    report.mean_abs_q_exp /= count;
    report.count = records.size();
    return report;
}

double hit_rate(std::span<const EmpiricalRecord> records, std::span<const Prediction> predictions,
                std::size_t session) {
    check_alignment(records, predictions);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (session >= records[i].sessions.size()) {
            throw DomainError("record '" + records[i].choice_set.label() + "': session index " +
                              std::to_string(session) + " out of range");
        }
        if (predictions[i].optimal_index == session_argmax(records[i].sessions[session])) {
            ++hits;
        }
    }
    return double(hits) / double(records.size());
}

} // namespace dualchoice
