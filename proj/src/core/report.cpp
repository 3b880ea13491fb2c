#include "hypergeo/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace hypergeo {

namespace {

const char* const kCsvHeader =
    "N,M,n,side,k,t,t_float,vacuous,exact_tail,exact_tail_float,hoeffding,relaxed,slack_hoeffding,slack_relaxed,"
    "sound";

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), result.ptr);
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const VerifyReport& report) {
    std::string out = kCsvHeader;
    out += "\r\n";
    for (const VerifyRow& r : report.rows) {
        const std::array<std::string, 15> fields{
            std::to_string(r.params.population()),
            std::to_string(r.params.whites()),
            std::to_string(r.params.draws()),
            std::string(to_string(r.side)),
            std::to_string(r.k),
            r.t.str(),
            format_double(r.t.to_double()),
            flag(r.vacuous),
            r.exact_tail.str(),
            format_double(r.exact_tail_float),
            format_double(r.hoeffding),
            format_double(r.relaxed),
            format_double(r.slack_hoeffding),
            format_double(r.slack_relaxed),
            flag(r.sound),
        };
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out += ',';
            out += csv_field(fields[i]);
        }
        out += "\r\n";
    }
    return out;
}

std::string render_json(const VerifyReport& report) {
    using json = nlohmann::ordered_json;
    json rows = json::array();
    for (const VerifyRow& r : report.rows) {
        json row;
        row["N"] = r.params.population();
        row["M"] = r.params.whites();
        row["n"] = r.params.draws();
        row["side"] = to_string(r.side);
        row["k"] = r.k;
        row["t"] = r.t.str();
        row["t_float"] = r.t.to_double();
        row["vacuous"] = r.vacuous;
        row["exact_tail"] = r.exact_tail.str();
        row["exact_tail_float"] = r.exact_tail_float;
        row["hoeffding"] = r.hoeffding;
        row["relaxed"] = r.relaxed;
        row["slack_hoeffding"] = r.slack_hoeffding;
        row["slack_relaxed"] = r.slack_relaxed;
        row["sound"] = r.sound;
        rows.push_back(std::move(row));
    }
    const VerifySummary& s = report.summary;
    json summary;
    summary["side"] = to_string(report.side);
    summary["rows"] = s.rows;
    summary["violations"] = s.violations;
    summary["vacuous"] = s.vacuous;
    summary["max_slack_hoeffding"] = s.max_slack_hoeffding;
    summary["min_slack_hoeffding"] = s.min_slack_hoeffding;
    summary["max_slack_relaxed"] = s.max_slack_relaxed;
    summary["tolerance"] = kSoundnessTolerance;

    json doc;
    doc["rows"] = std::move(rows);
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

std::string render_summary_text(const VerifyReport& report) {
    const VerifySummary& s = report.summary;
    std::ostringstream out;
    out << "side:                " << to_string(report.side) << '\n'
        << "rows:                " << s.rows << '\n'
        << "violations:          " << s.violations << '\n'
        << "vacuous:             " << s.vacuous << '\n'
        << "max slack hoeffding: " << format_double(s.max_slack_hoeffding) << '\n'
        << "min slack hoeffding: " << format_double(s.min_slack_hoeffding) << '\n'
        << "max slack relaxed:   " << format_double(s.max_slack_relaxed) << '\n';
    return out.str();
}

}  // namespace hypergeo
