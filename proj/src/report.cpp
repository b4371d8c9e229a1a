#include "hypsys/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypsys::report {

using verifier::MarginRecord;

namespace {

models::ModelKind model_from_name(const std::string& s) {
    if (s == "P1") return models::ModelKind::P1;
    if (s == "P2") return models::ModelKind::P2;
    if (s == "P2star") return models::ModelKind::P2Star;
    throw std::invalid_argument("unknown model name: " + s);
}

verifier::CheckId check_from_name(const std::string& s) {
    for (const auto c : verifier::all_checks())
        if (s == verifier::check_name(c)) return c;
    throw std::invalid_argument("unknown check name: " + s);
}

verifier::Status status_from_name(const std::string& s) {
    using verifier::Status;
    for (const Status st :
         {Status::Pass, Status::Fail, Status::Unasserted, Status::Indeterminate})
        if (s == verifier::status_name(st)) return st;
    throw std::invalid_argument("unknown status name: " + s);
}

verifier::Scale scale_from_name(const std::string& s) {
    using verifier::Scale;
    for (const Scale sc : {Scale::Cosh, Scale::Sinh, Scale::Length})
        if (s == verifier::scale_name(sc)) return sc;
    throw std::invalid_argument("unknown scale name: " + s);
}

verifier::Relation relation_from_name(const std::string& s) {
    using verifier::Relation;
    for (const Relation r : {Relation::Greater, Relation::Less, Relation::Equal})
        if (s == verifier::relation_name(r)) return r;
    throw std::invalid_argument("unknown relation name: " + s);
}

nlohmann::ordered_json number_or_null(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

double double_or_nan(const nlohmann::ordered_json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

}  // namespace

std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

nlohmann::ordered_json record_to_json(const MarginRecord& r) {
    nlohmann::ordered_json j;
    j["check"] = verifier::check_name(r.check);
    j["model"] = models::name(r.kind);
    j["genus"] = r.genus;
    j["index"] = r.index;
    j["lhs"] = number_or_null(r.lhs);
    j["threshold"] = number_or_null(r.threshold);
    j["margin"] = number_or_null(r.margin);
    j["status"] = verifier::status_name(r.status);
    j["scale"] = verifier::scale_name(r.scale);
    j["relation"] = verifier::relation_name(r.relation);
    j["pass"] = r.pass;
    return j;
}

MarginRecord record_from_json(const nlohmann::ordered_json& j) {
    MarginRecord r;
    r.check = check_from_name(j.at("check").get<std::string>());
    r.kind = model_from_name(j.at("model").get<std::string>());
    r.genus = j.at("genus").get<int>();
    r.index = j.at("index").get<int>();
    r.lhs = double_or_nan(j.at("lhs"));
    r.threshold = double_or_nan(j.at("threshold"));
    r.margin = double_or_nan(j.at("margin"));
    r.status = status_from_name(j.at("status").get<std::string>());
    r.scale = scale_from_name(j.at("scale").get<std::string>());
    r.relation = relation_from_name(j.at("relation").get<std::string>());
    r.pass = j.at("pass").get<bool>();
    return r;
}

nlohmann::ordered_json to_json(const VerifyReport& rep) {
    nlohmann::ordered_json j;
    j["version"] = rep.version;
    j["command"] = rep.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = params;
    if (!rep.timestamp.empty()) j["timestamp"] = rep.timestamp;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) records.push_back(record_to_json(r));
    j["records"] = records;
    return j;
}

VerifyReport verify_report_from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    VerifyReport rep;
    rep.version = j.at("version").get<std::string>();
    rep.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        rep.params.emplace_back(k, v.get<std::string>());
    if (j.contains("timestamp")) rep.timestamp = j["timestamp"].get<std::string>();
    for (const auto& rj : j.at("records")) rep.records.push_back(record_from_json(rj));
    return rep;
}

std::string to_csv(const VerifyReport& rep) {
    std::ostringstream out;
    out << "check,model,genus,index,lhs,threshold,margin,scale,relation,status,pass\n";
    for (const auto& r : rep.records) {
        out << verifier::check_name(r.check) << ',' << models::name(r.kind) << ','
            << r.genus << ',' << r.index << ',' << format_double(r.lhs) << ','
            << format_double(r.threshold) << ',' << format_double(r.margin) << ','
            << verifier::scale_name(r.scale) << ',' << verifier::relation_name(r.relation)
            << ',' << verifier::status_name(r.status) << ',' << (r.pass ? "1" : "0")
            << '\n';
    }
    return out.str();
}

std::vector<MarginRecord> records_from_csv(const std::string& text) {
    std::vector<MarginRecord> out;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 11) throw std::invalid_argument("malformed CSV row");
        MarginRecord r;
        r.check = check_from_name(cells[0]);
        r.kind = model_from_name(cells[1]);
        r.genus = std::stoi(cells[2]);
        r.index = std::stoi(cells[3]);
        auto num = [](const std::string& s) {
            return s == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(s);
        };
        r.lhs = num(cells[4]);
        r.threshold = num(cells[5]);
        r.margin = num(cells[6]);
        r.scale = scale_from_name(cells[7]);
        r.relation = relation_from_name(cells[8]);
        r.status = status_from_name(cells[9]);
        r.pass = cells[10] == "1";
        out.push_back(r);
    }
    return out;
}

std::string human_verify(const VerifyReport& rep,
                         const std::vector<verifier::SweepSummary>& summaries) {
    std::ostringstream out;
    out << "verify report (" << rep.version << ")\n";
    for (const auto& s : summaries) {
        out << "  " << verifier::check_name(s.check) << " " << models::name(s.kind)
            << ": asserted " << s.asserted << ", unasserted " << s.unasserted
            << ", failed " << s.failed;
        if (s.asserted > 0 && s.failed == 0)
            out << ", min margin " << format_double(s.min_margin) << " at g="
                << s.argmin_genus << (s.argmin_index ? " k=" : "")
                << (s.argmin_index ? std::to_string(s.argmin_index) : "");
        out << '\n';
    }
    int shown = 0;
    for (const auto& r : rep.records) {
        if (r.status == verifier::Status::Pass ||
            r.status == verifier::Status::Unasserted)
            continue;
        if (++shown > 40) {
            out << "  ... further failing records elided\n";
            break;
        }
        out << "  " << verifier::status_name(r.status) << " "
            << verifier::check_name(r.check) << " " << models::name(r.kind)
            << " g=" << r.genus << " idx=" << r.index << " margin "
            << format_double(r.margin) << '\n';
    }
    return out.str();
}

}  // namespace hypsys::report
