#include "report.hpp"

#include "uqs/error.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace uqs::cli {

std::string engine_version() { return UQS_ENGINE_VERSION; }

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::counterexample: return "counterexample";
        case Status::rejected: return "rejected";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

Status parse_status(const std::string& text) {
    for (Status s : {Status::pass, Status::counterexample, Status::rejected, Status::skipped})
        if (status_name(s) == text) return s;
    throw InvalidArgument("unknown status '" + text + "'");
}

Status Certificate::verdict() const {
    bool any_counter = false, any_rejected = false, any_pass = false;
    for (const auto& c : checks) {
        any_counter |= c.status == Status::counterexample;
        any_rejected |= c.status == Status::rejected;
        any_pass |= c.status == Status::pass;
    }
    if (any_counter) return Status::counterexample;
    if (any_rejected) return Status::rejected;
    if (any_pass) return Status::pass;
    return Status::skipped;
}

void Certificate::add(std::string name, Status status, std::string detail, json witness) {
    checks.push_back({std::move(name), status, std::move(detail), std::move(witness)});
}

json certificate_to_json(const Certificate& c, bool include_timing) {
    json checks = json::array();
    for (const auto& k : c.checks)
        checks.push_back({{"name", k.name}, {"status", status_name(k.status)}, {"detail", k.detail}, {"witness", k.witness}});
    json j = {{"subject", c.subject}, {"inputs", c.inputs}, {"verdict", status_name(c.verdict())},
              {"checks", checks},     {"data", c.data}};
    if (include_timing) j["timing"] = {{"seconds", c.seconds}};
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.subject = j.at("subject").get<std::string>();
    c.inputs = j.at("inputs");
    c.data = j.at("data");
    for (const auto& k : j.at("checks"))
        c.add(k.at("name").get<std::string>(), parse_status(k.at("status").get<std::string>()),
              k.at("detail").get<std::string>(), k.at("witness"));
    if (j.contains("timing")) c.seconds = j["timing"].at("seconds").get<double>();
    if (status_name(c.verdict()) != j.at("verdict").get<std::string>())
        throw InvalidArgument("certificate verdict does not match its checks");
    return c;
}

int Report::exit_status() const {
    for (const auto& c : certificates)
        if (c.verdict() == Status::counterexample) return 1;
    return 0;
}

json report_to_json(const Report& r, bool include_timing) {
    json certs = json::array();
    std::map<std::string, int> counts;
    for (const auto& c : r.certificates) {
        certs.push_back(certificate_to_json(c, include_timing));
        ++counts[status_name(c.verdict())];
    }
    return {{"schema_version", schema_version}, {"engine_version", engine_version()},
            {"command", r.command},             {"config", r.config},
            {"certificates", certs},            {"summary", counts},
            {"exit_status", r.exit_status()}};
}

Report report_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != schema_version)
        throw InvalidArgument("unsupported schema version " + j.at("schema_version").dump());
    Report r;
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    for (const auto& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
    return r;
}

std::string summary_table(const Report& r) {
    std::ostringstream os;
    size_t width = 7;
    for (const auto& c : r.certificates) width = std::max(width, c.subject.size());
    os << std::left << std::setw(static_cast<int>(width) + 2) << "subject" << std::setw(16) << "verdict" << "checks\n";
    for (const auto& c : r.certificates) {
        os << std::setw(static_cast<int>(width) + 2) << c.subject << std::setw(16) << status_name(c.verdict());
        for (size_t k = 0; k < c.checks.size(); ++k)
            os << (k ? ", " : "") << c.checks[k].name << "=" << status_name(c.checks[k].status);
        os << "\n";
    }
    os << r.certificates.size() << " certificate(s), exit status " << r.exit_status() << "\n";
    return os.str();
}

json RunConfig::to_json() const {
    json j = {{"type", type},
              {"m", m},
              {"element", element},
              {"eta", eta_path},
              {"chi", chi_path},
              {"l", l_values},
              {"c", c_values},
              {"mode", mode},
              {"budget_dim", budget_dim},
              {"budget_search", budget_search},
              {"seed", seed}};
    j["cartan"] = cartan ? json(*cartan) : json(nullptr);
    return j;
}

void RunConfig::merge(const json& j) {
    if (!j.is_object()) throw InvalidArgument("configuration must be a JSON object");
    static const std::set<std::string> known = {"type", "cartan", "m", "element", "eta", "chi", "l", "c",
                                                "mode", "budget_dim", "budget_search", "seed", "jobs"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw InvalidArgument("unknown configuration key '" + key + "'");
    auto strings = [](const json& v) {
        std::vector<std::string> out;
        for (const auto& x : v) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        return out;
    };
    if (j.contains("type")) type = j["type"].get<std::string>();
    if (j.contains("cartan") && !j["cartan"].is_null()) cartan = j["cartan"].get<std::vector<std::vector<int>>>();
    if (j.contains("m")) m = j["m"].get<int>();
    if (j.contains("element")) element = j["element"].get<std::string>();
    if (j.contains("eta")) eta_path = j["eta"].get<std::string>();
    if (j.contains("chi")) chi_path = j["chi"].get<std::string>();
    if (j.contains("l")) l_values = strings(j["l"]);
    if (j.contains("c")) c_values = strings(j["c"]);
    if (j.contains("mode")) mode = j["mode"].get<std::string>();
    if (j.contains("budget_dim")) budget_dim = j["budget_dim"].get<int>();
    if (j.contains("budget_search")) budget_search = j["budget_search"].get<long>();
    if (j.contains("seed")) seed = j["seed"].get<unsigned>();
    if (j.contains("jobs")) jobs = j["jobs"].get<int>();
}

void RunConfig::validate() const {
    if (m < 3 || m % 2 == 0) throw InvalidArgument("m must be odd and at least 3");
    if (budget_dim <= 0 || budget_search <= 0) throw InvalidArgument("budgets must be positive");
    if (jobs <= 0) throw InvalidArgument("jobs must be positive");
    if (mode != "all" && mode != "classes") throw InvalidArgument("sweep mode must be 'all' or 'classes'");
}

}  // namespace uqs::cli
