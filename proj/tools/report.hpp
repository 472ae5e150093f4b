#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uqs::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;
std::string engine_version();

// Outcome of a single check. Only counterexample makes the process exit nonzero.
enum class Status { pass, counterexample, rejected, skipped };

std::string status_name(Status s);
Status parse_status(const std::string& text);

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    json witness;  // null when there is none
};

struct Certificate {
    std::string subject;
    json inputs;
    std::vector<CheckResult> checks;
    json data;
    double seconds = 0;

    // Worst status over the checks: counterexample, then rejected, then pass; skipped only if nothing ran.
    Status verdict() const;
    void add(std::string name, Status status, std::string detail = {}, json witness = nullptr);
};

json certificate_to_json(const Certificate& c, bool include_timing = true);
Certificate certificate_from_json(const json& j);

struct Report {
    std::string command;
    json config;
    std::vector<Certificate> certificates;

    int exit_status() const;  // 1 iff some certificate is a counterexample
};

json report_to_json(const Report& r, bool include_timing = true);
Report report_from_json(const json& j);
std::string summary_table(const Report& r);

struct RunConfig {
    std::string type = "A1";
    std::optional<std::vector<std::vector<int>>> cartan;  // explicit matrix instead of a type
    int m = 3;
    std::string element;  // word such as "s1 s2"; empty for the identity
    std::string eta_path;
    std::string chi_path;
    std::vector<std::string> l_values;  // inline eta(l_i)
    std::vector<std::string> c_values;  // inline chi(f_gamma_i)
    std::string mode = "all";           // sweep: "all" or "classes"
    int budget_dim = 2000;
    long budget_search = 5'000'000;
    unsigned seed = 1;
    int jobs = 1;

    // Echo for certificates; omits jobs, which does not affect results.
    json to_json() const;
    // Fills every field present in the JSON object; unknown keys are rejected.
    void merge(const json& j);
    // Throws InvalidArgument.
    void validate() const;
};

}  // namespace uqs::cli
