#pragma once

#include <optional>
#include <string>
#include <vector>

namespace boson {

// One report line: {"check": str, "params": obj, "pass": bool, "max_error": x}.
struct CheckReport {
    std::string check;
    std::string params_json;  // serialized object
    bool pass = false;
    std::optional<double> max_error;

    std::string to_json() const;
};

using Report = std::vector<CheckReport>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r)
        if (!c.pass) return false;
    return true;
}

// Eq-by-eq identity suites. Sizes are the knobs the CLI exposes; defaults
// match the acceptance grid.
Report suite_defining_identity(unsigned max_n = 12);
Report suite_column_series(unsigned max_k = 8, unsigned order = 15);
Report suite_normal_ordering(unsigned max_k = 12);
Report suite_fock_oracle(unsigned words = 50, unsigned max_len = 6, unsigned dim = 40,
                         unsigned long seed = 7);
Report suite_generating_function(unsigned order = 8);
Report suite_bell_recurrence(unsigned max_k = 10);
Report suite_dobinski_grid(unsigned max_k = 8, double tol = 1e-10);
Report suite_euler_operator(unsigned max_n = 8, unsigned max_degree = 6,
                            unsigned samples = 20, unsigned long seed = 7);

// Dispatch by suite name; returns nullopt for an unknown suite.
std::optional<Report> run_suite(const std::string& name, unsigned size,
                                unsigned words, unsigned long seed);

}  // namespace boson
