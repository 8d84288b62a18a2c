#ifndef FINMEAS_LAW_REPORT_HPP
#define FINMEAS_LAW_REPORT_HPP

// Machine-readable outcome of a property suite. Every failed identity is
// recorded with the law name, the per-case seed and the two sides, so a
// failure reproduces from the report alone.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace finmeas {

struct LawFailure {
    std::string law;
    std::uint64_t seed = 0;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::uint64_t checks = 0;
    std::vector<LawFailure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    template <class T>
    bool check_equal(const std::string& law, std::uint64_t case_seed, const std::string& input,
                     const T& lhs, const T& rhs) {
        ++checks;
        if (lhs == rhs) return true;
        failures.push_back(LawFailure{law, case_seed, input, to_string(lhs), to_string(rhs)});
        return false;
    }

    bool check_true(const std::string& law, std::uint64_t case_seed, const std::string& input,
                    bool holds, std::string lhs, std::string rhs) {
        ++checks;
        if (holds) return true;
        failures.push_back(LawFailure{law, case_seed, input, std::move(lhs), std::move(rhs)});
        return false;
    }

    void merge(const LawReport& other) {
        cases += other.cases;
        checks += other.checks;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

inline nlohmann::json to_json(const LawFailure& f) {
    return nlohmann::json{{"law", f.law}, {"seed", f.seed}, {"input", f.input},
                          {"lhs", f.lhs}, {"rhs", f.rhs}};
}

inline nlohmann::json to_json(const LawReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const LawFailure& f : r.failures) failures.push_back(to_json(f));
    return nlohmann::json{{"suite", r.suite}, {"seed", r.seed},   {"cases", r.cases},
                          {"checks", r.checks}, {"passed", r.passed()}, {"failures", failures},
                          {"notes", r.notes}};
}

} // namespace finmeas

#endif // FINMEAS_LAW_REPORT_HPP
