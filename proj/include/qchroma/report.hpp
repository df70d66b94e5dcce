#pragma once

#include <string>
#include <vector>

#include "qchroma/qarith.hpp"

namespace qchroma {

// One falsified check, with both sides rendered as canonical text.
// The run's purpose is adjudication, so evidence is mandatory.
struct CheckFailure {
    std::string shape;
    std::string board;
    std::string identity;
    std::string left;
    std::string right;
    bool operator==(const CheckFailure&) const = default;
};

struct CheckOutcome {
    long cases = 0;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
    void merge(CheckOutcome&& o) {
        cases += o.cases;
        for (CheckFailure& f : o.failures) failures.push_back(std::move(f));
    }
    // Count one case; record a failure unless the sides agree.
    void check(bool pass, const std::string& shape, const std::string& board, const std::string& identity,
               const std::string& left, const std::string& right) {
        ++cases;
        if (!pass) failures.push_back({shape, board, identity, left, right});
    }
};

struct SuiteReport {
    std::string suite;
    std::string params;
    long cases = 0;
    std::vector<CheckFailure> failures;
    // Wall time is kept out of the serialized report so reruns with different
    // worker counts emit identical bytes; it is reported on stderr instead.
    long long wall_ms = 0;
};

std::string poly_vec_str(const std::vector<QLaurent>& v);  // "[1, 2q+2q^2, q^3]"

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool single);
std::string reports_to_tsv(const std::vector<SuiteReport>& reports);

}  // namespace qchroma
