#include "qchroma/report.hpp"

#include <json.hpp>

namespace qchroma {

std::string poly_vec_str(const std::vector<QLaurent>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    s += "]";
    return s;
}

namespace {

nlohmann::ordered_json report_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["cases"] = r.cases;
    j["failures"] = nlohmann::ordered_json::array();
    for (const CheckFailure& f : r.failures) {
        nlohmann::ordered_json jf;
        jf["shape"] = f.shape;
        jf["board"] = f.board;
        jf["identity"] = f.identity;
        jf["left"] = f.left;
        jf["right"] = f.right;
        j["failures"].push_back(jf);
    }
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool single) {
    if (single && reports.size() == 1) return report_json(reports[0]).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_tsv(const std::vector<SuiteReport>& reports) {
    std::string out;
    for (const SuiteReport& r : reports) {
        out += "suite\t" + r.suite + "\t" + r.params + "\tcases=" + std::to_string(r.cases) +
               "\tfailures=" + std::to_string(r.failures.size()) + "\n";
        for (const CheckFailure& f : r.failures)
            out += "fail\t" + f.shape + "\t" + f.board + "\t" + f.identity + "\t" + f.left + "\t" + f.right + "\n";
    }
    return out;
}

}  // namespace qchroma
