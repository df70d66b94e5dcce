#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qchroma/chromatic.hpp"
#include "qchroma/harness.hpp"
#include "qchroma/hits.hpp"
#include "qchroma/qarith.hpp"
#include "qchroma/report.hpp"
#include "qchroma/rooks.hpp"
#include "qchroma/shapes.hpp"

using qchroma::Board;
using qchroma::BoardShape;
using qchroma::QLaurent;

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

nlohmann::ordered_json laurent_json(const QLaurent& p) {
    nlohmann::ordered_json j;
    j["min"] = p.is_zero() ? 0 : p.min_exp();
    auto arr = nlohmann::ordered_json::array();
    for (const qchroma::Int& c : p.coeffs()) arr.push_back(c.str());
    j["coeffs"] = arr;
    return j;
}

nlohmann::ordered_json poly_strings(const std::vector<QLaurent>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const QLaurent& p : v) arr.push_back(p.str());
    return arr;
}

std::string tsv_vector(const std::string& kind, const BoardShape& s, const std::vector<QLaurent>& v) {
    std::string line = kind + "\t" + s.str() + "\t" + qchroma::board_str(s.board());
    for (const QLaurent& p : v) line += "\t" + p.str();
    return line + "\n";
}

// Single-shape ceilings, matching the sweep ceilings of the verify suites.
void check_board_ceiling(const Board& b, bool coloring, bool unsafe) {
    if (unsafe) return;
    if (coloring && b.rows + b.cols > 8)
        throw qchroma::BoundsRefused("board " + qchroma::board_str(b) +
                                     " has m+n > 8; pass --unsafe-bounds to color it anyway");
    if (!coloring && (b.rows > 6 || b.cols > 6))
        throw qchroma::BoundsRefused("board " + qchroma::board_str(b) +
                                     " exceeds 6 on a side; pass --unsafe-bounds to run it anyway");
}

BoardShape make_shape(const std::string& shape_text, const std::string& board_text) {
    std::vector<int> parts = qchroma::parse_parts(shape_text);
    Board b;
    if (board_text.empty()) {
        b.rows = static_cast<int>(parts.size());
        b.cols = parts.empty() ? 0 : parts.front();
    } else {
        b = qchroma::parse_board(board_text);
    }
    return BoardShape(parts, b);
}

int run_rook(const std::string& shape_text, const std::string& board_text, int k, const std::string& format,
             const std::string& out_path, bool unsafe) {
    BoardShape s = make_shape(shape_text, board_text);
    check_board_ceiling(s.board(), false, unsafe);
    std::vector<QLaurent> R;
    if (k >= 0)
        R.push_back(qchroma::rook_number(s, k));
    else
        R = qchroma::rook_numbers(s);
    if (format == "tsv") {
        std::string line = "rook\t" + s.str() + "\t" + qchroma::board_str(s.board());
        if (k >= 0) line += "\tk=" + std::to_string(k);
        for (const QLaurent& p : R) line += "\t" + p.str();
        return emit(line + "\n", out_path);
    }
    nlohmann::ordered_json j;
    j["shape"] = s.str();
    j["board"] = qchroma::board_str(s.board());
    if (k >= 0) j["k"] = k;
    j["R"] = poly_strings(R);
    return emit(j.dump(2) + "\n", out_path);
}

int run_hit(const std::string& shape_text, const std::string& board_text, const std::string& route,
            const std::string& format, const std::string& out_path, bool unsafe) {
    BoardShape s = make_shape(shape_text, board_text);
    check_board_ceiling(s.board(), false, unsafe);
    std::vector<QLaurent> H;
    bool both = route == "both";
    bool agree = true;
    if (route == "stat") {
        H = qchroma::hit_numbers_stat(s);
    } else {
        H = qchroma::hit_numbers_basis(s);
        if (both) agree = H == qchroma::hit_numbers_stat(s);
    }
    int rc;
    if (format == "tsv") {
        std::string text = tsv_vector("hit", s, H);
        if (both) text += std::string("routes_agree\t") + (agree ? "true" : "false") + "\n";
        rc = emit(text, out_path);
    } else {
        nlohmann::ordered_json j;
        j["shape"] = s.str();
        j["board"] = qchroma::board_str(s.board());
        j["H"] = poly_strings(H);
        if (both)
            j["routes_agree"] = agree;
        else
            j["route"] = route;
        rc = emit(j.dump(2) + "\n", out_path);
    }
    if (rc != 0) return rc;
    return agree ? 0 : 1;
}

int run_csf(const std::string& shape_text, const std::string& board_text, int colors,
            const std::string& route, const std::string& format, const std::string& out_path, bool unsafe) {
    BoardShape s = make_shape(shape_text, board_text);
    check_board_ceiling(s.board(), true, unsafe);
    int M = colors >= 0 ? colors : s.rows() + s.cols();
    qchroma::SymPoly p;
    if (route == "brute")
        p = qchroma::csf_bruteforce(qchroma::graph_from_shape(s), M);
    else if (route == "gp")
        p = qchroma::gp_expansion(s, M);
    else if (route == "an")
        p = qchroma::an_expansion(s, M);
    else
        p = qchroma::csf_recursive(s, M);
    if (format == "tsv") {
        std::string text = "csf\t" + s.str() + "\t" + qchroma::board_str(s.board()) +
                           "\tcolors=" + std::to_string(M) + "\n";
        for (const auto& [key, c] : p.terms()) {
            std::string exps;
            for (size_t i = 0; i < key.size(); ++i) exps += (i ? "," : "") + std::to_string(key[i]);
            if (key.empty()) exps = "-";
            text += "term\t" + exps + "\t" + c.str() + "\n";
        }
        return emit(text, out_path);
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exps"] = key;
        t["coeff"] = laurent_json(c);
        arr.push_back(t);
    }
    return emit(arr.dump(2) + "\n", out_path);
}

int run_verify(const std::string& suite, const qchroma::Bounds& bounds, int jobs, const std::string& format,
               const std::string& out_path) {
    std::vector<std::string> ids;
    if (suite == "all")
        ids = qchroma::suite_ids();
    else if (qchroma::suite_exists(suite))
        ids.push_back(suite);
    else
        throw qchroma::UnknownSuite("unknown suite: " + suite + " (try one of: " + [] {
            std::string all;
            for (const std::string& id : qchroma::suite_ids()) all += (all.empty() ? "" : ", ") + id;
            return all;
        }() + ", all)");

    std::vector<qchroma::SuiteReport> reports;
    long failures = 0;
    for (const std::string& id : ids) {
        qchroma::SuiteReport rep = qchroma::run_suite(id, bounds, jobs);
        std::cerr << "suite " << rep.suite << ": " << rep.cases << " cases, " << rep.failures.size()
                  << " failures, " << rep.wall_ms << " ms\n";
        failures += static_cast<long>(rep.failures.size());
        reports.push_back(std::move(rep));
    }
    std::string text = format == "tsv" ? qchroma::reports_to_tsv(reports)
                                       : qchroma::reports_to_json(reports, ids.size() == 1);
    int rc = emit(text, out_path);
    if (rc != 0) return rc;
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rook, hit and coloring computations for partition shapes on boards"};
    app.require_subcommand(1);

    std::string shape_text, board_text, out_path;
    std::string format = "json";
    bool unsafe = false;

    int rook_k = -1;
    CLI::App* rook = app.add_subcommand("rook", "Rook vector of a shape");
    rook->add_option("--shape", shape_text, "comma-separated parts, e.g. 2,1 (0 for the empty shape)")
        ->required();
    rook->add_option("--board", board_text, "board as NxM, N rows and M columns (default: tight)");
    rook->add_option("--k", rook_k, "emit only this entry of the vector")->check(CLI::NonNegativeNumber);
    rook->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    rook->add_option("--out", out_path, "write the report here instead of stdout");
    rook->add_flag("--unsafe-bounds", unsafe, "allow boards past the size ceiling");

    std::string hit_route = "both";
    CLI::App* hit = app.add_subcommand("hit", "Hit vector of a shape in its board");
    hit->add_option("--shape", shape_text, "comma-separated parts, e.g. 2,1 (0 for the empty shape)")
        ->required();
    hit->add_option("--board", board_text, "board as NxM, N rows and M columns")->required();
    hit->add_option("--route", hit_route, "basis, stat, or both")
        ->check(CLI::IsMember({"basis", "stat", "both"}));
    hit->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    hit->add_option("--out", out_path, "write the report here instead of stdout");
    hit->add_flag("--unsafe-bounds", unsafe, "allow boards past the size ceiling");

    int colors = -1;
    std::string csf_route = "recursive";
    CLI::App* csf = app.add_subcommand("csf", "Chromatic sum of the shape's graph");
    csf->add_option("--shape", shape_text, "comma-separated parts, e.g. 2,1 (0 for the empty shape)")
        ->required();
    csf->add_option("--board", board_text, "board as NxM, N rows and M columns")->required();
    csf->add_option("--colors", colors, "number of variables (default: rows+columns)")
        ->check(CLI::NonNegativeNumber);
    csf->add_option("--route", csf_route,
                    "recursive (peel colors), brute (enumerate colorings), gp (rectangle "
                    "combination), or an (elementary basis)")
        ->check(CLI::IsMember({"brute", "recursive", "gp", "an"}));
    csf->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    csf->add_option("--out", out_path, "write the report here instead of stdout");
    csf->add_flag("--unsafe-bounds", unsafe, "allow boards past the size ceiling");

    std::string suite;
    qchroma::Bounds bounds;
    int jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite over small boards");
    verify->add_option("--suite", suite, "suite id, or all")->required();
    verify->add_option("--max-m", bounds.max_m, "column cap for swept boards");
    verify->add_option("--max-n", bounds.max_n, "row cap for swept boards");
    verify->add_option("--max-cells", bounds.max_cells, "skip shapes with more cells");
    verify->add_option("--colors", bounds.colors, "fixed variable count for coloring suites");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    verify->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--unsafe-bounds", bounds.unsafe, "lift the sweep ceilings");
    verify->add_flag("--inject-failure", bounds.inject_failure,
                     "falsify one check to exercise failure reporting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rook->parsed()) return run_rook(shape_text, board_text, rook_k, format, out_path, unsafe);
        if (hit->parsed()) return run_hit(shape_text, board_text, hit_route, format, out_path, unsafe);
        if (csf->parsed()) return run_csf(shape_text, board_text, colors, csf_route, format, out_path, unsafe);
        return run_verify(suite, bounds, jobs, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
