#include "qchroma/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "qchroma/chromatic.hpp"
#include "qchroma/hits.hpp"
#include "qchroma/rooks.hpp"
#include "qchroma/shapes.hpp"

namespace qchroma {

namespace {

struct SuiteInfo {
    const char* id;
    bool coloring;
    const char* summary;
};

// Registry order is the run order of "all".
constexpr SuiteInfo kSuites[] = {
    {"stat", false, "hit vectors from the placement statistic match the basis route"},
    {"mahonian", false, "hit vectors are natural in q and sum to the full-placement total"},
    {"rook-ids", false, "column, row and cell reductions of the rook vector"},
    {"hit-ids", false, "column, row and cell reductions of the hit vector"},
    {"delcon", false, "corner deletion/contraction recurrence for hit vectors"},
    {"boards", false, "hit vectors under padding to a square and dropping spare rows"},
    {"rect", false, "closed forms for rectangle and near-rectangle hit numbers"},
    {"fratio", false, "rook vector generating function in product form"},
    {"keyrel", false, "square-board hit numbers against rectangular ones"},
    {"gr", false, "square-board hit route through shifted power factors"},
    {"gp", true, "coloring sums against hit-weighted rectangle combinations"},
    {"an", true, "coloring sums against their elementary-basis form"},
    {"rec", true, "peel-largest-color recursion against direct coloring enumeration"},
};

const SuiteInfo* find_suite(const std::string& id) {
    for (const SuiteInfo& s : kSuites)
        if (id == s.id) return &s;
    return nullptr;
}

struct Resolved {
    int m_cap = 0;
    int n_cap = 0;
    int sum_cap = -1;  // -1: no m+n cap (placement suites)
    int max_cells = -1;
    int colors = -1;  // -1: m+n per board
    bool inject = false;
    std::string params;
};

Resolved resolve(bool coloring, const Bounds& b) {
    Resolved r;
    r.max_cells = b.max_cells;
    r.colors = b.colors;
    r.inject = b.inject_failure;
    r.m_cap = b.max_m >= 0 ? b.max_m : 5;
    r.n_cap = b.max_n >= 0 ? b.max_n : r.m_cap;
    if (coloring) {
        r.sum_cap = (b.max_m >= 0 || b.max_n >= 0) ? r.m_cap + r.n_cap : 6;
        if (!b.unsafe && r.sum_cap > 8)
            throw BoundsRefused("coloring sweep up to m+n=" + std::to_string(r.sum_cap) +
                                " would enumerate too many colorings; pass --unsafe-bounds to run it anyway");
    } else if (!b.unsafe && (r.m_cap > 6 || r.n_cap > 6)) {
        throw BoundsRefused("placement sweep with board caps " + std::to_string(r.m_cap) + "x" +
                            std::to_string(r.n_cap) + " exceeds 6; pass --unsafe-bounds to run it anyway");
    }
    r.params = "m<=" + std::to_string(r.m_cap) + ";n<=" + std::to_string(r.n_cap);
    if (r.sum_cap >= 0) r.params += ";m+n<=" + std::to_string(r.sum_cap);
    if (r.max_cells >= 0) r.params += ";cells<=" + std::to_string(r.max_cells);
    if (coloring) r.params += ";colors=" + (r.colors >= 0 ? std::to_string(r.colors) : std::string("m+n"));
    return r;
}

std::vector<Board> sweep_boards(const Resolved& r) {
    std::vector<Board> out;
    for (int m = 1; m <= r.m_cap; ++m)
        for (int n = 1; n <= std::min(m, r.n_cap); ++n)
            if (r.sum_cap < 0 || m + n <= r.sum_cap) out.push_back(Board{n, m});
    return out;
}

// Identity checks must not abort a sweep: an exception raised while checking
// one shape (a non-exact division is itself an identity violation) becomes a
// recorded failure for that shape.
template <typename F>
void per_shape(CheckOutcome& out, const BoardShape& s, const char* label, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        out.check(false, s.str(), board_str(s.board()), std::string(label) + "-exception", e.what(),
                  "no exception");
    }
}

using Task = std::function<CheckOutcome()>;

void add_board_tasks(std::vector<Task>& tasks, const Resolved& r,
                     const std::function<void(CheckOutcome&, const BoardShape&)>& body) {
    for (Board b : sweep_boards(r))
        tasks.push_back([b, cells = r.max_cells, body]() {
            CheckOutcome out;
            for (const BoardShape& s : enumerate_shapes(b.cols, b.rows, cells)) body(out, s);
            return out;
        });
}

std::vector<Task> make_tasks(const std::string& id, const Resolved& r) {
    std::vector<Task> tasks;

    if (id == "stat") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "hit-stat-vs-basis", [&] {
                std::vector<QLaurent> basis = hit_numbers_basis(s);
                std::vector<QLaurent> stat = hit_numbers_stat(s);
                out.check(basis == stat, s.str(), board_str(s.board()), "hit-stat-vs-basis",
                          poly_vec_str(basis), poly_vec_str(stat));
            });
        });
    } else if (id == "mahonian") {
        bool first_task = true;
        for (Board b : sweep_boards(r)) {
            bool inject = r.inject && first_task;
            first_task = false;
            tasks.push_back([b, cells = r.max_cells, inject]() {
                CheckOutcome out;
                bool first_shape = true;
                for (const BoardShape& s : enumerate_shapes(b.cols, b.rows, cells)) {
                    bool doctor = inject && first_shape;
                    first_shape = false;
                    per_shape(out, s, "hit-sum", [&] {
                        std::vector<QLaurent> H = hit_numbers_basis(s);
                        QLaurent sum;
                        bool nat = true;
                        for (const QLaurent& h : H) {
                            sum += h;
                            nat = nat && h.natural();
                        }
                        QLaurent rhs = q_falling(b.cols, b.rows);
                        if (doctor) rhs += QLaurent::one();
                        out.check(sum == rhs, s.str(), board_str(b), "hit-sum-full-placements", sum.str(),
                                  rhs.str());
                        out.check(nat, s.str(), board_str(b), "hit-natural", poly_vec_str(H),
                                  "nonnegative coefficients and powers");
                    });
                }
                return out;
            });
        }
    } else if (id == "rook-ids") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "rook-ids", [&] {
                for (int k = 0; k <= s.rows() + 1; ++k) out.merge(verify_rook_identities(s, k));
            });
        });
    } else if (id == "hit-ids") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "hit-ids", [&] {
                for (int k = 0; k <= s.rows(); ++k) out.merge(verify_hit_identities(s, k));
            });
        });
    } else if (id == "delcon") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "hit-del-contract", [&] {
                for (CellRef e : corner_cells(s)) out.merge(verify_del_contract(s, e));
            });
        });
    } else if (id == "boards") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "board-padding", [&] { out.merge(verify_board_padding(s)); });
        });
    } else if (id == "rect") {
        for (int N = 1; N <= r.m_cap; ++N) {
            tasks.push_back([N]() {
                CheckOutcome out;
                Board b{N, N};
                for (int m = 0; m <= N; ++m)
                    for (int j = 0; j <= N; ++j) {
                        BoardShape s(std::vector<int>(static_cast<size_t>(j), m), b);
                        per_shape(out, s, "rect-hit-closed", [&] {
                            std::vector<QLaurent> H = hit_numbers_basis(s);
                            for (int k = 0; k <= N; ++k) {
                                QLaurent want = k <= j ? rect_hit_closed_form(N, m, j, k) : QLaurent();
                                std::string ident = "rect-hit-closed(m=" + std::to_string(m) +
                                                    ";j=" + std::to_string(j) + ";k=" + std::to_string(k) + ")";
                                out.check(H[static_cast<size_t>(k)] == want, s.str(), board_str(b), ident,
                                          H[static_cast<size_t>(k)].str(), want.str());
                            }
                        });
                    }
                return out;
            });
        }
        for (Board b : sweep_boards(r)) {
            tasks.push_back([b]() {
                CheckOutcome out;
                for (int k = 0; k <= b.rows; ++k) {
                    BoardShape s(std::vector<int>(static_cast<size_t>(k), b.cols - 1), b);
                    per_shape(out, s, "rect-near-full", [&] {
                        std::vector<QLaurent> H = hit_numbers_basis(s);
                        QLaurent tail = q_falling(b.cols - 1, b.rows - 1);
                        for (int i = 0; i <= k - 2; ++i)
                            out.check(H[static_cast<size_t>(i)].is_zero(), s.str(), board_str(b),
                                      "rect-near-full-low(k=" + std::to_string(k) + ";j=" + std::to_string(i) + ")",
                                      H[static_cast<size_t>(i)].str(), "0");
                        if (k >= 1) {
                            QLaurent want = q_number(k) * tail;
                            out.check(H[static_cast<size_t>(k - 1)] == want, s.str(), board_str(b),
                                      "rect-near-full-below(k=" + std::to_string(k) + ")",
                                      H[static_cast<size_t>(k - 1)].str(), want.str());
                        }
                        QLaurent want = q_power(k) * q_number(b.cols - k) * tail;
                        out.check(H[static_cast<size_t>(k)] == want, s.str(), board_str(b),
                                  "rect-near-full-at(k=" + std::to_string(k) + ")",
                                  H[static_cast<size_t>(k)].str(), want.str());
                    });
                }
                return out;
            });
        }
    } else if (id == "fratio") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "factor-ratio", [&] { out.merge(verify_f_ratio(s)); });
        });
    } else if (id == "keyrel") {
        add_board_tasks(tasks, r, [](CheckOutcome& out, const BoardShape& s) {
            per_shape(out, s, "square-hit", [&] { out.merge(verify_keyrels(s)); });
        });
    } else if (id == "gr") {
        for (int m = 1; m <= std::min(r.m_cap, r.n_cap); ++m) {
            Board b{m, m};
            tasks.push_back([b, cells = r.max_cells]() {
                CheckOutcome out;
                for (const BoardShape& s : enumerate_shapes(b.cols, b.rows, cells)) {
                    try {
                        gr_hit_square(s);
                        out.check(true, s.str(), board_str(b), "square-hit-shifted-route", "", "");
                    } catch (const std::exception& e) {
                        out.check(false, s.str(), board_str(b), "square-hit-shifted-route", e.what(),
                                  "routes agree");
                    }
                }
                return out;
            });
        }
    } else if (id == "gp") {
        add_board_tasks(tasks, r, [colors = r.colors](CheckOutcome& out, const BoardShape& s) {
            int M = colors >= 0 ? colors : s.rows() + s.cols();
            per_shape(out, s, "csf-rect-combination", [&] {
                SymPoly lhs = csf_recursive(s, M);
                SymPoly rhs = gp_expansion(s, M);
                out.check(lhs == rhs, s.str(), board_str(s.board()),
                          "csf-rect-combination(colors=" + std::to_string(M) + ")", lhs.str(), rhs.str());
            });
        });
    } else if (id == "an") {
        add_board_tasks(tasks, r, [colors = r.colors](CheckOutcome& out, const BoardShape& s) {
            if (s.length() > s.part(1)) return;  // expansion needs length <= first part
            int M = colors >= 0 ? colors : s.rows() + s.cols();
            per_shape(out, s, "csf-elementary-form", [&] {
                SymPoly lhs = csf_recursive(s, M);
                SymPoly rhs = an_expansion(s, M);
                out.check(lhs == rhs, s.str(), board_str(s.board()),
                          "csf-elementary-form(colors=" + std::to_string(M) + ")", lhs.str(), rhs.str());
                for (const ETerm& t : an_e_terms(s))
                    out.check(t.coeff.natural(), s.str(), board_str(s.board()),
                              "elementary-coefficient-natural(outer=" + std::to_string(t.outer) +
                                  ";inner=" + std::to_string(t.inner) + ")",
                              t.coeff.str(), "nonnegative coefficients and powers");
            });
        });
    } else if (id == "rec") {
        add_board_tasks(tasks, r, [colors = r.colors](CheckOutcome& out, const BoardShape& s) {
            int M = colors >= 0 ? colors : s.rows() + s.cols();
            per_shape(out, s, "csf-recursion-vs-enumeration", [&] {
                SymPoly lhs = csf_recursive(s, M);
                SymPoly rhs = csf_bruteforce(graph_from_shape(s), M);
                out.check(lhs == rhs, s.str(), board_str(s.board()),
                          "csf-recursion-vs-enumeration(colors=" + std::to_string(M) + ")", lhs.str(),
                          rhs.str());
            });
        });
        for (Board b : sweep_boards(r)) {
            int M = r.colors >= 0 ? r.colors : b.rows + b.cols;
            if (M < 1) continue;
            tasks.push_back([b, M]() {
                CheckOutcome out;
                CsfEngine eng;
                for (int k = 0; k <= b.rows; ++k) {
                    BoardShape s(std::vector<int>(static_cast<size_t>(k), b.cols), b);
                    per_shape(out, s, "rect-recursion", [&] { out.merge(verify_rect_recursion(b.cols, b.rows, k, M, &eng)); });
                }
                return out;
            });
        }
    } else {
        throw UnknownSuite("unknown suite: " + id);
    }
    return tasks;
}

}  // namespace

std::vector<std::string> suite_ids() {
    std::vector<std::string> out;
    for (const SuiteInfo& s : kSuites) out.push_back(s.id);
    return out;
}

bool suite_exists(const std::string& id) { return find_suite(id) != nullptr; }

bool suite_is_coloring(const std::string& id) {
    const SuiteInfo* s = find_suite(id);
    if (!s) throw UnknownSuite("unknown suite: " + id);
    return s->coloring;
}

std::string suite_summary(const std::string& id) {
    const SuiteInfo* s = find_suite(id);
    if (!s) throw UnknownSuite("unknown suite: " + id);
    return s->summary;
}

SuiteReport run_suite(const std::string& id, const Bounds& bounds, int jobs) {
    const SuiteInfo* info = find_suite(id);
    if (!info) throw UnknownSuite("unknown suite: " + id);
    Resolved r = resolve(info->coloring, bounds);
    std::vector<Task> tasks = make_tasks(id, r);

    auto start = std::chrono::steady_clock::now();
    std::vector<CheckOutcome> results(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        // Work stealing over a fixed task list; outcomes land in slots and
        // are merged in creation order, so the report cannot depend on jobs.
        std::atomic<size_t> next{0};
        size_t workers = std::min<size_t>(static_cast<size_t>(jobs), tasks.size());
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
            });
        for (std::thread& t : pool) t.join();
    }
    auto stop = std::chrono::steady_clock::now();

    CheckOutcome total;
    for (CheckOutcome& res : results) total.merge(std::move(res));

    SuiteReport rep;
    rep.suite = id;
    rep.params = r.params;
    rep.cases = total.cases;
    rep.failures = std::move(total.failures);
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

}  // namespace qchroma
