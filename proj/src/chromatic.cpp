#include "qchroma/chromatic.hpp"

#include <algorithm>
#include <set>

#include "qchroma/hits.hpp"

namespace qchroma {

OrderedGraph graph_from_shape(const BoardShape& s) {
    int n = s.rows(), m = s.cols();
    OrderedGraph g;
    g.vertex_count = m + n;
    for (int u = 0; u < m + n; ++u)
        for (int v = u + 1; v < m + n; ++v) {
            if (u < n && v >= n && m + n - v <= s.part(u + 1)) continue;  // cell inside the shape
            g.edges.emplace_back(u, v);
        }
    return g;
}

SymPoly::SymPoly(int vars) : vars_(vars) {
    if (vars < 0) throw PreconditionViolation("SymPoly: negative variable count");
}

SymPoly SymPoly::one(int vars) {
    SymPoly p(vars);
    p.terms_.emplace(std::vector<int>{}, QLaurent::one());
    return p;
}

void SymPoly::add_term(const std::vector<int>& key, const QLaurent& c) {
    if (static_cast<int>(key.size()) > vars_) throw PreconditionViolation("SymPoly: key longer than variable count");
    for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] <= 0) throw PreconditionViolation("SymPoly: key entries must be positive");
        if (i + 1 < key.size() && key[i] < key[i + 1]) throw PreconditionViolation("SymPoly: key must be weakly decreasing");
    }
    if (c.is_zero()) return;
    QLaurent& slot = terms_[key];
    slot += c;
    if (slot.is_zero()) terms_.erase(key);
}

QLaurent SymPoly::coeff(const std::vector<int>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QLaurent() : it->second;
}

SymPoly SymPoly::scaled(const QLaurent& c) const {
    SymPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (vars_ != o.vars_) throw PreconditionViolation("SymPoly: adding different variable counts");
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (vars_ != o.vars_) throw PreconditionViolation("SymPoly: subtracting different variable counts");
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

SymPoly SymPoly::lifted(int d) const {
    if (d < 0) throw PreconditionViolation("SymPoly: lift exponent must be >= 0");
    SymPoly out(vars_ + 1);
    for (const auto& [k, v] : terms_) {
        // Smallest exponent of the representative once padded to full width;
        // on a width-zero polynomial the appended exponent is unconstrained.
        int padmin;
        if (static_cast<int>(k.size()) < vars_)
            padmin = 0;
        else
            padmin = k.empty() ? d : k.back();
        if (d > padmin) continue;
        std::vector<int> nk = k;
        if (d > 0) nk.push_back(d);
        out.terms_.emplace(std::move(nk), v);
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        out += "[";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(k[i]);
        }
        out += "]*(" + v.str() + ")";
    }
    return out;
}

namespace {

struct ColoringWalk {
    const OrderedGraph& g;
    int colors;
    std::vector<std::vector<int>> prev;  // earlier neighbors of each vertex
    std::vector<int> color;
    std::vector<int> counts;

    ColoringWalk(const OrderedGraph& graph, int m)
        : g(graph), colors(m), prev(graph.vertex_count), color(graph.vertex_count, 0), counts(m, 0) {
        for (auto [u, v] : g.edges) prev[static_cast<size_t>(v)].push_back(u);
    }

    template <typename Leaf>
    void walk(int v, int ascents, Leaf&& leaf) {
        if (v == g.vertex_count) {
            leaf(ascents);
            return;
        }
        for (int c = 1; c <= colors; ++c) {
            bool clash = false;
            int up = 0;
            for (int u : prev[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(u)] == c) {
                    clash = true;
                    break;
                }
                if (color[static_cast<size_t>(u)] < c) ++up;
            }
            if (clash) continue;
            color[static_cast<size_t>(v)] = c;
            ++counts[static_cast<size_t>(c - 1)];
            walk(v + 1, ascents + up, leaf);
            --counts[static_cast<size_t>(c - 1)];
        }
        color[static_cast<size_t>(v)] = 0;
    }
};

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

SymPoly csf_bruteforce(const OrderedGraph& g, int colors) {
    SymPoly out(colors);
    ColoringWalk w(g, colors);
    w.walk(0, 0, [&](int ascents) {
        for (size_t i = 1; i < w.counts.size(); ++i)
            if (w.counts[i - 1] < w.counts[i]) return;  // not the orbit representative
        out.add_term(trimmed(w.counts), q_power(ascents));
    });
    return out;
}

std::map<std::vector<int>, QLaurent> csf_by_color_counts(const OrderedGraph& g, int colors) {
    std::map<std::vector<int>, QLaurent> out;
    ColoringWalk w(g, colors);
    w.walk(0, 0, [&](int ascents) {
        QLaurent& slot = out[w.counts];
        slot += q_power(ascents);
    });
    return out;
}

const SymPoly& CsfEngine::eval(const BoardShape& s, int colors) {
    if (colors < 0) throw PreconditionViolation("CsfEngine: negative color count");
    auto key = std::make_tuple(s.parts(), s.rows(), s.cols(), colors);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int n = s.rows(), m = s.cols();
    SymPoly result;
    if (n + m == 0) {
        result = SymPoly::one(colors);
    } else if (colors == 0) {
        result = SymPoly(0);
    } else {
        // Split the colorings by the multiplicity of the top color: it lands
        // on no vertex, one vertex (any row or column, weighted by the edges
        // it tops), or one row and one column joined inside the shape.
        const SymPoly& same = eval(s, colors - 1);
        SymPoly single(colors - 1);
        for (int c = 1; c <= m; ++c)
            single += eval(delete_column(s, c), colors - 1).scaled(q_power(m + n - c - s.conj(c)));
        for (int r = 1; r <= n; ++r) single += eval(delete_row(s, r), colors - 1).scaled(q_power(r - 1));
        SymPoly pair(colors - 1);
        for (int r = 1; r <= s.length(); ++r)
            for (int c = 1; c <= s.part(r); ++c)
                pair += eval(contract_cell(s, r, c), colors - 1).scaled(q_power((r - 1) + (m + n - c - s.conj(c))));
        result = same.lifted(0) + single.lifted(1) + pair.lifted(2);
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

SymPoly csf_recursive(const BoardShape& s, int colors, CsfEngine* eng) {
    if (eng) return eng->eval(s, colors);
    thread_local CsfEngine shared;
    return shared.eval(s, colors);
}

SymPoly esym(int k, int vars) {
    if (k < 0) throw PreconditionViolation("esym: negative degree");
    SymPoly p(vars);
    if (k > vars) return p;
    p.add_term(std::vector<int>(static_cast<size_t>(k), 1), QLaurent::one());
    return p;
}

namespace {

// Visit every size-k subset of {0..n-1}.
template <typename F>
void for_subsets(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace

SymPoly mul_by_esym(const SymPoly& p, int k) {
    if (k < 0) throw PreconditionViolation("mul_by_esym: negative degree");
    int vars = p.vars();
    if (k == 0) return p;
    SymPoly out(vars);
    if (k > vars || p.is_zero()) return out;

    // Product keys: every sorted rearrangement of (key + 0/1 vector with k
    // ones) over the keys of p.
    std::set<std::vector<int>> cand;
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> pad(key);
        pad.resize(static_cast<size_t>(vars), 0);
        for_subsets(vars, k, [&](const std::vector<int>& idx) {
            std::vector<int> up(pad);
            for (int i : idx) ++up[static_cast<size_t>(i)];
            std::sort(up.begin(), up.end(), std::greater<int>());
            cand.insert(trimmed(std::move(up)));
        });
    }

    // The coefficient of a product key is read backward: sum p over the keys
    // obtained by lowering it on a size-k subset of its positive slots.
    for (const auto& key : cand) {
        std::vector<int> pad(key);
        pad.resize(static_cast<size_t>(vars), 0);
        QLaurent total;
        for_subsets(vars, k, [&](const std::vector<int>& idx) {
            std::vector<int> down(pad);
            for (int i : idx) {
                if (down[static_cast<size_t>(i)] == 0) return;
                --down[static_cast<size_t>(i)];
            }
            std::sort(down.begin(), down.end(), std::greater<int>());
            total += p.coeff(trimmed(std::move(down)));
        });
        out.add_term(key, total);
    }
    return out;
}

SymPoly gp_expansion(const BoardShape& s, int colors, CsfEngine* eng) {
    int n = s.rows(), m = s.cols();
    if (n > m) throw PreconditionViolation("gp_expansion: board needs at least as many columns as rows");
    std::vector<QLaurent> H = hit_numbers_basis(s);
    SymPoly sum(colors);
    for (int j = 0; j <= n; ++j) {
        if (H[static_cast<size_t>(j)].is_zero()) continue;
        BoardShape rect(std::vector<int>(static_cast<size_t>(j), m), s.board());
        sum += csf_recursive(rect, colors, eng).scaled(H[static_cast<size_t>(j)]);
    }
    QLaurent denom = q_falling(m, n);
    SymPoly out(colors);
    for (const auto& [key, c] : sum.terms()) out.add_term(key, exact_div(c, denom));
    return out;
}

std::vector<ETerm> an_e_terms(const BoardShape& s) {
    int n = s.rows(), m = s.cols(), k = s.length();
    if (k > s.part(1)) throw PreconditionViolation("an_e_terms: shape has more rows than its first part");
    std::vector<ETerm> terms;
    for (int j = 0; j < k; ++j) {
        int N = m + n - j - 1;
        QLaurent Hj = hit_numbers_basis(BoardShape(s.parts(), Board{N, N}))[static_cast<size_t>(j)];
        terms.push_back({q_power(j) * q_factorial(j) * q_number(m + n - 2 * j) * Hj, m + n - j, j});
    }
    int N = m + n - k;
    QLaurent Hk = hit_numbers_basis(BoardShape(s.parts(), Board{N, N}))[static_cast<size_t>(k)];
    terms.push_back({q_factorial(k) * Hk, m + n - k, k});
    return terms;
}

SymPoly an_expansion(const BoardShape& s, int colors) {
    SymPoly out(colors);
    for (const ETerm& t : an_e_terms(s)) {
        if (t.coeff.is_zero()) continue;
        out += mul_by_esym(esym(t.outer, colors), t.inner).scaled(t.coeff);
    }
    return out;
}

CheckOutcome verify_rect_recursion(int m, int n, int k, int colors, CsfEngine* eng) {
    if (m < 1 || k < 0 || k > n || colors < 1)
        throw PreconditionViolation("verify_rect_recursion: need m >= 1, 0 <= k <= n, colors >= 1");
    CheckOutcome out;
    CsfEngine local;
    if (!eng) eng = &local;
    Board b{n, m};
    auto rect = [](int width, int height, Board board) {
        return BoardShape(std::vector<int>(static_cast<size_t>(height), width), board);
    };
    std::string shape = rect(m, k, b).str(), board = board_str(b);
    std::string suffix = "(k=" + std::to_string(k) + ";colors=" + std::to_string(colors) + ")";

    {
        SymPoly lhs = eng->eval(rect(m, k, b), colors);
        SymPoly single(colors - 1);
        single += eng->eval(rect(m - 1, k, Board{n, m - 1}), colors - 1).scaled(q_power(n - k) * q_number(m));
        if (k >= 1) single += eng->eval(rect(m, k - 1, Board{n - 1, m}), colors - 1).scaled(q_number(k));
        if (k <= n - 1)
            single += eng->eval(rect(m, k, Board{n - 1, m}), colors - 1).scaled(q_power(k) * q_number(n - k));
        SymPoly pair(colors - 1);
        if (k >= 1)
            pair += eng->eval(rect(m - 1, k - 1, Board{n - 1, m - 1}), colors - 1)
                        .scaled(q_power(n - k) * q_number(k) * q_number(m));
        SymPoly rhs = eng->eval(rect(m, k, b), colors - 1).lifted(0) + single.lifted(1) + pair.lifted(2);
        out.check(lhs == rhs, shape, board, "rect-var-recursion" + suffix, lhs.str(), rhs.str());
    }

    if (k <= n - 1) {
        SymPoly lhs = eng->eval(rect(m - 1, k, Board{n, m - 1}), colors).scaled(q_number(m));
        SymPoly rhs = eng->eval(rect(m, k, Board{n - 1, m}), colors).scaled(q_power(k) * q_number(m - k));
        if (k >= 1) rhs += eng->eval(rect(m, k - 1, Board{n - 1, m}), colors).scaled(q_number(k));
        out.check(lhs == rhs, shape, board, "rect-exchange-reduced-board" + suffix, lhs.str(), rhs.str());
    }

    {
        SymPoly lhs = eng->eval(rect(m - 1, k, b), colors).scaled(q_number(m));
        SymPoly rhs = eng->eval(rect(m, k, b), colors).scaled(q_power(k) * q_number(m - k));
        if (k >= 1) rhs += eng->eval(rect(m, k - 1, b), colors).scaled(q_number(k));
        out.check(lhs == rhs, shape, board, "rect-exchange-same-board" + suffix, lhs.str(), rhs.str());
    }
    return out;
}

}  // namespace qchroma
