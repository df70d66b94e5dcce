#include "qchroma/rooks.hpp"

#include <algorithm>

namespace qchroma {

int inv_statistic(const BoardShape& s, const std::vector<CellRef>& rooks) {
    for (const CellRef& p : rooks)
        if (!s.contains(p.row, p.col)) throw PreconditionViolation("inv_statistic: rook outside shape");
    int surviving = 0;
    for (int r = 1; r <= s.length(); ++r) {
        for (int c = 1; c <= s.part(r); ++c) {
            bool cancelled = false;
            for (const CellRef& p : rooks) {
                // (r,c) dies to a rook sitting on it, below it in its column,
                // or to its right in its row.
                if ((p.col == c && p.row >= r) || (p.row == r && p.col > c)) {
                    cancelled = true;
                    break;
                }
            }
            if (!cancelled) ++surviving;
        }
    }
    return surviving;
}

namespace {

void rook_dfs(const BoardShape& s, int row, unsigned used, std::vector<CellRef>& placed,
              std::vector<QLaurent>& acc) {
    if (row > s.length()) {
        acc[placed.size()] += q_power(inv_statistic(s, placed));
        return;
    }
    rook_dfs(s, row + 1, used, placed, acc);
    for (int c = 1; c <= s.part(row); ++c) {
        if (used & (1u << c)) continue;
        placed.push_back({row, c});
        rook_dfs(s, row + 1, used | (1u << c), placed, acc);
        placed.pop_back();
    }
}

}  // namespace

std::vector<QLaurent> rook_numbers(const BoardShape& s) {
    std::vector<QLaurent> acc(static_cast<size_t>(s.length()) + 1);
    std::vector<CellRef> placed;
    rook_dfs(s, 1, 0u, placed, acc);
    return acc;
}

QLaurent rook_number(const BoardShape& s, int k) {
    if (k < 0 || k > s.length()) return {};
    return rook_numbers(s)[static_cast<size_t>(k)];
}

Int placement_count(const BoardShape& s, int k) {
    if (k < 0 || k > s.length()) return 0;
    // Scan columns shortest first (right to left).  Every rook already placed
    // sits in a column no taller than the current one, hence in a row that
    // blocks it, so a column of height h with t rooks placed offers h - t rows.
    std::vector<Int> dp(static_cast<size_t>(k) + 1, 0);
    dp[0] = 1;
    int width = s.length() ? s.parts()[0] : 0;
    for (int c = width; c >= 1; --c) {
        int h = s.conj(c);
        for (int t = std::min(k - 1, h - 1); t >= 0; --t)
            dp[static_cast<size_t>(t) + 1] += dp[static_cast<size_t>(t)] * (h - t);
    }
    return dp[static_cast<size_t>(k)];
}

QLaurent f_eval(const BoardShape& s, int x) {
    int len = s.length();
    std::vector<QLaurent> R = rook_numbers(s);
    QLaurent sum;
    for (int k = 0; k <= len; ++k) sum += R[static_cast<size_t>(k)] * q_int_falling(x, len - k);
    QLaurent prod = QLaurent::one();
    for (int t = 1; t <= len; ++t) prod *= q_number(x + s.part(t) - len + t);
    if (sum != prod)
        throw RouteMismatch("f_eval(" + s.str() + ", x=" + std::to_string(x) + "): " + sum.str() +
                            " vs " + prod.str());
    return sum;
}

namespace {

// Product of [x + part_t - len + t] over t in [lo, hi], with each t <= split
// evaluated at x-1 instead of x.
QLaurent shifted_product(const BoardShape& s, int x, int split) {
    int len = s.length();
    QLaurent r = QLaurent::one();
    for (int t = 1; t <= len; ++t) r *= q_number((t <= split ? x - 1 : x) + s.part(t) - len + t);
    return r;
}

}  // namespace

CheckOutcome verify_f_ratio(const BoardShape& s) {
    CheckOutcome out;
    int len = s.length();
    int width = len ? s.parts()[0] : 0;  // empty shape: both sides collapse to [x]
    // Both sides are polynomials of degree <= len + 1 in q^x with Laurent
    // coefficients, so len + 2 distinct evaluation points already separate
    // them; 2(len + width) + 3 points is a comfortable over-bound.
    for (int x = len + 1; x <= len + 2 * (len + width) + 3; ++x) {
        QLaurent lhs = q_power(width) * q_number(x) * shifted_product(s, x, len);
        QLaurent rhs = q_number(x - len + width) * shifted_product(s, x, 0);
        for (int j = 1; j <= width; ++j)
            rhs -= q_power(width - j) * shifted_product(s, x, s.conj(j));
        out.check(lhs == rhs, s.str(), board_str(s.board()), "factor-ratio(x=" + std::to_string(x) + ")",
                  lhs.str(), rhs.str());
    }
    return out;
}

CheckOutcome verify_rook_identities(const BoardShape& s, int k) {
    CheckOutcome out;
    int m = s.cols(), n = s.rows();
    std::string shape = s.str(), board = board_str(s.board());

    QLaurent col_sum;
    for (int j = 1; j <= m; ++j) col_sum += q_power(m - j) * rook_number(delete_column(s, j), k);
    QLaurent col_rhs =
        rook_number(s, k) * q_number(m - k) - rook_number(s, k + 1) * (q_power(m) - q_power(m - k - 1));
    out.check(col_sum == col_rhs, shape, board, "rook-col-delete(k=" + std::to_string(k) + ")", col_sum.str(),
              col_rhs.str());

    // Rows past the last nonzero part contribute with the shape unchanged and
    // weight q^(r-1).
    QLaurent row_sum;
    for (int r = 1; r <= n; ++r) row_sum += q_power(r - 1 + s.part(r)) * rook_number(delete_row(s, r), k);
    QLaurent row_rhs = (q_number(n) - q_number(k)) * rook_number(s, k);
    out.check(row_sum == row_rhs, shape, board, "rook-row-delete(k=" + std::to_string(k) + ")", row_sum.str(),
              row_rhs.str());

    QLaurent cell_sum;
    for (int r = 1; r <= s.length(); ++r)
        for (int c = 1; c <= s.part(r); ++c)
            cell_sum += q_power(r - c + s.part(r)) * rook_number(contract_cell(s, r, c), k);
    QLaurent cell_rhs = q_power(1) * q_number(k + 1) * rook_number(s, k + 1);
    out.check(cell_sum == cell_rhs, shape, board, "rook-cell-contract(k=" + std::to_string(k) + ")",
              cell_sum.str(), cell_rhs.str());
    return out;
}

}  // namespace qchroma
