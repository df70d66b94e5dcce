#include "qchroma/hits.hpp"

#include <algorithm>

#include "qchroma/rooks.hpp"

namespace qchroma {

std::vector<QLaurent> hit_numbers_basis(const BoardShape& s) {
    int n = s.rows(), m = s.cols();
    std::vector<QLaurent> H(static_cast<size_t>(n) + 1);
    if (n > m) return H;  // no full placement exists
    std::vector<QLaurent> R = rook_numbers(s);
    XPoly P;
    for (int i = 0; i <= std::min(n, s.length()); ++i) {
        if (R[static_cast<size_t>(i)].is_zero()) continue;
        QLaurent coef = R[static_cast<size_t>(i)] * q_factorial(m - i);
        coef *= QLaurent::monomial(i % 2 ? -1 : 1, m * i - i * (i - 1) / 2);
        P += x_pochhammer(i).scaled(coef);
    }
    QLaurent denom = q_factorial(m - n);
    int size = s.cells();
    for (int j = 0; j <= n; ++j)
        H[static_cast<size_t>(j)] = exact_div(P.coeff(j).shifted(-size), denom);
    return H;
}

int stat_statistic(const BoardShape& s, const std::vector<int>& rook_col) {
    int n = s.rows(), m = s.cols();
    if (static_cast<int>(rook_col.size()) != n) throw PreconditionViolation("stat_statistic: need one rook per row");
    int stat = 0;
    for (int r = 1; r <= n; ++r) {
        int rc = rook_col[static_cast<size_t>(r - 1)];
        if (rc < 1 || rc > m) throw PreconditionViolation("stat_statistic: rook outside board");
        for (int r2 = 1; r2 < r; ++r2)
            if (rook_col[static_cast<size_t>(r2 - 1)] == rc)
                throw PreconditionViolation("stat_statistic: two rooks share a column");
        bool rook_in = rc <= s.part(r);
        for (int c = 1; c <= m; ++c) {
            if (c == rc) continue;
            bool above = false;  // a rook in the same column, in an earlier row
            for (int r2 = 1; r2 < r; ++r2)
                if (rook_col[static_cast<size_t>(r2 - 1)] == c) {
                    above = true;
                    break;
                }
            if (above) continue;
            bool cell_in = c <= s.part(r);
            if (cell_in ? (rook_in && rc > c) : (rook_in || rc > c)) ++stat;
        }
    }
    return stat;
}

namespace {

void stat_dfs(const BoardShape& s, int row, unsigned used, std::vector<int>& cols, int hits,
              std::vector<QLaurent>& H) {
    int n = s.rows(), m = s.cols();
    if (row > n) {
        H[static_cast<size_t>(hits)] += q_power(stat_statistic(s, cols));
        return;
    }
    for (int c = 1; c <= m; ++c) {
        if (used & (1u << c)) continue;
        cols[static_cast<size_t>(row - 1)] = c;
        stat_dfs(s, row + 1, used | (1u << c), cols, hits + (c <= s.part(row) ? 1 : 0), H);
    }
    cols[static_cast<size_t>(row - 1)] = 0;
}

}  // namespace

std::vector<QLaurent> hit_numbers_stat(const BoardShape& s) {
    int n = s.rows();
    std::vector<QLaurent> H(static_cast<size_t>(n) + 1);
    std::vector<int> cols(static_cast<size_t>(n), 0);
    stat_dfs(s, 1, 0u, cols, 0, H);
    return H;
}

std::vector<QLaurent> gr_hit_square(const BoardShape& s) {
    int n = s.rows();
    if (n != s.cols()) throw PreconditionViolation("gr_hit_square: board must be square");
    std::vector<QLaurent> R = rook_numbers(s);
    XPoly P;
    for (int i = 0; i <= std::min(n, s.length()); ++i) {
        if (R[static_cast<size_t>(i)].is_zero()) continue;
        XPoly prod = XPoly::one();
        for (int k = n - i + 1; k <= n; ++k) prod = prod * XPoly({-q_power(k), QLaurent::one()});
        P += prod.scaled(R[static_cast<size_t>(i)] * q_factorial(n - i));
    }
    std::vector<QLaurent> Ht(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) Ht[static_cast<size_t>(k)] = P.coeff(k);
    std::vector<QLaurent> H = hit_numbers_basis(s);
    int size = s.cells();
    for (int k = 0; k <= n; ++k) {
        QLaurent want = H[static_cast<size_t>(k)].shifted(size - k * n);
        if (Ht[static_cast<size_t>(k)] != want)
            throw RouteMismatch("gr_hit_square(" + s.str() + ")[" + std::to_string(k) +
                                "]: " + Ht[static_cast<size_t>(k)].str() + " vs shifted " + want.str());
    }
    return Ht;
}

QLaurent rect_hit_closed_form(int N, int m, int j, int k) {
    if (!(0 <= k && k <= j && j <= N && 0 <= m && m <= N))
        throw PreconditionViolation("rect_hit_closed_form: need 0 <= k <= j <= N and 0 <= m <= N");
    if (k > m || j - k > N - m) return {};  // more hits than columns, or more misses than spare columns
    QLaurent r = q_power((N - j - m + k) * k) * q_falling(m, k) * q_factorial(N - j);
    return r * exact_div(q_falling(N - m, j - k) * q_falling(j, j - k), q_factorial(j - k));
}

namespace {

QLaurent hit_at(const std::vector<QLaurent>& H, int j) {
    if (j < 0 || j >= static_cast<int>(H.size())) return {};
    return H[static_cast<size_t>(j)];
}

}  // namespace

CheckOutcome verify_del_contract(const BoardShape& s, CellRef e) {
    CheckOutcome out;
    auto [deleted, contracted] = corner_ops(s, e);
    std::vector<QLaurent> H = hit_numbers_basis(s);
    std::vector<QLaurent> Hd = hit_numbers_basis(deleted);
    std::vector<QLaurent> Hc = hit_numbers_basis(contracted);
    int n = s.rows(), m = s.cols();
    int shift_base = contracted.cells() - s.cells() + m - 1;  // exponent may be negative mid-identity
    for (int j = 0; j <= n; ++j) {
        QLaurent corr = hit_at(Hc, j - 1) - q_power(1) * hit_at(Hc, j);
        QLaurent rhs = hit_at(Hd, j) + corr.shifted(shift_base + j);
        out.check(hit_at(H, j) == rhs, s.str(), board_str(s.board()),
                  "hit-del-contract(corner=" + std::to_string(e.row) + "," + std::to_string(e.col) +
                      ";j=" + std::to_string(j) + ")",
                  hit_at(H, j).str(), rhs.str());
    }
    return out;
}

CheckOutcome verify_board_padding(const BoardShape& s) {
    CheckOutcome out;
    int n = s.rows(), m = s.cols();
    std::string shape = s.str(), board = board_str(s.board());
    std::vector<QLaurent> H = hit_numbers_basis(s);

    // Padding with empty rows to the m x m board multiplies by [m-n]!.
    std::vector<QLaurent> Hsq = hit_numbers_basis(BoardShape(s.parts(), Board{m, m}));
    QLaurent pad = q_factorial(m - n);
    for (int j = 0; j <= m; ++j) {
        QLaurent lhs = j <= n ? H[static_cast<size_t>(j)] * pad : QLaurent();
        out.check(lhs == Hsq[static_cast<size_t>(j)], shape, board, "hit-pad-square(j=" + std::to_string(j) + ")",
                  lhs.str(), Hsq[static_cast<size_t>(j)].str());
    }

    // With an empty row to spare, dropping it divides out [m+1-n].
    if (s.length() <= n - 1) {
        std::vector<QLaurent> Hless = hit_numbers_basis(BoardShape(s.parts(), Board{n - 1, m}));
        for (int j = 0; j <= n; ++j) {
            QLaurent rhs = q_number(m + 1 - n) * hit_at(Hless, j);
            out.check(H[static_cast<size_t>(j)] == rhs, shape, board, "hit-drop-row(j=" + std::to_string(j) + ")",
                      H[static_cast<size_t>(j)].str(), rhs.str());
        }
    }
    return out;
}

CheckOutcome verify_hit_identities(const BoardShape& s, int k) {
    CheckOutcome out;
    int n = s.rows(), m = s.cols();
    std::string shape = s.str(), board = board_str(s.board());
    std::vector<QLaurent> H = hit_numbers_basis(s);

    // Column deletions land on an (m-1)-column board; when n = m that board
    // has more rows than columns and its hit vector is zero throughout, which
    // is exactly what makes the right side's [m-n] factor consistent.
    QLaurent col_sum;
    for (int i = 1; i <= m; ++i)
        col_sum += q_power(m + n - i - s.conj(i)) * hit_at(hit_numbers_basis(delete_column(s, i)), k);
    QLaurent col_rhs = q_number(m - n) * hit_at(H, k) * q_power(n - k);
    out.check(col_sum == col_rhs, shape, board, "hit-col-delete(k=" + std::to_string(k) + ")", col_sum.str(),
              col_rhs.str());

    QLaurent row_sum;
    for (int r = 1; r <= n; ++r) row_sum += q_power(r - 1) * hit_at(hit_numbers_basis(delete_row(s, r)), k);
    row_sum *= q_number(m - n + 1);
    QLaurent row_rhs = hit_at(H, k) * q_power(k) * q_number(n - k) + hit_at(H, k + 1) * q_number(k + 1);
    out.check(row_sum == row_rhs, shape, board, "hit-row-delete(k=" + std::to_string(k) + ")", row_sum.str(),
              row_rhs.str());

    QLaurent cell_sum;
    for (int r = 1; r <= s.length(); ++r)
        for (int c = 1; c <= s.part(r); ++c)
            cell_sum += q_power(r + m - c - s.conj(c)) * hit_at(hit_numbers_basis(contract_cell(s, r, c)), k);
    cell_sum = cell_sum.shifted(k);
    QLaurent cell_rhs = q_number(k + 1) * hit_at(H, k + 1);
    out.check(cell_sum == cell_rhs, shape, board, "hit-cell-contract(k=" + std::to_string(k) + ")",
              cell_sum.str(), cell_rhs.str());
    return out;
}

CheckOutcome verify_keyrels(const BoardShape& s) {
    CheckOutcome out;
    int n = s.rows(), m = s.cols(), k = s.length();
    std::string shape = s.str(), board = board_str(s.board());
    std::vector<QLaurent> H = hit_numbers_basis(s);

    {
        int N = m + n - k;
        QLaurent lhs = q_binomial(m - k, n - k) * hit_at(hit_numbers_basis(BoardShape(s.parts(), Board{N, N})), k);
        QLaurent rhs = q_power(k * (n - k)) * q_falling(m + n - 2 * k, m - k) * hit_at(H, k);
        out.check(lhs == rhs, shape, board, "square-hit-top", lhs.str(), rhs.str());
    }

    for (int r = 0; r < k; ++r) {
        int N = m + n - r - 1;
        QLaurent lhs = q_binomial(m - r, n - r) * hit_at(hit_numbers_basis(BoardShape(s.parts(), Board{N, N})), r);
        QLaurent rhs = q_power(r * (n - r - 1)) * q_falling(m + n - 2 * r - 1, m - r - 1) * hit_at(H, r);
        for (int j = r + 1; j <= n; ++j) {
            // Among the m-r consecutive q-numbers of this falling product one
            // index is a multiple of n-r, so the division is exact; the j = n
            // term carries the factor [0] and vanishes.
            QLaurent ff = exact_div(q_int_falling(m + n - r - j - 1, m - r), q_number(n - r));
            rhs += q_power(r * (n - 1 - j)) * q_binomial(j, r) * ff * hit_at(H, j);
        }
        out.check(lhs == rhs, shape, board, "square-hit-lower(r=" + std::to_string(r) + ")", lhs.str(),
                  rhs.str());
    }
    return out;
}

}  // namespace qchroma
