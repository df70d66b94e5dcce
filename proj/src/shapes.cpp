#include "qchroma/shapes.hpp"

#include <algorithm>

namespace qchroma {

std::string board_str(const Board& b) {
    return std::to_string(b.rows) + "x" + std::to_string(b.cols);
}

Board parse_board(const std::string& text) {
    size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == text.size())
        throw PreconditionViolation("board must look like 2x3 (rows x cols): " + text);
    Board b;
    try {
        b.rows = std::stoi(text.substr(0, x));
        b.cols = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw PreconditionViolation("board must look like 2x3 (rows x cols): " + text);
    }
    if (b.rows < 0 || b.cols < 0) throw PreconditionViolation("negative board: " + text);
    return b;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) throw PreconditionViolation("empty shape text");
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            parts.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw PreconditionViolation("bad shape text: " + text);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

BoardShape::BoardShape(std::vector<int> parts, Board board) : parts_(std::move(parts)), board_(board) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw PreconditionViolation("negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionViolation("parts must be weakly decreasing");
    }
    if (board_.rows < 0 || board_.cols < 0) throw PreconditionViolation("negative board");
    if (static_cast<int>(parts_.size()) > board_.rows || (!parts_.empty() && parts_[0] > board_.cols))
        throw PreconditionViolation("shape does not fit board " + board_str(board_));
}

int BoardShape::cells() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int BoardShape::part(int r) const {
    if (r < 1) throw PreconditionViolation("row index must be positive");
    return r <= length() ? parts_[static_cast<size_t>(r - 1)] : 0;
}

int BoardShape::conj(int c) const {
    if (c < 1) throw PreconditionViolation("column index must be positive");
    int h = 0;
    for (int p : parts_)
        if (p >= c) ++h;
    return h;
}

bool BoardShape::contains(int r, int c) const { return r >= 1 && c >= 1 && r <= length() && c <= part(r); }

std::string BoardShape::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

BoardShape conjugate(const BoardShape& s) {
    std::vector<int> t;
    if (s.length() > 0) {
        t.reserve(static_cast<size_t>(s.parts()[0]));
        for (int c = 1; c <= s.parts()[0]; ++c) t.push_back(s.conj(c));
    }
    return BoardShape(std::move(t), Board{s.cols(), s.rows()});
}

BoardShape delete_column(const BoardShape& s, int j) {
    if (j < 1 || j > s.cols()) throw PreconditionViolation("delete_column: column out of board");
    std::vector<int> t = s.parts();
    for (int& p : t)
        if (p >= j) --p;
    return BoardShape(std::move(t), Board{s.rows(), s.cols() - 1});
}

BoardShape delete_row(const BoardShape& s, int r) {
    if (r < 1 || r > s.rows()) throw PreconditionViolation("delete_row: row out of board");
    std::vector<int> t = s.parts();
    if (r <= static_cast<int>(t.size())) t.erase(t.begin() + (r - 1));
    return BoardShape(std::move(t), Board{s.rows() - 1, s.cols()});
}

BoardShape contract_cell(const BoardShape& s, int r, int c) {
    if (!s.contains(r, c)) throw PreconditionViolation("contract_cell: cell not in shape");
    return delete_column(delete_row(s, r), c);
}

bool is_corner(const BoardShape& s, CellRef e) {
    return e.row >= 1 && e.row <= s.length() && e.col == s.part(e.row) && s.part(e.row) > s.part(e.row + 1);
}

std::vector<CellRef> corner_cells(const BoardShape& s) {
    std::vector<CellRef> out;
    for (int r = 1; r <= s.length(); ++r)
        if (s.part(r) > s.part(r + 1)) out.push_back({r, s.part(r)});
    return out;
}

std::pair<BoardShape, BoardShape> corner_ops(const BoardShape& s, CellRef e) {
    if (!is_corner(s, e)) throw PreconditionViolation("corner_ops: not a corner cell");
    std::vector<int> t = s.parts();
    --t[static_cast<size_t>(e.row - 1)];
    BoardShape deleted(std::move(t), s.board());
    return {deleted, contract_cell(s, e.row, e.col)};
}

std::vector<std::pair<int, int>> dyck_cells(const BoardShape& s) {
    int n = s.rows(), m = s.cols();
    if (n > m) throw PreconditionViolation("dyck_cells: board must have rows <= cols");
    int N = m + n;
    // Path word: m norths, then for each column c = 1..m an east preceded by
    // (height(c-1) - height(c)) norths (height(0) = n), then the remaining
    // norths and the trailing n easts.
    std::vector<char> word;
    word.reserve(static_cast<size_t>(2 * N));
    word.insert(word.end(), static_cast<size_t>(m), 'n');
    int prev = n;
    for (int c = 1; c <= m; ++c) {
        int h = s.conj(c);
        word.insert(word.end(), static_cast<size_t>(prev - h), 'n');
        word.push_back('e');
        prev = h;
    }
    word.insert(word.end(), static_cast<size_t>(prev), 'n');
    word.insert(word.end(), static_cast<size_t>(n), 'e');
    // Height before the i-th east = number of cells of the staircase region
    // in coordinate i; the region is {(i,j) : i < j <= height(i)}.
    std::vector<int> height;
    height.reserve(static_cast<size_t>(N));
    int norths = 0;
    for (char w : word) {
        if (w == 'n')
            ++norths;
        else
            height.push_back(norths);
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= height[static_cast<size_t>(i - 1)]; ++j)
            out.emplace_back(N + 1 - j, N + 1 - i);  // relabel so vertex order matches the graph
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen_parts(int maxp, int rows_left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (rows_left == 0) return;
    for (int p = maxp; p >= 1; --p) {
        cur.push_back(p);
        gen_parts(p, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<BoardShape> enumerate_shapes(int m, int n, int max_cells) {
    if (m < 0 || n < 0) throw PreconditionViolation("enumerate_shapes: negative board");
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    gen_parts(m, n, cur, all);
    std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        long sa = 0, sb = 0;
        for (int p : a) sa += p;
        for (int p : b) sb += p;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<BoardShape> out;
    out.reserve(all.size());
    for (std::vector<int>& parts : all) {
        long c = 0;
        for (int p : parts) c += p;
        if (max_cells >= 0 && c > max_cells) continue;
        out.emplace_back(std::move(parts), Board{n, m});
    }
    return out;
}

}  // namespace qchroma
