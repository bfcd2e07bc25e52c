#include "gridiv/dpcount.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gridiv {

namespace {

// One frontier square: which piece it belongs to, and which connected
// chunk of that piece (pieces may consist of several chunks that only
// meet through squares not yet scanned).
using Cell = std::pair<int, int>; // (piece, chunk); chunk labels are global
using Profile = std::vector<Cell>;
using ClosedCounts = std::vector<BigCount>; // index = sealed pieces
using DpTable = std::map<Profile, ClosedCounts>;

Profile canonical_profile(const Profile& p) {
    Profile out(p.size());
    std::map<int, int> piece_map, chunk_map;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto [pi, inserted_p] = piece_map.try_emplace(p[i].first,
                                                      static_cast<int>(piece_map.size()));
        auto [ci, inserted_c] = chunk_map.try_emplace(p[i].second,
                                                      static_cast<int>(chunk_map.size()));
        out[i] = {pi->second, ci->second};
    }
    return out;
}

void add_counts(ClosedCounts& into, const ClosedCounts& from, int shift) {
    if (into.size() < from.size() + shift) into.resize(from.size() + shift);
    for (std::size_t i = 0; i < from.size(); ++i) into[i + shift] += from[i];
}

int distinct_pieces(const Profile& p) {
    int count = 0;
    std::vector<int> seen;
    for (const Cell& c : p)
        if (std::find(seen.begin(), seen.end(), c.first) == seen.end()) {
            seen.push_back(c.first);
            ++count;
        }
    return count;
}

// Advances one state by one square. The square's piece is either a fresh
// piece or any piece already on the frontier; adjacency is not required,
// since a piece may reconnect through squares still to come. Its chunk
// absorbs the chunks of same-piece neighbors.
void expand(const Profile& profile, const ClosedCounts& counts, bool has_top,
            bool has_left, DpTable& next) {
    int fresh_piece = 0, fresh_chunk = 0;
    for (const Cell& c : profile) {
        fresh_piece = std::max(fresh_piece, c.first + 1);
        fresh_chunk = std::max(fresh_chunk, c.second + 1);
    }
    std::vector<int> piece_options{fresh_piece};
    for (const Cell& c : profile)
        if (std::find(piece_options.begin(), piece_options.end(), c.first) ==
            piece_options.end())
            piece_options.push_back(c.first);

    const bool slides = has_left; // frontier is full exactly when a left neighbor exists
    for (int piece : piece_options) {
        Profile p = profile;
        int chunk = fresh_chunk;
        // Same-piece neighbors connect; different-piece neighbors are cuts.
        if (has_top && p.back().first == piece) {
            int merged = p.back().second;
            for (Cell& c : p) if (c.second == merged) c.second = chunk;
        }
        if (has_left && p.front().first == piece) {
            int merged = p.front().second;
            for (Cell& c : p) if (c.second == merged) c.second = chunk;
        }
        p.emplace_back(piece, chunk);
        int closed_delta = 0;
        if (slides) {
            Cell leaving = p.front();
            p.erase(p.begin());
            bool piece_alive = false, chunk_alive = false;
            for (const Cell& c : p) {
                piece_alive |= c.first == leaving.first;
                chunk_alive |= c.second == leaving.second;
            }
            if (!piece_alive) {
                // Last frontier square of the piece: sealed. Any stranded
                // chunk was pruned earlier, so the piece is connected.
                closed_delta = 1;
            } else if (!chunk_alive) {
                // The chunk can never rejoin the rest of its piece.
                continue;
            }
        }
        add_counts(next[canonical_profile(p)], counts, closed_delta);
    }
}

DpTable run_dp(const BoardShape& shape) {
    if (shape.rows < 1 || shape.cols < 1)
        throw input_error("board shape must have rows >= 1 and cols >= 1");
    if (shape.rows > kDpMaxRows)
        throw size_error("dp counter supports at most " +
                         std::to_string(kDpMaxRows) + " rows, got " +
                         std::to_string(shape.rows));
    const int m = shape.rows;
    DpTable dp;
    dp[{}] = ClosedCounts{1};
    for (int cell = 0; cell < shape.squares(); ++cell) {
        const bool has_top = cell % m != 0;
        const bool has_left = cell >= m;
        DpTable next;
        for (const auto& [profile, counts] : dp)
            expand(profile, counts, has_top, has_left, next);
        dp = std::move(next);
    }
    // End of board: every piece must be a single chunk by now; states
    // still holding a split piece cannot seal it and are invalid.
    DpTable finished;
    for (auto& [profile, counts] : dp) {
        std::map<int, std::vector<int>> chunks_of_piece;
        for (const Cell& c : profile) chunks_of_piece[c.first].push_back(c.second);
        bool ok = true;
        for (auto& [piece, chunks] : chunks_of_piece) {
            std::sort(chunks.begin(), chunks.end());
            chunks.erase(std::unique(chunks.begin(), chunks.end()), chunks.end());
            if (chunks.size() > 1) ok = false;
        }
        if (ok) finished[profile] = std::move(counts);
    }
    return finished;
}

} // namespace

std::vector<BigCount> dp_count(const BoardShape& shape) {
    std::vector<BigCount> result(shape.squares() + 1);
    for (const auto& [profile, counts] : run_dp(shape)) {
        const int open = distinct_pieces(profile);
        for (std::size_t closed = 0; closed < counts.size(); ++closed) {
            int k = static_cast<int>(closed) + open;
            if (k >= 1 && k <= shape.squares()) result[k] += counts[closed];
        }
    }
    return result;
}

BigCount dp_separation_count(int n, int k) {
    BoardShape shape{2, n};
    if (k < 1 || k > shape.squares())
        throw input_error("piece count k must be in [1, 2n]");
    BigCount total = 0;
    for (const auto& [profile, counts] : run_dp(shape)) {
        if (profile[0].first == profile[1].first) continue; // same piece
        const int open = distinct_pieces(profile);
        for (std::size_t closed = 0; closed < counts.size(); ++closed)
            if (static_cast<int>(closed) + open == k) total += counts[closed];
    }
    return total;
}

} // namespace gridiv
