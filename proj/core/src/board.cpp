#include "gridiv/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>

namespace gridiv {

namespace {

// Plain union-find over square indices.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void check_shape(const BoardShape& shape) {
    if (shape.rows < 1 || shape.cols < 1)
        throw input_error("board shape must have rows >= 1 and cols >= 1");
}

} // namespace

int Division::pieces() const {
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    return k;
}

std::vector<int> canonical_labels(const std::vector<int>& labels) {
    std::vector<int> remap(labels.size(), -1);
    std::vector<int> out(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int l = labels[i];
        if (remap[l] < 0) remap[l] = next++;
        out[i] = remap[l];
    }
    return out;
}

std::vector<Edge> adjacency(const BoardShape& shape) {
    check_shape(shape);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(shape.rows) * (shape.cols - 1) +
                  static_cast<std::size_t>(shape.rows - 1) * shape.cols);
    for (int j = 0; j < shape.cols; ++j) {
        for (int r = 0; r < shape.rows; ++r) {
            int idx = shape.index(r, j);
            if (r + 1 < shape.rows) edges.emplace_back(idx, idx + 1);
            if (j + 1 < shape.cols) edges.emplace_back(idx, idx + shape.rows);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::size_t default_edge_limit() {
    if (const char* env = std::getenv("GRIDIV_EDGE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 26;
}

std::optional<int> is_valid_removal(const BoardShape& shape,
                                    const std::vector<Edge>& removed) {
    check_shape(shape);
    auto all = adjacency(shape);
    for (const Edge& e : removed) {
        if (!std::binary_search(all.begin(), all.end(), e))
            throw input_error("edge (" + std::to_string(e.a) + "," +
                              std::to_string(e.b) + ") is not a grid edge");
    }
    std::vector<Edge> sorted_removed = removed;
    std::sort(sorted_removed.begin(), sorted_removed.end());

    DisjointSets ds(shape.squares());
    int components = shape.squares();
    for (const Edge& e : all) {
        if (std::binary_search(sorted_removed.begin(), sorted_removed.end(), e))
            continue;
        if (ds.unite(e.a, e.b)) --components;
    }
    for (const Edge& e : sorted_removed)
        if (ds.find(e.a) == ds.find(e.b)) return std::nullopt;
    return components;
}

namespace {

// Shared sweep over all edge subsets. Calls sink(labels, k) once per
// valid removal, with labels canonical.
template <typename Sink>
void sweep_valid_removals(const BoardShape& shape, std::size_t edge_limit,
                          Sink&& sink) {
    auto edges = adjacency(shape);
    if (edges.size() > edge_limit)
        throw size_error("board has " + std::to_string(edges.size()) +
                         " edges, above the brute-force limit of " +
                         std::to_string(edge_limit) +
                         " (override with GRIDIV_EDGE_LIMIT)");
    const int nsq = shape.squares();
    const std::size_t nsub = std::size_t{1} << edges.size();
    std::vector<int> comp(nsq);
    for (std::size_t mask = 0; mask < nsub; ++mask) {
        DisjointSets ds(nsq);
        int components = nsq;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (mask & (std::size_t{1} << i)) continue;
            if (ds.unite(edges[i].a, edges[i].b)) --components;
        }
        bool valid = true;
        for (std::size_t i = 0; i < edges.size() && valid; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            if (ds.find(edges[i].a) == ds.find(edges[i].b)) valid = false;
        }
        if (!valid) continue;
        for (int s = 0; s < nsq; ++s) comp[s] = ds.find(s);
        sink(canonical_labels(comp), components);
    }
}

} // namespace

std::vector<Division> enumerate_divisions(const BoardShape& shape, int k,
                                          std::size_t edge_limit) {
    check_shape(shape);
    if (k < 1 || k > shape.squares())
        throw input_error("piece count k must be in [1, rows*cols]");
    std::vector<Division> out;
    sweep_valid_removals(shape, edge_limit,
                         [&](std::vector<int> labels, int components) {
                             if (components == k)
                                 out.push_back(Division{shape, std::move(labels)});
                         });
    std::sort(out.begin(), out.end());
    // Valid removals biject onto divisions, so duplicates would be a bug;
    // dedupe anyway so the contract does not rest on the bijection.
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BigCount> brute_count_all(const BoardShape& shape,
                                      std::size_t edge_limit) {
    check_shape(shape);
    std::vector<BigCount> counts(shape.squares() + 1);
    sweep_valid_removals(shape, edge_limit,
                         [&](const std::vector<int>&, int components) {
                             ++counts[components];
                         });
    return counts;
}

BigCount brute_count(const BoardShape& shape, int k, std::size_t edge_limit) {
    if (k < 1 || k > shape.squares())
        throw input_error("piece count k must be in [1, rows*cols]");
    return brute_count_all(shape, edge_limit)[k];
}

BigCount separation_count(int n, int k, std::size_t edge_limit) {
    BoardShape shape{2, n};
    if (k < 1 || k > shape.squares())
        throw input_error("piece count k must be in [1, 2n]");
    const int top = shape.index(0, n - 1);
    const int bottom = shape.index(1, n - 1);
    BigCount count = 0;
    sweep_valid_removals(shape, edge_limit,
                         [&](const std::vector<int>& labels, int components) {
                             if (components == k && labels[top] != labels[bottom])
                                 ++count;
                         });
    return count;
}

namespace {

bool labels_connected(const BoardShape& shape, const std::vector<int>& labels) {
    DisjointSets ds(shape.squares());
    for (const Edge& e : adjacency(shape))
        if (labels[e.a] == labels[e.b]) ds.unite(e.a, e.b);
    // Each label class must collapse to a single root.
    std::vector<int> root_of_label(shape.squares(), -1);
    for (int s = 0; s < shape.squares(); ++s) {
        int l = labels[s];
        int r = ds.find(s);
        if (root_of_label[l] < 0)
            root_of_label[l] = r;
        else if (root_of_label[l] != r)
            return false;
    }
    return true;
}

} // namespace

BigCount connected_partition_count(const BoardShape& shape) {
    check_shape(shape);
    const int nsq = shape.squares();
    // Restricted-growth enumeration of all set partitions.
    std::vector<int> labels(nsq, 0);
    BigCount total = 0;
    auto recurse = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == nsq) {
            if (labels_connected(shape, labels)) ++total;
            return;
        }
        for (int l = 0; l <= max_used + 1 && l < nsq; ++l) {
            labels[pos] = l;
            self(self, pos + 1, std::max(max_used, l));
        }
    };
    recurse(recurse, 0, -1);
    return total;
}

void write_divisions(std::ostream& out, const BoardShape& shape, int k,
                     const std::vector<Division>& divisions) {
    out << shape.rows << ' ' << shape.cols << ' ' << k << '\n';
    for (const Division& d : divisions) {
        for (std::size_t i = 0; i < d.labels.size(); ++i) {
            if (i) out << ',';
            out << d.labels[i];
        }
        out << '\n';
    }
}

} // namespace gridiv
