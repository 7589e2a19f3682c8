#include "pgg/cycles.hpp"

#include "pgg/errors.hpp"

namespace pgg {

namespace {

// Tiernan-style backtracking: cycles are rooted at their lowest vertex and
// only vertices with larger ids may appear later on the path, so each simple
// cycle is emitted exactly once, lowest root first.
struct Enumerator {
    const Digraph& g;
    std::uint64_t budget;
    bool want_even_only;

    std::vector<std::vector<Vertex>> found;
    std::optional<std::vector<Vertex>> even_hit;
    bool truncated = false;

    std::vector<Vertex> path;
    std::vector<char> on_path;

    explicit Enumerator(const Digraph& g_, std::uint64_t budget_, bool even_only)
        : g(g_), budget(budget_), want_even_only(even_only), on_path(g_.vertex_count(), 0) {}

    // returns false to abort the whole search
    bool dfs(Vertex root, Vertex v) {
        for (Vertex w : g.out_neighbors(v)) {
            if (w == root) {
                if (budget == 0) {
                    truncated = true;
                    return false;
                }
                --budget;
                if (want_even_only) {
                    if (path.size() % 2 == 0) {
                        even_hit = path;
                        return false;
                    }
                } else {
                    found.push_back(path);
                }
            } else if (w > root && !on_path[w]) {
                path.push_back(w);
                on_path[w] = 1;
                bool keep_going = dfs(root, w);
                on_path[w] = 0;
                path.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    }

    void run() {
        for (Vertex root = 0; root < g.vertex_count(); ++root) {
            path = {root};
            on_path[root] = 1;
            bool keep_going = dfs(root, root);
            on_path[root] = 0;
            if (!keep_going) return;
        }
    }
};

}  // namespace

CycleEnumeration enumerate_simple_directed_cycles(const Digraph& g, std::uint64_t max_count) {
    Enumerator e(g, max_count, /*even_only=*/false);
    e.run();
    return {std::move(e.found), e.truncated};
}

std::optional<std::vector<Vertex>> find_even_directed_cycle(const Digraph& g,
                                                            std::uint64_t budget) {
    Enumerator e(g, budget, /*even_only=*/true);
    e.run();
    if (e.even_hit) return e.even_hit;
    if (e.truncated)
        throw BoundExceeded("cycle enumeration budget exhausted before an even cycle was found");
    return std::nullopt;
}

}  // namespace pgg
