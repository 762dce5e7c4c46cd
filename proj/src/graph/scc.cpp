#include <algorithm>
#include <limits>

#include "cflr/graph.hpp"

namespace cflr {

Condensation scc_condense(const LabeledGraph& g, std::string_view restrict_label) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<bool> self_loop(n, false);
    if (auto label = g.find_label(restrict_label)) {
        for (const auto& e : g.edges()) {
            if (e.label != *label) continue;
            adj[e.src].push_back(e.dst);
            if (e.src == e.dst) self_loop[e.src] = true;
        }
    }

    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> found;  // reverse topological order
    std::uint32_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            VertexId v = f.v;
            if (f.next < adj[v].size()) {
                VertexId w = adj[v][f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                VertexId parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    Condensation c;
    c.component.assign(n, 0);
    c.members.assign(found.rbegin(), found.rend());
    c.cyclic.assign(c.members.size(), false);
    for (std::uint32_t i = 0; i < c.members.size(); ++i) {
        for (VertexId v : c.members[i]) {
            c.component[v] = i;
            if (self_loop[v]) c.cyclic[i] = true;
        }
        if (c.members[i].size() > 1) c.cyclic[i] = true;
    }
    c.successors.assign(c.members.size(), {});
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : adj[v]) {
            if (c.component[v] != c.component[w]) c.successors[c.component[v]].push_back(c.component[w]);
        }
    }
    for (auto& s : c.successors) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return c;
}

}  // namespace cflr
