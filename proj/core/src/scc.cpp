#include "svreach/scc.hpp"

#include <algorithm>

namespace svreach {

namespace {
constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
}

SccResult tarjan_scc(const DiGraph& g) {
    const VertexId n = g.vertex_count();
    SccResult result;
    result.component.assign(n, kUnvisited);

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> scc_stack;

    struct Frame {
        VertexId v;
        std::uint32_t next_edge; // position in out_edges(v)
    };
    std::vector<Frame> dfs;
    std::uint32_t next_index = 0;

    for (VertexId start = 0; start < n; ++start) {
        if (index[start] != kUnvisited) continue;
        dfs.push_back({start, 0});
        index[start] = lowlink[start] = next_index++;
        scc_stack.push_back(start);
        on_stack[start] = 1;

        while (!dfs.empty()) {
            Frame& frame = dfs.back();
            const VertexId v = frame.v;
            const auto out = g.out_edges(v);
            bool descended = false;
            while (frame.next_edge < out.size()) {
                const VertexId w = out[frame.next_edge++].to;
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    dfs.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            }
            if (descended) continue;

            if (lowlink[v] == index[v]) {
                const std::uint32_t id = result.count();
                std::uint32_t members = 0;
                VertexId w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = 0;
                    result.component[w] = id;
                    ++members;
                } while (w != v);
                result.size.push_back(members);
            }
            dfs.pop_back();
            if (!dfs.empty()) {
                lowlink[dfs.back().v] = std::min(lowlink[dfs.back().v], lowlink[v]);
            }
        }
    }
    return result;
}

} // namespace svreach
