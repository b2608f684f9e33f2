#include "qhammer/topology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhammer {

namespace {

[[noreturn]] void fail(const std::string &msg) { throw std::invalid_argument(msg); }

} // namespace

CouplingGraph::CouplingGraph(QubitId qubit_count,
                             const std::vector<std::pair<QubitId, QubitId>> &edge_list)
    : qubit_count_(qubit_count) {
    if (qubit_count == 0)
        fail("coupling graph must have at least one qubit");

    std::set<std::pair<QubitId, QubitId>> seen;
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a == b)
            fail("self-loop on qubit " + std::to_string(a));
        if (a >= qubit_count || b >= qubit_count)
            fail("edge (" + std::to_string(a) + "," + std::to_string(b) +
                 ") references a qubit id >= " + std::to_string(qubit_count));
        auto e = std::minmax(a, b);
        if (!seen.insert({e.first, e.second}).second)
            fail("duplicate edge (" + std::to_string(e.first) + "," +
                 std::to_string(e.second) + ")");
    }
    edges_.assign(seen.begin(), seen.end());

    adjacency_.assign(qubit_count, {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (QubitId q = 0; q < qubit_count; ++q) {
        std::sort(adjacency_[q].begin(), adjacency_[q].end());
        if (adjacency_[q].size() > 3)
            fail("qubit " + std::to_string(q) + " has degree " +
                 std::to_string(adjacency_[q].size()) + " (heavy-hex maximum is 3)");
    }

    // connectivity via DFS from qubit 0
    if (qubit_count > 1) {
        std::vector<bool> visited(qubit_count, false);
        std::vector<QubitId> stack{0};
        visited[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            QubitId q = stack.back();
            stack.pop_back();
            for (QubitId v : adjacency_[q]) {
                if (!visited[v]) {
                    visited[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != qubit_count)
            fail("coupling graph is not connected (" + std::to_string(reached) + " of " +
                 std::to_string(qubit_count) + " qubits reachable)");
    }
}

const std::vector<QubitId> &CouplingGraph::neighbors(QubitId q) const {
    if (q >= qubit_count_)
        fail("qubit id " + std::to_string(q) + " out of range");
    return adjacency_[q];
}

bool CouplingGraph::has_edge(QubitId a, QubitId b) const {
    if (a >= qubit_count_ || b >= qubit_count_)
        return false;
    const auto &adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

// Defined in eagle127.cpp.
const std::vector<std::pair<QubitId, QubitId>> &eagle127_edges();

namespace {

CouplingGraph load_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("unknown device map or unreadable edge-list file: " + path);

    std::vector<std::pair<QubitId, QubitId>> edges;
    QubitId max_id = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long a = -1, b = -1;
        if (!(ls >> a))
            continue; // blank or comment-only line
        std::string rest;
        if (!(ls >> b) || (ls >> rest) || a < 0 || b < 0)
            throw std::runtime_error("malformed edge list at " + path + ":" +
                                     std::to_string(line_no) + ": expected 'a b'");
        edges.emplace_back(static_cast<QubitId>(a), static_cast<QubitId>(b));
        max_id = std::max({max_id, static_cast<QubitId>(a), static_cast<QubitId>(b)});
    }
    if (edges.empty())
        throw std::runtime_error("edge-list file " + path + " contains no edges");
    return CouplingGraph(max_id + 1, edges);
}

} // namespace

CouplingGraph load_device_map(const std::string &name) {
    if (name == "eagle127")
        return CouplingGraph(127, eagle127_edges());
    return load_edge_list_file(name);
}

bool is_hammer_center(const CouplingGraph &graph, QubitId q) {
    if (q >= graph.qubit_count() || graph.degree(q) != 2)
        return false;
    for (QubitId mid : graph.neighbors(q)) {
        if (graph.degree(mid) != 3)
            return false;
        // Lateral row neighbors of the middle must be exactly mid-1 and
        // mid+1; rows carry consecutive ids on these maps.
        if (mid == 0)
            return false;
        std::array<QubitId, 2> lateral{};
        std::size_t k = 0;
        for (QubitId v : graph.neighbors(mid))
            if (v != q)
                lateral[k++] = v;
        if (!(lateral[0] == mid - 1 && lateral[1] == mid + 1))
            return false;
    }
    return true;
}

HammerNeighborhood hammer_neighborhood(const CouplingGraph &graph, QubitId center) {
    if (!is_hammer_center(graph, center))
        fail("qubit " + std::to_string(center) + " is not a hammer centre");
    const auto &mids = graph.neighbors(center); // ascending, size 2
    HammerNeighborhood hood;
    hood.center = center;
    hood.top_row = {mids[0] - 1, mids[0], mids[0] + 1};
    hood.bottom_row = {mids[1] - 1, mids[1], mids[1] + 1};
    return hood;
}

std::vector<std::pair<QubitId, QubitId>>
directed_row_pairs(const std::array<QubitId, 3> &top, const std::array<QubitId, 3> &bottom) {
    for (QubitId t : top)
        for (QubitId b : bottom)
            if (t == b)
                fail("row triples overlap at qubit " + std::to_string(t));

    auto ordered_within = [](std::array<QubitId, 3> row) {
        std::sort(row.begin(), row.end());
        std::vector<std::pair<QubitId, QubitId>> out;
        for (QubitId a : row)
            for (QubitId b : row)
                if (a != b)
                    out.emplace_back(a, b);
        return out;
    };

    std::vector<std::pair<QubitId, QubitId>> pairs;
    pairs.reserve(30);
    for (auto p : ordered_within(top))
        pairs.push_back(p);
    for (auto p : ordered_within(bottom))
        pairs.push_back(p);

    std::array<QubitId, 3> ts = top, bs = bottom;
    std::sort(ts.begin(), ts.end());
    std::sort(bs.begin(), bs.end());
    for (QubitId a : ts)
        for (QubitId b : bs)
            pairs.emplace_back(a, b);
    for (QubitId a : bs)
        for (QubitId b : ts)
            pairs.emplace_back(a, b);
    return pairs;
}

std::vector<QubitId> enumerate_centers(const CouplingGraph &graph) {
    std::vector<QubitId> centers;
    for (QubitId q = 0; q < graph.qubit_count(); ++q)
        if (is_hammer_center(graph, q))
            centers.push_back(q);
    return centers;
}

} // namespace qhammer
