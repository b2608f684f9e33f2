#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qhammer {

using QubitId = std::uint32_t;

/**
 * Undirected device connectivity for a heavy-hex style chip.
 *
 * Construction validates the edge set: no self-loops, no duplicate edges
 * (regardless of orientation), all qubit ids in range, maximum vertex
 * degree 3, and a connected graph. Instances are immutable afterwards and
 * safe to share across threads.
 */
class CouplingGraph {
  public:
    CouplingGraph(QubitId qubit_count,
                  const std::vector<std::pair<QubitId, QubitId>> &edge_list);

    QubitId qubit_count() const { return qubit_count_; }

    /// Normalized edge set: each pair (a, b) with a < b, sorted ascending.
    const std::vector<std::pair<QubitId, QubitId>> &edges() const { return edges_; }

    /// Neighbors of q in ascending order.
    const std::vector<QubitId> &neighbors(QubitId q) const;

    std::size_t degree(QubitId q) const { return neighbors(q).size(); }

    bool has_edge(QubitId a, QubitId b) const;

  private:
    QubitId qubit_count_;
    std::vector<std::pair<QubitId, QubitId>> edges_;
    std::vector<std::vector<QubitId>> adjacency_;
};

/**
 * The 6-qubit attack region around a hammer centre: two row triples whose
 * middle qubits are the centre's only graph neighbors, top row being the
 * one with the smaller middle id. Each row is ordered ascending and forms
 * a path (left-mid, mid-right) in the coupling graph.
 */
struct HammerNeighborhood {
    QubitId center;
    std::array<QubitId, 3> top_row;
    std::array<QubitId, 3> bottom_row;

    /// All six row qubits: top row first, each left to right.
    std::array<QubitId, 6> ring() const {
        return {top_row[0],    top_row[1],    top_row[2],
                bottom_row[0], bottom_row[1], bottom_row[2]};
    }
};

/**
 * Load a coupling map by name. "eagle127" resolves to the embedded
 * 127-qubit heavy-hex map; any other name is treated as a path to an
 * edge-list file (one "a b" pair per line, '#' comments allowed). The
 * qubit count of a file-based map is max id + 1.
 *
 * Throws std::invalid_argument / std::runtime_error on unknown names,
 * malformed files, or invariant violations.
 */
CouplingGraph load_device_map(const std::string &name);

/**
 * True when q is a hammer centre: a degree-2 connector between two rows,
 * where each neighbor m is a row middle whose lateral row neighbors are
 * exactly m-1 and m+1. Rows on these device maps are numbered
 * consecutively, which is what distinguishes a row-to-row connector from
 * a plain in-row qubit of the same local degree pattern.
 */
bool is_hammer_center(const CouplingGraph &graph, QubitId q);

/// Extract the 6-qubit neighborhood of a hammer centre. Throws
/// std::invalid_argument when the centre precondition fails.
HammerNeighborhood hammer_neighborhood(const CouplingGraph &graph, QubitId center);

/**
 * All 30 directed qubit pairs used by the full hammer configuration:
 * every ordered pair within the top row, then within the bottom row,
 * then every ordered cross-row pair (top-source pairs first). Blocks are
 * ordered lexicographically by (source, target) so generated circuits
 * are reproducible. Throws on overlapping triples.
 */
std::vector<std::pair<QubitId, QubitId>>
directed_row_pairs(const std::array<QubitId, 3> &top, const std::array<QubitId, 3> &bottom);

/// All hammer centres of the graph, ascending.
std::vector<QubitId> enumerate_centers(const CouplingGraph &graph);

} // namespace qhammer
