#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chromhom/algebra.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/int_matrix.hpp"

namespace chromhom {

/// Basis element of a chain group: an edge subset plus one algebra basis index
/// per component of [G:s], components in ascending minimal-vertex order.
struct EnhancedState {
    EdgeMask subset = 0;
    std::vector<int> coloring;
    friend bool operator==(const EnhancedState&, const EnhancedState&) = default;
    friend auto operator<=>(const EnhancedState&, const EnhancedState&) = default;
};

/// Ordered basis of the slice C^{i,j}. States are sorted by (subset mask,
/// coloring) and grouped into one block per subset.
class StateBasis {
public:
    struct Block {
        EdgeMask subset = 0;
        std::vector<int> component_id;  // vertex -> component
        int components = 0;
        std::size_t first = 0;  // index of the block's first state
        std::size_t count = 0;
    };

    StateBasis(int height, int degree) : height_(height), degree_(degree) {}

    int height() const { return height_; }
    int degree() const { return degree_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const std::vector<Block>& blocks() const { return blocks_; }

    EnhancedState state(std::size_t k) const;
    std::span<const std::uint8_t> coloring(const Block& b, std::size_t offset) const;
    std::optional<std::size_t> index_of(EdgeMask subset, std::span<const std::uint8_t> coloring) const;
    std::optional<std::size_t> index_of(const EnhancedState& s) const;
    const Block* find_block(EdgeMask subset) const;

    /// Appends a block; states must arrive in basis order.
    void add_block(Block block, std::vector<std::uint8_t> colors);

private:
    int height_;
    int degree_;
    std::size_t size_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::size_t> color_offset_;  // per block, into colors_
    std::vector<std::uint8_t> colors_;
    std::unordered_map<EdgeMask, std::size_t> block_of_;
};

/// Largest internal degree that can carry states: max basis degree times the
/// number of vertices, clipped to the window for Z[x] windows.
int max_state_degree(const Graph& g, const Algebra& a);

StateBasis enumerate_basis(const Graph& g, const Algebra& a, int height, int degree);

/// Image of a single state under the per-edge map for edge `e` (unsigned).
std::vector<std::pair<EnhancedState, std::int64_t>> per_edge_image(const Graph& g, const Algebra& a,
                                                                   const EnhancedState& state,
                                                                   std::size_t e);

/// Matrix of d^{i,j}: C^{i,j} -> C^{i+1,j}, columns indexed by `source`, rows by `target`.
IntMatrix differential(const Graph& g, const Algebra& a, const StateBasis& source,
                       const StateBasis& target);
IntMatrix differential(const Graph& g, const Algebra& a, int height, int degree);

/// dim C^{i,j} for all (i, j) with a nonzero slice, computed by counting
/// subsets by component number (no states are materialized).
std::map<std::pair<int, int>, std::uint64_t> chain_dimensions(const Graph& g, const Algebra& a);

/// Listing `state#k: subset=0b..., colors=[...]`.
std::string dump_basis(const Graph& g, const StateBasis& basis);
/// One `(row, col, value)` triplet per line.
std::string dump_triplets(const IntMatrix& m);

}  // namespace chromhom
