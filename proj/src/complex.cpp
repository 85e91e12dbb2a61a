#include "chromhom/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace chromhom {

namespace {

// Calls f(mask) for every mask over `n` bits with popcount `k`, ascending.
template <class F>
void for_each_subset(std::size_t n, int k, F&& f) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return;
    if (k == 0) {
        f(EdgeMask{0});
        return;
    }
    const EdgeMask limit = n == 64 ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1;
    EdgeMask s = (EdgeMask{1} << k) - 1;
    while (true) {
        f(s);
        if (s == (limit & ~((EdgeMask{1} << (n - k)) - 1))) break;  // top k bits set
        const EdgeMask c = s & (~s + 1);
        const EdgeMask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

// Appends all colorings of `components` slots with total degree `degree`, in
// lexicographic order.
void enumerate_colorings(const Algebra& a, int components, int degree,
                         std::vector<std::uint8_t>& out, std::size_t& count) {
    const int r = a.rank();
    const int maxdeg = a.max_degree();
    std::vector<std::uint8_t> current(static_cast<std::size_t>(components), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == components) {
            if (remaining == 0) {
                out.insert(out.end(), current.begin(), current.end());
                ++count;
            }
            return;
        }
        const int slots_after = components - pos - 1;
        for (int b = 0; b < r; ++b) {
            const int d = a.degree(b);
            if (d > remaining) continue;
            if (remaining - d > maxdeg * slots_after) continue;
            current[pos] = static_cast<std::uint8_t>(b);
            self(self, pos + 1, remaining - d);
        }
    };
    rec(rec, 0, degree);
}

void check_degree(const Algebra& a, int degree) {
    if (auto w = a.window(); w && degree > *w)
        throw std::out_of_range("degree " + std::to_string(degree) + " lies above the Z[x] window " +
                                std::to_string(*w));
}

bool less_coloring(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

EnhancedState StateBasis::state(std::size_t k) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), k,
                               [](std::size_t x, const Block& b) { return x < b.first; });
    if (k >= size_ || it == blocks_.begin()) throw std::out_of_range("state index");
    const Block& b = *std::prev(it);
    auto colors = coloring(b, k - b.first);
    return {b.subset, std::vector<int>(colors.begin(), colors.end())};
}

std::span<const std::uint8_t> StateBasis::coloring(const Block& b, std::size_t offset) const {
    const auto block_index = static_cast<std::size_t>(&b - blocks_.data());
    const auto width = static_cast<std::size_t>(b.components);
    return {colors_.data() + color_offset_[block_index] + offset * width, width};
}

const StateBasis::Block* StateBasis::find_block(EdgeMask subset) const {
    auto it = block_of_.find(subset);
    return it == block_of_.end() ? nullptr : &blocks_[it->second];
}

std::optional<std::size_t> StateBasis::index_of(EdgeMask subset,
                                                std::span<const std::uint8_t> coloring) const {
    const Block* b = find_block(subset);
    if (!b || coloring.size() != static_cast<std::size_t>(b->components)) return std::nullopt;
    std::size_t lo = 0, hi = b->count;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (less_coloring(this->coloring(*b, mid), coloring))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < b->count && std::ranges::equal(this->coloring(*b, lo), coloring)) return b->first + lo;
    return std::nullopt;
}

std::optional<std::size_t> StateBasis::index_of(const EnhancedState& s) const {
    std::vector<std::uint8_t> c;
    for (int x : s.coloring) {
        if (x < 0 || x > 255) return std::nullopt;
        c.push_back(static_cast<std::uint8_t>(x));
    }
    return index_of(s.subset, c);
}

void StateBasis::add_block(Block block, std::vector<std::uint8_t> colors) {
    if (block.count == 0) return;
    block.first = size_;
    size_ += block.count;
    block_of_.emplace(block.subset, blocks_.size());
    color_offset_.push_back(colors_.size());
    colors_.insert(colors_.end(), colors.begin(), colors.end());
    blocks_.push_back(std::move(block));
}

int max_state_degree(const Graph& g, const Algebra& a) {
    const int top = a.max_degree() * g.vertex_count();
    if (auto w = a.window()) return std::min(top, *w);
    return top;
}

StateBasis enumerate_basis(const Graph& g, const Algebra& a, int height, int degree) {
    check_degree(a, degree);
    StateBasis basis(height, degree);
    if (degree < 0) return basis;
    for_each_subset(g.edge_count(), height, [&](EdgeMask s) {
        auto part = components(g, s);
        StateBasis::Block block;
        block.subset = s;
        block.components = part.component_count;
        block.component_id = std::move(part.component_id);
        std::vector<std::uint8_t> colors;
        enumerate_colorings(a, block.components, degree, colors, block.count);
        basis.add_block(std::move(block), std::move(colors));
    });
    return basis;
}

std::vector<std::pair<EnhancedState, std::int64_t>> per_edge_image(const Graph& g, const Algebra& a,
                                                                   const EnhancedState& state,
                                                                   std::size_t e) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    if (state.subset >> e & 1) throw std::invalid_argument("edge already in the state's subset");
    const auto part = components(g, state.subset);
    if (state.coloring.size() != static_cast<std::size_t>(part.component_count))
        throw std::invalid_argument("coloring length does not match component count");
    const EdgeMask target = state.subset | (EdgeMask{1} << e);
    const int cu = part.component_id[g.edge(e).u];
    const int cw = part.component_id[g.edge(e).w];
    if (cu == cw) return {{EnhancedState{target, state.coloring}, 1}};

    const int c1 = std::min(cu, cw), c2 = std::max(cu, cw);
    std::vector<std::pair<EnhancedState, std::int64_t>> out;
    for (auto [m, coeff] : a.product_terms(state.coloring[c1], state.coloring[c2])) {
        EnhancedState t{target, state.coloring};
        t.coloring[c1] = m;
        t.coloring.erase(t.coloring.begin() + c2);
        out.emplace_back(std::move(t), coeff);
    }
    return out;
}

IntMatrix differential(const Graph& g, const Algebra& a, const StateBasis& source,
                       const StateBasis& target) {
    IntMatrix d(static_cast<int>(target.size()), static_cast<int>(source.size()));
    const std::size_t n = g.edge_count();
    std::vector<std::uint8_t> image;
    std::vector<IntMatrix::Column> columns(source.size());

    auto lookup = [&](EdgeMask t, std::span<const std::uint8_t> c) {
        auto idx = target.index_of(t, c);
        if (!idx) throw std::logic_error("differential image lies outside the target basis");
        return static_cast<int>(*idx);
    };

    for (const auto& block : source.blocks()) {
        for (std::size_t e = 0; e < n; ++e) {
            if (block.subset >> e & 1) continue;
            const EdgeMask below = block.subset & ((EdgeMask{1} << e) - 1);
            const std::int64_t sign = std::popcount(below) % 2 ? -1 : 1;
            const EdgeMask t = block.subset | (EdgeMask{1} << e);
            const int cu = block.component_id[g.edge(e).u];
            const int cw = block.component_id[g.edge(e).w];
            for (std::size_t k = 0; k < block.count; ++k) {
                auto colors = source.coloring(block, k);
                auto& column = columns[block.first + k];
                if (cu == cw) {
                    column.emplace_back(lookup(t, colors), Integer(static_cast<long>(sign)));
                    continue;
                }
                const int c1 = std::min(cu, cw), c2 = std::max(cu, cw);
                for (auto [m, coeff] : a.product_terms(colors[c1], colors[c2])) {
                    image.assign(colors.begin(), colors.end());
                    image[c1] = static_cast<std::uint8_t>(m);
                    image.erase(image.begin() + c2);
                    column.emplace_back(lookup(t, image), Integer(static_cast<long>(sign * coeff)));
                }
            }
        }
    }
    for (std::size_t c = 0; c < columns.size(); ++c) d.set_column(static_cast<int>(c), std::move(columns[c]));
    return d;
}

IntMatrix differential(const Graph& g, const Algebra& a, int height, int degree) {
    return differential(g, a, enumerate_basis(g, a, height, degree),
                        enumerate_basis(g, a, height + 1, degree));
}

std::map<std::pair<int, int>, std::uint64_t> chain_dimensions(const Graph& g, const Algebra& a) {
    const std::size_t n = g.edge_count();
    if (n > 40) throw std::length_error("too many edges to enumerate the edge cube");
    const int v = g.vertex_count();
    // subsets[i][k]: number of subsets with i edges and k components.
    std::vector<std::vector<std::uint64_t>> subsets(n + 1, std::vector<std::uint64_t>(v + 1, 0));
    for (EdgeMask s = 0; s <= g.full_mask(); ++s) {
        ++subsets[std::popcount(s)][components(g, s).component_count];
        if (s == g.full_mask()) break;
    }
    // colorings[k][j]: colorings of k components with total degree j.
    const int jmax = a.max_degree() * v;
    std::vector<std::vector<std::uint64_t>> colorings(v + 1, std::vector<std::uint64_t>(jmax + 1, 0));
    colorings[0][0] = 1;
    for (int k = 1; k <= v; ++k)
        for (int j = 0; j <= jmax; ++j)
            for (int b = 0; b < a.rank(); ++b)
                if (j >= a.degree(b)) colorings[k][j] += colorings[k - 1][j - a.degree(b)];
    const int jtop = max_state_degree(g, a);
    std::map<std::pair<int, int>, std::uint64_t> dims;
    for (std::size_t i = 0; i <= n; ++i)
        for (int k = 0; k <= v; ++k) {
            if (!subsets[i][k]) continue;
            for (int j = 0; j <= jtop; ++j)
                if (colorings[k][j]) dims[{static_cast<int>(i), j}] += subsets[i][k] * colorings[k][j];
        }
    return dims;
}

std::string dump_basis(const Graph& g, const StateBasis& basis) {
    std::ostringstream out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto s = basis.state(k);
        out << "state#" << k << ": subset=0b";
        if (g.edge_count() == 0) out << '0';
        for (std::size_t e = g.edge_count(); e-- > 0;) out << ((s.subset >> e & 1) ? '1' : '0');
        out << ", colors=[";
        for (std::size_t c = 0; c < s.coloring.size(); ++c) out << (c ? "," : "") << s.coloring[c];
        out << "]\n";
    }
    return out.str();
}

std::string dump_triplets(const IntMatrix& m) {
    std::ostringstream out;
    for (const auto& [r, c, v] : m.triplets()) out << "(" << r << ", " << c << ", " << v.get_str() << ")\n";
    return out.str();
}

}  // namespace chromhom
