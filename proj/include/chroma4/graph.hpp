#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma4/errors.hpp"

namespace chroma4 {

using Vertex = int;

/// Hard capacity of a VertexSet. Graphs larger than this cannot be built.
inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bitset over vertex ids [0, kMaxVertices).
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    static VertexSet range(int n)
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static VertexSet from(const std::vector<Vertex> & vs)
    {
        VertexSet s;
        for (Vertex v : vs)
            s.insert(v);
        return s;
    }

    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
    [[nodiscard]] bool contains(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

    [[nodiscard]] int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Lowest member, or -1 when empty.
    [[nodiscard]] Vertex first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Lowest member strictly greater than v, or -1.
    [[nodiscard]] Vertex next(Vertex v) const
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int w = v >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur)
                return w * 64 + std::countr_zero(cur);
            if (++w == kWords)
                return -1;
            cur = words_[w];
        }
    }

    [[nodiscard]] bool intersects(const VertexSet & o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    [[nodiscard]] bool subset_of(const VertexSet & o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet & operator&=(const VertexSet & o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;
    /// Lexicographic on the sorted member list.
    friend bool operator<(const VertexSet & a, const VertexSet & b) { return a.to_vector() < b.to_vector(); }

    [[nodiscard]] std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        for (Vertex v = first(); v >= 0; v = next(v))
            out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const VertexSet * s, Vertex v) : s_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        iterator & operator++()
        {
            v_ = s_->next(v_);
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator & o) const { return v_ == o.v_; }

    private:
        const VertexSet * s_ = nullptr;
        Vertex v_ = -1;
    };

    [[nodiscard]] iterator begin() const { return {this, first()}; }
    [[nodiscard]] iterator end() const { return {this, -1}; }

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
    std::array<std::uint64_t, kWords> words_{};
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    /// Edges are unordered pairs; duplicates are ignored, self-loops and
    /// out-of-range endpoints throw UsageError.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges, std::vector<std::string> labels = {});

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int edge_count() const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    [[nodiscard]] const VertexSet & row(Vertex v) const { return adj_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return adj_[v].size(); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
    /// Provenance label, or the decimal id when the graph carries none.
    [[nodiscard]] std::string label(Vertex v) const;
    [[nodiscard]] const std::vector<std::string> & labels() const { return labels_; }

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Subgraph induced by a vertex set; to_parent[i] is the parent id of vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

/// Graph after contracting a vertex set; to_child[v] maps every parent vertex
/// to its vertex in the contracted graph.
struct Contraction {
    Graph graph;
    std::vector<Vertex> to_child;
    Vertex merged = -1;
};

[[nodiscard]] VertexSet neighbors(const Graph & g, Vertex v);
[[nodiscard]] VertexSet set_neighbors(const Graph & g, const VertexSet & xs);
[[nodiscard]] InducedSubgraph induced(const Graph & g, const VertexSet & xs);
[[nodiscard]] Graph complement(const Graph & g);
/// Replaces s by one new vertex adjacent to N(s). Untouched vertices keep
/// their relative order; the new vertex is appended last.
[[nodiscard]] Contraction contract_set(const Graph & g, const VertexSet & s);
/// Connected components of g[within], ordered by lowest member.
[[nodiscard]] std::vector<VertexSet> components(const Graph & g, const VertexSet & within);
[[nodiscard]] bool is_connected(const Graph & g);
[[nodiscard]] bool is_clique(const Graph & g, const VertexSet & xs);
[[nodiscard]] bool is_independent(const Graph & g, const VertexSet & xs);
/// True when every member of a is adjacent to every member of b (and a, b disjoint).
[[nodiscard]] bool is_complete_to(const Graph & g, const VertexSet & a, const VertexSet & b);

/// Validates an id against g; throws UsageError.
void check_vertex(const Graph & g, Vertex v);

/// Cycle C_n, path P_n, complete K_n, and the n-antihole (complement of C_n).
namespace named {
    Graph cycle(int n);
    Graph path(int n);
    Graph complete(int n);
    Graph antihole(int n);
    Graph empty(int n);
    Graph complete_bipartite(int a, int b);
    Graph petersen();
}

using Color = std::uint8_t;
inline constexpr Color kUncolored = 0;

/// Set of colors drawn from {1,2,3,4}; bit i-1 stands for color i.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<Color> cs)
    {
        for (Color c : cs)
            mask_ |= static_cast<std::uint8_t>(1u << (c - 1));
    }
    static constexpr ColorSet from_mask(std::uint8_t m)
    {
        ColorSet s;
        s.mask_ = m & 0xF;
        return s;
    }
    static constexpr ColorSet all() { return from_mask(0xF); }
    static constexpr ColorSet only(Color c) { return from_mask(static_cast<std::uint8_t>(1u << (c - 1))); }

    [[nodiscard]] constexpr bool contains(Color c) const { return c >= 1 && c <= 4 && ((mask_ >> (c - 1)) & 1u); }
    [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
    [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
    [[nodiscard]] constexpr std::uint8_t mask() const { return mask_; }
    /// Lowest color, or kUncolored when empty.
    [[nodiscard]] constexpr Color first() const
    {
        return mask_ ? static_cast<Color>(std::countr_zero(mask_) + 1) : kUncolored;
    }
    [[nodiscard]] constexpr bool subset_of(ColorSet o) const { return (mask_ & ~o.mask_) == 0; }

    constexpr void insert(Color c) { mask_ |= static_cast<std::uint8_t>(1u << (c - 1)); }
    constexpr void erase(Color c) { mask_ &= static_cast<std::uint8_t>(~(1u << (c - 1))); }

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(a.mask_ | b.mask_); }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_mask(a.mask_ & b.mask_); }
    friend constexpr ColorSet operator-(ColorSet a, ColorSet b)
    {
        return from_mask(static_cast<std::uint8_t>(a.mask_ & ~b.mask_));
    }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

    [[nodiscard]] std::vector<Color> to_vector() const
    {
        std::vector<Color> out;
        for (Color c = 1; c <= 4; ++c)
            if (contains(c))
                out.push_back(c);
        return out;
    }
    /// "{1,3}" style rendering.
    [[nodiscard]] std::string str() const;

private:
    std::uint8_t mask_ = 0;
};

/// Partial map vertex -> color in 1..4; kUncolored marks an uncolored vertex.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n) : colors_(static_cast<std::size_t>(n), kUncolored) {}
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    [[nodiscard]] int size() const { return static_cast<int>(colors_.size()); }
    [[nodiscard]] Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    void set(Vertex v, Color c) { colors_[static_cast<std::size_t>(v)] = c; }
    [[nodiscard]] bool colored(Vertex v) const { return (*this)[v] != kUncolored; }
    [[nodiscard]] bool total() const;
    [[nodiscard]] const std::vector<Color> & values() const { return colors_; }
    /// Colors appearing on members of vs.
    [[nodiscard]] ColorSet colors_on(const VertexSet & vs) const;
    /// Distinct colors used anywhere.
    [[nodiscard]] ColorSet used() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<Color> colors_;
};

struct ProperVerdict {
    bool proper = true;
    /// First monochromatic edge, lowest (u, v) with u < v.
    std::optional<std::pair<Vertex, Vertex>> bad_edge;
    /// First uncolored vertex (only reported when totality was required).
    std::optional<Vertex> uncolored;
    /// First vertex with a color outside 1..4.
    std::optional<Vertex> bad_color;
};

[[nodiscard]] ProperVerdict is_proper(const Graph & g, const Coloring & c, bool require_total);

} // namespace chroma4
