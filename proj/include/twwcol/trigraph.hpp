#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twwcol {

using VertexId = std::uint32_t;

// Unordered vertex pair, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

enum class EdgeColor : std::uint8_t { None, Black, Red };

// Names the reduction symbol a vertex stands for. Coordinates are 1-based,
// matching the construction's indices.
struct VertexRole {
    enum class Kind : std::uint8_t {
        A,          // a_{i,j}
        B,          // b_{i,j}
        V,          // v_i
        Triangle,   // triangle t_j, slot 0/1/2 = u/v/w
        Path,       // x_{i,j}
        Subdiv,     // x'_{i,j}
        Z,          // z
        Universal,  // k-th added universal vertex
    };

    Kind kind = Kind::Z;
    int first = 0;
    int second = 0;

    static VertexRole a(int i, int j) { return {Kind::A, i, j}; }
    static VertexRole b(int i, int j) { return {Kind::B, i, j}; }
    static VertexRole v(int i) { return {Kind::V, i, 0}; }
    static VertexRole triangle(int j, int slot) { return {Kind::Triangle, j, slot}; }
    static VertexRole path(int i, int j) { return {Kind::Path, i, j}; }
    static VertexRole subdiv(int i, int j) { return {Kind::Subdiv, i, j}; }
    static VertexRole z() { return {Kind::Z, 0, 0}; }
    static VertexRole universal(int k) { return {Kind::Universal, k, 0}; }

    // "A 2 5", "V 3", "T 4 u", "X 1 2", "Xp 1 2", "Z", "U 1"
    std::string to_string() const;
    static VertexRole parse(const std::string &text);

    friend bool operator==(const VertexRole &, const VertexRole &) = default;
};

// Vertex set 0..n-1 with disjoint black and red edge sets. Immutable once
// built; every mutation returns a new Trigraph.
class Trigraph {
public:
    Trigraph() = default;

    // Validates and canonicalizes. Duplicate pairs within one list collapse.
    static Trigraph make(std::size_t n, std::span<const Edge> black, std::span<const Edge> red);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Edge> &black_edges() const noexcept { return black_; }
    const std::vector<Edge> &red_edges() const noexcept { return red_; }
    bool is_plain() const noexcept { return red_.empty(); }

    std::span<const VertexId> black_neighbors(VertexId v) const { return black_adj_.at(v); }
    std::span<const VertexId> red_neighbors(VertexId v) const { return red_adj_.at(v); }
    std::size_t black_degree(VertexId v) const { return black_adj_.at(v).size(); }

    EdgeColor color(VertexId u, VertexId v) const;

    // Optional role labels; empty when the graph is anonymous. Algorithms
    // never look at these.
    const std::vector<VertexRole> &roles() const noexcept { return roles_; }
    bool has_roles() const noexcept { return !roles_.empty(); }
    Trigraph with_roles(std::vector<VertexRole> roles) const;

    // First vertex carrying the role, if any. Linear scan.
    std::optional<VertexId> find_role(const VertexRole &role) const;

    friend bool operator==(const Trigraph &x, const Trigraph &y) {
        return x.n_ == y.n_ && x.black_ == y.black_ && x.red_ == y.red_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> black_;
    std::vector<Edge> red_;
    std::vector<std::vector<VertexId>> black_adj_;
    std::vector<std::vector<VertexId>> red_adj_;
    std::vector<VertexRole> roles_;
};

// Disjoint nonempty parts covering 0..n-1.
class Partition {
public:
    static Partition make(std::size_t n, std::vector<std::vector<VertexId>> parts);
    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);

    std::size_t vertex_count() const noexcept { return part_of_.size(); }
    std::size_t part_count() const noexcept { return parts_.size(); }
    const std::vector<std::vector<VertexId>> &parts() const noexcept { return parts_; }
    std::size_t part_of(VertexId v) const { return part_of_.at(v); }

private:
    std::vector<std::vector<VertexId>> parts_;
    std::vector<std::size_t> part_of_;
};

Trigraph make_trigraph(std::size_t n, std::span<const Edge> black, std::span<const Edge> red = {});

std::size_t red_degree(const Trigraph &g, VertexId v);
std::size_t max_red_degree(const Trigraph &g);

// G/P built from scratch. Vertex k of the result is part k of p.
Trigraph quotient(const Trigraph &g, const Partition &p);

// Every black edge becomes red.
Trigraph redify(const Trigraph &g);

}  // namespace twwcol
