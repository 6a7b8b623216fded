#include "twwcol/trigraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

std::vector<Edge> canonical_edges(std::size_t n, std::span<const Edge> edges, const char *which) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge &e : edges) {
        if (e.u == e.v)
            throw LoopError(std::string("self-loop in ") + which + " edges at vertex " +
                            std::to_string(e.u));
        if (e.v >= n)
            throw RangeError(std::string(which) + " edge endpoint " + std::to_string(e.v) +
                             " out of range for n=" + std::to_string(n));
        out.emplace_back(e.u, e.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<VertexId>> adjacency(std::size_t n, const std::vector<Edge> &edges) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

bool contains(const std::vector<VertexId> &sorted, VertexId x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

const char *kind_tag(VertexRole::Kind k) {
    switch (k) {
    case VertexRole::Kind::A: return "A";
    case VertexRole::Kind::B: return "B";
    case VertexRole::Kind::V: return "V";
    case VertexRole::Kind::Triangle: return "T";
    case VertexRole::Kind::Path: return "X";
    case VertexRole::Kind::Subdiv: return "Xp";
    case VertexRole::Kind::Z: return "Z";
    case VertexRole::Kind::Universal: return "U";
    }
    return "?";
}

}  // namespace

std::string VertexRole::to_string() const {
    std::ostringstream os;
    os << kind_tag(kind);
    switch (kind) {
    case Kind::A:
    case Kind::B:
    case Kind::Path:
    case Kind::Subdiv:
        os << ' ' << first << ' ' << second;
        break;
    case Kind::V:
    case Kind::Universal:
        os << ' ' << first;
        break;
    case Kind::Triangle:
        os << ' ' << first << ' ' << "uvw"[second];
        break;
    case Kind::Z:
        break;
    }
    return os.str();
}

VertexRole VertexRole::parse(const std::string &text) {
    std::istringstream is(text);
    std::string tag;
    if (!(is >> tag))
        throw RangeError("empty role tag");
    auto need_int = [&]() {
        int x = 0;
        if (!(is >> x))
            throw RangeError("malformed role '" + text + "'");
        return x;
    };
    VertexRole r;
    if (tag == "A" || tag == "B" || tag == "X" || tag == "Xp") {
        r.kind = tag == "A"   ? Kind::A
                 : tag == "B" ? Kind::B
                 : tag == "X" ? Kind::Path
                              : Kind::Subdiv;
        r.first = need_int();
        r.second = need_int();
    } else if (tag == "V" || tag == "U") {
        r.kind = tag == "V" ? Kind::V : Kind::Universal;
        r.first = need_int();
    } else if (tag == "T") {
        r.kind = Kind::Triangle;
        r.first = need_int();
        std::string slot;
        if (!(is >> slot) || slot.size() != 1 || std::string("uvw").find(slot[0]) == std::string::npos)
            throw RangeError("malformed triangle slot in '" + text + "'");
        r.second = static_cast<int>(std::string("uvw").find(slot[0]));
    } else if (tag == "Z") {
        r.kind = Kind::Z;
    } else {
        throw RangeError("unknown role tag '" + tag + "'");
    }
    std::string rest;
    if (is >> rest)
        throw RangeError("trailing tokens in role '" + text + "'");
    return r;
}

Trigraph Trigraph::make(std::size_t n, std::span<const Edge> black, std::span<const Edge> red) {
    Trigraph g;
    g.n_ = n;
    g.black_ = canonical_edges(n, black, "black");
    g.red_ = canonical_edges(n, red, "red");

    std::vector<Edge> both;
    std::set_intersection(g.black_.begin(), g.black_.end(), g.red_.begin(), g.red_.end(),
                          std::back_inserter(both));
    if (!both.empty())
        throw OverlapError("pair {" + std::to_string(both.front().u) + "," +
                           std::to_string(both.front().v) + "} is both black and red");

    g.black_adj_ = adjacency(n, g.black_);
    g.red_adj_ = adjacency(n, g.red_);
    return g;
}

EdgeColor Trigraph::color(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_)
        throw RangeError("vertex out of range");
    if (contains(black_adj_[u], v))
        return EdgeColor::Black;
    if (contains(red_adj_[u], v))
        return EdgeColor::Red;
    return EdgeColor::None;
}

Trigraph Trigraph::with_roles(std::vector<VertexRole> roles) const {
    if (!roles.empty() && roles.size() != n_)
        throw RangeError("role table has " + std::to_string(roles.size()) + " entries for " +
                         std::to_string(n_) + " vertices");
    Trigraph g = *this;
    g.roles_ = std::move(roles);
    return g;
}

std::optional<VertexId> Trigraph::find_role(const VertexRole &role) const {
    auto it = std::find(roles_.begin(), roles_.end(), role);
    if (it == roles_.end())
        return std::nullopt;
    return static_cast<VertexId>(it - roles_.begin());
}

Partition Partition::make(std::size_t n, std::vector<std::vector<VertexId>> parts) {
    Partition p;
    p.part_of_.assign(n, n);  // n marks "unassigned"
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].empty())
            throw PartitionError("part " + std::to_string(k) + " is empty");
        for (VertexId v : parts[k]) {
            if (v >= n)
                throw PartitionError("vertex " + std::to_string(v) + " out of range");
            if (p.part_of_[v] != n)
                throw PartitionError("vertex " + std::to_string(v) + " lies in two parts");
            p.part_of_[v] = k;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (p.part_of_[v] == n)
            throw PartitionError("vertex " + std::to_string(v) + " is not covered");
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::vector<VertexId>> parts(n);
    for (std::size_t v = 0; v < n; ++v)
        parts[v] = {static_cast<VertexId>(v)};
    return make(n, std::move(parts));
}

Partition Partition::whole(std::size_t n) {
    if (n == 0)
        return make(0, {});
    std::vector<VertexId> all(n);
    for (std::size_t v = 0; v < n; ++v)
        all[v] = static_cast<VertexId>(v);
    return make(n, {std::move(all)});
}

Trigraph make_trigraph(std::size_t n, std::span<const Edge> black, std::span<const Edge> red) {
    return Trigraph::make(n, black, red);
}

std::size_t red_degree(const Trigraph &g, VertexId v) {
    if (v >= g.size())
        throw RangeError("vertex " + std::to_string(v) + " out of range");
    return g.red_neighbors(v).size();
}

std::size_t max_red_degree(const Trigraph &g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.size(); ++v)
        best = std::max(best, g.red_neighbors(v).size());
    return best;
}

Trigraph quotient(const Trigraph &g, const Partition &p) {
    if (p.vertex_count() != g.size())
        throw PartitionError("partition covers " + std::to_string(p.vertex_count()) +
                             " vertices, trigraph has " + std::to_string(g.size()));

    // Census of black and red cross pairs per pair of parts.
    struct Census {
        std::size_t black = 0;
        std::size_t red = 0;
    };
    std::map<std::pair<std::size_t, std::size_t>, Census> census;
    auto key = [&](const Edge &e) {
        std::size_t a = p.part_of(e.u), b = p.part_of(e.v);
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (const Edge &e : g.black_edges()) {
        auto k = key(e);
        if (k.first != k.second)
            ++census[k].black;
    }
    for (const Edge &e : g.red_edges()) {
        auto k = key(e);
        if (k.first != k.second)
            ++census[k].red;
    }

    std::vector<Edge> black, red;
    for (const auto &[k, c] : census) {
        std::size_t total = p.parts()[k.first].size() * p.parts()[k.second].size();
        Edge e(static_cast<VertexId>(k.first), static_cast<VertexId>(k.second));
        if (c.red == 0 && c.black == total)
            black.push_back(e);
        else
            red.push_back(e);
    }
    return Trigraph::make(p.part_count(), black, red);
}

Trigraph redify(const Trigraph &g) {
    std::vector<Edge> red = g.red_edges();
    red.insert(red.end(), g.black_edges().begin(), g.black_edges().end());
    return Trigraph::make(g.size(), {}, red).with_roles(g.roles());
}

}  // namespace twwcol
