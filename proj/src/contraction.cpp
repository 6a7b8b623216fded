#include "twwcol/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twwcol/errors.hpp"

namespace twwcol {

std::size_t WidthProfile::peak_step() const {
    if (initial_width == overall_width)
        return 0;
    auto it = std::find(per_step_width.begin(), per_step_width.end(), overall_width);
    return static_cast<std::size_t>(it - per_step_width.begin()) + 1;
}

ContractionState::ContractionState(const Trigraph &g)
    : owner_(g.size()),
      members_(g.size()),
      cross_(g.size()),
      degree_(g.size(), 0),
      degree_histogram_(1, g.size()),
      live_(g.size()) {
    for (VertexId v = 0; v < g.size(); ++v) {
        owner_[v] = v;
        members_[v] = {v};
    }
    for (const Edge &e : g.black_edges()) {
        cross_[e.u][e.v].black = 1;
        cross_[e.v][e.u].black = 1;
    }
    for (const Edge &e : g.red_edges()) {
        cross_[e.u][e.v].red = 1;
        cross_[e.v][e.u].red = 1;
    }
    for (VertexId v = 0; v < g.size(); ++v)
        set_degree(v, g.red_neighbors(v).size());
}

bool ContractionState::is_red(VertexId p, VertexId q, const Census &c) const {
    std::size_t total = members_[p].size() * members_[q].size();
    return c.red > 0 || (c.black > 0 && c.black < total);
}

void ContractionState::set_degree(VertexId rep, std::size_t degree) {
    --degree_histogram_[degree_[rep]];
    if (degree >= degree_histogram_.size())
        degree_histogram_.resize(degree + 1, 0);
    ++degree_histogram_[degree];
    degree_[rep] = degree;
    max_degree_ = std::max(max_degree_, degree);
    while (max_degree_ > 0 && degree_histogram_[max_degree_] == 0)
        --max_degree_;
}

void ContractionState::retire_degree(VertexId rep) {
    set_degree(rep, 0);
    --degree_histogram_[0];
}

bool ContractionState::is_representative(VertexId v) const {
    return v < owner_.size() && owner_[v] == v;
}

VertexId ContractionState::representative(VertexId v) const {
    if (v >= owner_.size())
        throw RangeError("vertex " + std::to_string(v) + " out of range");
    return owner_[v];
}

std::size_t ContractionState::red_degree(VertexId rep) const {
    if (!is_representative(rep))
        throw SequenceError("vertex " + std::to_string(rep) + " does not represent a live part");
    return degree_[rep];
}

EdgeColor ContractionState::color(VertexId a, VertexId b) const {
    if (!is_representative(a) || !is_representative(b))
        throw SequenceError("color query on a dead part");
    auto it = cross_[a].find(b);
    if (a == b || it == cross_[a].end())
        return EdgeColor::None;
    return is_red(a, b, it->second) ? EdgeColor::Red : EdgeColor::Black;
}

void ContractionState::merge(VertexId a, VertexId b) {
    if (a == b)
        throw SequenceError("merge of part " + std::to_string(a) + " with itself");
    if (!is_representative(a) || !is_representative(b))
        throw SequenceError("merge names a dead part (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");

    const VertexId keep = std::min(a, b);
    const VertexId gone = std::max(a, b);

    // Red status of every pair touching keep or gone, before the merge.
    std::vector<std::pair<VertexId, int>> old_red;  // neighbor -> #red links lost
    old_red.reserve(cross_[keep].size() + cross_[gone].size());
    for (VertexId side : {keep, gone})
        for (const auto &[q, c] : cross_[side])
            if (q != keep && q != gone)
                old_red.emplace_back(q, is_red(side, q, c) ? 1 : 0);

    cross_[keep].erase(gone);
    cross_[gone].erase(keep);
    for (const auto &[q, c] : cross_[gone]) {
        Census &mine = cross_[keep][q];
        mine.black += c.black;
        mine.red += c.red;
        cross_[q].erase(gone);
        cross_[q][keep] = mine;
    }
    cross_[gone].clear();

    for (VertexId v : members_[gone])
        owner_[v] = keep;
    members_[keep].insert(members_[keep].end(), members_[gone].begin(), members_[gone].end());
    members_[gone].clear();
    members_[gone].shrink_to_fit();
    retire_degree(gone);
    --live_;

    std::unordered_map<VertexId, long> delta;
    for (const auto &[q, lost] : old_red)
        delta[q] -= lost;
    std::size_t keep_degree = 0;
    for (const auto &[q, c] : cross_[keep]) {
        if (is_red(keep, q, c)) {
            ++keep_degree;
            ++delta[q];
        }
    }
    for (const auto &[q, d] : delta)
        if (d != 0)
            set_degree(q, static_cast<std::size_t>(static_cast<long>(degree_[q]) + d));
    set_degree(keep, keep_degree);
}

Partition ContractionState::partition() const {
    std::vector<std::vector<VertexId>> parts;
    parts.reserve(live_);
    for (VertexId v = 0; v < members_.size(); ++v) {
        if (owner_[v] != v)
            continue;
        auto part = members_[v];
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return Partition::make(members_.size(), std::move(parts));
}

Trigraph ContractionState::quotient() const {
    std::vector<std::size_t> index(members_.size(), 0);
    std::size_t next = 0;
    for (VertexId v = 0; v < members_.size(); ++v)
        if (owner_[v] == v)
            index[v] = next++;

    std::vector<Edge> black, red;
    for (VertexId p = 0; p < members_.size(); ++p) {
        if (owner_[p] != p)
            continue;
        for (const auto &[q, c] : cross_[p]) {
            if (q < p)
                continue;
            Edge e(static_cast<VertexId>(index[p]), static_cast<VertexId>(index[q]));
            (is_red(p, q, c) ? red : black).push_back(e);
        }
    }
    return Trigraph::make(next, black, red);
}

WidthProfile replay(const Trigraph &g, const PartitionSequence &seq) {
    if (seq.vertex_count() != g.size())
        throw SequenceError("sequence is for " + std::to_string(seq.vertex_count()) +
                            " vertices, trigraph has " + std::to_string(g.size()));
    ContractionState state(g);
    WidthProfile profile;
    profile.initial_width = state.max_red_degree();
    profile.overall_width = profile.initial_width;
    profile.per_step_width.reserve(seq.steps().size());
    std::size_t index = 0;
    for (const MergeStep &step : seq.steps()) {
        ++index;
        try {
            state.merge(step.a, step.b);
        } catch (const SequenceError &e) {
            throw SequenceError("step " + std::to_string(index) + ": " + e.what());
        }
        profile.per_step_width.push_back(state.max_red_degree());
        profile.overall_width = std::max(profile.overall_width, state.max_red_degree());
    }
    return profile;
}

SequenceVerdict verify_d_sequence(const Trigraph &g, const PartitionSequence &seq, std::size_t d) {
    if (!seq.is_full() && seq.steps().size() < g.size())
        throw PartialSequenceError("sequence has " + std::to_string(seq.steps().size()) +
                                   " steps; a full one on " + std::to_string(g.size()) +
                                   " vertices has " + std::to_string(g.size() ? g.size() - 1 : 0));
    SequenceVerdict verdict;
    verdict.profile = replay(g, seq);
    verdict.within_bound = verdict.profile.overall_width <= d;
    return verdict;
}

PartitionSequence sequence_from_vertex_merges(std::size_t n,
                                              std::span<const std::pair<VertexId, VertexId>> merges) {
    // Union-find whose roots are always the smallest member.
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId v) {
        VertexId root = v;
        while (parent[root] != root)
            root = parent[root];
        while (parent[v] != root) {
            VertexId next = parent[v];
            parent[v] = root;
            v = next;
        }
        return root;
    };

    std::vector<MergeStep> steps;
    steps.reserve(merges.size());
    for (const auto &[x, y] : merges) {
        if (x >= n || y >= n)
            throw SequenceError("merge (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") out of range for n=" + std::to_string(n));
        VertexId rx = find(x), ry = find(y);
        if (rx == ry)
            throw SequenceError("merge (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") names two vertices of the same part");
        VertexId lo = std::min(rx, ry), hi = std::max(rx, ry);
        parent[hi] = lo;
        steps.push_back({lo, hi});
    }
    return PartitionSequence(n, std::move(steps));
}

}  // namespace twwcol
