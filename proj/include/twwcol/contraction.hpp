#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twwcol/trigraph.hpp"

namespace twwcol {

// Merge of two live parts, each named by its representative: the smallest
// vertex id it contains. The merged part is represented by min(a, b).
struct MergeStep {
    VertexId a = 0;
    VertexId b = 0;

    friend bool operator==(const MergeStep &, const MergeStep &) = default;
};

// Merge script starting from the singleton partition of an n-vertex graph.
// Full when it has n-1 steps (one part at the end), partial otherwise.
// Liveness of the named parts is checked on replay, not here.
class PartitionSequence {
public:
    PartitionSequence() = default;
    PartitionSequence(std::size_t n, std::vector<MergeStep> steps)
        : n_(n), steps_(std::move(steps)) {}

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<MergeStep> &steps() const noexcept { return steps_; }
    bool is_full() const noexcept { return n_ == 0 ? steps_.empty() : steps_.size() == n_ - 1; }

    friend bool operator==(const PartitionSequence &, const PartitionSequence &) = default;

private:
    std::size_t n_ = 0;
    std::vector<MergeStep> steps_;
};

struct WidthProfile {
    std::size_t initial_width = 0;            // max red degree of the input
    std::vector<std::size_t> per_step_width;  // after each step
    std::size_t overall_width = 0;

    // 0 when the initial trigraph attains the overall width, otherwise the
    // 1-based index of the first step that does.
    std::size_t peak_step() const;
};

struct SequenceVerdict {
    bool within_bound = false;
    WidthProfile profile;
};

// Quotient of a base trigraph under a partition that is coarsened one merge
// at a time. For every pair of live parts it keeps the number of black and
// red base edges crossing them; a merge only touches pairs incident to the
// merged part.
class ContractionState {
public:
    explicit ContractionState(const Trigraph &g);

    // a and b must be representatives of distinct live parts.
    void merge(VertexId a, VertexId b);

    std::size_t vertex_count() const noexcept { return members_.size(); }
    std::size_t part_count() const noexcept { return live_; }
    std::size_t max_red_degree() const noexcept { return max_degree_; }
    std::size_t red_degree(VertexId rep) const;

    bool is_representative(VertexId v) const;
    VertexId representative(VertexId v) const;
    EdgeColor color(VertexId rep_a, VertexId rep_b) const;

    // Live parts ordered by representative, and the matching quotient.
    Partition partition() const;
    Trigraph quotient() const;

private:
    struct Census {
        std::size_t black = 0;
        std::size_t red = 0;
    };

    bool is_red(VertexId p, VertexId q, const Census &c) const;
    void set_degree(VertexId rep, std::size_t degree);
    void retire_degree(VertexId rep);

    std::vector<VertexId> owner_;                  // vertex -> representative
    std::vector<std::vector<VertexId>> members_;   // representative -> members
    std::vector<std::unordered_map<VertexId, Census>> cross_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> degree_histogram_;
    std::size_t max_degree_ = 0;
    std::size_t live_ = 0;
};

WidthProfile replay(const Trigraph &g, const PartitionSequence &seq);

// Requires a full sequence.
SequenceVerdict verify_d_sequence(const Trigraph &g, const PartitionSequence &seq, std::size_t d);

// Turns merges of arbitrary member vertices into the normalized
// representative form. Each named vertex stands for its current part.
PartitionSequence sequence_from_vertex_merges(std::size_t n,
                                              std::span<const std::pair<VertexId, VertexId>> merges);

}  // namespace twwcol
