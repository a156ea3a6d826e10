#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pachgap {

// k-partite k-uniform hypergraph: every edge takes exactly one vertex from
// each class, addressed by position within the class.
struct MultipartiteHypergraph {
    std::vector<std::vector<std::string>> labels; // per class, vertex names
    std::vector<std::vector<int>> edges;          // per edge, one index per class

    int parts() const { return int(labels.size()); }
    int class_size(int c) const { return int(labels[c].size()); }
    long long edge_count() const { return (long long)edges.size(); }

    bool has_edge(const std::vector<int>& e) const;
    void finalize(); // validate shape, sort edge codes for lookup

  private:
    std::vector<unsigned long long> codes_; // mixed radix, sorted
    unsigned long long code_of(const std::vector<int>& e) const;
};

MultipartiteHypergraph make_hypergraph(const std::vector<int>& class_sizes);

// Text form:
//   classes a0 a1 | b0 b1 b2
//   edge a0 b2
// Labels are unique across classes; # starts a comment line.
MultipartiteHypergraph parse_hypergraph_text(const std::string& text);
std::string hypergraph_text(const MultipartiteHypergraph& H);

struct HBox {
    int m = 0;
    std::vector<std::vector<int>> parts; // per class, ascending vertex indices
};

// Complete m-box search. Bipartite base case scans m-subsets of the second
// class for m common neighbors; more classes recurse on the common link of an
// m-subset of the last class. Exact and deterministic (lex-first witness).
std::optional<HBox> extract_box(const MultipartiteHypergraph& H, int m);

// Largest m with a complete box, by ascending extract_box calls. Guarded to
// class sizes <= 6 and at most 3 classes.
HBox max_box_exact(const MultipartiteHypergraph& H);

// Recheck: every transversal of the given parts is an edge.
bool box_complete(const MultipartiteHypergraph& H, const std::vector<std::vector<int>>& parts);

} // namespace pachgap
