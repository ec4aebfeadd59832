#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace moore2 {

// Simple undirected graph on vertices 0..n-1. Adjacency is kept both as a
// packed bit matrix (O(1) edge queries, whole-row operations for the
// distance-2 check) and as neighbor lists (O(deg) iteration). Optional
// per-vertex labels record what a vertex stands for (a residue, a
// projective point, a pair). Loops are rejected: every construction in this
// library suppresses them.
class Graph {
 public:
  explicit Graph(int64_t n) : n_(n) {
    if (n <= 0) throw InputError("graph order must be positive");
    words_ = static_cast<size_t>((n + 63) / 64);
    bits_.assign(words_ * static_cast<size_t>(n), 0);
    adj_.resize(static_cast<size_t>(n));
  }

  int64_t order() const { return n_; }
  int64_t edge_count() const { return edges_; }

  void add_edge(int64_t u, int64_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loops are not supported");
    if (adjacent(u, v)) return;
    set_bit(u, v);
    set_bit(v, u);
    adj_[static_cast<size_t>(u)].push_back(static_cast<int32_t>(v));
    adj_[static_cast<size_t>(v)].push_back(static_cast<int32_t>(u));
    ++edges_;
  }

  bool adjacent(int64_t u, int64_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >>
            (static_cast<size_t>(v) % 64)) & 1;
  }

  const std::vector<int32_t>& neighbors(int64_t v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int64_t degree(int64_t v) const { return static_cast<int64_t>(neighbors(v).size()); }

  // Packed adjacency row of v: bit u set iff u ~ v. words_per_row() words.
  const uint64_t* row(int64_t v) const {
    check_vertex(v);
    return bits_.data() + static_cast<size_t>(v) * words_;
  }
  size_t words_per_row() const { return words_; }

  void set_label(int64_t v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<size_t>(n_));
    labels_[static_cast<size_t>(v)] = std::move(label);
  }
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int64_t v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[static_cast<size_t>(v)];
  }

  // Structural self-check: bit matrix symmetric, diagonal clear, neighbor
  // lists consistent with the matrix. Builders call this before returning.
  void validate() const {
    int64_t listed = 0;
    for (int64_t v = 0; v < n_; ++v) {
      if (adjacent(v, v)) throw InternalError("graph has a loop");
      for (int32_t w : adj_[static_cast<size_t>(v)]) {
        if (!adjacent(v, w) || !adjacent(w, v))
          throw InternalError("adjacency matrix disagrees with neighbor lists");
      }
      listed += degree(v);
    }
    if (listed != 2 * edges_) throw InternalError("edge count disagrees with degree sum");
  }

 private:
  int64_t n_;
  size_t words_ = 0;
  int64_t edges_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<std::vector<int32_t>> adj_;
  std::vector<std::string> labels_;

  void check_vertex(int64_t v) const {
    if (v < 0 || v >= n_) throw IndexOutOfRangeError("vertex index out of range");
  }

  void set_bit(int64_t u, int64_t v) {
    bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] |=
        uint64_t{1} << (static_cast<size_t>(v) % 64);
  }
};

}  // namespace moore2
