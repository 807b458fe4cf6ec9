#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgespace/types.hpp"

namespace edgespace {

namespace detail {

// Symmetric difference of two sorted, duplicate-free vectors.
template <typename T>
std::vector<T> xor_merge(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

}  // namespace detail

// A finite set of edge identities, i.e. a vector over GF(2) indexed by edges.
// Stored sorted ascending; iteration order is always ascending identity.
class EdgeSet {
 public:
  EdgeSet() = default;
  // Sorts the input; throws std::invalid_argument on duplicate ids.
  explicit EdgeSet(std::vector<EdgeId> ids);

  static EdgeSet from_sorted(std::vector<EdgeId> ids);  // trusted input

  const std::vector<EdgeId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId e) const;
  EdgeId min_id() const;  // requires non-empty

  std::size_t intersection_size(const EdgeSet& other) const;
  bool is_subset_of(const EdgeSet& other) const;

  EdgeSet& operator^=(const EdgeSet& other) {
    ids_ = detail::xor_merge(ids_, other.ids_);
    return *this;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }

  auto operator<=>(const EdgeSet&) const = default;

  std::string to_string() const;  // "{1, 4, 7}"

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

 private:
  std::vector<EdgeId> ids_;
};

// GF(2) sum (symmetric difference) of a finite family. Empty family -> empty set.
EdgeSet symmetric_sum(const std::vector<EdgeSet>& sets);

// Two edge sets are orthogonal iff their intersection has even cardinality.
bool is_orthogonal(const EdgeSet& a, const EdgeSet& b);

// An independent family of edge sets spanning a subspace of the edge space of
// `ambient`. Construction validates independence and containment; reduction
// state for membership queries is kept alongside the vectors.
//
// Elimination is keyed on the smallest edge identity of each vector, so all
// derived data is deterministic given the input order.
class Basis {
 public:
  // Throws std::invalid_argument if the vectors are dependent or leave ambient.
  Basis(std::vector<EdgeSet> vectors, EdgeSet ambient);

  const std::vector<EdgeSet>& vectors() const { return vectors_; }
  const EdgeSet& ambient() const { return ambient_; }
  std::size_t dimension() const { return vectors_.size(); }

 private:
  struct RefRow {
    EdgeSet row;                      // reduced vector, distinct leading id
    std::vector<std::size_t> combo;   // basis indices summing to `row`
  };

  std::vector<EdgeSet> vectors_;
  EdgeSet ambient_;
  std::vector<RefRow> ref_;  // sorted by leading id

  friend std::optional<std::vector<std::size_t>> in_span(const Basis&,
                                                         const EdgeSet&);
  friend Basis gaussian_basis(const std::vector<EdgeSet>&, EdgeSet);
};

// Deterministically selects an independent subset of `vectors` (earliest
// vectors win) spanning the same subspace.
Basis gaussian_basis(const std::vector<EdgeSet>& vectors, EdgeSet ambient);

// Coordinates of v in the basis, as the set of basis indices whose sum is v,
// or nullopt when v is outside the span. Requires v inside the ambient.
std::optional<std::vector<std::size_t>> in_span(const Basis& basis,
                                                const EdgeSet& v);

// Basis of { w inside ambient : w orthogonal to every basis vector }.
// dim(span) + dim(complement) == |ambient|.
Basis orthogonal_complement(const Basis& basis);

}  // namespace edgespace
