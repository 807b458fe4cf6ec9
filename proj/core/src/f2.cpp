#include "edgespace/f2.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace edgespace {

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) {
    throw std::invalid_argument("EdgeSet: duplicate edge id " +
                                std::to_string(*dup));
  }
}

EdgeSet EdgeSet::from_sorted(std::vector<EdgeId> ids) {
  assert(std::is_sorted(ids.begin(), ids.end()));
  assert(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  EdgeSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

EdgeId EdgeSet::min_id() const {
  assert(!ids_.empty());
  return ids_.front();
}

std::size_t EdgeSet::intersection_size(const EdgeSet& other) const {
  std::size_t n = 0, i = 0, j = 0;
  const auto& a = ids_;
  const auto& b = other.ids_;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string EdgeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) os << ", ";
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

EdgeSet symmetric_sum(const std::vector<EdgeSet>& sets) {
  EdgeSet acc;
  for (const auto& s : sets) acc ^= s;
  return acc;
}

bool is_orthogonal(const EdgeSet& a, const EdgeSet& b) {
  return a.intersection_size(b) % 2 == 0;
}

namespace {

// Shared reduction: reduce v against REF rows keyed by leading id, tracking
// which original basis vectors were folded in.
struct Reduction {
  EdgeSet residual;
  std::vector<std::size_t> combo;
};

struct RefState {
  struct Row {
    EdgeSet row;
    std::vector<std::size_t> combo;
  };
  std::map<EdgeId, Row> by_leading;

  Reduction reduce(const EdgeSet& v) const {
    Reduction r{v, {}};
    while (!r.residual.empty()) {
      auto it = by_leading.find(r.residual.min_id());
      if (it == by_leading.end()) break;
      r.residual ^= it->second.row;
      r.combo = detail::xor_merge(r.combo, it->second.combo);
    }
    return r;
  }

  // Install a fully reduced nonzero residual as the row owned by basis
  // index `idx`.
  void install(Reduction r, std::size_t idx) {
    assert(!r.residual.empty());
    EdgeId lead = r.residual.min_id();
    r.combo = detail::xor_merge(r.combo, {idx});
    by_leading.emplace(lead, Row{std::move(r.residual), std::move(r.combo)});
  }
};

}  // namespace

Basis::Basis(std::vector<EdgeSet> vectors, EdgeSet ambient)
    : vectors_(std::move(vectors)), ambient_(std::move(ambient)) {
  RefState state;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (!vectors_[i].is_subset_of(ambient_)) {
      throw std::invalid_argument("Basis: vector " + std::to_string(i) +
                                  " has edges outside the ambient set");
    }
    Reduction r = state.reduce(vectors_[i]);
    if (r.residual.empty()) {
      throw std::invalid_argument("Basis: vectors are linearly dependent (index " +
                                  std::to_string(i) + ")");
    }
    state.install(std::move(r), i);
  }
  ref_.reserve(state.by_leading.size());
  for (auto& [lead, row] : state.by_leading) {
    ref_.push_back(RefRow{std::move(row.row), std::move(row.combo)});
  }
}

Basis gaussian_basis(const std::vector<EdgeSet>& vectors, EdgeSet ambient) {
  RefState state;
  std::vector<EdgeSet> kept;
  for (const auto& v : vectors) {
    if (!v.is_subset_of(ambient)) {
      throw std::invalid_argument(
          "gaussian_basis: vector has edges outside the ambient set");
    }
    Reduction r = state.reduce(v);
    if (r.residual.empty()) continue;  // dependent on earlier vectors
    state.install(std::move(r), kept.size());
    kept.push_back(v);
  }
  return Basis(std::move(kept), std::move(ambient));
}

std::optional<std::vector<std::size_t>> in_span(const Basis& basis,
                                                const EdgeSet& v) {
  if (!v.is_subset_of(basis.ambient())) {
    throw std::invalid_argument("in_span: v has edges outside the ambient set");
  }
  EdgeSet residual = v;
  std::vector<std::size_t> combo;
  while (!residual.empty()) {
    EdgeId lead = residual.min_id();
    auto it = std::lower_bound(
        basis.ref_.begin(), basis.ref_.end(), lead,
        [](const Basis::RefRow& r, EdgeId l) { return r.row.min_id() < l; });
    if (it == basis.ref_.end() || it->row.min_id() != lead) return std::nullopt;
    residual ^= it->row;
    combo = detail::xor_merge(combo, it->combo);
  }
  return combo;
}

Basis orthogonal_complement(const Basis& basis) {
  const auto& ambient = basis.ambient().ids();

  // Row-reduce a copy of the basis to RREF over the ambient columns.
  std::vector<EdgeSet> rows = basis.vectors();
  std::vector<std::pair<EdgeId, std::size_t>> pivots;  // (column, row index)
  std::size_t next = 0;
  for (EdgeId col : ambient) {
    std::size_t found = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (rows[i].contains(col)) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].contains(col)) rows[i] ^= rows[next];
    }
    pivots.emplace_back(col, next);
    ++next;
  }
  assert(next == rows.size());  // basis vectors are independent

  std::vector<EdgeSet> complement;
  for (EdgeId col : ambient) {
    bool is_pivot = std::any_of(pivots.begin(), pivots.end(),
                                [&](const auto& p) { return p.first == col; });
    if (is_pivot) continue;
    std::vector<EdgeId> vec{col};
    for (const auto& [pcol, prow] : pivots) {
      if (rows[prow].contains(col)) vec.push_back(pcol);
    }
    complement.emplace_back(std::move(vec));
  }
  return Basis(std::move(complement), basis.ambient());
}

}  // namespace edgespace
