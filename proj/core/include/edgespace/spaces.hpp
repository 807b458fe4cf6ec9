#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgespace/graph.hpp"
#include "edgespace/menger.hpp"
#include "edgespace/types.hpp"

namespace edgespace {

// The six subspaces of the edge space. On a finite graph the three cycle tags
// coincide and the three cut tags coincide; the distinction matters on
// windows of infinite graphs, where membership checks use window semantics.
enum class SpaceTag { c_fin, c_top, c_alg, cuts, cuts_fin, cuts_skew };

std::string to_string(SpaceTag tag);                      // "C_fin", "B_sk", ...
std::optional<SpaceTag> parse_space_tag(const std::string& name);

enum class PartKind { circuit, bond, boundary_path };

struct DecompositionPart {
  EdgeSet edges;
  PartKind kind;
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  bool disjoint = false;  // parts promised pairwise edge-disjoint
};

// Fundamental circuits of the deterministic spanning tree; dimension
// |E| - |V| + 1. Throws std::invalid_argument if g is disconnected.
Basis cycle_space_basis(const MultiGraph& g);

// Fundamental cuts of the same spanning tree; dimension |V| - 1.
Basis cut_space_basis(const MultiGraph& g);

// All minimal nonempty cuts, deduplicated and sorted. Brute force over
// bipartitions; throws bound_exceeded above limits.vertex_bound.
std::vector<EdgeSet> enumerate_bonds(const MultiGraph& g,
                                     const Limits& limits = {});

// Edge sets of all cycles, including 2-edge circuits from parallel pairs.
// With max_len == 0 the whole graph is scanned (vertex bound applies);
// max_len > 0 caps the circuit edge length and lifts the vertex bound.
std::vector<EdgeSet> enumerate_circuits(const MultiGraph& g,
                                        const Limits& limits = {},
                                        int max_len = 0);

// True iff the edge set is a circuit: connected with every vertex of degree 2.
bool is_circuit(const MultiGraph& g, const EdgeSet& F);

// Writes F, a member of C_fin or B, as a GF(2) sum of minimal nonzero
// elements (circuits resp. bonds), obtained by repeatedly extracting a
// minimal element inside the remainder. Parts sum to F (here they are in
// fact disjoint). Throws std::invalid_argument if F is outside the space.
Decomposition peel_minimal_decomposition(SpaceTag space, const MultiGraph& g,
                                         const EdgeSet& F);

// Splits a cut into pairwise disjoint bonds whose union is the cut.
// Throws std::invalid_argument if F is not a cut.
Decomposition decompose_cut_into_bonds(const MultiGraph& g, const EdgeSet& F);

// Splits a set with all vertex degrees even into pairwise disjoint circuits;
// deterministic (each extracted circuit passes through the least unused
// edge). Throws std::invalid_argument on an odd-degree vertex.
Decomposition decompose_even_set_into_circuits(const MultiGraph& g,
                                               const EdgeSet& D);

// Window variant: interior vertices must have even degree in D; boundary
// vertices may be odd. Parts are circuits and boundary-to-boundary paths
// (finite shadows of double rays), pairwise disjoint, union D.
Decomposition decompose_into_circuits_and_double_rays(const MultiGraph& g,
                                                      const EdgeSet& D);

struct MembershipResult {
  bool member = false;
  SpaceTag requested;
  std::string note;  // collapse / approximation comments
  std::optional<std::vector<std::size_t>> coordinates;  // span route
  std::optional<VertexId> odd_vertex;                   // degree route
  std::optional<EdgeSet> violating_cut;                 // C_top window route
};

// Membership of D in the tagged space of g (finite graph or window):
//  - C_alg: every interior vertex has even D-degree;
//  - C_fin / B (and B_fin, B_sk, which collapse): span membership;
//  - C_top on a window: D orthogonal to every cut whose finite side is
//    connected, interior, and of size <= limits.subset_size_bound.
MembershipResult membership(SpaceTag tag, const MultiGraph& g,
                            const EdgeSet& D, const Limits& limits = {});

// Connected sets of interior vertices of size <= max_size, each sorted,
// enumerated deterministically (ascending least vertex, then extension).
std::vector<std::vector<VertexId>> interior_connected_subsets(
    const MultiGraph& g, int max_size);

}  // namespace edgespace
