#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "posetdim/graph.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

// Labels: standard_example and kelly use a1..ad, b1..bd, u1.., v1..;
// incidence_poset uses the vertex label (or v<id>) and e_{u,v};
// adjacency_poset uses a<id>, b<id>; boolean_lattice uses {i,j,...}.

/// a_1..a_d get ids 0..d-1, b_1..b_d ids d..2d-1; a_i < b_j iff i != j.
Poset standard_example(int d);

/// Kelly's planar poset on 4d-2 points containing S_d. Ids: a_i = i-1,
/// b_i = d+i-1, u_i = 2d+i-1, v_i = 3d+i-2. Covers: u_i < u_{i+1},
/// v_{j+1} < v_j, a_i < u_i, u_{k-1} < b_k, a_i < v_{i-1}, v_k < b_k.
Poset kelly(int d);

// Vertices keep their ids; edge number i of g.edges() becomes element n+i.
Poset incidence_poset(const Graph& g);

// a_v = v, b_v = n + v; a_u < b_v iff uv is an edge.
Poset adjacency_poset(const Graph& g);

Poset chain(int n);
Poset antichain(int n);
inline constexpr int kBooleanLatticeMax = 4;
Poset boolean_lattice(int n);

/// Random poset for property tests: a uniformly random permutation fixes a
/// topological order and each forward pair is related with probability
/// `density`. Deterministic in `seed`.
Poset random_poset(int n, double density, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph grid_2xk(int k);
Graph petersen_graph();

/// Named graphs: K<n>, C<n>, P<n>, star<k>, grid2x<k>, petersen.
/// Throws ArgumentError on an unknown name or a parameter out of range.
Graph named_graph(const std::string& name);

enum class Family { standard_example, kelly, incidence, adjacency, chain, antichain, boolean_lattice, graph };

struct NamedFamilyId {
  Family family;
  int parameter = 0;
  std::string graph;  // incidence / adjacency / graph: a named graph or a graph file path

  static NamedFamilyId parse(const std::vector<std::string>& args);
  std::string to_string() const;
};

std::variant<Poset, Graph> generate(const NamedFamilyId& id);

}  // namespace posetdim
