#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tbase/geometry.hpp"

namespace tbase {

using NodeId = int;

// Corner order is the authoritative cyclic order; diagonals are
// (corner 0, corner 2) and (corner 1, corner 3).
struct Quad {
  std::array<NodeId, 4> corners;
};

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quad mesh with node positions (planar meshes carry z = 0), per-node
// boundary flags and node -> incident-quad adjacency. Adjacency and
// boundary flags are populated by build_adjacency / classify_boundary.
struct QuadMesh {
  std::vector<Vec3> positions;
  std::vector<Quad> quads;
  std::vector<char> boundary;
  std::vector<std::vector<int>> incident;

  int node_count() const { return static_cast<int>(positions.size()); }
  int quad_count() const { return static_cast<int>(quads.size()); }
  bool has_adjacency() const { return incident.size() == positions.size(); }
};

// The ring of quads around one node, in cyclic order when it closes.
struct FanInfo {
  NodeId node = -1;
  std::vector<int> incident_quads;
  bool closed = false;
};

// Populates mesh.incident from the quad list. Throws MeshError on
// out-of-range node ids (naming the quad) or repeated corners.
void build_adjacency(QuadMesh& mesh);

// Sets the boundary flag of every node lying on an edge used by exactly
// one quad. Throws MeshError if any edge is used by more than two quads.
void classify_boundary(QuadMesh& mesh);

// Normalizes winding. Planar meshes get positive signed area per quad;
// surface meshes get consistent winding across shared edges, flipped so
// the area-weighted normal of each component points towards +z.
void orient_ccw(QuadMesh& mesh);

// Arithmetic mean over the set of unique edges. Throws on an empty mesh.
double average_edge_length(const QuadMesh& mesh);

FanInfo fan_info(const QuadMesh& mesh, NodeId node);

bool is_planar(const QuadMesh& mesh);

double signed_area_xy(const QuadMesh& mesh, const Quad& q);

// Unique undirected edges as (min, max) pairs, sorted.
std::vector<std::pair<NodeId, NodeId>> unique_edges(const QuadMesh& mesh);

// Nodes sharing an edge with `node`, deduplicated, in index order.
std::vector<NodeId> edge_neighbors(const QuadMesh& mesh, NodeId node);

// Builds adjacency, checks manifoldness, classifies the boundary and
// normalizes winding in one call.
void finalize_mesh(QuadMesh& mesh);

}  // namespace tbase
