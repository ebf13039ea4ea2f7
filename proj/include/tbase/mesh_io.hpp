#pragma once

#include <string>

#include "tbase/mesh.hpp"

namespace tbase {

// Wavefront-style exchange format: `v x y z` vertex lines and
// `f i j k l` quad face lines with 1-based indices; `#` starts a comment.
// Positions are written with 17 significant digits so write/read
// round-trips are exact.

std::string write_mesh_string(const QuadMesh& mesh);
void write_mesh(const std::string& path, const QuadMesh& mesh);

// Reads and finalizes (adjacency, boundary, winding) the mesh.
QuadMesh read_mesh(const std::string& path);

// Optional JSON sidecar carrying per-node boundary flags and a free-form
// surface tag ("none", "paraboloid", "kriging").
void write_sidecar(const std::string& path, const QuadMesh& mesh,
                   const std::string& surface_tag);
std::string read_sidecar_surface_tag(const std::string& path);

// CSV of x,y,z rows (header line optional), used for kriging samples.
std::vector<Vec3> read_xyz_csv(const std::string& path);
void write_xyz_csv(const std::string& path, const std::vector<Vec3>& points);

}  // namespace tbase
