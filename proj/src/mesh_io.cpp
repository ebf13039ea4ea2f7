#include "tbase/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tbase {

std::string write_mesh_string(const QuadMesh& mesh) {
  std::string out;
  char line[160];
  for (const Vec3& p : mesh.positions) {
    std::snprintf(line, sizeof(line), "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
    out += line;
  }
  for (const Quad& q : mesh.quads) {
    std::snprintf(line, sizeof(line), "f %d %d %d %d\n", q.corners[0] + 1,
                  q.corners[1] + 1, q.corners[2] + 1, q.corners[3] + 1);
    out += line;
  }
  return out;
}

void write_mesh(const std::string& path, const QuadMesh& mesh) {
  std::ofstream f(path);
  if (!f) throw MeshError("cannot open for writing: " + path);
  f << write_mesh_string(mesh);
  if (!f) throw MeshError("write failed: " + path);
}

QuadMesh read_mesh(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MeshError("cannot open mesh file: " + path);
  QuadMesh mesh;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 p;
      if (!(ss >> p.x >> p.y >> p.z))
        throw MeshError(path + ":" + std::to_string(lineno) + ": bad vertex line");
      mesh.positions.push_back(p);
    } else if (tag == "f") {
      int a, b, c, d;
      if (!(ss >> a >> b >> c >> d))
        throw MeshError(path + ":" + std::to_string(lineno) +
                        ": bad face line (quads only)");
      mesh.quads.push_back({{a - 1, b - 1, c - 1, d - 1}});
    }
    // other tags are ignored
  }
  finalize_mesh(mesh);
  return mesh;
}

void write_sidecar(const std::string& path, const QuadMesh& mesh,
                   const std::string& surface_tag) {
  nlohmann::json j;
  j["boundary"] = std::vector<int>(mesh.boundary.begin(), mesh.boundary.end());
  j["surface"] = surface_tag;
  std::ofstream f(path);
  if (!f) throw MeshError("cannot open for writing: " + path);
  f << j.dump(2) << "\n";
}

std::string read_sidecar_surface_tag(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MeshError("cannot open sidecar: " + path);
  nlohmann::json j;
  f >> j;
  return j.value("surface", "none");
}

std::vector<Vec3> read_xyz_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MeshError("cannot open CSV: " + path);
  std::vector<Vec3> pts;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    Vec3 p;
    double* coord[3] = {&p.x, &p.y, &p.z};
    int k = 0;
    bool numeric = true;
    while (k < 3 && std::getline(ss, cell, ',')) {
      try {
        *coord[k] = std::stod(cell);
      } catch (...) {
        numeric = false;
        break;
      }
      ++k;
    }
    if (!numeric) continue;  // header row
    if (k != 3) throw MeshError("bad CSV row in " + path + ": " + line);
    pts.push_back(p);
  }
  return pts;
}

void write_xyz_csv(const std::string& path, const std::vector<Vec3>& points) {
  std::ofstream f(path);
  if (!f) throw MeshError("cannot open for writing: " + path);
  f << "x,y,z\n";
  char line[160];
  for (const Vec3& p : points) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", p.x, p.y, p.z);
    f << line;
  }
}

}  // namespace tbase
