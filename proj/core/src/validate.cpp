#include "mgd/validate.hpp"

#include <numeric>
#include <string>

#include "planarity_internal.hpp"

namespace mgd {

FaceIndex face_orbits(const Diagram& d) {
  FaceIndex fi;
  fi.face_of_dart.assign(d.dart_count(), -1);
  for (DartId start = 0; start < d.dart_count(); ++start) {
    if (fi.face_of_dart[start] != -1) continue;
    const int f = static_cast<int>(fi.faces.size());
    std::vector<DartId> orbit;
    DartId x = start;
    do {
      fi.face_of_dart[x] = f;
      orbit.push_back(x);
      x = Diagram::sigma(d.alpha(x));  // phi = sigma . alpha
    } while (x != start);
    fi.faces.push_back(std::move(orbit));
  }
  return fi;
}

namespace {

// Connected components of the map: vertices joined whenever an edge links them.
std::vector<int> map_components(const Diagram& d, int* count_out) {
  std::vector<int> comp(d.vertex_count(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int v0 = 0; v0 < d.vertex_count(); ++v0) {
    if (comp[v0] != -1) continue;
    comp[v0] = count;
    stack.push_back(v0);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        const int w = Diagram::vertex_of(d.alpha(Diagram::dart(v, s)));
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (count_out) *count_out = count;
  return comp;
}

bool orientation_bits_consistent(const Diagram& d) {
  const auto& in = *d.orientation();
  for (DartId x = 0; x < d.dart_count(); ++x) {
    if ((in[x] != 0) == (in[d.alpha(x)] != 0)) return false;  // edge needs head+tail
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    const bool i0 = in[Diagram::dart(v, 0)] != 0;
    const bool i1 = in[Diagram::dart(v, 1)] != 0;
    const bool i2 = in[Diagram::dart(v, 2)] != 0;
    const bool i3 = in[Diagram::dart(v, 3)] != 0;
    if (d.kind(v) == VertexKind::kCrossing) {
      // Each strand runs straight through: one end in, the other out.
      if (i0 == i2 || i1 == i3) return false;
    } else {
      // Both resolutions must be coherently oriented: the (0,2) diagonal
      // points one way, the (1,3) diagonal the other.
      if (i0 != i2 || i1 != i3 || i0 == i1) return false;
    }
  }
  return true;
}

}  // namespace

bool planar_quick(const Diagram& d) {
  int comp_count = 0;
  const std::vector<int> comp = map_components(d, &comp_count);
  if (comp_count == 0) return true;
  std::vector<int> f_of(comp_count, 0), v_of(comp_count, 0);
  for (int v = 0; v < d.vertex_count(); ++v) ++v_of[comp[v]];
  std::vector<char> seen(d.dart_count(), 0);
  for (DartId start = 0; start < d.dart_count(); ++start) {
    if (seen[start]) continue;
    DartId x = start;
    do {
      seen[x] = 1;
      x = Diagram::sigma(d.alpha(x));
    } while (x != start);
    ++f_of[comp[Diagram::vertex_of(start)]];
  }
  for (int c = 0; c < comp_count; ++c) {
    // chi = V - E + F with E = 2V (four darts per vertex, two per edge).
    if (f_of[c] - v_of[c] != 2) return false;
  }
  return true;
}

ValidateReport validate(const Diagram& d) {
  ValidateReport r;
  r.vertices = d.vertex_count();
  r.crossings = d.crossing_count();
  r.marked_vertices = d.marked_count();
  r.edges = d.edge_count();
  r.free_loops = static_cast<int>(d.loops().size());

  const FaceIndex fi = face_orbits(d);
  r.faces = static_cast<int>(fi.faces.size());

  int comp_count = 0;
  const std::vector<int> comp = map_components(d, &comp_count);
  r.split_parts = comp_count + r.free_loops;

  std::vector<int> v_of(comp_count, 0), e2_of(comp_count, 0), f_of(comp_count, 0);
  for (int v = 0; v < d.vertex_count(); ++v) ++v_of[comp[v]];
  for (DartId x = 0; x < d.dart_count(); ++x) ++e2_of[comp[Diagram::vertex_of(x)]];
  for (const auto& face : fi.faces) ++f_of[comp[Diagram::vertex_of(face.front())]];

  r.planar = true;
  r.component_genus.resize(comp_count, 0);
  for (int c = 0; c < comp_count; ++c) {
    const int chi = v_of[c] - e2_of[c] / 2 + f_of[c];
    r.component_genus[c] = (2 - chi) / 2;
    if (chi != 2) r.planar = false;
  }

  r.has_orientation = d.orientation().has_value();
  r.orientation_consistent = !r.has_orientation || orientation_bits_consistent(d);
  return r;
}

void validate_or_throw(const Diagram& d) {
  const ValidateReport r = validate(d);
  if (!r.planar) {
    std::string msg = "diagram is not planar; component genus:";
    for (int g : r.component_genus) msg += " " + std::to_string(g);
    throw NonPlanarError(msg, r.component_genus);
  }
  if (r.has_orientation && !r.orientation_consistent) {
    throw OrientationError("stored edge directions are not coherent");
  }
}

}  // namespace mgd
