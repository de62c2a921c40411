#include "mgd/diagram.hpp"

#include <algorithm>
#include <map>

namespace mgd {

MarkedGraphDiagram::Builder& MarkedGraphDiagram::Builder::add_vertex(
    VertexKind kind, const std::array<int, 4>& labels) {
  kinds_.push_back(kind);
  labels_.push_back(labels);
  return *this;
}

MarkedGraphDiagram::Builder& MarkedGraphDiagram::Builder::add_loop(int face_tag) {
  loops_.push_back(FreeLoop{face_tag});
  return *this;
}

MarkedGraphDiagram::Builder& MarkedGraphDiagram::Builder::orient(int label,
                                                                 bool first_to_second) {
  orient_.emplace_back(label, first_to_second);
  return *this;
}

MarkedGraphDiagram MarkedGraphDiagram::Builder::build() const {
  const int n = static_cast<int>(kinds_.size());
  std::vector<DartId> alpha(static_cast<std::size_t>(4) * n, -1);
  // label -> darts carrying it, in add order
  std::map<int, std::vector<DartId>> occurrences;
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) {
      occurrences[labels_[v][s]].push_back(dart(v, s));
    }
  }
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() != 2) {
      throw MgdError("arc label " + std::to_string(label) + " occurs " +
                     std::to_string(darts.size()) + " times; expected exactly 2");
    }
    alpha[darts[0]] = darts[1];
    alpha[darts[1]] = darts[0];
  }
  MarkedGraphDiagram d(kinds_, std::move(alpha), loops_);
  if (!orient_.empty()) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(4) * n, 0);
    for (const auto& [label, fwd] : orient_) {
      auto it = occurrences.find(label);
      if (it == occurrences.end()) {
        throw MgdError("orientation references unknown arc label " + std::to_string(label));
      }
      const DartId first = it->second[0];
      const DartId second = it->second[1];
      // Directed toward the head end: in(head) = 1.
      in[fwd ? second : first] = 1;
      in[fwd ? first : second] = 0;
    }
    d.set_orientation(std::move(in));
  }
  return d;
}

MarkedGraphDiagram::MarkedGraphDiagram(std::vector<VertexKind> kinds,
                                       std::vector<DartId> alpha,
                                       std::vector<FreeLoop> loops)
    : kinds_(std::move(kinds)), alpha_(std::move(alpha)), loops_(std::move(loops)) {
  if (alpha_.size() != kinds_.size() * 4) {
    throw InternalError("alpha size does not match vertex count");
  }
  for (DartId d = 0; d < static_cast<DartId>(alpha_.size()); ++d) {
    if (alpha_[d] < 0 || alpha_[d] >= static_cast<DartId>(alpha_.size()) ||
        alpha_[d] == d || alpha_[alpha_[d]] != d) {
      throw InternalError("alpha is not a fixed-point-free involution");
    }
  }
}

void MarkedGraphDiagram::set_orientation(std::optional<std::vector<std::uint8_t>> o) {
  if (o && o->size() != alpha_.size()) {
    throw InternalError("orientation size mismatch");
  }
  orientation_ = std::move(o);
}

bool MarkedGraphDiagram::loop_tags_equal(const MarkedGraphDiagram& b) const {
  if (loops_.size() != b.loops_.size()) return false;
  for (std::size_t i = 0; i < loops_.size(); ++i) {
    if (loops_[i].face_tag != b.loops_[i].face_tag) return false;
  }
  return true;
}

int MarkedGraphDiagram::crossing_count() const {
  return static_cast<int>(
      std::count(kinds_.begin(), kinds_.end(), VertexKind::kCrossing));
}

int MarkedGraphDiagram::marked_count() const {
  return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), VertexKind::kMarked));
}

namespace {

// Rewires a diagram through a per-dart relocation map.
Diagram remap(const Diagram& d, const std::vector<DartId>& new_pos,
              std::vector<VertexKind> kinds) {
  std::vector<DartId> alpha(d.dart_count(), -1);
  for (DartId x = 0; x < d.dart_count(); ++x) {
    alpha[new_pos[x]] = new_pos[d.alpha(x)];
  }
  Diagram out(std::move(kinds), std::move(alpha), d.loops());
  if (d.orientation()) {
    std::vector<std::uint8_t> in(d.dart_count(), 0);
    for (DartId x = 0; x < d.dart_count(); ++x) in[new_pos[x]] = (*d.orientation())[x];
    out.set_orientation(std::move(in));
  }
  return out;
}

}  // namespace

Diagram mirror(const Diagram& d) {
  std::vector<DartId> new_pos(d.dart_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      // Crossing: slot s -> (4-s)%4 keeps slot 0 fixed and reverses rotation.
      // Marked: slot s -> 3-s reverses rotation and keeps marker pairs intact.
      const int t = d.kind(v) == VertexKind::kCrossing ? ((4 - s) & 3) : (3 - s);
      new_pos[Diagram::dart(v, s)] = Diagram::dart(v, t);
    }
  }
  // remap carries any edge directions along; reflection keeps them meaningful.
  return remap(d, new_pos, d.kinds());
}

Diagram crossing_change(const Diagram& d, int vertex) {
  if (d.kind(vertex) != VertexKind::kCrossing) {
    throw MgdError("crossing_change: vertex is not a crossing");
  }
  std::vector<DartId> new_pos(d.dart_count());
  for (DartId x = 0; x < d.dart_count(); ++x) new_pos[x] = x;
  for (int s = 0; s < 4; ++s) {
    // The edge end formerly at slot s re-attaches at slot (s+1)%4: cyclic
    // order preserved, over/under diagonals exchanged.
    new_pos[Diagram::dart(vertex, s)] = Diagram::dart(vertex, (s + 1) & 3);
  }
  Diagram out = remap(d, new_pos, d.kinds());
  out.clear_orientation();
  return out;
}

Diagram permute_vertices(const Diagram& d, const std::vector<int>& perm) {
  std::vector<DartId> new_pos(d.dart_count());
  std::vector<VertexKind> kinds(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    kinds[perm[v]] = d.kind(v);
    for (int s = 0; s < 4; ++s) {
      new_pos[Diagram::dart(v, s)] = Diagram::dart(perm[v], s);
    }
  }
  return remap(d, new_pos, std::move(kinds));
}

}  // namespace mgd
