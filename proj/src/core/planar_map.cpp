// Copyright 2026 The stratflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "core/errors.hpp"

namespace stratflow {

PlanarMap PlanarMap::disk(std::size_t n) {
  if (n == 0) throw DomainError("a disk needs at least one boundary vertex");
  PlanarMap m;
  m.rot_.resize(n);
  m.kind_.assign(n, VertexKind::Boundary);
  for (std::size_t k = 0; k < n; ++k) {
    Dart d = static_cast<Dart>(m.src_.size());
    m.src_.push_back(static_cast<VertexId>(k));
    m.src_.push_back(static_cast<VertexId>((k + 1) % n));
    m.boundary_.push_back(d);
  }
  for (std::size_t k = 0; k < n; ++k) {
    m.rot_[k] = {m.boundary_[k], twin(m.boundary_[(k + n - 1) % n])};
  }
  return m;
}

bool PlanarMap::is_boundary_edge(Dart d) const { return (d >> 1) < boundary_.size(); }

std::size_t PlanarMap::position(Dart d) const {
  const auto& r = rot_[src_[d]];
  return static_cast<std::size_t>(std::find(r.begin(), r.end(), d) - r.begin());
}

Dart PlanarMap::next_in_face(Dart d) const {
  Dart t = twin(d);
  const auto& r = rot_[src_[t]];
  std::size_t i = position(t);
  return r[(i + r.size() - 1) % r.size()];
}

std::vector<Dart> PlanarMap::face(Dart d) const {
  std::vector<Dart> out{d};
  for (Dart e = next_in_face(d); e != d; e = next_in_face(e)) out.push_back(e);
  return out;
}

std::vector<std::vector<Dart>> PlanarMap::inner_faces() const {
  std::vector<bool> seen(src_.size(), false);
  for (Dart d : face(twin(boundary_[0]))) seen[d] = true;
  std::vector<std::vector<Dart>> out;
  for (Dart d = 0; d < src_.size(); ++d) {
    if (seen[d]) continue;
    auto f = face(d);
    for (Dart e : f) seen[e] = true;
    out.push_back(std::move(f));
  }
  return out;
}

void PlanarMap::insert_after(VertexId v, Dart after, Dart d) {
  auto& r = rot_[v];
  if (r.empty()) {
    r.push_back(d);
    return;
  }
  auto it = std::find(r.begin(), r.end(), after);
  if (it == r.end()) throw DomainError("corner dart does not leave the vertex");
  r.insert(it + 1, d);
}

Dart PlanarMap::add_edge(Corner a, Corner b) {
  Dart d = static_cast<Dart>(src_.size());
  src_.push_back(a.vertex);
  src_.push_back(b.vertex);
  insert_after(a.vertex, a.after, d);
  insert_after(b.vertex, b.after, twin(d));
  return d;
}

Dart PlanarMap::add_pendant(Corner at, VertexKind kind) {
  VertexId v = static_cast<VertexId>(rot_.size());
  rot_.emplace_back();
  kind_.push_back(kind);
  Dart d = static_cast<Dart>(src_.size());
  src_.push_back(at.vertex);
  src_.push_back(v);
  insert_after(at.vertex, at.after, d);
  rot_[v].push_back(twin(d));
  return d;
}

PlanarMap PlanarMap::transformed(const std::vector<VertexId>& image, bool reverse) const {
  const std::size_t n = boundary_.size();
  if (image.size() != n) throw DomainError("boundary relabeling has the wrong size");
  PlanarMap m;
  m.src_ = src_;
  m.kind_ = kind_;
  m.rot_.resize(rot_.size());
  for (auto& v : m.src_) {
    if (v < n) v = image[v];
  }
  for (VertexId v = 0; v < rot_.size(); ++v) {
    VertexId w = v < n ? image[v] : v;
    m.rot_[w] = rot_[v];
    if (reverse) std::reverse(m.rot_[w].begin(), m.rot_[w].end());
  }
  m.boundary_.assign(n, std::numeric_limits<Dart>::max());
  for (std::size_t k = 0; k < n; ++k) {
    Dart d = boundary_[k];
    if (reverse) {
      m.boundary_[image[(k + 1) % n]] = twin(d);
    } else {
      m.boundary_[image[k]] = d;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    Dart d = m.boundary_[k];
    if (d == std::numeric_limits<Dart>::max() || m.src_[d] != k || m.src_[twin(d)] != (k + 1) % n) {
      throw DomainError("relabeling does not preserve the boundary cycle");
    }
  }
  return m;
}

PlanarMap PlanarMap::with_kinds_swapped() const {
  PlanarMap m = *this;
  for (auto& k : m.kind_) {
    if (k == VertexKind::Sink) k = VertexKind::Source;
    else if (k == VertexKind::Source) k = VertexKind::Sink;
  }
  return m;
}

std::string PlanarMap::canonical_code() const {
  // Breadth-first numbering of darts from the root under rotation-successor and twin.
  const Dart unset = std::numeric_limits<Dart>::max();
  std::vector<Dart> num(src_.size(), unset);
  std::vector<Dart> order;
  std::deque<Dart> queue;
  auto visit = [&](Dart d) {
    if (num[d] == unset) {
      num[d] = static_cast<Dart>(order.size());
      order.push_back(d);
      queue.push_back(d);
    }
  };
  visit(boundary_[0]);
  while (!queue.empty()) {
    Dart d = queue.front();
    queue.pop_front();
    const auto& r = rot_[src_[d]];
    visit(r[(position(d) + 1) % r.size()]);
    visit(twin(d));
  }
  std::string code;
  code.reserve(order.size() * 8);
  for (Dart d : order) {
    const auto& r = rot_[src_[d]];
    VertexId v = src_[d];
    code += std::to_string(num[r[(position(d) + 1) % r.size()]]);
    code += '.';
    code += std::to_string(num[twin(d)]);
    code += '.';
    switch (kind_[v]) {
      case VertexKind::Boundary: code += 'b' + std::to_string(v); break;
      case VertexKind::Sink: code += 'k'; break;
      case VertexKind::Source: code += 's'; break;
      case VertexKind::Saddle: code += 'x'; break;
    }
    code += ';';
  }
  return code;
}

PlanarMap PlanarMap::from_parts(std::size_t boundary_size, std::vector<VertexKind> kinds,
                                std::vector<VertexId> dart_sources,
                                std::vector<std::vector<Dart>> rotations,
                                std::vector<Dart> boundary_darts) {
  PlanarMap m;
  m.kind_ = std::move(kinds);
  m.src_ = std::move(dart_sources);
  m.rot_ = std::move(rotations);
  m.boundary_ = std::move(boundary_darts);
  if (m.boundary_.size() != boundary_size || m.rot_.size() != m.kind_.size() ||
      m.src_.size() % 2 != 0 || boundary_size > m.kind_.size()) {
    throw DomainError("inconsistent planar map parts");
  }
  std::vector<int> seen(m.src_.size(), 0);
  for (VertexId v = 0; v < m.rot_.size(); ++v) {
    for (Dart d : m.rot_[v]) {
      if (d >= m.src_.size() || m.src_[d] != v || seen[d]++) {
        throw DomainError("rotation lists do not match dart sources");
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(seen.size())) {
    throw DomainError("a dart is missing from every rotation");
  }
  for (std::size_t k = 0; k < boundary_size; ++k) {
    Dart d = m.boundary_[k];
    if (d >= m.src_.size() || m.src_[d] != k || m.src_[twin(d)] != (k + 1) % boundary_size) {
      throw DomainError("boundary darts do not follow the boundary cycle");
    }
  }
  return m;
}

}  // namespace stratflow
