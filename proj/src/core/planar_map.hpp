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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stratflow {

using Dart = std::uint32_t;
using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { Boundary, Sink, Source, Saddle };

// A place in the rotation at vertex v, immediately after dart `after` (which leaves v).
struct Corner {
  VertexId vertex = 0;
  Dart after = 0;
};

// Connected plane graph stored as a rotation system.  Vertices 0..n-1 form the boundary
// cycle of a disk; dart 2k+1 is the twin of dart 2k.  Faces are traced by
// next(d) = the dart preceding twin(d) in the rotation at the head of d.
class PlanarMap {
 public:
  PlanarMap() = default;
  static PlanarMap disk(std::size_t boundary_size);

  std::size_t boundary_size() const { return boundary_.size(); }
  std::size_t vertex_count() const { return rot_.size(); }
  std::size_t dart_count() const { return src_.size(); }
  std::size_t edge_count() const { return src_.size() / 2; }

  VertexKind kind(VertexId v) const { return kind_[v]; }
  static Dart twin(Dart d) { return d ^ 1u; }
  VertexId src(Dart d) const { return src_[d]; }
  VertexId dst(Dart d) const { return src_[twin(d)]; }
  const std::vector<Dart>& rotation(VertexId v) const { return rot_[v]; }
  Dart boundary_dart(std::size_t k) const { return boundary_[k]; }
  bool is_boundary_edge(Dart d) const;

  Dart next_in_face(Dart d) const;
  std::vector<Dart> face(Dart d) const;
  // Faces other than the unbounded one, each listed from its smallest dart.
  std::vector<std::vector<Dart>> inner_faces() const;
  std::size_t degree(VertexId v) const { return rot_[v].size(); }

  // Adds an edge between two corners of the same face; returns the dart leaving a.vertex.
  Dart add_edge(Corner a, Corner b);
  // Adds a new vertex joined to the corner by one edge; returns the dart leaving the corner.
  Dart add_pendant(Corner at, VertexKind kind);

  // Relabels boundary vertex i as image[i]; when reverse is set the embedding is mirrored.
  PlanarMap transformed(const std::vector<VertexId>& image, bool reverse) const;
  PlanarMap with_kinds_swapped() const;

  std::string canonical_code() const;

  // Serialization helpers.
  const std::vector<VertexId>& dart_sources() const { return src_; }
  static PlanarMap from_parts(std::size_t boundary_size, std::vector<VertexKind> kinds,
                              std::vector<VertexId> dart_sources,
                              std::vector<std::vector<Dart>> rotations,
                              std::vector<Dart> boundary_darts);

  friend bool operator==(const PlanarMap&, const PlanarMap&) = default;

 private:
  void insert_after(VertexId v, Dart after, Dart d);
  std::size_t position(Dart d) const;

  std::vector<VertexId> src_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<VertexKind> kind_;
  std::vector<Dart> boundary_;
};

}  // namespace stratflow
