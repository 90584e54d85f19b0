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

#include "core/cw_complex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace stratflow {

namespace {

// Gluing tables.  Words are kept verbatim; marked-point labels follow the figures of the
// planar models, one label per side of each word.
struct CellTable {
  const char* region;
  const char* word;
  const char* labels;
};

constexpr CellTable kGirlsCells[] = {
    {"LD", "9A'9", "e"},
    {"RD", "3B'3", "f"},
    {"BR", "1A6C'5C'8B11C1", "acdbg"},
    {"CR", "2C12A'10B7A4B'2", "gebaf"},
};

constexpr CellTable kBoysCells[] = {
    {"SA", "9A'9", ""},
    {"SB", "3B'3", ""},
    {"SC", "5C'5", ""},
    {"NG", "1A6C'8B11C2B'4A7B10A'12C1", ""},
};

using PairList = std::vector<std::pair<Angle, Angle>>;

const std::map<CellLabel, PairList>& girls_pairs() {
  static const std::map<CellLabel, PairList> pairs = {
      {'A', {{9, 9}, {1, 6}, {12, 10}, {4, 7}}},
      {'B', {{3, 3}, {7, 10}, {4, 2}, {8, 11}}},
      {'C', {{5, 6}, {12, 2}, {8, 5}, {11, 1}}},
  };
  return pairs;
}

const std::map<CellLabel, PairList>& boys_pairs() {
  static const std::map<CellLabel, PairList> pairs = {
      {'A', {{9, 9}, {1, 6}, {4, 7}, {12, 10}}},
      {'B', {{3, 3}, {8, 11}, {2, 4}, {7, 10}}},
      {'C', {{5, 5}, {6, 8}, {11, 2}, {12, 1}}},
  };
  return pairs;
}

// The three preimages of the triple point; the same grouping holds on both surfaces.
const std::vector<std::vector<Angle>>& sheet_table() {
  static const std::vector<std::vector<Angle>> sheets = {
      {1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}};
  return sheets;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int prime_sign(const Side& s) { return s.primed ? -1 : 1; }

const Side& side_at(const StratifiedSurface& s, SideRef r) {
  return s.two_cells.at(r.face).word.sides().at(r.side);
}

std::optional<char> label_at(const StratifiedSurface& s, SideRef r) {
  const auto& labels = s.two_cells.at(r.face).marked_points;
  if (labels.empty()) return std::nullopt;
  return labels.at(r.side);
}

// Sides grouped into lifts.  Two sides of one cell belong to the same lift exactly when
// their endpoint sheets agree as unordered pairs.
struct LiftPlan {
  std::vector<Lift> lifts;
  std::vector<int> face_signs;
};

LiftPlan plan_lifts(const StratifiedSurface& s) {
  std::map<std::pair<CellLabel, std::pair<int, int>>, std::vector<SideRef>> groups;
  for (std::size_t f = 0; f < s.two_cells.size(); ++f) {
    const auto& sides = s.two_cells[f].word.sides();
    for (std::size_t k = 0; k < sides.size(); ++k) {
      int a = s.sheet_of(sides[k].start);
      int b = s.sheet_of(sides[k].end);
      if (a < 0 || b < 0) throw DomainError("angle outside every sheet");
      groups[{sides[k].cell, {std::min(a, b), std::max(a, b)}}].push_back({f, k});
    }
  }

  LiftPlan plan;
  // tri-state: 1 parallel, 0 antiparallel, -1 undecided by sheets
  std::vector<int> decided;
  std::map<CellLabel, int> ordinal;
  for (const auto& [key, refs] : groups) {
    if (refs.size() != 2) {
      throw DomainError(std::string("cell ") + key.first +
                        " does not split into pairs of sides over the sheets");
    }
    Lift lift;
    lift.cell = key.first;
    lift.sides = {refs[0], refs[1]};
    std::string tag;
    for (const auto& r : refs) {
      if (auto l = label_at(s, r); l && tag.find(*l) == std::string::npos) tag += *l;
    }
    lift.name = std::string(1, key.first) + "_" + (tag.empty() ? std::to_string(ordinal[key.first]) : tag);
    ordinal[key.first]++;
    const Side& a = side_at(s, refs[0]);
    const Side& b = side_at(s, refs[1]);
    bool par = s.sheet_of(a.start) == s.sheet_of(b.start) && s.sheet_of(a.end) == s.sheet_of(b.end);
    bool anti = s.sheet_of(a.start) == s.sheet_of(b.end) && s.sheet_of(a.end) == s.sheet_of(b.start);
    decided.push_back(par && anti ? -1 : (par ? 1 : 0));
    plan.lifts.push_back(lift);
  }

  // Solve for per-face reading signs so every decided lift has a consistent cell direction.
  const std::size_t nf = s.two_cells.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(nf);
  for (std::size_t i = 0; i < plan.lifts.size(); ++i) {
    if (decided[i] < 0) continue;
    const auto& l = plan.lifts[i];
    int rel = (decided[i] == 1 ? 1 : -1) * prime_sign(side_at(s, l.sides[0])) *
              prime_sign(side_at(s, l.sides[1]));
    if (l.sides[0].face == l.sides[1].face) {
      if (rel != 1) throw DomainError("lift " + l.name + " has contradictory cell directions");
      continue;
    }
    adj[l.sides[0].face].push_back({l.sides[1].face, rel});
    adj[l.sides[1].face].push_back({l.sides[0].face, rel});
  }
  plan.face_signs.assign(nf, 0);
  for (std::size_t root = 0; root < nf; ++root) {
    if (plan.face_signs[root] != 0) continue;
    plan.face_signs[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      for (auto [g, rel] : adj[f]) {
        int want = plan.face_signs[f] * rel;
        if (plan.face_signs[g] == 0) {
          plan.face_signs[g] = want;
          stack.push_back(g);
        } else if (plan.face_signs[g] != want) {
          throw DomainError("cell directions cannot be made consistent across faces");
        }
      }
    }
  }

  for (std::size_t i = 0; i < plan.lifts.size(); ++i) {
    auto& l = plan.lifts[i];
    if (decided[i] >= 0) {
      l.parallel = decided[i] == 1;
    } else {
      int e0 = plan.face_signs[l.sides[0].face] * prime_sign(side_at(s, l.sides[0]));
      int e1 = plan.face_signs[l.sides[1].face] * prime_sign(side_at(s, l.sides[1]));
      l.parallel = e0 == e1;
    }
  }
  return plan;
}

void glue_corners(const StratifiedSurface& s, const Lift& l, UnionFind& uf) {
  const Side& a = side_at(s, l.sides[0]);
  const Side& b = side_at(s, l.sides[1]);
  if (l.parallel) {
    uf.unite(a.start, b.start);
    uf.unite(a.end, b.end);
  } else {
    uf.unite(a.start, b.end);
    uf.unite(a.end, b.start);
  }
}

// Candidate automorphisms: a cell relabeling with direction flips and a reading direction,
// then a face and rotation matching that fixes the angle map.
struct FaceSide {
  Angle start;
  CellLabel cell;
  int sign;
  std::optional<char> label;
};

std::vector<std::vector<FaceSide>> normalized_faces(const StratifiedSurface& s,
                                                    const std::vector<int>& face_signs) {
  std::vector<std::vector<FaceSide>> out;
  for (std::size_t f = 0; f < s.two_cells.size(); ++f) {
    std::vector<FaceSide> sides;
    const auto& ws = s.two_cells[f].word.sides();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      sides.push_back({ws[k].start, ws[k].cell, face_signs[f] * prime_sign(ws[k]),
                       label_at(s, {f, k})});
    }
    out.push_back(std::move(sides));
  }
  return out;
}

std::vector<SymmetryElement> search_automorphisms(const StratifiedSurface& s,
                                                  const std::vector<int>& face_signs) {
  const auto faces = normalized_faces(s, face_signs);
  std::vector<CellLabel> cells;
  for (const auto& [c, _] : s.one_cells) cells.push_back(c);
  std::vector<SymmetryElement> found;

  std::vector<CellLabel> perm = cells;
  do {
    for (unsigned flips = 0; flips < (1u << cells.size()); ++flips) {
      for (int reading : {1, -1}) {
        std::map<CellLabel, std::pair<CellLabel, int>> cm;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          cm[cells[i]] = {perm[i], (flips >> i) & 1u ? -1 : 1};
        }
        std::vector<std::vector<FaceSide>> images;
        for (const auto& face : faces) {
          const std::size_t n = face.size();
          std::vector<FaceSide> img;
          if (reading == 1) {
            for (const auto& fs : face) {
              img.push_back({fs.start, cm[fs.cell].first, fs.sign * cm[fs.cell].second, fs.label});
            }
          } else {
            for (std::size_t k = n; k-- > 0;) {
              const auto& fs = face[k];
              img.push_back({face[(k + 1) % n].start, cm[fs.cell].first,
                             -fs.sign * cm[fs.cell].second, fs.label});
            }
          }
          images.push_back(std::move(img));
        }

        std::array<Angle, kAngleCount + 1> amap{};
        std::map<char, char> lmap;
        std::vector<std::size_t> target(faces.size());
        std::vector<bool> used(faces.size(), false);

        std::function<bool(std::size_t)> assign = [&](std::size_t f) -> bool {
          if (f == faces.size()) return true;
          const auto& img = images[f];
          for (std::size_t g = 0; g < faces.size(); ++g) {
            if (used[g] || faces[g].size() != img.size()) continue;
            const std::size_t n = img.size();
            for (std::size_t t = 0; t < n; ++t) {
              auto saved_a = amap;
              auto saved_l = lmap;
              bool ok = true;
              for (std::size_t k = 0; k < n && ok; ++k) {
                const auto& src = img[k];
                const auto& dst = faces[g][(k + t) % n];
                if (src.cell != dst.cell || src.sign != dst.sign) ok = false;
                else if (amap[src.start] != 0 && amap[src.start] != dst.start) ok = false;
                else {
                  amap[src.start] = dst.start;
                  if (src.label.has_value() != dst.label.has_value()) ok = false;
                  else if (src.label) {
                    auto it = lmap.find(*src.label);
                    if (it != lmap.end() && it->second != *dst.label) ok = false;
                    else lmap[*src.label] = *dst.label;
                  }
                }
              }
              if (ok) {
                used[g] = true;
                target[f] = g;
                if (assign(f + 1)) return true;
                used[g] = false;
              }
              amap = saved_a;
              lmap = saved_l;
            }
          }
          return false;
        };
        if (!assign(0)) continue;

        std::set<Angle> image_angles(amap.begin() + 1, amap.end());
        if (image_angles.size() != static_cast<std::size_t>(kAngleCount)) continue;
        std::set<char> image_labels;
        for (auto& [k, v] : lmap) image_labels.insert(v);
        if (image_labels.size() != lmap.size()) continue;

        SymmetryElement e;
        e.angle_map = amap;
        for (auto& [c, v] : cm) e.cell_map[c] = {v.first, v.second < 0};
        for (std::size_t f = 0; f < faces.size(); ++f) {
          e.region_map[s.two_cells[f].region] = s.two_cells[target[f]].region;
        }
        e.label_map = lmap;
        e.reverses_reading = reading < 0;
        found.push_back(std::move(e));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

void name_elements(std::vector<SymmetryElement>& elements) {
  std::map<std::string, int> counts;
  for (auto& e : elements) {
    std::string base;
    if (e.is_identity()) base = "identity";
    else if (e.reverses_reading) base = "reflection";
    else base = "rotation";
    e.name = base;
  }
  for (auto& e : elements) counts[e.name]++;
  std::map<std::string, int> seen;
  for (auto& e : elements) {
    if (counts[e.name] > 1) e.name += std::to_string(seen[e.name]++);
  }
}

SymmetryGroup make_group(const StratifiedSurface& s) {
  SymmetryGroup g;
  g.elements = search_automorphisms(s, plan_lifts(s).face_signs);
  std::stable_sort(g.elements.begin(), g.elements.end(), [](const auto& a, const auto& b) {
    auto rank = [](const SymmetryElement& e) {
      return e.is_identity() ? 0 : (e.reverses_reading ? 2 : 1);
    };
    return rank(a) < rank(b);
  });
  name_elements(g.elements);
  // Generators: one element of maximal order among the rotations, then the first reflection.
  const SymmetryElement* rotation = nullptr;
  const SymmetryElement* reflection = nullptr;
  for (const auto& e : g.elements) {
    if (e.is_identity()) continue;
    if (!e.reverses_reading) {
      if (!rotation || element_order(e) > element_order(*rotation)) rotation = &e;
    } else if (!reflection) {
      reflection = &e;
    }
  }
  if (rotation) g.generators.push_back(*rotation);
  if (reflection) g.generators.push_back(*reflection);
  return g;
}

}  // namespace

SurfaceName parse_surface_name(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "girls" || t == "girl" || t == "girl's") return SurfaceName::Girls;
  if (t == "boys" || t == "boy" || t == "boy's") return SurfaceName::Boys;
  throw DomainError("unknown surface '" + std::string(text) + "'");
}

std::string to_string(SurfaceName name) { return name == SurfaceName::Girls ? "girls" : "boys"; }

std::string display_name(SurfaceName name) {
  return name == SurfaceName::Girls ? "Girl's" : "Boy's";
}

BoundaryWord::BoundaryWord(std::vector<Side> sides) : sides_(std::move(sides)) {}

BoundaryWord BoundaryWord::parse(std::string_view text) {
  std::vector<Angle> angles;
  std::vector<std::pair<CellLabel, bool>> cells;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("malformed boundary word '" + std::string(text) + "': " + why);
  };
  bool expect_angle = true;
  while (i < text.size()) {
    if (expect_angle) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected an angle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i++] - '0');
      }
      angles.push_back(v);
    } else {
      if (!std::isupper(static_cast<unsigned char>(text[i]))) fail("expected a cell label");
      CellLabel c = text[i++];
      bool primed = i < text.size() && text[i] == '\'';
      if (primed) ++i;
      cells.push_back({c, primed});
    }
    expect_angle = !expect_angle;
  }
  if (cells.empty() || angles.size() != cells.size() + 1) fail("tokens do not alternate");
  if (angles.front() != angles.back()) fail("word does not close");
  std::vector<Side> sides;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    sides.push_back({angles[k], cells[k].first, cells[k].second, angles[k + 1]});
  }
  return BoundaryWord(std::move(sides));
}

std::string BoundaryWord::str() const {
  std::string out;
  for (const auto& s : sides_) {
    out += std::to_string(s.start);
    out += s.cell;
    if (s.primed) out += '\'';
  }
  if (!sides_.empty()) out += std::to_string(sides_.front().start);
  return out;
}

bool SymmetryElement::is_identity() const {
  for (Angle a = 1; a <= kAngleCount; ++a) {
    if (angle_map[a] != a) return false;
  }
  for (const auto& [c, v] : cell_map) {
    if (v.first != c || v.second) return false;
  }
  for (const auto& [k, v] : label_map) {
    if (k != v) return false;
  }
  return !reverses_reading;
}

SymmetryElement compose(const SymmetryElement& outer, const SymmetryElement& inner) {
  SymmetryElement e;
  for (Angle a = 1; a <= kAngleCount; ++a) {
    Angle mid = inner.angle_map[a];
    e.angle_map[a] = mid == 0 ? 0 : outer.angle_map[mid];
  }
  for (const auto& [c, v] : inner.cell_map) {
    const auto& w = outer.cell_map.at(v.first);
    e.cell_map[c] = {w.first, v.second != w.second};
  }
  for (const auto& [r, v] : inner.region_map) e.region_map[r] = outer.region_map.at(v);
  for (const auto& [l, v] : inner.label_map) e.label_map[l] = outer.label_map.at(v);
  e.reverses_reading = inner.reverses_reading != outer.reverses_reading;
  return e;
}

int element_order(const SymmetryElement& e) {
  SymmetryElement p = e;
  for (int k = 1; k <= 64; ++k) {
    if (p.is_identity()) return k;
    p = compose(e, p);
  }
  throw DomainError("symmetry element of unbounded order");
}

const TwoCell& StratifiedSurface::two_cell(std::string_view region) const {
  return two_cells.at(face_index(region));
}

std::size_t StratifiedSurface::face_index(std::string_view region) const {
  for (std::size_t i = 0; i < two_cells.size(); ++i) {
    if (two_cells[i].region == region) return i;
  }
  throw DomainError("region '" + std::string(region) + "' is not on the " +
                    display_name(name) + " surface");
}

int StratifiedSurface::sheet_of(Angle a) const {
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    if (std::find(sheets[i].begin(), sheets[i].end(), a) != sheets[i].end()) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::string StratifiedSurface::class_key(char label) const {
  for (const auto& cls : marked_point_classes) {
    if (std::find(cls.begin(), cls.end(), label) != cls.end()) return std::string(cls.begin(), cls.end());
  }
  throw DomainError(std::string("marked point '") + label + "' belongs to no class");
}

StratifiedSurface build_surface(SurfaceName name) {
  StratifiedSurface s;
  s.name = name;
  s.angles.resize(kAngleCount);
  std::iota(s.angles.begin(), s.angles.end(), 1);
  s.sheets = sheet_table();
  auto load = [&](const auto& table) {
    for (const auto& row : table) {
      TwoCell tc;
      tc.region = row.region;
      tc.word = BoundaryWord::parse(row.word);
      for (const char* p = row.labels; *p; ++p) tc.marked_points.push_back(*p);
      s.two_cells.push_back(std::move(tc));
    }
  };
  if (name == SurfaceName::Girls) {
    s.one_cells = girls_pairs();
    load(kGirlsCells);
    s.marked_point_classes = {{'c', 'd', 'g'}, {'b', 'f'}, {'a', 'e'}};
  } else {
    s.one_cells = boys_pairs();
    load(kBoysCells);
  }
  s.symmetry = make_group(s);
  return s;
}

StratifiedSurface build_surface(std::string_view name) {
  return build_surface(parse_surface_name(name));
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate_complex(const StratifiedSurface& s) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  {
    std::map<Angle, int> seen;
    for (const auto& [c, pairs] : s.one_cells) {
      for (auto [a, b] : pairs) {
        seen[a]++;
        seen[b]++;
      }
    }
    std::ostringstream bad;
    for (Angle a : s.angles) {
      if (seen[a] != 2) bad << " " << a << "x" << seen[a];
    }
    for (const auto& [a, n] : seen) {
      if (std::find(s.angles.begin(), s.angles.end(), a) == s.angles.end()) bad << " unknown:" << a;
    }
    add("angle-double-occurrence", bad.str().empty(),
        bad.str().empty() ? "every angle occurs twice in the gluing pairs" : "miscounted:" + bad.str());
  }

  {
    std::multiset<std::tuple<CellLabel, Angle, Angle>> from_words, from_pairs;
    std::map<Angle, int> corners;
    for (const auto& tc : s.two_cells) {
      for (const auto& sd : tc.word.sides()) {
        from_words.insert({sd.cell, std::min(sd.start, sd.end), std::max(sd.start, sd.end)});
        corners[sd.start]++;
      }
    }
    for (const auto& [c, pairs] : s.one_cells) {
      for (auto [a, b] : pairs) from_pairs.insert({c, std::min(a, b), std::max(a, b)});
    }
    bool corners_ok = corners.size() == s.angles.size() &&
                      std::all_of(corners.begin(), corners.end(), [](auto& kv) { return kv.second == 1; });
    bool ok = from_words == from_pairs && corners_ok;
    add("word-gluing-consistency", ok,
        ok ? "boundary words and gluing pairs describe the same sides"
           : (corners_ok ? "boundary words disagree with the gluing pairs"
                         : "an angle is missing or repeated as a corner"));
  }

  {
    bool ok = true;
    std::string detail = "labels are consistent with their classes";
    for (const auto& tc : s.two_cells) {
      if (!tc.marked_points.empty() && tc.marked_points.size() != tc.word.size()) {
        ok = false;
        detail = "region " + tc.region + " has a label count different from its side count";
      }
      for (char l : tc.marked_points) {
        int hits = 0;
        for (const auto& cls : s.marked_point_classes) hits += static_cast<int>(std::count(cls.begin(), cls.end(), l));
        if (hits != 1) {
          ok = false;
          detail = std::string("label ") + l + " is not in exactly one class";
        }
      }
    }
    add("marked-point-classes", ok, detail);
  }

  {
    long v = 1;
    long e = static_cast<long>(s.one_cells.size());
    long f = static_cast<long>(s.two_cells.size());
    long chi = v - e + f;
    add("image-euler-characteristic", chi == 2,
        std::to_string(v) + " - " + std::to_string(e) + " + " + std::to_string(f) + " = " + std::to_string(chi));
  }

  {
    bool ok = false;
    std::string detail;
    if (!report.find("word-gluing-consistency")->passed) {
      detail = "not computed: gluing data inconsistent";
    } else {
      try {
        PullbackComplex p = pullback_complex_unchecked(s);
        long chi = p.euler_characteristic();
        ok = chi == 1;
        detail = std::to_string(p.vertices.size()) + " - " + std::to_string(p.edges.size()) + " + " +
                 std::to_string(p.faces.size()) + " = " + std::to_string(chi);
      } catch (const DomainError& err) {
        detail = err.what();
      }
    }
    add("pullback-euler-characteristic", ok, detail);
  }

  {
    bool ok = !s.symmetry.generators.empty() || s.symmetry.elements.size() == 1;
    std::string detail = "group of order " + std::to_string(s.symmetry.order());
    try {
      auto fresh = search_automorphisms(s, plan_lifts(s).face_signs);
      for (const auto& gen : s.symmetry.generators) {
        bool match = std::any_of(fresh.begin(), fresh.end(), [&](const SymmetryElement& e) {
          return e.angle_map == gen.angle_map && e.cell_map == gen.cell_map &&
                 e.region_map == gen.region_map && e.label_map == gen.label_map &&
                 e.reverses_reading == gen.reverses_reading;
        });
        if (!match) {
          ok = false;
          detail = "generator " + gen.name + " does not preserve the gluing data";
        }
      }
    } catch (const DomainError& err) {
      ok = false;
      detail = err.what();
    }
    add("symmetry-automorphisms", ok, detail);
  }

  return report;
}

long PullbackComplex::euler_characteristic() const {
  return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
         static_cast<long>(faces.size());
}

std::size_t PullbackComplex::vertex_of(Angle a) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (std::find(vertices[v].begin(), vertices[v].end(), a) != vertices[v].end()) return v;
  }
  throw DomainError("angle " + std::to_string(a) + " has no vertex");
}

std::size_t PullbackComplex::lift_of(SideRef side) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].sides[0] == side || edges[i].sides[1] == side) return i;
  }
  throw DomainError("side is not part of any lift");
}

PullbackComplex pullback_complex_unchecked(const StratifiedSurface& s) {
  LiftPlan plan = plan_lifts(s);
  UnionFind uf(kAngleCount + 1);
  for (const auto& l : plan.lifts) glue_corners(s, l, uf);

  PullbackComplex p;
  std::map<std::size_t, std::size_t> root_to_vertex;
  for (Angle a : s.angles) {
    auto r = uf.find(static_cast<std::size_t>(a));
    auto [it, inserted] = root_to_vertex.try_emplace(r, p.vertices.size());
    if (inserted) p.vertices.emplace_back();
    p.vertices[it->second].push_back(a);
  }
  p.face_signs = plan.face_signs;
  for (const auto& tc : s.two_cells) p.faces.push_back(tc.region);
  for (auto l : plan.lifts) {
    const Side& a = side_at(s, l.sides[0]);
    int e = plan.face_signs[l.sides[0].face] * prime_sign(a);
    l.tail = p.vertex_of(e > 0 ? a.start : a.end);
    l.head = p.vertex_of(e > 0 ? a.end : a.start);
    p.edges.push_back(l);
  }
  return p;
}

PullbackComplex pullback_complex(const StratifiedSurface& s) {
  auto report = validate_complex(s);
  for (const auto& c : report.checks) {
    if (!c.passed) throw DomainError("invalid surface: " + c.name + " failed (" + c.detail + ")");
  }
  return pullback_complex_unchecked(s);
}

int effective_sign(const StratifiedSurface& s, const PullbackComplex& p, SideRef side) {
  return p.face_signs.at(side.face) * prime_sign(side_at(s, side));
}

GluingAssessment assess_gluing(const StratifiedSurface& s, std::uint32_t mask) {
  const PullbackComplex p = pullback_complex(s);
  const std::size_t nf = p.faces.size();
  GluingAssessment g;
  g.mask = mask;
  auto glued = [&](std::size_t i) { return (mask >> i) & 1u; };

  UnionFind faces(nf);
  UnionFind corners(kAngleCount + 1);
  long edges = 0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (glued(i)) {
      faces.unite(p.edges[i].sides[0].face, p.edges[i].sides[1].face);
      glue_corners(s, p.edges[i], corners);
      edges += 1;
    } else {
      edges += 2;
    }
  }
  g.connected = true;
  for (std::size_t f = 0; f < nf; ++f) g.connected = g.connected && faces.find(f) == faces.find(0);

  std::set<std::size_t> vertex_roots;
  for (Angle a : s.angles) vertex_roots.insert(corners.find(static_cast<std::size_t>(a)));
  g.euler = static_cast<long>(vertex_roots.size()) - edges + static_cast<long>(nf);

  // Orientation parity over the dual graph; a parallel gluing needs opposite face orientations.
  std::vector<int> orient(nf, 0);
  g.orientable = true;
  for (std::size_t root = 0; root < nf && g.orientable; ++root) {
    if (orient[root] != 0) continue;
    orient[root] = 1;
    bool changed = true;
    while (changed && g.orientable) {
      changed = false;
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (!glued(i)) continue;
        const auto& l = p.edges[i];
        std::size_t f0 = l.sides[0].face, f1 = l.sides[1].face;
        int rel = l.parallel ? -1 : 1;
        if (orient[f0] != 0 && orient[f1] == 0) {
          orient[f1] = orient[f0] * rel;
          changed = true;
        } else if (orient[f1] != 0 && orient[f0] == 0) {
          orient[f0] = orient[f1] * rel;
          changed = true;
        } else if (orient[f0] != 0 && orient[f0] * rel != orient[f1]) {
          g.orientable = false;
        }
      }
    }
  }

  if (g.orientable) {
    struct Walk {
      std::size_t from, to;
      BoundarySide side;
    };
    std::vector<Walk> walks;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (glued(i)) continue;
      for (const auto& ref : p.edges[i].sides) {
        const Side& sd = side_at(s, ref);
        int o = orient[ref.face];
        std::size_t from = corners.find(static_cast<std::size_t>(o > 0 ? sd.start : sd.end));
        std::size_t to = corners.find(static_cast<std::size_t>(o > 0 ? sd.end : sd.start));
        bool reversed = o * effective_sign(s, p, ref) < 0;
        walks.push_back({from, to, {i, reversed, label_at(s, ref)}});
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> out_of;
    bool simple = true;
    for (std::size_t w = 0; w < walks.size(); ++w) {
      out_of[walks[w].from].push_back(w);
      if (out_of[walks[w].from].size() > 1) simple = false;
    }
    std::vector<bool> done(walks.size(), false);
    for (std::size_t start = 0; start < walks.size() && simple; ++start) {
      if (done[start]) continue;
      g.boundary_components++;
      std::size_t w = start;
      while (!done[w]) {
        done[w] = true;
        if (g.boundary_components == 1) g.boundary.push_back(walks[w].side);
        auto it = out_of.find(walks[w].to);
        if (it == out_of.end()) {
          simple = false;
          break;
        }
        w = it->second.front();
      }
    }
    if (!simple) g.boundary_components = 0;
    const std::size_t n = g.boundary.size();
    g.antipodal = g.boundary_components == 1 && n >= 2 && n % 2 == 0;
    for (std::size_t k = 0; g.antipodal && k < n / 2; ++k) {
      g.antipodal = g.boundary[k].lift == g.boundary[k + n / 2].lift &&
                    g.boundary[k].reversed == g.boundary[k + n / 2].reversed;
    }
  }

  if (!g.connected) g.reason = "glued complex is disconnected";
  else if (!g.orientable) g.reason = "contains a Moebius band (orientation-reversing gluing)";
  else if (g.euler != 1) g.reason = "Euler characteristic " + std::to_string(g.euler) + " is not that of a disk";
  else if (g.boundary_components != 1)
    g.reason = "boundary has " + std::to_string(g.boundary_components) + " components";
  else if (!g.antipodal) g.reason = "boundary sides are not identified antipodally";
  g.admissible = g.reason.empty();
  if (g.admissible) g.reason = "disk with antipodal boundary";
  return g;
}

std::vector<PlanarModel> enumerate_planar_gluings(const StratifiedSurface& s) {
  const PullbackComplex p = pullback_complex(s);
  std::vector<PlanarModel> out;
  const std::uint32_t limit = 1u << p.edges.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    GluingAssessment g = assess_gluing(s, mask);
    if (!g.admissible) continue;
    PlanarModel m;
    m.glued_mask = mask;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if ((mask >> i) & 1u) m.glued_lifts.push_back(i);
    }
    m.boundary = g.boundary;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace stratflow
