#include "kls/generators.hpp"

#include <algorithm>
#include <vector>

namespace kls {

namespace {

std::string subset_label(unsigned mask) {
  if (mask == 0) return "{}";
  std::string out = "{";
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out += std::to_string(i + 1) + ",";
  out.back() = '}';
  return out;
}

}  // namespace

PosetPtr boolean_lattice(int n) {
  if (n < 0 || n > 8)
    throw ParameterOutOfRange("boolean: rank must be in [0,8]");
  int size = 1 << n;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(size);
  for (int m = 0; m < size; ++m) {
    labels[m] = subset_label(static_cast<unsigned>(m));
    for (int i = 0; i < n; ++i)
      if (!(m & (1 << i))) covers.emplace_back(m, m | (1 << i));
  }
  return build_poset(covers, size, std::move(labels),
                     "boolean:" + std::to_string(n));
}

PosetPtr chain_poset(int n) {
  if (n < 0 || n > 64)
    throw ParameterOutOfRange("chain: rank must be in [0,64]");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) covers.emplace_back(i, i + 1);
  return build_poset(covers, n + 1, {}, "chain:" + std::to_string(n));
}

PosetPtr cube_face_lattice(int d) {
  if (d < 0 || d > 4)
    throw ParameterOutOfRange("cube_faces: dimension must be in [0,4]");
  // Nonempty faces are words over {0,1,*}: fixed coordinate or free.
  // Element 0 is the empty face.
  std::vector<std::vector<int>> faces;  // digits 0,1,2 (2 = free)
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(d);
    int c = code;
    for (int i = 0; i < d; ++i, c /= 3) f[i] = c % 3;
    faces.push_back(std::move(f));
  }
  auto face_dim = [&](const std::vector<int>& f) {
    return static_cast<int>(std::count(f.begin(), f.end(), 2));
  };
  auto contained = [&](const std::vector<int>& f, const std::vector<int>& g) {
    for (int i = 0; i < d; ++i)
      if (g[i] != 2 && f[i] != g[i]) return false;
    return true;
  };
  int n = total + 1;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(n);
  labels[0] = "∅";
  for (int a = 0; a < total; ++a) {
    std::string l;
    for (int i = 0; i < d; ++i) l += "01*"[faces[a][i]];
    labels[a + 1] = l.empty() ? "pt" : l;
    if (face_dim(faces[a]) == 0) covers.emplace_back(0, a + 1);
    for (int b = 0; b < total; ++b)
      if (face_dim(faces[b]) == face_dim(faces[a]) + 1 &&
          contained(faces[a], faces[b]))
        covers.emplace_back(a + 1, b + 1);
  }
  return build_poset(covers, n, std::move(labels),
                     "cube_faces:" + std::to_string(d));
}

PosetPtr cross_polytope_face_lattice(int d) {
  if (d < 0 || d > 4)
    throw ParameterOutOfRange(
        "cross_polytope_faces: dimension must be in [0,4]");
  // Proper faces are vertex sets with no antipodal pair; encode as a
  // word over {none,+,-} per axis.  Adjoin the whole polytope on top.
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  std::vector<std::vector<int>> faces(total, std::vector<int>(d));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < d; ++i, c /= 3) faces[code][i] = c % 3;
  }
  auto face_card = [&](const std::vector<int>& f) {
    return d - static_cast<int>(std::count(f.begin(), f.end(), 0));
  };
  auto contained = [&](const std::vector<int>& f, const std::vector<int>& g) {
    for (int i = 0; i < d; ++i)
      if (f[i] != 0 && f[i] != g[i]) return false;
    return true;
  };
  int n = total + 1;
  int top = total;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(n);
  labels[top] = "1̂";
  for (int a = 0; a < total; ++a) {
    std::string l;
    for (int i = 0; i < d; ++i) l += ".+-"[faces[a][i]];
    labels[a] = (face_card(faces[a]) == 0) ? "∅" : l;
    if (face_card(faces[a]) == d) covers.emplace_back(a, top);
    for (int b = 0; b < total; ++b)
      if (face_card(faces[b]) == face_card(faces[a]) + 1 &&
          contained(faces[a], faces[b]))
        covers.emplace_back(a, b);
  }
  return build_poset(covers, n, std::move(labels),
                     "cross_polytope_faces:" + std::to_string(d));
}

PosetPtr fig1_poset() {
  // 0:bottom 1:a 2:b 3:c 4:d 5:top
  std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                             {1, 4}, {2, 4}, {3, 5}, {4, 5}};
  return build_poset(covers, 6,
                     {"0̂", "a", "b", "c", "d", "1̂"}, "paper_fig1");
}

PosetPtr fig2_poset() {
  // 0:bottom 1:a 2:b 3:c 4:d 5:e 6:f 7:top
  std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                             {1, 4}, {2, 4}, {3, 5}, {4, 5},
                                             {3, 6}, {4, 6}, {5, 7}, {6, 7}};
  return build_poset(covers, 8,
                     {"0̂", "a", "b", "c", "d", "e", "f", "1̂"},
                     "paper_fig2");
}

PosetPtr generate(const std::string& kind, int n) {
  if (kind == "boolean") return boolean_lattice(n);
  if (kind == "chain") return chain_poset(n);
  if (kind == "cube_faces") return cube_face_lattice(n);
  if (kind == "cross_polytope_faces") return cross_polytope_face_lattice(n);
  if (kind == "paper_fig1") return fig1_poset();
  if (kind == "paper_fig2") return fig2_poset();
  throw UnknownKind("generate: unknown kind '" + kind + "'");
}

bool generator_takes_parameter(const std::string& kind) {
  return kind == "boolean" || kind == "chain" || kind == "cube_faces" ||
         kind == "cross_polytope_faces";
}

}  // namespace kls
