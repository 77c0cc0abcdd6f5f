#include "bmaps/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bmaps/blossoming.hpp"

namespace bmaps {

namespace {

std::vector<std::vector<int>> sorted_faces(const Map& m) {
  std::vector<std::vector<int>> out;
  for (auto c : m.fdarts) {
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

char kind_letter(Kind k) {
  switch (k) {
    case Kind::edge: return 'E';
    case Kind::opening: return 'O';
    case Kind::closing: return 'C';
    case Kind::planted: return 'P';
  }
  return '?';
}

Kind kind_from(char c) {
  switch (c) {
    case 'E': return Kind::edge;
    case 'O': return Kind::opening;
    case 'C': return Kind::closing;
    case 'P': return Kind::planted;
  }
  throw FormatError(std::string("bad kind letter ") + c);
}

int to_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw FormatError("bad integer " + s);
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("bad integer " + s);
  }
}

std::vector<int> ints(const std::vector<std::string>& w, int offset = 0) {
  std::vector<int> out;
  for (auto& s : w) out.push_back(s == "-" ? -1 : to_int(s) + offset);
  return out;
}

// Letters may be separated or run together.
std::string letters(const std::vector<std::string>& w) {
  std::string out;
  for (auto& s : w) out += s;
  return out;
}

Color color_from(char c) {
  if (c == 'w') return Color::white;
  if (c == 'b') return Color::black;
  throw FormatError(std::string("bad colour letter ") + c);
}

template <class T, class F>
std::string line(const std::string& key, const std::vector<T>& v, F f) {
  std::ostringstream os;
  os << key;
  for (auto& x : v) os << ' ' << f(x);
  os << '\n';
  return os.str();
}

// Dart correspondence old -> new between two isomorphic rooted maps.
std::vector<int> transport(const Map& from, int from_root, const Map& to) {
  auto a = relabel_order(from, from_root);
  auto b = relabel_order(to, to.root);
  if (a.size() != b.size()) throw FormatError("tree rebuild changed the size");
  std::vector<int> p(from.darts());
  for (size_t i = 0; i < a.size(); ++i) p[a[i]] = b[i];
  return p;
}

struct Rebuilt {
  Map tree;
  std::vector<int> dart;  // old -> new
  std::vector<int> vertex;
};

Rebuilt rebuild(const Map& t) {
  Rebuilt r;
  r.tree = tree_from_parts(edge_part(t), stems_line(t));
  if (t.darts() == 0) {
    r.vertex = {0};
    return r;
  }
  auto bare = [](Map m) {
    m.outer = -1;
    return m;
  };
  // the rebuild is rooted at the image of t.root
  if (canonical_code(bare(t), t.root) != canonical_code(bare(r.tree), r.tree.root))
    throw FormatError("tree rebuild mismatch");
  r.dart = transport(t, t.root, r.tree);
  r.vertex.assign(t.nv, 0);
  for (int h = 0; h < t.darts(); ++h) r.vertex[t.vert[h]] = r.tree.vert[r.dart[h]];
  return r;
}

template <class T>
std::vector<T> permute(const std::vector<T>& v, const std::vector<int>& p, T fill) {
  std::vector<T> out(v.size(), fill);
  for (size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
  return out;
}

}  // namespace

int face_position(const Map& m, int face) {
  if (m.darts() == 0) return 0;
  auto faces = sorted_faces(m);
  int h = *std::min_element(m.fdarts[face].begin(), m.fdarts[face].end());
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i][0] == h) return static_cast<int>(i);
  throw FormatError("face not found");
}

int face_from_position(const Map& m, int pos) {
  if (m.darts() == 0) return 0;
  auto faces = sorted_faces(m);
  if (pos < 0 || pos >= static_cast<int>(faces.size())) throw FormatError("outer face index out of range");
  return m.face[faces[pos][0]];
}

std::string write_map(const Map& m, const std::vector<Color>* spins) {
  std::ostringstream os;
  int n = m.darts();
  os << "darts " << n << '\n';
  os << line("sigma", m.sigma, [](int x) { return x + 1; });
  os << line("alpha", m.alpha, [](int x) { return x + 1; });
  os << "root " << (n ? m.root + 1 : 0) << " outer " << (m.outer >= 0 ? face_position(m, m.outer) : 0) << '\n';
  if (m.colored()) os << line("colors", m.color, [](Color c) { return letter(c); });
  if (spins) os << line("spins", *spins, [](Color c) { return letter(c); });
  if (m.stems()) {
    std::vector<Kind> k(n);
    for (int h = 0; h < n; ++h) k[h] = m.kind_of(h);
    os << line("kinds", k, kind_letter);
  }
  return os.str();
}

std::string write_orientation(const Orientation& o) {
  std::ostringstream os;
  os << "orient k " << o.k << '\n';
  os << line("values", o.val, [](int x) { return x; });
  return os.str();
}

std::string write_tree(const Map& t) { return write_map(edge_part(t)) + "stems " + stems_line(t) + '\n'; }

std::string write_tree(const Map& t, const Orientation& o) {
  auto r = rebuild(t);
  return write_tree(t) + write_orientation({o.k, permute(o.val, r.dart, 0)});
}

namespace {
std::string mobile_head(const Mobile& t, const Rebuilt& r) {
  std::vector<char> sq(t.tree.nv, 0);
  for (int v = 0; v < t.tree.nv; ++v) sq[v] = t.type[v] == NodeType::square;
  std::ostringstream os;
  os << write_tree(t.tree);
  os << line("types", permute(t.type, r.vertex, NodeType::white), [](NodeType x) { return letter(x); });
  os << line("squares", permute(sq, r.vertex, char(0)), [](char c) { return c ? 1 : 0; });
  if (!t.map_degree.empty()) os << line("degrees", permute(t.map_degree, r.vertex, 0), [](int x) { return x; });
  return os.str();
}
auto dash = [](int x) { return x < 0 ? std::string("-") : std::to_string(x); };
}  // namespace

std::string write_mobile(const BlossomingMobile& t) {
  auto r = rebuild(t.tree);
  return mobile_head(t, r) + write_orientation({t.o.k, permute(t.o.val, r.dart, 0)});
}

std::string write_mobile(const LabeledMobile& t) {
  auto r = rebuild(t.tree);
  std::string s = mobile_head(t, r);
  s += line("labels", permute(t.label, r.vertex, -1), dash);
  s += line("flags", permute(t.flag, r.dart, -1), dash);
  return s;
}

const std::vector<std::string>* Record::get(const std::string& key) const {
  for (auto& [k, v] : lines)
    if (k == key) return &v;
  return nullptr;
}

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  Record cur;
  std::string s;
  auto flush = [&] {
    if (!cur.lines.empty()) out.push_back(std::move(cur));
    cur = Record{};
  };
  while (std::getline(in, s)) {
    std::istringstream ls(s);
    std::string key;
    if (!(ls >> key) || key[0] == '#') {
      if (s.find_first_not_of(" \t\r") == std::string::npos) flush();
      continue;
    }
    if (key == "darts" && cur.has("darts")) flush();
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    cur.lines.emplace_back(key, std::move(words));
  }
  flush();
  return out;
}

std::vector<Record> read_records_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  return read_records(f);
}

namespace {
const std::vector<std::string>& need(const Record& r, const std::string& key) {
  auto p = r.get(key);
  if (!p) throw FormatError("missing line " + key);
  return *p;
}
}  // namespace

Map map_of(const Record& r) {
  auto& dw = need(r, "darts");
  if (dw.size() != 1) throw FormatError("bad darts line");
  int n = to_int(dw[0]);
  auto sigma = ints(need(r, "sigma"), -1);
  auto alpha = ints(need(r, "alpha"), -1);
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(alpha.size()) != n)
    throw FormatError("sigma/alpha length differs from darts");
  auto& ro = need(r, "root");
  if (ro.size() != 3 || ro[1] != "outer") throw FormatError("bad root line");
  int root = to_int(ro[0]) - 1, outer = to_int(ro[2]);
  std::vector<Color> colors;
  if (auto c = r.get("colors"))
    for (char ch : letters(*c)) colors.push_back(color_from(ch));

  Map m;
  if (n == 0) {
    m = vertex_map(colors.empty() ? Color::white : colors[0]);
    if (colors.empty()) m.color.clear();
  } else {
    for (int x : sigma)
      if (x < 0 || x >= n) throw FormatError("sigma entry out of range");
    for (int x : alpha)
      if (x < 0 || x >= n) throw FormatError("alpha entry out of range");
    m.sigma = sigma;
    m.alpha = alpha;
    std::vector<int> p(sigma), q(alpha);
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    for (int i = 0; i < n; ++i)
      if (p[i] != i || q[i] != i) throw FormatError("sigma/alpha not permutations");
    m.refresh();
    if (auto k = r.get("kinds")) {
      auto s = letters(*k);
      if (static_cast<int>(s.size()) != n) throw FormatError("kinds length");
      for (char ch : s) m.kind.push_back(kind_from(ch));
    }
    if (root < 0 || root >= n) throw FormatError("root dart out of range");
    m.root = root;
    m.outer = face_from_position(m, outer);
    validate_map(m, m.stems() > 0);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != m.nv) throw FormatError("colors length differs from vertex count");
      m.color = colors;
    }
  }
  if (auto st = r.get("stems")) {
    std::string s;
    for (auto& w : *st) s += (s.empty() ? "" : " ") + w;
    return tree_from_parts(m, s);
  }
  return m;
}

std::optional<Orientation> orientation_of(const Record& r) {
  auto k = r.get("orient");
  if (!k) return std::nullopt;
  if (k->size() != 2 || (*k)[0] != "k") throw FormatError("bad orient line");
  return Orientation{to_int((*k)[1]), ints(need(r, "values"))};
}

std::vector<Color> spins_of(const Record& r) {
  std::vector<Color> out;
  if (auto s = r.get("spins"))
    for (char ch : letters(*s)) out.push_back(color_from(ch));
  return out;
}

namespace {
void fill_mobile(const Record& r, Mobile& t) {
  t.tree = map_of(r);
  t.tree.color.clear();
  auto s = letters(need(r, "types"));
  if (static_cast<int>(s.size()) != t.tree.nv) throw FormatError("types length");
  for (char ch : s) {
    if (ch != 'w' && ch != 'b' && ch != 's') throw FormatError("bad type letter");
    t.type.push_back(ch == 'w' ? NodeType::white : ch == 'b' ? NodeType::black : NodeType::square);
  }
  if (auto d = r.get("degrees")) t.map_degree = ints(*d);
}
}  // namespace

BlossomingMobile blossoming_mobile_of(const Record& r) {
  BlossomingMobile t;
  fill_mobile(r, t);
  auto o = orientation_of(r);
  if (!o || static_cast<int>(o->val.size()) != t.tree.darts()) throw FormatError("mobile orientation missing or short");
  t.o = *o;
  return t;
}

LabeledMobile labeled_mobile_of(const Record& r) {
  LabeledMobile t;
  fill_mobile(r, t);
  t.label = ints(need(r, "labels"));
  t.flag = ints(need(r, "flags"));
  if (static_cast<int>(t.label.size()) != t.tree.nv || static_cast<int>(t.flag.size()) != t.tree.darts())
    throw FormatError("labels/flags length");
  return t;
}

}  // namespace bmaps
