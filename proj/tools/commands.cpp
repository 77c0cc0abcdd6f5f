#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "bmaps/blossoming.hpp"
#include "bmaps/formats.hpp"
#include "bmaps/gf.hpp"
#include "bmaps/suites.hpp"

namespace bmaps::cli {

namespace {

const std::vector<std::string> verify_targets{"bijection", "round-trip", "tightness", "geodesic", "mobiles", "doubly-rooted"};
const std::vector<std::string> series_targets{"trees", "plane-maps", "quartic", "quartic-ising"};
const std::vector<std::string> enumerate_targets{"maps", "planar", "trees", "spin"};

void add_common(CLI::App* s, RunConfig& c) {
  s->add_option("--output,-o", c.output, "write the report to this file");
  s->add_option("--seed", c.seed, "seed for randomized runs");
}

void add_edges(CLI::App* s, RunConfig& c) {
  s->add_option("--edges", c.edges, "map edges")->check(CLI::Range(0, cap_edges));
}

void add_tree_edges(CLI::App* s, RunConfig& c) {
  s->add_option("--tree-edges", c.tree_edges, "tree edges")->check(CLI::Range(0, cap_tree_edges));
}

void check_caps(const RunConfig& c) {
  auto over = [](int v, int cap) { return v > cap; };
  if (over(c.edges, cap_edges) || over(c.tree_edges, cap_tree_edges) || over(c.t_order, cap_t_order) ||
      over(c.order, cap_order) || over(c.vertices, cap_vertices))
    throw UsageError("budget above the compiled-in cap");
}

struct Phase {
  std::ostream& err;
  std::string name;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  ~Phase() {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "# phase " << name << ": " << dt.count() << " s\n";
  }
};

int finish(const Report& r, std::ostream& out, std::ostream& err) {
  out << r.str();
  if (r.pass()) return 0;
  out << "FAILED: " << r.first_failure() << '\n';
  err << "first failing check: " << r.first_failure() << '\n';
  return 1;
}

Color color_arg(const std::string& s) { return s == "b" ? Color::black : Color::white; }

int first_dart_at(const Map& m, int v) {
  for (int h = 0; h < m.darts(); ++h)
    if (m.vert[h] == v) return h;
  return -1;
}

std::vector<Record> input(const RunConfig& c) {
  try {
    return read_records_file(c.target);
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
}

// A record without a colors line gets the 2-colouring with a white root.
Map load(const Record& r) {
  Map m = map_of(r);
  if (m.color.empty() && m.darts() > 0) m.color = bipartite_coloring(m, Color::white);
  return m;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err, int threads) {
  static const std::map<std::string, std::function<Report(const SuiteOptions&)>> suites{
      {"bijection", suite_bijection},   {"round-trip", suite_round_trip}, {"tightness", suite_tightness},
      {"geodesic", suite_geodesic},     {"mobiles", suite_mobiles},       {"doubly-rooted", suite_doubly_rooted}};
  SuiteOptions o{c.edges, c.tree_edges, -1, threads};
  Report r;
  {
    Phase p{err, c.target};
    r = suites.at(c.target)(o);
  }
  return finish(r, out, err);
}

int cmd_series(const RunConfig& c, std::ostream& out, std::ostream& err, int threads) {
  SuiteOptions o{c.edges, c.tree_edges, c.order, threads};
  Report r;
  if (c.target == "trees") {
    int T = c.tree_edges < 0 ? 6 : c.tree_edges;
    std::vector<int> ds;
    for (int k = 1; k <= 2 * T; ++k) ds.push_back(k);
    {
      Phase p{err, "solve"};
      auto s = solve_tree_system(map_ring(T, ds));
      out << "## B\n" << s.B.dump() << "## W\n" << s.W.dump();
    }
    Phase p{err, "checks"};
    r = suite_tree_series(o);
  } else if (c.target == "plane-maps") {
    int N = c.edges < 0 ? 5 : c.edges;
    {
      Phase p{err, "solve"};
      auto s = solve_tree_system(map_ring(N));
      out << "## M-bar\n" << plane_map_series(s).dump();
    }
    Phase p{err, "checks"};
    r = suite_plane_series(o);
  } else if (c.target == "quartic") {
    int N = c.order < 0 ? 10 : c.order;
    {
      Phase p{err, "solve"};
      auto q = quartic_closed_forms(N);
      out << "## P\n" << q.P.dump() << "## M\n" << q.M.dump() << "## M_4\n" << q.M4.dump();
    }
    Phase p{err, "checks"};
    r = suite_quartic(o);
  } else {
    int T = c.t_order < 0 ? 12 : c.t_order;
    o.order = T;
    {
      Phase p{err, "solve"};
      out << "## Q\n" << solve_Q(T).dump() << "## I\n" << ising_series(std::min(T, 6)).dump();
    }
    Phase p{err, "checks"};
    r = suite_ising(o);
  }
  return finish(r, out, err);
}

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Phase p{err, "enumerate"};
  std::vector<std::string> recs;
  Color rc = color_arg(c.root);
  if (c.target == "maps") {
    std::optional<int> md;
    if (c.max_degree > 0) md = c.max_degree;
    for (auto& m : enumerate_bipartite_plane_maps(c.edges < 0 ? 3 : c.edges, md, rc)) recs.push_back(write_map(m));
  } else if (c.target == "planar") {
    GenOptions g;
    if (c.max_degree > 0) g.max_degree = c.max_degree;
    for (auto& m : enumerate_rooted_planar(c.edges < 0 ? 3 : c.edges, g)) recs.push_back(write_map(m));
  } else if (c.target == "trees") {
    std::optional<int> md;
    if (c.max_degree > 0) md = c.max_degree;
    for (auto& t : enumerate_well_charged_trees(c.charge, c.tree_edges < 0 ? 3 : c.tree_edges, md, rc))
      recs.push_back(write_tree(t));
  } else {
    for (auto& s : enumerate_spin_maps(c.vertices < 0 ? 2 : c.vertices, 4)) recs.push_back(write_map(s.map, &s.spins.spin));
  }
  out << "# count " << recs.size() << '\n';
  for (size_t i = 0; i < recs.size(); ++i) out << (i ? "\n" : "") << recs[i];
  return 0;
}

int cmd_orient(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Phase p{err, "orient"};
  bool first = true;
  for (auto& r : input(c)) {
    Map m = load(r);
    int d = c.d < 0 ? std::max(1, m.max_degree(Color::white)) : c.d;
    Orientation o;
    if (c.k < 0) {
      o = minimal_alpha_d(m, d);
    } else {
      if (c.tau < 1 || c.tau > m.darts()) throw UsageError("--tau must name a dart of the map");
      auto q = alpha_dk_orientation(m, m.vert[c.tau - 1], d, c.k, c.sign == "+" ? Sign::plus : Sign::minus);
      if (!q) {
        out << "FAILED: alpha_{d,k} orientation infeasible\n";
        return 1;
      }
      o = *q;
    }
    out << (first ? "" : "\n") << write_map(m) << write_orientation(o);
    first = false;
  }
  return 0;
}

int cmd_close(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Phase p{err, "close"};
  bool first = true;
  for (auto& r : input(c)) {
    Map t = load(r);
    out << (first ? "" : "\n");
    first = false;
    if (charge(t).total == 0) {
      out << write_map(closure(t));
    } else {
      auto pm = complete_closure(t);
      out << write_map(pm.map) << "tau " << first_dart_at(pm.map, pm.tau) + 1 << '\n';
    }
  }
  return 0;
}

int cmd_open(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Phase p{err, "open"};
  bool first = true;
  for (auto& r : input(c)) {
    Map m = load(r);
    Map t;
    bool pointed = false;
    try {
      if (auto o = orientation_of(r)) {
        t = opening(m, *o);
      } else if (auto tw = r.get("tau")) {
        if (tw->size() != 1) throw UsageError("bad tau line");
        int h = std::stoi((*tw)[0]) - 1;
        if (h < 0 || h >= m.darts()) throw UsageError("tau dart out of range");
        Pointed pm{m, m.vert[h]};
        pointed = true;
        int d = c.d < 0 ? std::max({1, m.max_degree(Color::white), m.max_degree(Color::black)}) : c.d;
        t = open_pointed(pm, d);
        if (pointed_code(complete_closure(t)) != pointed_code(pm)) throw BlossomError("opening mismatch");
      } else {
        t = open_plane(m, c.d < 0 ? std::max(1, m.max_degree(Color::white)) : c.d);
      }
      if (!pointed && canonical_code(closure(t)) != canonical_code(m))
        throw BlossomError("opening mismatch");
    } catch (const BlossomError& e) {
      out << "FAILED: " << e.what() << '\n';
      err << "first failing check: " << e.what() << '\n';
      return 1;
    }
    out << (first ? "" : "\n") << write_tree(t);
    first = false;
  }
  return 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args, std::string* help) {
  RunConfig c;
  CLI::App app{"Blossoming bijections for bipartite plane maps", "bmaps"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "exhaustive verification suites");
  v->add_option("what", c.target)->required()->check(CLI::IsMember(verify_targets));
  add_edges(v, c);
  add_tree_edges(v, c);
  add_common(v, c);

  auto* s = app.add_subcommand("series", "coefficient dumps and identity checks");
  s->add_option("what", c.target)->required()->check(CLI::IsMember(series_targets));
  add_edges(s, c);
  add_tree_edges(s, c);
  s->add_option("--order", c.order, "series order in edges")->check(CLI::Range(1, cap_order));
  s->add_option("--t-order", c.t_order, "Ising order in t")->check(CLI::Range(1, cap_t_order));
  add_common(s, c);

  auto* e = app.add_subcommand("enumerate", "dump maps, trees or spin maps");
  e->add_option("what", c.target)->required()->check(CLI::IsMember(enumerate_targets));
  add_edges(e, c);
  add_tree_edges(e, c);
  e->add_option("--charge", c.charge, "tree charge")->check(CLI::Range(-cap_tree_edges, cap_tree_edges));
  e->add_option("--root", c.root, "root colour")->check(CLI::IsMember({"w", "b"}));
  e->add_option("--max-degree", c.max_degree)->check(CLI::Range(1, 2 * cap_tree_edges));
  e->add_option("--vertices", c.vertices, "spin map vertices")->check(CLI::Range(1, cap_vertices));
  add_common(e, c);

  auto* o = app.add_subcommand("orient", "minimal alpha_d or alpha_{d,k} orientation of each map in a file");
  o->add_option("file", c.target)->required();
  o->add_option("--d", c.d)->check(CLI::Range(1, 4 * cap_edges));
  o->add_option("--k", c.k)->check(CLI::Range(1, 4 * cap_edges));
  o->add_option("--sign", c.sign)->check(CLI::IsMember({"-", "+"}));
  o->add_option("--tau", c.tau, "1-based dart at the marked vertex");
  add_common(o, c);

  auto* cl = app.add_subcommand("close", "closure of each tree in a file");
  cl->add_option("file", c.target)->required();
  add_common(cl, c);

  auto* op = app.add_subcommand("open", "opening of each map in a file");
  op->add_option("file", c.target)->required();
  op->add_option("--d", c.d)->check(CLI::Range(1, 4 * cap_edges));
  add_common(op, c);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return c;
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }
  if (c.k >= 0 && c.tau < 0) throw UsageError("--k needs --tau");
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return c;
}

std::string config_text(const RunConfig& c) {
  std::ostringstream os;
  os << c.command << ' ' << c.target;
  auto opt = [&](const char* name, int v) {
    if (v >= 0) os << " --" << name << ' ' << v;
  };
  opt("edges", c.edges);
  opt("tree-edges", c.tree_edges);
  opt("order", c.order);
  opt("t-order", c.t_order);
  opt("vertices", c.vertices);
  if (c.charge != 0) os << " --charge " << c.charge;
  opt("d", c.d);
  opt("k", c.k);
  opt("tau", c.tau);
  opt("max-degree", c.max_degree);
  if (c.sign != "-") os << " --sign " << c.sign;
  if (c.root != "w") os << " --root " << c.root;
  if (!c.output.empty()) os << " --output " << c.output;
  if (c.seed != 1) os << " --seed " << c.seed;
  return os.str();
}

int run(const RunConfig& c, std::ostream& out_default, std::ostream& err, int threads) {
  check_caps(c);
  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output);
    if (!file) throw UsageError("cannot write " + c.output);
  }
  std::ostream& out = c.output.empty() ? out_default : file;
  out << "# bmaps " << version << ' ' << config_text(c) << '\n';
  if (c.command == "verify") return cmd_verify(c, out, err, threads);
  if (c.command == "series") return cmd_series(c, out, err, threads);
  if (c.command == "enumerate") return cmd_enumerate(c, out, err);
  if (c.command == "orient") return cmd_orient(c, out, err);
  if (c.command == "close") return cmd_close(c, out, err);
  if (c.command == "open") return cmd_open(c, out, err);
  throw UsageError("unknown command " + c.command);
}

}  // namespace bmaps::cli
