#include "bmaps/gf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace bmaps {

namespace {

std::string xn(Color c, int k) { return (c == Color::white ? "x" : "y") + std::to_string(k); }

int max_degree_in(const RingPtr& r) {
  int m = -1;
  for (int i = 0; i < r->size(); ++i) {
    const auto& n = r->var(i).name;
    if (n.size() > 1 && (n[0] == 'x' || n[0] == 'y') && std::isdigit(static_cast<unsigned char>(n[1])))
      m = std::max(m, std::stoi(n.substr(1)));
  }
  return m;
}

// sum_{l >= from} v_{l + shift} Z^l by Horner, v = x or y.
Series degree_sum(const RingPtr& r, Color c, const Series& Z, int from, int shift) {
  int top = max_degree_in(r) - shift;
  Series acc(r);
  for (int l = top; l >= from; --l) {
    acc = acc * Z + Series::var(r, xn(c, l + shift));
  }
  if (from > 0) acc = acc * Z.pow(from);
  return acc;
}

Series xi_var(const RingPtr& r, int e = 1) { return Series::var(r, r->var(r->xi()).name, e); }

}  // namespace

RingPtr map_ring(int order_edges, const std::vector<int>& degrees) {
  std::vector<Ring::Var> v;
  std::vector<int> ds = degrees;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (int k : ds)
    if (k <= 2 * order_edges) v.push_back({"x" + std::to_string(k), k, k == 0 ? 1 : -1});
  for (int k : ds)
    if (k <= 2 * order_edges) v.push_back({"y" + std::to_string(k), k, k == 0 ? 1 : -1});
  v.push_back({"u", 0, -1});
  v.push_back({"xi", 0, -1});
  return make_ring(v, 2 * order_edges, "xi", 2 * order_edges + 3);
}

RingPtr map_ring(int order_edges) {
  std::vector<int> ds;
  for (int k = 0; k <= 2 * order_edges; ++k) ds.push_back(k);
  return map_ring(order_edges, ds);
}

TreeSeriesPair solve_tree_system(const RingPtr& r) {
  Series u = Series::var(r, "u");
  Series xi = xi_var(r), xinv = xi_var(r, -1);
  TreeSeriesPair p{Series(r), Series(r)};
  for (int it = 0; it <= r->order() + 2; ++it) {
    Series B = degree_sum(r, Color::black, u * xinv + p.W, 0, 1).xi_le(1);
    Series W = degree_sum(r, Color::white, xi + p.B, 0, 1).xi_ge(0);
    if (B == p.B && W == p.W) return p;
    p.B = std::move(B);
    p.W = std::move(W);
  }
  throw SeriesError("tree system did not stabilise");
}

TreeSeriesPair solve_tree_system(int max_degree, int order_edges) {
  std::vector<int> ds;
  for (int k = 1; k <= max_degree; ++k) ds.push_back(k);
  return solve_tree_system(map_ring(order_edges, ds));
}

Series plane_map_series(const TreeSeriesPair& p) {
  const RingPtr& r = p.B.ring();
  return degree_sum(r, Color::white, xi_var(r) + p.B, 0, 0).xi_coeff(0);
}

Series planar_map_series(const TreeSeriesPair& p) { return plane_map_series(p).integrate("u"); }

Series plane_map_series_rooted_degree(const TreeSeriesPair& p, int deg) {
  const RingPtr& r = p.B.ring();
  return (Series::var(r, xn(Color::white, deg)) * (xi_var(r) + p.B).pow(deg)).xi_coeff(0);
}

Series trumpet_cornet_series(const TreeSeriesPair& p, int k, Color root, Tightness kind) {
  if (k < 1) throw SeriesError("trumpet/cornet series need k >= 1");
  if (kind == Tightness::neither) throw SeriesError("kind must be trumpet or cornet");
  const RingPtr& r = p.B.ring();
  Series u = Series::var(r, "u");
  Series sum = root == Color::white ? degree_sum(r, Color::white, xi_var(r) + p.B, 1, 0)
                                    : degree_sum(r, Color::black, u * xi_var(r, -1) + p.W, 1, 0);
  if (kind == Tightness::trumpet) return sum.xi_coeff(k).shift("u", k);
  return sum.xi_coeff(-k);
}

Series doubly_rooted_series(const TreeSeriesPair& p, RootColors c) {
  const RingPtr& r = p.B.ring();
  Color first = c == RootColors::bb ? Color::black : Color::white;
  Color second = c == RootColors::ww ? Color::white : Color::black;
  Series out(r);
  for (int k = 1; k <= r->order(); ++k) {
    Series t = trumpet_cornet_series(p, k, first, Tightness::trumpet);
    if (t.zero()) continue;
    Series cc = trumpet_cornet_series(p, k, second, Tightness::cornet);
    out += (t * cc).shift("u", -k) * Rational(k);
  }
  return out;
}

Series swap_colors(const Series& s) {
  const RingPtr& r = s.ring();
  std::map<std::string, Series> img;
  for (int i = 0; i < r->size(); ++i) {
    const auto& n = r->var(i).name;
    if (n.size() > 1 && (n[0] == 'x' || n[0] == 'y') && std::isdigit(static_cast<unsigned char>(n[1]))) {
      std::string other = (n[0] == 'x' ? "y" : "x") + n.substr(1);
      if (!r->find(other)) throw SeriesError("swap_colors: missing " + other);
      img.emplace(n, Series::var(r, other));
    }
  }
  return s.substitute(r, img);
}

RingPtr quartic_ring(int order_edges) {
  return make_ring({{"x2", 2}, {"x4", 4}, {"y2", 2}, {"y4", 4}, {"u", 0}}, 2 * order_edges);
}

namespace catalog {

Series quartic_P_rhs(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                     const Series& y4, const Series& u) {
  Series one = Series::constant(P.ring(), 1);
  Series D = one - x4 * y4 * P * P * Rational(9);
  Series Dinv = D.invert_unit();
  return u + x4 * y4 * P.pow(3) * Rational(3) +
         P * (x2 + x4 * y2 * P * Rational(3)) * (y2 + x2 * y4 * P * Rational(3)) * Dinv * Dinv;
}

// [xi^0] x4 (xi + B)^4 = x4 (4 a^3 B_{-3} + 6 a^2 B_{-1}^2) with a = P/u.
Series Mbar4_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                     const Series& y4) {
  Series one = Series::constant(P.ring(), 1);
  Series frac = (y2 + x2 * y4 * P * Rational(3)) * (one - x4 * y4 * P * P * Rational(9)).invert_unit();
  return x4 * P * P * (y4 * P * Rational(2) + frac * frac * Rational(3)) * Rational(2);
}

Series Mbar4_quartic_literal(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                             const Series& y4) {
  Series one = Series::constant(P.ring(), 1);
  Series frac = (y2 + x2 * y4 * P * Rational(3)) * (one - x4 * y4 * P * P * Rational(9)).invert_unit();
  return x4 * P * P * (y4 * P + frac * frac * Rational(3)) * Rational(2);
}

Series Mbar_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                    const Series& y4) {
  Series one = Series::constant(P.ring(), 1);
  Series frac = (y2 + x2 * y4 * P * Rational(3)) * (one - x4 * y4 * P * P * Rational(9)).invert_unit();
  return x2 * P * frac * Rational(2) + Mbar4_quartic(P, x2, x4, y2, y4);
}

Series M_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                 const Series& y4, const Series& u) {
  Series one = Series::constant(P.ring(), 1);
  Series xy = x4 * y4;
  Series P2 = P * P, P3 = P2 * P, P4 = P2 * P2;
  return xy * xy * P4 * P2 * Rational(15) - xy * P4 * Rational(5) + u * xy * P3 * Rational(4) +
         (x2 * y2 - one) * P2 * Rational(1, 3) + u * P * Rational(4, 3) - u * u;
}

Series pol_M4(const Series& x2, const Series& x4, const Series& y2, const Series& y4,
              const Series& u, const Series& p) {
  Series one = Series::constant(p.ring(), 1);
  Series p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p5 = p4 * p, p6 = p3 * p3, p8 = p4 * p4;
  Series x4_2 = x4 * x4, x4_3 = x4_2 * x4, x4_4 = x4_2 * x4_2;
  Series y4_2 = y4 * y4, y4_3 = y4_2 * y4;
  Series x2_2 = x2 * x2, x2_4 = x2_2 * x2_2;
  Series s = x4_4 * y4_3 * p8 * Rational(1215);
  s += -(x4_3 * y4_2 * p6 * Rational(540));
  s += x4_2 * y4_2 * (x4 * u * Rational(12) - x2_2) * p5 * Rational(27);
  s += x4_2 * y4 * (one - x2 * y2) * p4 * Rational(18);
  s += x4 * y4 * (x4 * u * Rational(12) - x2_2 * Rational(5)) * p3 * Rational(6);
  s += (x2_2 * x4 * y4 * u * Rational(45) + x4 * Rational(3) - x2_4 * y4 * Rational(3) -
        x4 * x2 * y2 * Rational(6) - x4_2 * y4 * u * u * Rational(81)) *
       p2;
  s += (one - x2 * y2) * (x2_2 - x4 * u * Rational(12)) * p;
  s += u * (x4 * u * Rational(9) - x2_2);
  return s;
}

Series Q_numerator(const Series& x, const Series& y, const Series& nu, const Series& Q) {
  Series one = Series::constant(Q.ring(), 1);
  Series m = one - nu * nu;  // 1 - nu^2
  Series m2 = m * m, m3 = m2 * m, m5 = m3 * m2;
  Series xy = x * y;
  Series Q2 = Q * Q, Q4 = Q2 * Q2, Q6 = Q4 * Q2;
  return one - nu * nu * (x + y) * Q * Rational(3) -
         xy * m * (nu * nu * Rational(3) + one * Rational(7)) * Q2 * Rational(3) +
         xy * xy * m3 * Q4 * Rational(135) - xy * xy * xy * m5 * Q6 * Rational(243);
}

Series Q_denominator(const Series& x, const Series& y, const Series& nu, const Series& Q) {
  Series one = Series::constant(Q.ring(), 1);
  Series m = one - nu * nu;
  return one - x * y * m * m * Q * Q * Rational(9);
}

Series pol_I(const Series& x, const Series& y, const Series& t, const Series& nu, const Series& u,
             const Series& q) {
  Series one = Series::constant(q.ring(), 1);
  Series m = one - nu * nu;
  Series m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
  Series nu2 = nu * nu, t2 = t * t, t4 = t2 * t2;
  Series xy = x * y;
  Series q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q5 = q4 * q, q6 = q3 * q3, q7 = q6 * q;
  Series s = x * x * x * y * y * m4 * q7 * Rational(405);
  s += xy * xy * m3 * q6 * Rational(351);
  s += xy * m2 * (nu2 * y - (one * Rational(5) + t2 * u * m2 * y * Rational(12)) * x) * q5 * Rational(27);
  s += xy * m * (t2 * u * m2 * x * Rational(36) - nu2 * Rational(3) - one * Rational(47)) * q4 * Rational(3);
  s += ((t2 * u * m2 * y * Rational(252) - nu2 * Rational(6) - one * Rational(9)) * x - nu2 * y * Rational(15)) * q3;
  s += ((t2 * u * m * Rational(36) - t4 * u * u * y * m3 * Rational(108)) * x + one * Rational(5) +
        nu2 * t2 * u * m * y * Rational(9)) *
       q2;
  s += -(t2 * u * (t2 * u * m2 * x * Rational(27) - nu2 * Rational(3) + one * Rational(8)) * q);
  s += t4 * u * u * m * Rational(3);
  return s;
}

}  // namespace catalog

namespace {

Series fixed_point(Series start, const std::function<Series(const Series&)>& f, int limit) {
  for (int it = 0; it < limit; ++it) {
    Series next = f(start);
    if (next == start) return start;
    start = std::move(next);
  }
  throw SeriesError("fixed point iteration did not stabilise");
}

int iteration_limit(const RingPtr& r) {
  int lim = r->order() + 4;
  for (int i = 0; i < r->size(); ++i)
    if (r->var(i).cap > 0) lim += r->var(i).cap;
  return 4 * lim;
}

}  // namespace

Series quartic_P(const RingPtr& r) {
  Series x2 = Series::var(r, "x2"), x4 = Series::var(r, "x4");
  Series y2 = Series::var(r, "y2"), y4 = Series::var(r, "y4"), u = Series::var(r, "u");
  return fixed_point(u, [&](const Series& P) { return catalog::quartic_P_rhs(P, x2, x4, y2, y4, u); },
                     iteration_limit(r));
}

Series quartic_P_square(const RingPtr& r) {
  Series nu = Series::var(r, "nu"), t = Series::var(r, "t"), u = Series::var(r, "u");
  Series x = Series::var(r, "x4") * t * t, y = Series::var(r, "y4") * t * t;
  return fixed_point(u, [&](const Series& P) { return catalog::quartic_P_rhs(P, nu, x, nu, y, u); },
                     iteration_limit(r));
}

QuarticForms quartic_closed_forms(int order_edges) {
  // the Pol division by x4 costs two edges of order
  RingPtr big = quartic_ring(order_edges + 2);
  RingPtr r = quartic_ring(order_edges);
  Series P = quartic_P(big);
  auto v = [&](const char* n) { return Series::var(big, n); };
  Series x2 = v("x2"), x4 = v("x4"), y2 = v("y2"), y4 = v("y4"), u = v("u");

  QuarticForms q;
  q.P = P.convert(r);
  q.M = catalog::M_quartic(P, x2, x4, y2, y4, u).convert(r);
  q.Mbar = catalog::Mbar_quartic(P, x2, x4, y2, y4).convert(r);
  Series pol = catalog::pol_M4(x2, x4, y2, y4, u, P).shift("x4", -1).convert(r);
  Series Pr = q.P;
  Series den = Series::var(r, "x4") * Series::var(r, "y4") * Pr * Pr * Rational(81) -
               Series::constant(r, 9);
  q.M4 = pol * den.invert_unit();

  if (!(q.M.differentiate("u") == q.Mbar)) throw SeriesError("d/du M differs from M-bar");
  Series mbar4 = catalog::Mbar4_quartic(q.P, Series::var(r, "x2"), Series::var(r, "x4"),
                                        Series::var(r, "y2"), Series::var(r, "y4"));
  if (!(q.M4.differentiate("u") == mbar4)) throw SeriesError("d/du M4 differs from M-bar4");

  TreeSeriesPair trees = solve_tree_system(map_ring(order_edges, {2, 4}));
  Series B1 = trees.B_k(1).convert(r);
  if (!(q.P == Series::var(r, "u") * (Series::constant(r, 1) + B1)))
    throw SeriesError("P differs from u(1+B_1)");
  if (!(plane_map_series(trees).convert(r) == q.Mbar))
    throw SeriesError("closed-form M-bar differs from the tree series");
  if (!(plane_map_series_rooted_degree(trees, 4).convert(r) == mbar4))
    throw SeriesError("closed-form M-bar4 differs from the tree series");
  return q;
}

RingPtr ising_ring(int t_order, int nu_cap) {
  return make_ring({{"x4", 0}, {"y4", 0}, {"t", 1}, {"nu", 0, nu_cap}, {"u", 0}}, t_order);
}

RingPtr square_ring(int t_order, int nu_cap) {
  return make_ring({{"x2", 0}, {"x4", 0}, {"y2", 0}, {"y4", 0}, {"t", 1}, {"nu", 0, nu_cap}, {"u", 0}},
                   t_order);
}

Series theta_apply(const Series& s, ThetaDirection d) {
  const RingPtr& r = s.ring();
  Series t = Series::var(r, "t"), nu = Series::var(r, "nu");
  Series m = Series::constant(r, 1) - nu * nu;
  if (d == ThetaDirection::theta_inverse) return s.substitute("t", t * m);
  if (r->var(r->index("nu")).cap < 0) throw SeriesError("theta needs a nu cap");
  return s.substitute("t", t * m.invert_unit());
}

Series square_substitution(const Series& s, const RingPtr& target) {
  const RingPtr& r = s.ring();
  Series t = Series::var(target, "t"), nu = Series::var(target, "nu");
  std::map<std::string, Series> img;
  for (int i = 0; i < r->size(); ++i) {
    const auto& n = r->var(i).name;
    if (n.size() > 1 && (n[0] == 'x' || n[0] == 'y') && std::isdigit(static_cast<unsigned char>(n[1]))) {
      int k = std::stoi(n.substr(1));
      if (k % 2) throw SeriesError("square substitution needs even degrees, found " + n);
      Series im = Series::var(target, n) * t.pow(k / 2);
      if (k == 2) im += nu;
      img.emplace(n, im);
    }
  }
  return s.substitute(target, img);
}

Series solve_Q(int t_order) {
  RingPtr r = ising_ring(t_order);
  Series x = Series::var(r, "x4"), y = Series::var(r, "y4"), nu = Series::var(r, "nu");
  Series ut2 = Series::var(r, "u") * Series::var(r, "t", 2);
  Series Q = fixed_point(
      Series(r),
      [&](const Series& q) {
        Series D = catalog::Q_denominator(x, y, nu, q);
        return ut2 * D * D * catalog::Q_numerator(x, y, nu, q).invert_unit();
      },
      iteration_limit(r));
  Series D = catalog::Q_denominator(x, y, nu, Q);
  if (!(Q * catalog::Q_numerator(x, y, nu, Q) == ut2 * D * D))
    throw SeriesError("Q does not solve its equation");
  for (auto& [e, c] : Q.terms())
    if (c < 0 || c.get_den() != 1)
      throw SeriesError("Q coefficient " + c.get_str() + " is not a non-negative integer");
  return Q;
}

Series ising_series(const Series& Q, int t_order) {
  RingPtr big = Q.ring();
  if (big->order() < t_order + 4) throw SeriesError("Q needed to t^(order+4)");
  auto v = [&](const char* n) { return Series::var(big, n); };
  Series num = catalog::pol_I(v("x4"), v("y4"), v("t"), v("nu"), v("u"), Q);
  num = num.shift("t", -4).divide_exact("nu", {1, 0, -1});
  RingPtr r = ising_ring(t_order, big->var(big->index("nu")).cap);
  Series q = Q.convert(r);
  Series den = (Series::constant(r, 1) +
                Series::var(r, "x4") * (Series::constant(r, 1) - Series::var(r, "nu", 2)) * q * Rational(3)) *
               Rational(9);
  return num.convert(r) * den.invert_unit();
}

Series ising_series(int t_order) { return ising_series(solve_Q(t_order + 4), t_order); }

Series square_rooted_series(int t_order, int nu_cap) {
  RingPtr big = ising_ring(t_order + 2, nu_cap);
  RingPtr r = ising_ring(t_order, nu_cap);
  Series P = quartic_P_square(big);
  Series t = Series::var(big, "t"), nu = Series::var(big, "nu"), u = Series::var(big, "u");
  Series x = Series::var(big, "x4") * t * t, y = Series::var(big, "y4") * t * t;
  Series pol = catalog::pol_M4(nu, x, nu, y, u, P).shift("x4", -1).shift("t", -2).convert(r);
  Series Pr = P.convert(r);
  Series xr = Series::var(r, "x4") * Series::var(r, "t", 2), yr = Series::var(r, "y4") * Series::var(r, "t", 2);
  Series den = xr * yr * Pr * Pr * Rational(81) - Series::constant(r, 9);
  return pol * den.invert_unit();
}

}  // namespace bmaps
