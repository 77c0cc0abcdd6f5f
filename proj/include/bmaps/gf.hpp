#pragma once

#include <vector>

#include "bmaps/orientation.hpp"
#include "bmaps/series.hpp"

namespace bmaps {

// Map series rings. Variables x<k>, y<k> (weight k) for k in the degree set,
// u (weight 0) and the Laurent variable xi. The grading is twice the number of
// edges, so `order_edges` N keeps grades <= 2N; the xi window is +-(2N+3).
RingPtr map_ring(int order_edges, const std::vector<int>& degrees);
RingPtr map_ring(int order_edges);  // degrees 0..2N

struct TreeSeriesPair {
  Series B, W;
  Series B_k(int k) const { return B.xi_coeff(k); }
  Series W_k(int k) const { return W.xi_coeff(k); }
};
TreeSeriesPair solve_tree_system(const RingPtr& r);
TreeSeriesPair solve_tree_system(int max_degree, int order_edges);

// M-bar for white roots (weight u^{F-1}); planar_map_series integrates it in u.
Series plane_map_series(const TreeSeriesPair& p);
Series planar_map_series(const TreeSeriesPair& p);
// Rooted at a white vertex of degree `deg`.
Series plane_map_series_rooted_degree(const TreeSeriesPair& p, int deg);

// Trumpet / cornet series for a marked vertex of degree k (k >= 1).
Series trumpet_cornet_series(const TreeSeriesPair& p, int k, Color root, Tightness kind);

enum class RootColors { ww, wb, bb };
Series doubly_rooted_series(const TreeSeriesPair& p, RootColors c);

// x<k> <-> y<k>.
Series swap_colors(const Series& s);

// Quartic case: variables x2, x4, y2, y4, u with the same doubled edge grading.
RingPtr quartic_ring(int order_edges);

// Closed-form catalog. Arguments may live in any ring.
namespace catalog {
Series quartic_P_rhs(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                     const Series& y4, const Series& u);
Series Mbar_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                    const Series& y4);
Series Mbar4_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                     const Series& y4);
// Variant with y4 P in place of 2 y4 P; it is short of the true series by 2 x4 y4 P^3.
Series Mbar4_quartic_literal(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                             const Series& y4);
Series M_quartic(const Series& P, const Series& x2, const Series& x4, const Series& y2,
                 const Series& y4, const Series& u);
Series pol_M4(const Series& x2, const Series& x4, const Series& y2, const Series& y4,
              const Series& u, const Series& p);
// Q * (numerator factor) = u t^2 (denominator)^2 rewritten as Q = u t^2 D^2 / N.
Series Q_numerator(const Series& x, const Series& y, const Series& nu, const Series& Q);
Series Q_denominator(const Series& x, const Series& y, const Series& nu, const Series& Q);
Series pol_I(const Series& x, const Series& y, const Series& t, const Series& nu, const Series& u,
             const Series& q);
}  // namespace catalog

// Fixed point of the quartic P equation in a ring holding x2, x4, y2, y4 and u.
Series quartic_P(const RingPtr& r);
// Same equation with x2 = y2 = nu, x4 = x4 t^2, y4 = y4 t^2 (ring from ising_ring with a nu cap).
Series quartic_P_square(const RingPtr& ising);

struct QuarticForms {
  Series P, M, Mbar, M4;
};
// Evaluates the closed forms at `order_edges` and asserts d/du M = M-bar, the
// agreement with the tree series and the exactness of the Pol division.
QuarticForms quartic_closed_forms(int order_edges);

// Ising rings: x4, y4, u (weight 0), t (weight 1), nu (weight 0, optional cap).
RingPtr ising_ring(int t_order, int nu_cap = -1);
// Bipartite maps with square vertices: x2, x4, y2, y4, u, nu (weight 0), t (weight 1).
RingPtr square_ring(int t_order, int nu_cap);

// t -> t/(1-nu^2) (needs a nu cap) or t -> t(1-nu^2).
enum class ThetaDirection { theta, theta_inverse };
Series theta_apply(const Series& s, ThetaDirection d);

// x_k -> x_k t^{k/2} + nu [k=2], same for y. Round variables missing from the
// target ring are set to 0. Odd k throws.
Series square_substitution(const Series& s, const RingPtr& target);

// Q to t^order with the positivity assertion.
Series solve_Q(int t_order);
// I_o to t^order; Q must be known to t^{order+4}.
Series ising_series(const Series& Q, int t_order);
Series ising_series(int t_order);
// M_{o,4}(nu, x t^2, nu, y t^2, u) to t^order with nu <= nu_cap.
Series square_rooted_series(int t_order, int nu_cap);

}  // namespace bmaps
