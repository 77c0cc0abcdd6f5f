#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmaps/planar_map.hpp"

namespace bmaps {

using Rational = mpq_class;

constexpr int kMaxVars = 40;
using Exps = std::array<std::int16_t, kMaxVars>;

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Variables with a grading weight (>= 0) and an optional exponent cap. At most
// one variable may be Laurent (the xi variable); its exponents live in a window.
// Terms of grade > order or above a cap are dropped; leaving the xi window
// while still inside the order is an error.
class Ring {
 public:
  struct Var {
    std::string name;
    int weight = 0;
    int cap = -1;  // -1: none
  };
  Ring(std::vector<Var> vars, int order, std::string xi = "", int xi_window = 0);

  int size() const { return static_cast<int>(vars_.size()); }
  const Var& var(int i) const { return vars_[i]; }
  int order() const { return order_; }
  int xi() const { return xi_; }
  int xi_window() const { return window_; }
  std::optional<int> find(const std::string& name) const;
  int index(const std::string& name) const;
  int grade(const Exps& e) const;
  // False when the term is truncated away; throws on a window overflow.
  bool keep(const Exps& e) const;
  // Same variables, different order (and optionally caps).
  std::shared_ptr<const Ring> with_order(int order) const;

 private:
  std::vector<Var> vars_;
  int order_;
  int xi_ = -1;
  int window_ = 0;
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Ring::Var> vars, int order, std::string xi = "", int xi_window = 0);

class Series {
 public:
  using Terms = std::map<Exps, Rational>;

  Series() = default;
  explicit Series(RingPtr r) : ring_(std::move(r)) {}

  static Series constant(const RingPtr& r, const Rational& c);
  static Series var(const RingPtr& r, const std::string& name, int e = 1);
  static Series monomial(const RingPtr& r, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Exps& e, const Rational& c);

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const Rational& c) const;
  Series& operator+=(const Series& o);
  bool operator==(const Series& o) const;

  Series pow(int n) const;
  Series invert_unit() const;
  Series differentiate(const std::string& v) const;
  Series integrate(const std::string& v) const;

  // xi operators on the ring's Laurent variable.
  Series xi_le(int p) const;
  Series xi_ge(int p) const;
  Series xi_coeff(int k) const;

  // Terms with v^e, v removed.
  Series coefficient(const std::string& v, int e) const;
  // Multiply by v^e (e may be negative); negative exponents of a non-Laurent variable throw.
  Series shift(const std::string& v, int e) const;
  // Exact division by a univariate polynomial sum_j c[j] v^j; throws when inexact.
  Series divide_exact(const std::string& v, const std::vector<Rational>& c) const;

  // Ring homomorphism into `target`: each variable goes to images[name], or to the
  // same-named variable of target. Negative exponents need a monomial image.
  Series substitute(const RingPtr& target, const std::map<std::string, Series>& images) const;
  // Same ring, one variable replaced.
  Series substitute(const std::string& v, const Series& image) const;
  // Re-truncate into a compatible ring (variables matched by name, missing ones must be absent).
  Series convert(const RingPtr& target) const;

  std::map<Monomial, Rational> to_monomials() const;
  Monomial monomial_of(const Exps& e) const;
  // One line per term: "<rational> <var>^<exp> ...", lines sorted.
  std::string dump() const;

 private:
  RingPtr ring_;
  Terms terms_;
  void check_ring(const Series& o) const;
};

Series from_monomials(const RingPtr& r, const std::map<Monomial, Rational>& m);

}  // namespace bmaps
