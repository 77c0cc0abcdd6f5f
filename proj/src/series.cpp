#include "bmaps/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace bmaps {

namespace {

struct ExpsHash {
  std::size_t operator()(const Exps& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ static_cast<std::uint16_t>(v)) * 1099511628211ull;
    return h;
  }
};

Exps zero_exps() {
  Exps e{};
  return e;
}

}  // namespace

Ring::Ring(std::vector<Var> vars, int order, std::string xi, int xi_window)
    : vars_(std::move(vars)), order_(order), window_(xi_window) {
  if (static_cast<int>(vars_.size()) > kMaxVars) throw SeriesError("too many series variables");
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight < 0) throw SeriesError("negative grading weight");
    for (size_t j = 0; j < i; ++j)
      if (vars_[j].name == vars_[i].name) throw SeriesError("duplicate variable " + vars_[i].name);
  }
  if (!xi.empty()) xi_ = index(xi);
}

std::optional<int> Ring::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

int Ring::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw SeriesError("unknown series variable " + name);
  return *i;
}

int Ring::grade(const Exps& e) const {
  int g = 0;
  for (int i = 0; i < size(); ++i) g += vars_[i].weight * e[i];
  return g;
}

bool Ring::keep(const Exps& e) const {
  if (grade(e) > order_) return false;
  for (int i = 0; i < size(); ++i)
    if (vars_[i].cap >= 0 && e[i] > vars_[i].cap) return false;
  if (xi_ >= 0 && std::abs(e[xi_]) > window_)
    throw SeriesError("xi window overflow: exponent " + std::to_string(e[xi_]) + " outside +-" +
                      std::to_string(window_));
  return true;
}

RingPtr Ring::with_order(int order) const {
  return std::make_shared<Ring>(vars_, order, xi_ >= 0 ? vars_[xi_].name : "", window_);
}

RingPtr make_ring(std::vector<Ring::Var> vars, int order, std::string xi, int xi_window) {
  return std::make_shared<Ring>(std::move(vars), order, std::move(xi), xi_window);
}

// mpq_class(a, b) is not reduced; callers may pass one
static Rational reduced(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  return q;
}

Series Series::constant(const RingPtr& r, const Rational& c) {
  Series s(r);
  s.add_term(zero_exps(), reduced(c));
  return s;
}

Series Series::var(const RingPtr& r, const std::string& name, int e) {
  Series s(r);
  auto i = r->find(name);
  if (!i) return s;  // absent variable: zero
  Exps x = zero_exps();
  x[*i] = static_cast<std::int16_t>(e);
  s.add_term(x, 1);
  return s;
}

Series Series::monomial(const RingPtr& r, const Monomial& m, const Rational& c) {
  Series s(r);
  Exps x = zero_exps();
  for (auto& [v, e] : m.exps) x[r->index(v)] = static_cast<std::int16_t>(e);
  s.add_term(x, reduced(c));
  return s;
}

void Series::add_term(const Exps& e, const Rational& c) {
  if (c == 0 || !ring_->keep(e)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Series::coeff(const Monomial& m) const {
  Exps x = zero_exps();
  for (auto& [v, e] : m.exps) {
    auto i = ring_->find(v);
    if (!i) return 0;
    x[*i] = static_cast<std::int16_t>(e);
  }
  auto it = terms_.find(x);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const {
  auto it = terms_.find(zero_exps());
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::check_ring(const Series& o) const {
  if (ring_ != o.ring_) throw SeriesError("series from different rings");
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  r += o;
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (!ring_) return *this = o;
  if (!o.ring_) return *this;
  check_ring(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Rational& c) const {
  Series r(ring_);
  Rational q = reduced(c);
  if (q == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= q;
  return r;
}

Series Series::operator*(const Series& o) const {
  check_ring(o);
  const Ring& R = *ring_;
  int n = R.size();
  Series r(ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  // bucket the right factor by grade so that truncation prunes whole blocks
  std::vector<std::vector<const std::pair<const Exps, Rational>*>> by_grade(R.order() + 1);
  for (auto& t : o.terms_) {
    int g = R.grade(t.first);
    if (g <= R.order()) by_grade[g].push_back(&t);
  }
  std::unordered_map<Exps, Rational, ExpsHash> acc;
  Exps e;
  Rational prod;
  for (auto& [ea, ca] : terms_) {
    int ga = R.grade(ea);
    for (int gb = 0; ga + gb <= R.order(); ++gb)
      for (auto* tb : by_grade[gb]) {
        e = zero_exps();
        for (int i = 0; i < n; ++i) e[i] = static_cast<std::int16_t>(ea[i] + tb->first[i]);
        if (!R.keep(e)) continue;
        prod = ca * tb->second;
        auto [it, fresh] = acc.try_emplace(e, prod);
        if (!fresh) it->second += prod;
      }
  }
  for (auto& [k, v] : acc)
    if (v != 0) r.terms_.emplace(k, std::move(v));
  return r;
}

bool Series::operator==(const Series& o) const {
  return ring_->size() == o.ring_->size() && terms_ == o.terms_;
}

Series Series::pow(int n) const {
  if (n < 0) return invert_unit().pow(-n);
  Series result = constant(ring_, 1), base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Series Series::invert_unit() const {
  Rational c0 = constant_term();
  if (c0 == 0) throw SeriesError("invert_unit: zero constant term");
  // 1/(c0 (1 - z)) = (1/c0) sum z^j. Powers of z vanish after order + caps steps
  // unless z has a term in uncapped weight-0 variables only.
  Series z = constant(ring_, 1) - *this * Rational(1 / c0);
  Series inv = constant(ring_, 1), power = constant(ring_, 1);
  int bound = ring_->order() + 2;
  for (int i = 0; i < ring_->size(); ++i) bound += std::max(ring_->var(i).cap, 0);
  for (int j = 0; j < bound; ++j) {
    power = power * z;
    if (power.zero()) return inv * Rational(1 / c0);
    inv += power;
  }
  throw SeriesError("invert_unit: no convergence (weight-0 variable without cap?)");
}

Series Series::differentiate(const std::string& v) const {
  int i = ring_->index(v);
  Series r(ring_);
  for (auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps x = e;
    --x[i];
    r.add_term(x, c * e[i]);
  }
  return r;
}

Series Series::integrate(const std::string& v) const {
  int i = ring_->index(v);
  Series r(ring_);
  for (auto& [e, c] : terms_) {
    if (e[i] == -1) throw SeriesError("integrate: " + v + "^-1 term");
    Exps x = e;
    ++x[i];
    r.add_term(x, c / (e[i] + 1));
  }
  return r;
}

Series Series::xi_le(int p) const {
  int i = ring_->xi();
  if (i < 0) throw SeriesError("ring has no xi variable");
  Series r(ring_);
  for (auto& [e, c] : terms_)
    if (e[i] <= p) r.terms_.emplace(e, c);
  return r;
}

Series Series::xi_ge(int p) const {
  int i = ring_->xi();
  if (i < 0) throw SeriesError("ring has no xi variable");
  Series r(ring_);
  for (auto& [e, c] : terms_)
    if (e[i] >= p) r.terms_.emplace(e, c);
  return r;
}

Series Series::xi_coeff(int k) const {
  int i = ring_->xi();
  if (i < 0) throw SeriesError("ring has no xi variable");
  return coefficient(ring_->var(i).name, k);
}

Series Series::coefficient(const std::string& v, int k) const {
  int i = ring_->index(v);
  Series r(ring_);
  for (auto& [e, c] : terms_)
    if (e[i] == k) {
      Exps x = e;
      x[i] = 0;
      r.add_term(x, c);
    }
  return r;
}

Series Series::shift(const std::string& v, int k) const {
  int i = ring_->index(v);
  Series r(ring_);
  for (auto& [e, c] : terms_) {
    Exps x = e;
    x[i] = static_cast<std::int16_t>(x[i] + k);
    if (x[i] < 0 && i != ring_->xi())
      throw SeriesError("negative exponent of " + v + " after shift");
    r.add_term(x, c);
  }
  return r;
}

Series Series::divide_exact(const std::string& v, const std::vector<Rational>& c) const {
  int i = ring_->index(v);
  int dc = static_cast<int>(c.size()) - 1;
  while (dc >= 0 && c[dc] == 0) --dc;
  if (dc < 0) throw SeriesError("division by zero polynomial");
  // group by the other exponents, long division from the top degree in v
  std::map<Exps, std::map<int, Rational>> groups;
  for (auto& [e, k] : terms_) {
    Exps x = e;
    int d = x[i];
    x[i] = 0;
    groups[x][d] = k;
  }
  Series r(ring_);
  for (auto& [base, poly] : groups) {
    while (!poly.empty()) {
      auto top = std::prev(poly.end());
      int d = top->first;
      if (d < dc) throw SeriesError("inexact division by polynomial in " + v);
      Rational q = top->second / c[dc];
      for (int j = 0; j <= dc; ++j) {
        if (c[j] == 0) continue;
        Rational& slot = poly[d - dc + j];
        slot -= q * c[j];
        if (slot == 0) poly.erase(d - dc + j);
      }
      Exps x = base;
      x[i] = static_cast<std::int16_t>(d - dc);
      r.add_term(x, q);
    }
  }
  return r;
}

Series Series::substitute(const RingPtr& target, const std::map<std::string, Series>& images) const {
  const Ring& R = *ring_;
  std::vector<Series> img(R.size());
  for (int i = 0; i < R.size(); ++i) {
    auto it = images.find(R.var(i).name);
    if (it != images.end()) {
      if (it->second.ring() != target) throw SeriesError("substitution image in the wrong ring");
      img[i] = it->second;
    } else {
      if (!target->find(R.var(i).name)) {
        bool used = false;
        for (auto& [e, c] : terms_) used = used || e[i] != 0;
        if (used) throw SeriesError("substitute: no image for " + R.var(i).name);
        img[i] = Series(target);
        continue;
      }
      img[i] = var(target, R.var(i).name);
    }
  }
  // power caches
  std::vector<std::map<int, Series>> cache(R.size());
  std::function<const Series&(int, int)> power = [&](int i, int e) -> const Series& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    Series p(target);
    if (e == 0) {
      p = constant(target, 1);
    } else if (e == 1) {
      p = img[i];
    } else if (e > 1) {
      p = power(i, e - 1) * img[i];
    } else {
      if (img[i].size() != 1) throw SeriesError("negative power of a non-monomial image");
      auto& [x, c] = *img[i].terms().begin();
      Exps y = zero_exps();
      for (int j = 0; j < target->size(); ++j) y[j] = static_cast<std::int16_t>(x[j] * e);
      Rational ce = 1;
      for (int k = 0; k < -e; ++k) ce /= c;
      p.add_term(y, ce);
    }
    return cache[i].emplace(e, std::move(p)).first->second;
  };
  Series out(target);
  for (auto& [e, c] : terms_) {
    Series t = constant(target, c);
    for (int i = 0; i < R.size() && !t.zero(); ++i)
      if (e[i] != 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Series Series::substitute(const std::string& v, const Series& image) const {
  return substitute(ring_, {{v, image}});
}

Series Series::convert(const RingPtr& target) const {
  const Ring& R = *ring_;
  std::vector<int> where(R.size(), -1);
  for (int i = 0; i < R.size(); ++i)
    if (auto j = target->find(R.var(i).name)) where[i] = *j;
  Series r(target);
  for (auto& [e, c] : terms_) {
    Exps x = zero_exps();
    for (int i = 0; i < R.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw SeriesError("convert: variable " + R.var(i).name + " missing in target");
      x[where[i]] = e[i];
    }
    r.add_term(x, c);
  }
  return r;
}

Monomial Series::monomial_of(const Exps& e) const {
  Monomial m;
  for (int i = 0; i < ring_->size(); ++i)
    if (e[i]) m.mul(ring_->var(i).name, e[i]);
  return m;
}

std::map<Monomial, Rational> Series::to_monomials() const {
  std::map<Monomial, Rational> out;
  for (auto& [e, c] : terms_) out[monomial_of(e)] = c;
  return out;
}

std::string Series::dump() const {
  std::vector<std::string> lines;
  for (auto& [e, c] : terms_) {
    std::ostringstream os;
    os << c.get_str();
    for (auto& [v, k] : monomial_of(e).exps) os << ' ' << v << '^' << k;
    lines.push_back(os.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (auto& l : lines) out += l + "\n";
  return out;
}

Series from_monomials(const RingPtr& r, const std::map<Monomial, Rational>& m) {
  Series s(r);
  for (auto& [mono, c] : m) s += Series::monomial(r, mono, c);
  return s;
}

}  // namespace bmaps
