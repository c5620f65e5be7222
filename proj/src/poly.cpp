#include "k3stab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace k3stab {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x = -x;
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& k, const UPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= k;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quot(std::max(0, a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[k] / b.leading();
    if (f == 0) continue;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k].sign() < 0 ? " - " : " + ");
    else if (c_[k].sign() < 0) os << "-";
    Rational mag = abs(c_[k]);
    if (mag != 1 || k == 0) os << to_string(mag);
    if (k > 0) os << (mag != 1 ? "*" : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.monic();
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const UPoly& a = chain[chain.size() - 2];
    next = -UPoly::divmod(a, chain.back()).second;
  }
  return chain;
}

namespace {

int variations(std::span<const UPoly> chain, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_roots(std::span<const UPoly> chain, const Rational& a, const Rational& b) {
  if (chain.empty() || !(a < b)) return 0;
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0 || hi < lo) return out;
  UPoly f = squarefree_part(p);
  auto chain = sturm_chain(f);
  if (f(lo) == 0) out.push_back({lo, lo, true});

  // Depth-first over (a, b], left to right.
  struct Frame {
    Rational a, b;
  };
  std::vector<Frame> stack{{lo, hi}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    int n = count_roots(chain, fr.a, fr.b);
    if (n == 0) continue;
    if (n == 1) {
      if (f(fr.b) == 0) {
        out.push_back({fr.b, fr.b, true});
        continue;
      }
      Rational a = fr.a, b = fr.b;
      while (f(a) == 0) {  // the left end is a neighbouring root; move off it
        Rational mid = (a + b) / 2;
        if (f(mid) == 0) {
          a = b = mid;
          break;
        }
        if (count_roots(chain, a, mid) == 1) b = mid;
        else a = mid;
      }
      if (a == b) out.push_back({a, a, true});
      else out.push_back({a, b, false});
      continue;
    }
    Rational mid = (fr.a + fr.b) / 2;
    stack.push_back({mid, fr.b});
    stack.push_back({fr.a, mid});
  }
  return out;
}

int sign_at_root(const UPoly& g, const UPoly& f, const RootInterval& root) {
  if (root.exact) return g.sign_at(root.lo);
  if (g.is_zero()) return 0;
  if (g.is_constant()) return g.leading().sign();
  UPoly h = gcd(f, g);
  if (h.degree() >= 1) {
    auto hchain = sturm_chain(squarefree_part(h));
    if (count_roots(hchain, root.lo, root.hi) > 0) return 0;
  }
  auto gchain = sturm_chain(squarefree_part(g));
  Rational a = root.lo, b = root.hi;
  int sa = f.sign_at(a);
  while (count_roots(gchain, a, b) > 0) {
    Rational mid = (a + b) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) return g.sign_at(mid);
    if (sm != sa) b = mid;
    else {
      a = mid;
      sa = sm;
    }
  }
  return g.sign_at(b);
}

bool satisfies(int s, Relation rel) {
  switch (rel) {
    case Relation::Negative: return s < 0;
    case Relation::NonPositive: return s <= 0;
    case Relation::Zero: return s == 0;
    case Relation::NonZero: return s != 0;
    case Relation::NonNegative: return s >= 0;
    case Relation::Positive: return s > 0;
  }
  return false;
}

std::optional<FeasiblePoint> find_feasible(std::span<const SignCondition> conditions, const Rational& lo,
                                           const Rational& hi) {
  if (hi < lo) return std::nullopt;
  UPoly product = UPoly::constant(1);
  for (const auto& c : conditions)
    if (c.poly.degree() >= 1) product = product * c.poly;
  UPoly f = squarefree_part(product);

  auto holds_at_rational = [&](const Rational& t) {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const SignCondition& c) { return satisfies(c.poly.sign_at(t), c.rel); });
  };
  auto holds_at_root = [&](const RootInterval& r) {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const SignCondition& c) { return satisfies(sign_at_root(c.poly, f, r), c.rel); });
  };

  std::vector<RootInterval> roots = f.degree() >= 1 ? isolate_roots(f, lo, hi) : std::vector<RootInterval>{};
  std::vector<Rational> samples{lo, hi};
  auto left_of = [](const RootInterval& r) { return r.lo; };
  auto right_of = [](const RootInterval& r) { return r.hi; };
  if (roots.empty()) {
    samples.push_back((lo + hi) / 2);
  } else {
    if (lo < left_of(roots.front())) samples.push_back((lo + left_of(roots.front())) / 2);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      const Rational& r = right_of(roots[k]);
      const Rational& l = left_of(roots[k + 1]);
      samples.push_back(r < l ? Rational((r + l) / 2) : r);
    }
    if (right_of(roots.back()) < hi) samples.push_back((right_of(roots.back()) + hi) / 2);
  }
  for (const auto& t : samples)
    if (holds_at_rational(t)) return FeasiblePoint{{t, t, true}};
  for (const auto& r : roots)
    if (holds_at_root(r)) return FeasiblePoint{r};
  return std::nullopt;
}

Rational Interval::min_abs() const {
  if (lo.sign() <= 0 && hi.sign() >= 0) return 0;
  return lo.sign() > 0 ? lo : Rational(-hi);
}

Rational Interval::max_abs() const { return std::max(Rational(abs(lo)), Rational(abs(hi))); }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval power_range(const Rational& a, const Rational& b, int k) {
  if (k == 0) return {1, 1};
  Rational pa = power(a, k), pb = power(b, k);
  if (k % 2 == 1 || a.sign() >= 0) return {std::min(pa, pb), std::max(pa, pb)};
  if (b.sign() <= 0) return {pb, pa};
  return {0, std::max(pa, pb)};
}

namespace {

// The rational of least denominator in the open interval (lo, hi), or in
// (lo, inf) when hi is absent.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  Integer n = floor(lo) + 1;
  if (!hi || Rational(n) < *hi) return Rational(n);
  Integer fl = n - 1;
  // lo and hi share the integer part fl; recurse on the reciprocals.
  Rational a = *hi - Rational(fl);
  Rational b = lo - Rational(fl);
  std::optional<Rational> upper;
  if (b.sign() > 0) upper = Rational(1 / b);
  return Rational(fl) + Rational(1 / simplest_between(Rational(1 / a), upper));
}

}  // namespace

RootInterval refine_root(const UPoly& f, RootInterval root, const Rational& width) {
  if (root.exact) return root;
  int sa = f.sign_at(root.lo);
  for (;;) {
    Rational q = simplest_between(root.lo, root.hi);
    if (f.sign_at(q) == 0) return {q, q, true};
    if (root.hi - root.lo <= width) break;
    Rational mid = (root.lo + root.hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) return {mid, mid, true};
    if (sm != sa) root.hi = mid;
    else root.lo = mid;
  }
  return root;
}

std::vector<SetPiece> solve_on_line(std::span<const SignCondition> conditions) {
  UPoly product = UPoly::constant(1);
  for (const auto& c : conditions)
    if (c.poly.degree() >= 1) product = product * c.poly;
  UPoly f = squarefree_part(product);

  std::vector<RootInterval> roots;
  Rational big = 1;
  if (f.degree() >= 1) {
    Rational cauchy = 0;
    for (int k = 0; k < f.degree(); ++k) cauchy = std::max(cauchy, Rational(abs(f.coeff(k) / f.leading())));
    big = cauchy + 1;
    roots = isolate_roots(f, -big, big);
  }
  auto holds_rational = [&](const Rational& t) {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const SignCondition& c) { return satisfies(c.poly.sign_at(t), c.rel); });
  };
  auto holds_root = [&](const RootInterval& r) {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const SignCondition& c) { return satisfies(sign_at_root(c.poly, f, r), c.rel); });
  };

  // Cells in order: gap_0, root_0, gap_1, ..., root_{k-1}, gap_k.
  const std::size_t k = roots.size();
  std::vector<bool> gap(k + 1), at(k);
  for (std::size_t i = 0; i <= k; ++i) {
    Rational t;
    if (k == 0) t = 0;
    else if (i == 0) t = roots.front().lo - 1;
    else if (i == k) t = roots.back().hi + 1;
    else {
      const Rational& r = roots[i - 1].hi;
      const Rational& l = roots[i].lo;
      t = r < l ? Rational((r + l) / 2) : r;
    }
    gap[i] = holds_rational(t);
  }
  for (std::size_t i = 0; i < k; ++i) at[i] = holds_root(roots[i]);

  // Walk cells gap_0, root_0, gap_1, ..., gap_k; pieces open and close at roots.
  std::vector<SetPiece> out;
  std::optional<SetPiece> open;
  for (std::size_t c = 0; c <= 2 * k; ++c) {
    const bool is_gap = c % 2 == 0;
    const std::size_t i = c / 2;
    const bool truth = is_gap ? gap[i] : at[i];
    if (truth && !open) {
      SetPiece p;
      if (!is_gap) p.lo = {roots[i], false, true};
      else if (i == 0) p.lo.infinite = true;
      else p.lo = {roots[i - 1], false, false};
      open = p;
    } else if (!truth && open) {
      open->hi = is_gap ? Endpoint{roots[i - 1], false, true} : Endpoint{roots[i], false, false};
      out.push_back(*open);
      open.reset();
    }
  }
  if (open) {
    open->hi.infinite = true;
    out.push_back(*open);
  }
  return out;
}

std::string to_string(const SetPiece& piece) {
  auto end = [](const Endpoint& e, bool left) -> std::string {
    if (e.infinite) return left ? "-inf" : "+inf";
    if (e.at.exact) return to_string(e.at.lo);
    return "root in (" + to_string(e.at.lo) + "," + to_string(e.at.hi) + ")";
  };
  if (piece.is_point()) return "{" + end(piece.lo, true) + "}";
  return std::string(piece.lo.closed ? "[" : "(") + end(piece.lo, true) + ", " + end(piece.hi, false) +
         (piece.hi.closed ? "]" : ")");
}

Interval range(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() > 2) throw DomainError("range() supports degree <= 2");
  Rational fa = p(a), fb = p(b);
  Interval out{std::min(fa, fb), std::max(fa, fb)};
  if (p.degree() == 2) {
    Rational vertex = -p.coeff(1) / (2 * p.coeff(2));
    if (a < vertex && vertex < b) {
      Rational fv = p(vertex);
      out.lo = std::min(out.lo, fv);
      out.hi = std::max(out.hi, fv);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly2

Poly2::Poly2(Mat<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() == 0) c_ = Mat<Rational>::Zero(1, 1);
  trim();
}

void Poly2::trim() {
  Eigen::Index rows = c_.rows(), cols = c_.cols();
  auto row_zero = [&](Eigen::Index i) {
    for (Eigen::Index j = 0; j < cols; ++j)
      if (c_(i, j) != 0) return false;
    return true;
  };
  while (rows > 1 && row_zero(rows - 1)) --rows;
  auto col_zero = [&](Eigen::Index j) {
    for (Eigen::Index i = 0; i < rows; ++i)
      if (c_(i, j) != 0) return false;
    return true;
  };
  while (cols > 1 && col_zero(cols - 1)) --cols;
  if (rows != c_.rows() || cols != c_.cols()) c_ = Mat<Rational>(c_.topLeftCorner(rows, cols));
}

Poly2 Poly2::constant(const Rational& c) {
  Mat<Rational> m(1, 1);
  m(0, 0) = c;
  return Poly2(std::move(m));
}

Poly2 Poly2::x() {
  Mat<Rational> m = Mat<Rational>::Zero(2, 1);
  m(1, 0) = 1;
  return Poly2(std::move(m));
}

Poly2 Poly2::y() {
  Mat<Rational> m = Mat<Rational>::Zero(1, 2);
  m(0, 1) = 1;
  return Poly2(std::move(m));
}

Poly2 Poly2::in_x(const UPoly& p) {
  Mat<Rational> m = Mat<Rational>::Zero(std::max(1, p.degree() + 1), 1);
  for (int k = 0; k <= p.degree(); ++k) m(k, 0) = p.coeff(k);
  return Poly2(std::move(m));
}

Poly2 Poly2::in_y(const UPoly& p) {
  Mat<Rational> m = Mat<Rational>::Zero(1, std::max(1, p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k) m(0, k) = p.coeff(k);
  return Poly2(std::move(m));
}

Rational Poly2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= c_.rows() || j >= c_.cols()) return 0;
  return c_(i, j);
}

int Poly2::total_degree() const {
  int deg = -1;
  for (Eigen::Index i = 0; i < c_.rows(); ++i)
    for (Eigen::Index j = 0; j < c_.cols(); ++j)
      if (c_(i, j) != 0) deg = std::max(deg, static_cast<int>(i + j));
  return deg;
}

bool Poly2::is_zero() const { return total_degree() < 0; }

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) {
    Rational row = 0;
    for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) row = row * y + c_(i, j);
    acc = acc * x + row;
  }
  return acc;
}

UPoly Poly2::restrict_x(const Rational& x) const {
  std::vector<Rational> c(c_.cols(), Rational(0));
  for (Eigen::Index j = 0; j < c_.cols(); ++j) {
    Rational acc = 0;
    for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) acc = acc * x + c_(i, j);
    c[j] = acc;
  }
  return UPoly(std::move(c));
}

UPoly Poly2::restrict_y(const Rational& y) const {
  std::vector<Rational> c(c_.rows(), Rational(0));
  for (Eigen::Index i = 0; i < c_.rows(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) acc = acc * y + c_(i, j);
    c[i] = acc;
  }
  return UPoly(std::move(c));
}

namespace {

Mat<Rational> padded(const Mat<Rational>& m, Eigen::Index rows, Eigen::Index cols) {
  Mat<Rational> out = Mat<Rational>::Zero(rows, cols);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

}  // namespace

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Eigen::Index rows = std::max(a.c_.rows(), b.c_.rows());
  Eigen::Index cols = std::max(a.c_.cols(), b.c_.cols());
  return Poly2(Mat<Rational>(padded(a.c_, rows, cols) + padded(b.c_, rows, cols)));
}

Poly2 operator-(const Poly2& a) { return Poly2(Mat<Rational>(-a.c_)); }

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Mat<Rational> m = Mat<Rational>::Zero(a.c_.rows() + b.c_.rows() - 1, a.c_.cols() + b.c_.cols() - 1);
  for (Eigen::Index i = 0; i < a.c_.rows(); ++i)
    for (Eigen::Index j = 0; j < a.c_.cols(); ++j) {
      if (a.c_(i, j) == 0) continue;
      for (Eigen::Index k = 0; k < b.c_.rows(); ++k)
        for (Eigen::Index l = 0; l < b.c_.cols(); ++l) m(i + k, j + l) += a.c_(i, j) * b.c_(k, l);
    }
  return Poly2(std::move(m));
}

Poly2 operator*(const Rational& k, const Poly2& a) { return Poly2(Mat<Rational>(a.c_ * k)); }

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.c_.rows() != b.c_.rows() || a.c_.cols() != b.c_.cols()) return false;
  return a.c_ == b.c_;
}

std::vector<Rational> Poly2::dense_listing(int max_degree) const {
  if (total_degree() > max_degree)
    throw DomainError("polynomial degree exceeds the dense listing degree " + std::to_string(max_degree));
  std::vector<Rational> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i) out.push_back(coeff(i, d - i));
  return out;
}

Poly2 Poly2::from_dense_listing(std::span<const Rational> listing, int max_degree) {
  std::size_t expected = static_cast<std::size_t>((max_degree + 1) * (max_degree + 2) / 2);
  if (listing.size() != expected)
    throw DomainError("dense listing has " + std::to_string(listing.size()) + " entries, expected " +
                      std::to_string(expected));
  Mat<Rational> m = Mat<Rational>::Zero(max_degree + 1, max_degree + 1);
  std::size_t k = 0;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i) m(i, d - i) = listing[k++];
  return Poly2(std::move(m));
}

std::vector<std::string> Poly2::monomial_names(int max_degree) {
  auto power = [](const char* v, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
  };
  std::vector<std::string> names;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i) {
      std::string xs = power("x", i), ys = power("y", d - i);
      if (xs.empty() && ys.empty()) names.emplace_back("1");
      else if (xs.empty()) names.push_back(ys);
      else if (ys.empty()) names.push_back(xs);
      else names.push_back(xs + "*" + ys);
    }
  return names;
}

std::vector<Integer> Poly2::primitive_key() const {
  int deg = std::max(0, total_degree());
  std::vector<Rational> listing = dense_listing(deg);
  Integer lcm = 1;
  for (const auto& q : listing) lcm = mp::lcm(lcm, denominator(q));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : listing) {
    Integer z = numerator(q) * (lcm / denominator(q));
    g = mp::gcd(g, z);
    ints.push_back(z);
  }
  if (g == 0) return ints;
  int lead = 0;
  for (const auto& z : ints)
    if (z != 0) {
      lead = z.sign();
      break;
    }
  for (auto& z : ints) z = z / g * lead;
  return ints;
}

// Centered form: expand p about the middle of r, then bound each monomial
// u^a v^b over the symmetric box |u| <= hx, |v| <= hy. Cancellation between
// large terms happens exactly in the expansion instead of in the intervals.
Interval bound(const Poly2& p, const Rect& r) {
  const auto& c = p.coeffs();
  const Rational xc = (r.x0 + r.x1) / 2, yc = (r.y0 + r.y1) / 2;
  const Rational hx = (r.x1 - r.x0) / 2, hy = (r.y1 - r.y0) / 2;
  const Eigen::Index nx = c.rows(), ny = c.cols();
  auto powers = [](const Rational& t, Eigen::Index n) {
    std::vector<Rational> out{Rational(1)};
    for (Eigen::Index k = 1; k < n; ++k) out.push_back(out.back() * t);
    return out;
  };
  const auto px = powers(xc, nx), py = powers(yc, ny), phx = powers(hx, nx), phy = powers(hy, ny);
  std::vector<std::vector<Integer>> binom(std::max(nx, ny), std::vector<Integer>(std::max(nx, ny), Integer(0)));
  for (std::size_t n = 0; n < binom.size(); ++n) {
    binom[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : Integer(0));
  }
  Interval acc{0, 0};
  for (Eigen::Index a = 0; a < nx; ++a)
    for (Eigen::Index b = 0; b < ny; ++b) {
      Rational coef = 0;
      for (Eigen::Index i = a; i < nx; ++i)
        for (Eigen::Index j = b; j < ny; ++j)
          if (c(i, j) != 0) coef += c(i, j) * Rational(binom[i][a] * binom[j][b]) * px[i - a] * py[j - b];
      if (coef == 0) continue;
      if (a == 0 && b == 0) {
        acc = acc + Interval{coef, coef};
        continue;
      }
      Rational mag = abs(coef) * phx[a] * phy[b];
      if (a % 2 == 0 && b % 2 == 0)
        acc = acc + (coef.sign() > 0 ? Interval{0, mag} : Interval{-mag, 0});
      else
        acc = acc + Interval{-mag, mag};
    }
  return acc;
}

UPoly restrict_segment(const Poly2& p, const Rational& ax, const Rational& ay, const Rational& bx,
                       const Rational& by) {
  const auto& c = p.coeffs();
  UPoly x = UPoly::linear(ax, bx - ax), y = UPoly::linear(ay, by - ay);
  std::vector<UPoly> xp{UPoly::constant(1)}, yp{UPoly::constant(1)};
  for (Eigen::Index i = 1; i < c.rows(); ++i) xp.push_back(xp.back() * x);
  for (Eigen::Index j = 1; j < c.cols(); ++j) yp.push_back(yp.back() * y);
  UPoly acc;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j)
      if (c(i, j) != 0) acc = acc + c(i, j) * (xp[i] * yp[j]);
  return acc;
}

std::string Poly2::str() const {
  if (is_zero()) return "0";
  auto names = monomial_names(std::max(0, total_degree()));
  auto listing = dense_listing(std::max(0, total_degree()));
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < listing.size(); ++k) {
    const Rational& c = listing[k];
    if (c == 0) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational mag = abs(c);
    if (names[k] == "1") os << to_string(mag);
    else if (mag == 1) os << names[k];
    else os << to_string(mag) << "*" << names[k];
    first = false;
  }
  return os.str();
}

}  // namespace k3stab
