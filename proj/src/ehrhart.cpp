#include "sdsp/ehrhart.hpp"

#include <algorithm>
#include <string>

#include "sdsp/geometry.hpp"
#include "sdsp/symmat.hpp"

namespace sdsp {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

BigRat Polynomial::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigRat(0);
}

BigRat Polynomial::leading_coeff() const { return c_.empty() ? BigRat(0) : c_.back(); }

BigRat Polynomial::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial newton_interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InputError("node/value size mismatch");
  const std::size_t n = xs.size();
  std::vector<BigRat> coef = ys;  // divided differences in place
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);

  // expand the Newton form into monomial coefficients
  std::vector<BigRat> poly(n, 0);
  std::vector<BigRat> running{1};  // prod_{k<i} (x - xs[k])
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < running.size(); ++k) poly[k] += coef[i] * running[k];
    std::vector<BigRat> next(running.size() + 1, 0);
    for (std::size_t k = 0; k < running.size(); ++k) {
      next[k + 1] += running[k];
      next[k] -= running[k] * xs[i];
    }
    running = std::move(next);
  }
  return Polynomial(std::move(poly));
}

Polynomial interpolate(const std::vector<BigInt>& counts, int d) {
  if (static_cast<int>(counts.size()) != d + 1)
    throw InputError("interpolate needs exactly d+1 counts, got " +
                     std::to_string(counts.size()) + " for d = " + std::to_string(d));
  std::vector<BigRat> xs(d + 1), ys(d + 1);
  for (int i = 0; i <= d; ++i) {
    xs[i] = i;
    ys[i] = BigRat(counts[i]);
  }
  return newton_interpolate(xs, ys);
}

bool HStarVector::palindromic() const {
  const std::size_t k = coeffs.size();
  for (std::size_t i = 0; i < k / 2; ++i)
    if (coeffs[i] != coeffs[k - 1 - i]) return false;
  return true;
}

BigInt HStarVector::sum() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs) s += c;
  return s;
}

namespace {

std::vector<BigInt> hstar_transform(const std::vector<BigInt>& counts, int d, int j_max) {
  if (static_cast<int>(counts.size()) < j_max + 1)
    throw InputError("hstar transform needs counts through index " + std::to_string(j_max));
  std::vector<BigInt> out(j_max + 1);
  for (int j = 0; j <= j_max; ++j) {
    BigInt v = 0;
    for (int i = 0; i <= j; ++i) {
      const BigInt b = binomial(d + 1, j - i) * counts[i];
      v += ((j - i) % 2 == 0) ? b : -b;
    }
    out[j] = v;
  }
  return out;
}

void check_hstar_entries(const std::vector<BigInt>& h) {
  if (h.empty() || h.front() != 1) throw FalsificationError("h*_0 != 1");
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h[j] < 0)
      throw FalsificationError("negative h* coefficient h*_" + std::to_string(j) + " = " +
                               h[j].str());
}

}  // namespace

HStarVector hstar_from_counts(const std::vector<BigInt>& counts, int d, int expected_degree) {
  std::vector<BigInt> raw = hstar_transform(counts, d, expected_degree + 1);
  if (raw.back() != 0)
    throw FalsificationError("guard coefficient h*_" + std::to_string(expected_degree + 1) +
                             " = " + raw.back().str() + ", expected 0");
  raw.pop_back();
  check_hstar_entries(raw);
  if (raw.back() == 0)
    throw FalsificationError("h* degree below expected degree " +
                             std::to_string(expected_degree));
  HStarVector h;
  h.d = d;
  h.den = 1;
  h.coeffs = std::move(raw);
  return h;
}

HStarVector hstar_capped(const std::vector<BigInt>& counts, int d) {
  std::vector<BigInt> raw = hstar_transform(counts, d, d + 1);
  if (raw.back() != 0)
    throw FalsificationError("guard coefficient h*_" + std::to_string(d + 1) + " = " +
                             raw.back().str() + ", expected 0");
  raw.pop_back();
  while (raw.size() > 1 && raw.back() == 0) raw.pop_back();
  check_hstar_entries(raw);
  HStarVector h;
  h.d = d;
  h.den = 1;
  h.coeffs = std::move(raw);
  return h;
}

bool is_unimodal(const std::vector<BigInt>& v) {
  std::size_t i = 0;
  while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
  while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
  return i + 1 >= v.size();
}

int expected_hstar_degree_S(int n) {
  if (n < 2) throw InputError("n >= 2 required");
  const int k = n / 2;
  return (n % 2 == 0) ? 2 * k * k - 2 * k + 1 : 2 * k * k;
}

HStarVector hstar_S(int n) {
  const int d = n * (n - 1) / 2;
  const int deg = expected_hstar_degree_S(n);
  std::vector<BigInt> counts;
  counts.reserve(deg + 2);
  for (int m = 0; m <= deg + 1; ++m) counts.push_back(count_points(n, m, Family::S));
  return hstar_from_counts(counts, d, deg);
}

HStarVector hstar_sigma(int n) {
  if (n < 2) throw InputError("n >= 2 required");
  const int d = n * (n - 1) / 2;
  const int top = 2 * (d + 1) - 1;
  std::vector<BigInt> counts;
  counts.reserve(top + 1);
  for (int m = 0; m <= top; ++m) counts.push_back(count_points(n, m, Family::Sigma));

  // numerator of E(t) * (1 - t^2)^(d+1), truncated at degree 2(d+1)-1
  std::vector<BigInt> num(top + 1, 0);
  for (int j = 0; j <= top; ++j) {
    BigInt v = 0;
    for (int i = 0; 2 * i <= j; ++i) {
      const BigInt b = binomial(d + 1, i) * counts[j - 2 * i];
      v += (i % 2 == 0) ? b : -b;
    }
    if (v < 0)
      throw FalsificationError("negative h*(Sigma) coefficient at index " + std::to_string(j));
    num[j] = v;
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();

  HStarVector h;
  h.d = d;
  h.den = 2;
  h.coeffs = std::move(num);

  if (!h.palindromic())
    throw FalsificationError("h*(Sigma_" + std::to_string(n) + ") is not palindromic");
  const HStarVector hs = hstar_S(n);
  for (int j = 0; 2 * j < static_cast<int>(h.coeffs.size()); ++j) {
    const BigInt expected = j <= hs.degree() ? hs.coeffs[j] : BigInt(0);
    if (h.coeffs[2 * j] != expected)
      throw FalsificationError("even-indexed entries of h*(Sigma_" + std::to_string(n) +
                               ") do not reproduce h*(S_" + std::to_string(n) + ")");
  }
  const int expected_deg =
      (n % 2 == 0) ? 2 * hs.degree() : 2 * hs.degree() + 1;
  if (h.degree() != expected_deg)
    throw FalsificationError("deg h*(Sigma_" + std::to_string(n) + ") = " +
                             std::to_string(h.degree()) + ", expected " +
                             std::to_string(expected_deg));
  return h;
}

QuasiConstituents quasipoly_sigma(int n) {
  if (n < 2) throw InputError("n >= 2 required");
  const int d = n * (n - 1) / 2;
  const int samples = d + 1;  // per parity class
  std::vector<BigRat> ex(samples), ey(samples), ox(samples), oy(samples);
  for (int i = 0; i < samples; ++i) {
    ex[i] = 2 * i;
    ey[i] = BigRat(count_points(n, 2 * i, Family::Sigma));
    ox[i] = 2 * i + 1;
    oy[i] = BigRat(count_points(n, 2 * i + 1, Family::Sigma));
  }
  const Polynomial pe = newton_interpolate(ex, ey);
  const Polynomial po = newton_interpolate(ox, oy);

  const int top = std::max(pe.degree(), po.degree());
  std::vector<BigRat> fc(top + 1), gc(top + 1);
  for (int k = 0; k <= top; ++k) {
    fc[k] = (pe.coeff(k) + po.coeff(k)) / 2;
    gc[k] = (pe.coeff(k) - po.coeff(k)) / 2;
  }
  QuasiConstituents q;
  q.f = Polynomial(std::move(fc));
  q.g = Polynomial(std::move(gc));
  q.degree_check_applicable = (n > 2);

  if (q.degree_check_applicable) {
    const int expected_g =
        (n % 2 == 1) ? (n - 1) * (n - 2) / 2 - 1 : (n - 2) * (n - 3) / 2 - 1;
    if (q.f.degree() != d)
      throw FalsificationError("deg f = " + std::to_string(q.f.degree()) + ", expected " +
                               std::to_string(d));
    if (q.g.degree() != expected_g)
      throw FalsificationError("deg g = " + std::to_string(q.g.degree()) + ", expected " +
                               std::to_string(expected_g));
  }

  // L_{S_n}(t) = f(2t) + g(2t) on every computed value
  for (int t = 0; t <= d; ++t) {
    const BigRat lhs = BigRat(count_points(n, t, Family::S));
    if (q.f(BigRat(2 * t)) + q.g(BigRat(2 * t)) != lhs)
      throw FalsificationError("f(2t) + g(2t) != L_S(t) at t = " + std::to_string(t));
  }
  return q;
}

EhrhartData ehrhart_S(int n, int extra_counts) {
  const int d = n * (n - 1) / 2;
  EhrhartData data;
  data.dimension = d;
  const int top = d + std::max(extra_counts, 0);
  for (int m = 0; m <= top; ++m) data.counts.push_back(count_points(n, m, Family::S));
  data.poly = interpolate(std::vector<BigInt>(data.counts.begin(), data.counts.begin() + d + 1), d);
  for (int m = d + 1; m <= top; ++m)
    if (data.poly(BigRat(m)) != BigRat(data.counts[m]))
      throw FalsificationError("counts are inconsistent with a degree-" + std::to_string(d) +
                               " Ehrhart polynomial at m = " + std::to_string(m));
  return data;
}

ReciprocityReport reciprocity_check(int n) {
  if (n < 2 || n % 2 == 0 || n > 5) throw InputError("reciprocity_check needs odd n <= 5");
  const int d = n * (n - 1) / 2;
  const EhrhartData data = ehrhart_S(n);

  ReciprocityReport rep;
  rep.n = n;
  rep.first_interior_dilate = (n + 1) / 2;
  rep.zero_below = true;
  for (int m = 1; m < rep.first_interior_dilate; ++m)
    if (data.poly(BigRat(-m)) != 0) rep.zero_below = false;

  const BigRat v = data.poly(BigRat(-rep.first_interior_dilate));
  const BigRat signed_v = (d % 2 == 0) ? v : -v;
  if (denominator(signed_v) != 1)
    throw FalsificationError("non-integer reciprocity value");
  rep.signed_value = numerator(signed_v);
  rep.interior = interior_count(n, rep.first_interior_dilate);
  rep.involutions = involution_count(n);
  rep.match = rep.zero_below && rep.signed_value == rep.interior &&
              rep.interior == rep.involutions;
  return rep;
}

}  // namespace sdsp
