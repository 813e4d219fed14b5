#include "cswhit/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cswhit {

// ---------------------------------------------------------------------------
// Coweight

Coweight Coweight::fundamental(int rank, int i) {
  std::vector<int> c(static_cast<size_t>(rank), 0);
  c[static_cast<size_t>(i)] = 1;
  return Coweight(std::move(c));
}

bool Coweight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Coweight::is_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Coweight::is_strictly_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 1; });
}

Coweight Coweight::operator+(const Coweight& o) const {
  std::vector<int> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Coweight(std::move(r));
}

Coweight Coweight::operator-(const Coweight& o) const {
  std::vector<int> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Coweight(std::move(r));
}

Coweight Coweight::operator-() const {
  std::vector<int> r(c_);
  for (auto& x : r) x = -x;
  return Coweight(std::move(r));
}

Coweight Coweight::operator*(int k) const {
  std::vector<int> r(c_);
  for (auto& x : r) x *= k;
  return Coweight(std::move(r));
}

std::string Coweight::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ",";
    out << c_[i];
  }
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// RootDatum construction

RootDatum::RootDatum(CartanType type) : type_(type), cartan_(type.cartan_matrix()) {
  build_roots();
  build_symmetrizers();
  build_cartan_inverse();
  two_rho_.assign(static_cast<size_t>(rank()), 0);
  for (const auto& root : pos_roots_)
    for (int j = 0; j < rank(); ++j) two_rho_[static_cast<size_t>(j)] += root[static_cast<size_t>(j)];
}

namespace {

// Closure of the simple roots under simple reflections, in simple-root
// coordinates for the given Cartan pairings. Works for roots (pairing
// matrix = cartan) and coroots (pairing matrix = transposed cartan).
std::vector<std::vector<int>> positive_closure(int n, const std::vector<int>& pairing) {
  auto at = [&](int i, int j) { return pairing[static_cast<size_t>(i) * n + j]; };
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = std::move(queue.back());
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
      long long pair = 0;
      for (int j = 0; j < n; ++j) pair += static_cast<long long>(beta[static_cast<size_t>(j)]) * at(j, i);
      std::vector<int> img = beta;
      img[static_cast<size_t>(i)] -= static_cast<int>(pair);
      bool nonneg = std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; });
      if (nonneg && roots.insert(img).second) queue.push_back(img);
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

void RootDatum::build_roots() {
  const int n = rank();
  pos_roots_ = positive_closure(n, cartan_);
  // Coroot system: pairing matrix is the transpose.
  std::vector<int> tr(cartan_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr[static_cast<size_t>(i) * n + j] = cartan(j, i);
  pos_coroots_ = positive_closure(n, tr);

  const int expected = type_.positive_root_count();
  if (static_cast<int>(pos_roots_.size()) != expected ||
      static_cast<int>(pos_coroots_.size()) != expected)
    throw DomainError("internal: positive root closure does not match the classification count for " +
                      type_.to_string());
}

void RootDatum::build_symmetrizers() {
  // Smallest positive integers with d_i a_ij = d_j a_ji, found by
  // propagating ratios along the Dynkin graph.
  const int n = rank();
  std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[static_cast<size_t>(start)] != 0) continue;
    d[static_cast<size_t>(start)] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan(i, j) == 0) continue;
        Rational want = d[static_cast<size_t>(i)] * Rational(cartan(i, j)) / Rational(cartan(j, i));
        if (d[static_cast<size_t>(j)] == 0) {
          d[static_cast<size_t>(j)] = want;
          stack.push_back(j);
        } else if (d[static_cast<size_t>(j)] != want) {
          throw DomainError("internal: Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Int lcm_den(1);
  for (const auto& x : d) {
    Int den = Int(boost::multiprecision::denominator(x));
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
  }
  std::vector<Int> nums;
  Int g(0);
  for (const auto& x : d) {
    Int v = Int(boost::multiprecision::numerator(x)) * (lcm_den / Int(boost::multiprecision::denominator(x)));
    nums.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  sym_.clear();
  for (const auto& v : nums) sym_.push_back(static_cast<int>(v / g));
  // Positive definiteness of (d_i a_ij): leading principal minors.
  const int n2 = rank();
  std::vector<Rational> m(static_cast<size_t>(n2) * n2);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      m[static_cast<size_t>(i) * n2 + j] = Rational(sym_[static_cast<size_t>(i)] * cartan(i, j));
  for (int k = 1; k <= n2; ++k) {
    // determinant of leading k x k block by Gaussian elimination
    std::vector<Rational> a;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a.push_back(m[static_cast<size_t>(i) * n2 + j]);
    Rational det(1);
    for (int col = 0; col < k; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r)
        if (a[static_cast<size_t>(r) * k + col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != col) {
        for (int j = 0; j < k; ++j)
          std::swap(a[static_cast<size_t>(piv) * k + j], a[static_cast<size_t>(col) * k + j]);
        det = -det;
      }
      det *= a[static_cast<size_t>(col) * k + col];
      for (int r = col + 1; r < k; ++r) {
        Rational f = a[static_cast<size_t>(r) * k + col] / a[static_cast<size_t>(col) * k + col];
        for (int j = col; j < k; ++j)
          a[static_cast<size_t>(r) * k + j] -= f * a[static_cast<size_t>(col) * k + j];
      }
    }
    if (det <= 0)
      throw DomainError("internal: symmetrized Cartan form is not positive definite for " + type_.to_string());
  }
}

void RootDatum::build_cartan_inverse() {
  // Adjugate and determinant by fraction-free Gauss-Jordan over Int.
  const int n = rank();
  std::vector<Rational> a(static_cast<size_t>(n) * n), inv(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = Rational(cartan(i, j));
    inv[static_cast<size_t>(i) * n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<size_t>(r) * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw DomainError("internal: singular Cartan matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(col) * n + j]);
      std::swap(inv[static_cast<size_t>(piv) * n + j], inv[static_cast<size_t>(col) * n + j]);
    }
    Rational p = a[static_cast<size_t>(col) * n + col];
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(col) * n + j] /= p;
      inv[static_cast<size_t>(col) * n + j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a[static_cast<size_t>(r) * n + col];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<size_t>(r) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
        inv[static_cast<size_t>(r) * n + j] -= f * inv[static_cast<size_t>(col) * n + j];
      }
    }
  }
  // Clear denominators: inverse = adj / det with integer adj.
  Int det(1);
  for (const auto& x : inv) {
    Int den = Int(boost::multiprecision::denominator(x));
    det = det / boost::multiprecision::gcd(det, den) * den;
  }
  cartan_det_ = det;
  cartan_adj_.clear();
  for (const auto& x : inv)
    cartan_adj_.push_back(Int(boost::multiprecision::numerator(x)) *
                          (det / Int(boost::multiprecision::denominator(x))));
}

Coweight RootDatum::simple_coroot(int j) const {
  std::vector<int> c(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i) c[static_cast<size_t>(i)] = cartan(i, j);
  return Coweight(std::move(c));
}

Coweight RootDatum::reflect_simple(int i, const Coweight& mu) const {
  if (i < 0 || i >= rank()) throw DomainError("simple reflection index out of range");
  require_rank(mu, "reflect_simple");
  const int k = mu[i];
  std::vector<int> c(mu.coords());
  for (int r = 0; r < rank(); ++r) c[static_cast<size_t>(r)] -= k * cartan(r, i);
  return Coweight(std::move(c));
}

long long RootDatum::pairing_two_rho(const Coweight& mu) const {
  require_rank(mu, "pairing_two_rho");
  long long s = 0;
  for (int j = 0; j < rank(); ++j) s += two_rho_[static_cast<size_t>(j)] * mu[j];
  return s;
}

long long RootDatum::coroot_pairing(const Coweight& mu, const std::vector<int>& coroot) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i)
    s += static_cast<long long>(sym_[static_cast<size_t>(i)]) * mu[i] * coroot[static_cast<size_t>(i)];
  return s;
}

Coweight RootDatum::coroot_as_coweight(const std::vector<int>& coroot) const {
  std::vector<int> c(static_cast<size_t>(rank()), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      c[static_cast<size_t>(i)] += cartan(i, j) * coroot[static_cast<size_t>(j)];
  return Coweight(std::move(c));
}

bool RootDatum::in_coroot_lattice(const Coweight& mu, std::vector<Int>& out) const {
  const int n = rank();
  out.assign(static_cast<size_t>(n), Int(0));
  for (int i = 0; i < n; ++i) {
    Int acc(0);
    for (int j = 0; j < n; ++j)
      acc += cartan_adj_[static_cast<size_t>(i) * n + j] * mu[j];
    if (acc % cartan_det_ != 0) return false;
    out[static_cast<size_t>(i)] = acc / cartan_det_;
  }
  return true;
}

bool RootDatum::dominance_leq(const Coweight& nu, const Coweight& lambda) const {
  std::vector<Int> b;
  if (!in_coroot_lattice(lambda - nu, b)) return false;
  return std::all_of(b.begin(), b.end(), [](const Int& x) { return x >= 0; });
}

// ---------------------------------------------------------------------------
// Weyl group

void RootDatum::enumerate_weyl() const {
  const int n = rank();
  auto identity = [&] {
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    return m;
  }();
  // Simple reflection matrices: column i gets e_i - alpha_i^vee coordinates.
  std::vector<std::vector<int>> refl;
  for (int i = 0; i < n; ++i) {
    std::vector<int> m = identity;
    for (int r = 0; r < n; ++r) m[static_cast<size_t>(r) * n + i] -= cartan(r, i);
    refl.push_back(std::move(m));
  }
  auto mat_mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int aik = a[static_cast<size_t>(i) * n + k];
        if (!aik) continue;
        for (int j = 0; j < n; ++j)
          c[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
      }
    return c;
  };

  weyl_.clear();
  weyl_by_matrix_.clear();
  weyl_.push_back(WeylElement{0, identity, 0, {}});
  weyl_by_matrix_[identity] = 0;
  size_t layer_begin = 0;
  while (layer_begin < weyl_.size()) {
    size_t layer_end = weyl_.size();
    for (size_t p = layer_begin; p < layer_end; ++p)
      for (int i = 0; i < n; ++i) {
        // w' = w * s_i acts as M_w * S_i.
        std::vector<int> m = mat_mul(weyl_[p].matrix, refl[static_cast<size_t>(i)]);
        if (weyl_by_matrix_.count(m)) continue;
        WeylElement e;
        e.id = static_cast<int>(weyl_.size());
        e.length = weyl_[p].length + 1;
        e.word = weyl_[p].word;
        e.word.push_back(i);
        weyl_by_matrix_[m] = e.id;
        e.matrix = std::move(m);
        weyl_.push_back(std::move(e));
      }
    layer_begin = layer_end;
  }

  right_mult_.assign(weyl_.size() * static_cast<size_t>(n), 0);
  for (size_t w = 0; w < weyl_.size(); ++w)
    for (int i = 0; i < n; ++i) {
      std::vector<int> m = mat_mul(weyl_[w].matrix, refl[static_cast<size_t>(i)]);
      right_mult_[w * static_cast<size_t>(n) + static_cast<size_t>(i)] = weyl_by_matrix_.at(m);
    }
}

const std::vector<WeylElement>& RootDatum::weyl_group() const {
  std::call_once(weyl_once_, [this] { enumerate_weyl(); });
  return weyl_;
}

Coweight RootDatum::act(const WeylElement& w, const Coweight& mu) const {
  require_rank(mu, "act");
  const int n = rank();
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[static_cast<size_t>(i)] += w.matrix[static_cast<size_t>(i) * n + j] * mu[j];
  return Coweight(std::move(c));
}

int RootDatum::mult_simple_right(int w_id, int i) const {
  weyl_group();
  return right_mult_[static_cast<size_t>(w_id) * rank() + static_cast<size_t>(i)];
}

int RootDatum::inversion_count(const WeylElement& w) const {
  std::set<Coweight> negatives;
  for (const auto& co : pos_coroots_) negatives.insert(-coroot_as_coweight(co));
  int count = 0;
  for (const auto& co : pos_coroots_)
    if (negatives.count(act(w, coroot_as_coweight(co)))) ++count;
  return count;
}

Coweight RootDatum::dominant_representative(const Coweight& mu) const {
  return dominant_representative_signed(mu).first;
}

std::pair<Coweight, int> RootDatum::dominant_representative_signed(const Coweight& mu) const {
  Coweight x = mu;
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i)
      if (x[i] < 0) {
        x = reflect_simple(i, x);
        sign = -sign;
        moved = true;
        break;
      }
  }
  return {x, sign};
}

std::vector<std::pair<int, Coweight>> RootDatum::orbit(const Coweight& mu) const {
  std::vector<std::pair<int, Coweight>> out;
  const auto& group = weyl_group();
  out.reserve(group.size());
  for (const auto& w : group) out.emplace_back(w.id, act(w, mu));
  return out;
}

std::vector<Coweight> RootDatum::orbit_set(const Coweight& mu) const {
  std::set<Coweight> s;
  for (const auto& w : weyl_group()) s.insert(act(w, mu));
  return {s.begin(), s.end()};
}

void RootDatum::require_rank(const Coweight& mu, const char* what) const {
  if (mu.rank() != rank())
    throw DomainError(std::string(what) + ": coweight rank " + std::to_string(mu.rank()) +
                      " does not match " + type_.to_string());
}

std::vector<Coweight> dominant_coweights_up_to(int rank, int bound) {
  std::vector<Coweight> out;
  std::vector<int> c(static_cast<size_t>(rank), 0);
  while (true) {
    int sum = std::accumulate(c.begin(), c.end(), 0);
    if (sum <= bound) out.push_back(Coweight(c));
    // Odometer over the box [0, bound]^rank.
    int pos = rank - 1;
    while (pos >= 0) {
      if (++c[static_cast<size_t>(pos)] <= bound) break;
      c[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cswhit
