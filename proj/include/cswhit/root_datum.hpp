#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cswhit/cartan.hpp"
#include "cswhit/scalar.hpp"

namespace cswhit {

// An element of the coweight lattice in fundamental-coweight coordinates:
// entry i is the pairing <alpha_i, mu> with the i-th simple root. Dominance
// is therefore "all entries >= 0" and rho = (1,...,1).
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> coords) : c_(std::move(coords)) {}
  static Coweight zero(int rank) { return Coweight(std::vector<int>(static_cast<size_t>(rank), 0)); }
  static Coweight rho(int rank) { return Coweight(std::vector<int>(static_cast<size_t>(rank), 1)); }
  static Coweight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const;
  bool is_dominant() const;
  bool is_strictly_dominant() const;

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator-() const;
  Coweight operator*(int k) const;

  // Lexicographic; the monomial order used throughout the lattice algebra.
  auto operator<=>(const Coweight&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> c_;
};

struct WeylElement {
  int id = 0;                 // index into the enumerated group
  std::vector<int> matrix;    // rank x rank, row-major, acts on coweight coordinates
  int length = 0;             // l(w)
  std::vector<int> word;      // reduced word of 0-based simple indices

  int sign() const { return (length % 2) ? -1 : 1; }
};

// A split adjoint root datum: Cartan matrix, positive roots and coroots,
// symmetrizers, and the (lazily enumerated) Weyl group acting on the
// coweight lattice.
class RootDatum {
 public:
  explicit RootDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // <alpha_i, alpha_j^vee>; 0-based indices.
  int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i) * rank() + j]; }
  Coweight simple_coroot(int j) const;

  // Positive roots in simple-root coordinates (simple roots are unit vectors).
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }
  // Positive coroots in simple-coroot coordinates.
  const std::vector<std::vector<int>>& positive_coroots() const { return pos_coroots_; }
  // Symmetrizers d_i: (d_i * cartan(i,j)) is symmetric positive definite.
  const std::vector<int>& symmetrizers() const { return sym_; }

  // s_i(mu) = mu - <alpha_i, mu> alpha_i^vee.
  Coweight reflect_simple(int i, const Coweight& mu) const;

  // <2 rho_G, mu> = sum over positive roots of <alpha, mu>.
  long long pairing_two_rho(const Coweight& mu) const;

  // Invariant symmetrized-Cartan pairing (mu, beta^vee) for a positive
  // coroot given in simple-coroot coordinates.
  long long coroot_pairing(const Coweight& mu, const std::vector<int>& coroot) const;

  // The coweight sitting under a coroot: sum_i b_i alpha_i^vee.
  Coweight coroot_as_coweight(const std::vector<int>& coroot) const;

  // Writes mu in the simple-coroot basis. Returns false when mu is not in
  // the coroot lattice; out receives the (rational) solution denominators
  // cleared only on success.
  bool in_coroot_lattice(const Coweight& mu, std::vector<Int>& out) const;

  // Dominance order: nu <= lambda iff lambda - nu is a nonnegative integer
  // combination of simple coroots.
  bool dominance_leq(const Coweight& nu, const Coweight& lambda) const;

  // --- Weyl group -----------------------------------------------------
  // Full enumeration, sorted by (length, discovery order); identity first.
  const std::vector<WeylElement>& weyl_group() const;
  int weyl_order() const { return static_cast<int>(weyl_group().size()); }
  const WeylElement& weyl(int id) const { return weyl_group()[static_cast<size_t>(id)]; }

  Coweight act(const WeylElement& w, const Coweight& mu) const;
  Coweight act(int w_id, const Coweight& mu) const { return act(weyl(w_id), mu); }

  // id of w * s_i.
  int mult_simple_right(int w_id, int i) const;

  // Number of positive coroots sent to negative ones; equals l(w).
  int inversion_count(const WeylElement& w) const;

  // The dominant Weyl-orbit representative.
  Coweight dominant_representative(const Coweight& mu) const;
  // Dominant representative together with (-1)^(number of reflections used);
  // the sign is canonical exactly when the orbit is regular.
  std::pair<Coweight, int> dominant_representative_signed(const Coweight& mu) const;

  // All |W| pairs (w id, w mu), repeats included when the stabilizer is
  // nontrivial; ordered by w id.
  std::vector<std::pair<int, Coweight>> orbit(const Coweight& mu) const;
  // Distinct orbit elements, sorted.
  std::vector<Coweight> orbit_set(const Coweight& mu) const;

  void require_rank(const Coweight& mu, const char* what) const;

 private:
  CartanType type_;
  std::vector<int> cartan_;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<std::vector<int>> pos_coroots_;
  std::vector<int> sym_;
  std::vector<long long> two_rho_;  // <2 rho_G, .> as a linear form on coords

  // Exact inverse of the Cartan matrix: cartan_adj_ / cartan_det_.
  std::vector<Int> cartan_adj_;
  Int cartan_det_;

  mutable std::once_flag weyl_once_;
  mutable std::vector<WeylElement> weyl_;
  mutable std::map<std::vector<int>, int> weyl_by_matrix_;
  mutable std::vector<int> right_mult_;  // |W| x rank table

  void build_roots();
  void build_symmetrizers();
  void build_cartan_inverse();
  void enumerate_weyl() const;
};

// All dominant coweights with coordinate sum <= bound, sorted.
std::vector<Coweight> dominant_coweights_up_to(int rank, int bound);

}  // namespace cswhit
