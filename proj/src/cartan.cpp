#include "cswhit/cartan.hpp"

#include <cctype>

namespace cswhit {

namespace {

void check_rank(Family f, int rank) {
  auto fail = [&](const std::string& constraint) {
    throw DomainError("inadmissible Cartan type " + std::string(1, static_cast<char>(f)) +
                      std::to_string(rank) + ": " + constraint);
  };
  switch (f) {
    case Family::A:
      if (rank < 1) fail("family A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("family B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) fail("family C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) fail("family D requires rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("family E requires rank in {6,7,8}");
      break;
    case Family::F:
      if (rank != 4) fail("family F requires rank = 4");
      break;
    case Family::G:
      if (rank != 2) fail("family G requires rank = 2");
      break;
  }
}

}  // namespace

CartanType::CartanType(Family f, int r) : family(f), rank(r) { check_rank(f, r); }

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw ParseError("cannot parse Cartan type from '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw ParseError("unknown family '" + std::string(1, s[0]) + "'");
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("cannot parse rank in Cartan type '" + s + "'");
  int rank = std::stoi(s.substr(1));
  return CartanType(static_cast<Family>(f), rank);
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<int> CartanType::cartan_matrix() const {
  const int n = rank;
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> int& { return m[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      // alpha_1..alpha_{n-1} long, alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      at(n - 2, n - 1) = -2;
      break;
    case Family::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      at(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      chain(0, 1);
      chain(2, 3);
      at(1, 2) = -2;
      at(2, 1) = -1;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      at(0, 1) = -1;
      at(1, 0) = -3;
      break;
  }
  return m;
}

int CartanType::positive_root_count() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;  // unreachable
}

}  // namespace cswhit
