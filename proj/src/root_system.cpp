#include "rootobs/root_system.hpp"

#include <algorithm>
#include <set>

namespace rootobs {

std::string SimpleType::str() const { return std::string(1, family) + std::to_string(rank); }

SimpleType make_simple_type(char family, int rank) {
  switch (family) {
    case 'A':
      if (rank < 1) throw input_error("A" + std::to_string(rank) + ": rank must be >= 1");
      break;
    case 'B':
      if (rank < 2) throw input_error("B" + std::to_string(rank) + ": rank must be >= 2");
      break;
    case 'C':
      if (rank == 2) throw input_error("C2 is not accepted: it equals B2, write B2");
      if (rank < 3) throw input_error("C" + std::to_string(rank) + ": rank must be >= 3");
      break;
    case 'D':
      if (rank < 4) throw input_error("D" + std::to_string(rank) + ": rank must be >= 4");
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw input_error("E" + std::to_string(rank) + ": rank must be 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) throw input_error("F" + std::to_string(rank) + ": only F4 exists");
      break;
    case 'G':
      if (rank != 2) throw input_error("G" + std::to_string(rank) + ": only G2 exists");
      break;
    default:
      throw input_error(std::string("unknown family '") + family + "'");
  }
  return SimpleType{family, rank};
}

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2) throw input_error("malformed type '" + s + "'");
  char fam = char(std::toupper(s[0]));
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw input_error("malformed type '" + s + "'");
  return make_simple_type(fam, std::stoi(s.substr(1)));
}

IntMat cartan_matrix(const SimpleType& t) {
  const int l = t.rank;
  IntMat c(l, l);
  for (int i = 0; i < l; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) { c(i, j) = -1; c(j, i) = -1; };  // 0-based
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c(l - 2, l - 1) = -2;  // alpha_{l-1}(alpha_l^vee), alpha_l short
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c(l - 1, l - 2) = -2;  // alpha_l(alpha_{l-1}^vee), alpha_l long
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (l >= 7) link(5, 6);
      if (l >= 8) link(6, 7);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      c(1, 2) = -2;  // alpha_2 long, alpha_3 short
      c(2, 1) = -1;
      break;
    case 'G':
      c(0, 1) = -1;  // alpha_1 short, alpha_2 long
      c(1, 0) = -3;
      break;
  }
  return c;
}

long expected_positive_roots(const SimpleType& t) {
  const long l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw integrity_error("unreachable");
}

int RootSystem::factor_of_index(int i) const {
  for (size_t f = 0; f + 1 < factor_offset.size(); ++f)
    if (i >= factor_offset[f] && i < factor_offset[f + 1]) return int(f);
  throw integrity_error("index outside root system");
}

Int RootSystem::pair_root_coweight(const std::vector<Int>& root, const std::vector<Int>& coweight) {
  if (root.size() != coweight.size()) throw integrity_error("pairing length mismatch");
  Int s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += root[i] * coweight[i];
  return s;
}

namespace {

// Positive roots of one irreducible factor, in its own coordinates, ordered
// by height then lexicographically. Closure by root strings: for a root beta
// and simple alpha_i, beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0
// where p is the largest k with beta - k*alpha_i a root.
std::vector<std::vector<Int>> positive_closure(const IntMat& c) {
  const int l = c.rows();
  std::set<std::vector<Int>> roots;
  std::vector<std::vector<Int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<Int> e(l);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < l; ++i) {
        Int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < l; ++j) pairing += beta[j] * c(j, i);
        Int p = 0;  // largest k with beta - k*alpha_i still a positive root
        std::vector<Int> down = beta;
        for (;;) {
          down[i] -= 1;
          if (roots.count(down)) ++p;
          else break;
        }
        if (p - pairing > 0) {
          std::vector<Int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Int>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int ha = 0, hb = 0;
    for (const Int& x : a) ha += x;
    for (const Int& x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace

RootSystem build_root_system(const std::vector<SimpleType>& factors) {
  RootSystem rs;
  rs.factors = factors;
  int l = 0;
  rs.factor_offset.push_back(0);
  for (const SimpleType& t : factors) {
    make_simple_type(t.family, t.rank);  // re-validate
    l += t.rank;
    rs.factor_offset.push_back(l);
  }
  rs.cartan = IntMat(l, l);
  for (size_t f = 0; f < factors.size(); ++f) {
    const int off = rs.factor_offset[f];
    IntMat c = cartan_matrix(factors[f]);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) rs.cartan(off + i, off + j) = c(i, j);

    auto local = positive_closure(c);
    if (long(local.size()) != expected_positive_roots(factors[f]))
      throw integrity_error("positive-root count mismatch for " + factors[f].str());
    for (const auto& r : local) {
      std::vector<Int> g(l);
      for (int i = 0; i < c.rows(); ++i) g[off + i] = r[i];
      rs.positive_roots.push_back(g);
    }
    // closure output is height-sorted; the last root of the factor is highest
    std::vector<Int> h(l);
    for (int i = 0; i < c.rows(); ++i) h[off + i] = local.back()[i];
    rs.highest_roots.push_back(h);
  }
  return rs;
}

IntMat coroot_reflection(const IntMat& cartan, int k) {
  const int l = cartan.rows();
  IntMat s = IntMat::identity(l);
  for (int j = 0; j < l; ++j) s(k, j) -= cartan(k, j);
  return s;
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(make_simple_type('A', l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(make_simple_type('B', l));
  for (int l = 3; l <= max_rank; ++l) out.push_back(make_simple_type('C', l));
  for (int l = 4; l <= max_rank; ++l) out.push_back(make_simple_type('D', l));
  for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back(make_simple_type('E', l));
  if (max_rank >= 4) out.push_back(make_simple_type('F', 4));
  if (max_rank >= 2) out.push_back(make_simple_type('G', 2));
  return out;
}

std::vector<std::vector<Int>> highest_dual_roots(const RootSystem& rs) {
  std::vector<std::vector<Int>> out;
  const int l = rs.rank();
  for (size_t f = 0; f < rs.factors.size(); ++f) {
    const int off = rs.factor_offset[f];
    IntMat c = cartan_matrix(rs.factors[f]).transpose();  // Cartan matrix of the dual system
    auto local = positive_closure(c);
    std::vector<Int> h(l);
    for (int i = 0; i < c.rows(); ++i) h[off + i] = local.back()[i];
    out.push_back(h);
  }
  return out;
}

}  // namespace rootobs
