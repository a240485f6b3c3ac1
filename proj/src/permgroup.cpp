#include "origami/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace origami {

Perm perm_identity() {
  Perm p;
  for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(i);
  return p;
}

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r;
  for (int i = 0; i < 8; ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r;
  for (int i = 0; i < 8; ++i) r[p[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity();
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1;
      int to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from > 7 || to < 0 || to > 7)
        throw std::domain_error("perm_from_cycles: letter out of range");
      p[from] = static_cast<uint8_t>(to);
    }
  }
  return p;
}

int perm_order(const Perm& p) {
  Perm q = p;
  int n = 1;
  while (q != perm_identity()) {
    q = perm_mul(q, p);
    ++n;
  }
  return n;
}

std::vector<int> cycle_type(const Perm& p) {
  std::array<bool, 8> seen{};
  std::vector<int> type;
  for (int i = 0; i < 8; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

PermGroup perm_closure(const std::vector<Perm>& gens) {
  PermGroup g;
  g.generators = gens;
  g.elements.insert(perm_identity());
  std::vector<Perm> frontier{perm_identity()};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        Perm h = perm_mul(s, e);
        if (g.elements.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

PermGroup normalizer_in_s8(const PermGroup& h) {
  PermGroup n;
  Perm s = perm_identity();
  std::array<uint8_t, 8> idx;
  std::iota(idx.begin(), idx.end(), 0);
  do {
    for (int i = 0; i < 8; ++i) s[i] = idx[i];
    Perm si = perm_inverse(s);
    bool normalizes = true;
    for (const auto& e : h.elements) {
      if (!h.contains(perm_mul(perm_mul(s, e), si))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) n.elements.insert(s);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return n;
}

std::set<std::vector<int>> cycle_type_set(const PermGroup& g) {
  std::set<std::vector<int>> out;
  for (const auto& e : g.elements) out.insert(cycle_type(e));
  return out;
}

}  // namespace origami
