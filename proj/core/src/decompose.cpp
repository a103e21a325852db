#include <stdexcept>

#include "coxcfg/builders.hpp"

namespace coxcfg {

Decomposition decompose(int n, Subset x1, Subset x2) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("ground set size out of range");
  if ((x1 | x2) != Subset::full(n) || !(x1 & x2).empty() || x1.empty() || x2.empty()) {
    throw std::invalid_argument("X1, X2 must partition the ground set into nonempty parts");
  }
  Decomposition out;
  for (auto a : subsets_of(x2)) out.family1.push_back({1, x1, a});
  for (auto a : subsets_of(x1)) out.family2.push_back({2, x2, a});

  // A Cox flag {s, s + e} with e outside s is keyed by (s, e).
  const auto key = [n](Subset lower, int e) { return static_cast<std::size_t>(lower.bits()) * n + e; };
  std::vector<std::vector<std::size_t>> by_key(static_cast<std::size_t>(n) << n);

  std::vector<DecompositionMember> members = out.family1;
  members.insert(members.end(), out.family2.begin(), out.family2.end());
  for (std::size_t m = 0; m < members.size(); ++m) {
    const auto& member = members[m];
    for (auto a : subsets_of(member.ground)) {
      for (int e : member.ground.elements()) {
        if (a.contains(e)) continue;
        Subset u = a ^ member.translation;
        Subset v = a.with(e) ^ member.translation;
        Subset lower = u.contains(e) ? v : u;
        by_key[key(lower, e)].push_back(m);
      }
    }
  }

  auto s = cox(n);
  auto flags = s.flags();
  out.covers = true;
  out.unique = true;
  for (const auto& f : flags) {
    Subset p = parse_subset(s.point_label(f.point));
    Subset b = parse_subset(s.block_label(f.block));
    Subset diff = p ^ b;
    int e = diff.min_element();
    Subset lower = p.contains(e) ? b : p;
    const auto& holders = by_key[key(lower, e)];
    out.covers = out.covers && !holders.empty();
    out.unique = out.unique && holders.size() == 1;
    out.flag_members.push_back(holders);
  }

  // Members of different families: element sets {A + a : a in X_i} and
  // {B + b : b in X_{3-i}} meet in exactly one subset.
  out.transversal = true;
  for (const auto& m1 : out.family1) {
    for (const auto& m2 : out.family2) {
      std::size_t shared = 0;
      for (auto a : subsets_of(m1.ground)) {
        Subset z = a ^ m1.translation;
        if ((z ^ m2.translation).subset_of(m2.ground)) ++shared;
      }
      if (shared != 1) out.transversal = false;
    }
  }
  return out;
}

}  // namespace coxcfg
