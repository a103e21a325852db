#include "coxcfg/miquel.hpp"

#include <algorithm>
#include <set>

namespace coxcfg {

namespace {

MiquelInstance rotate(const MiquelInstance& m) {
  MiquelInstance r = m;
  for (int i = 0; i < 4; ++i) {
    r.a[i] = m.a[(i + 1) % 4];
    r.b[i] = m.b[(i + 1) % 4];
    r.sides[i] = m.sides[(i + 1) % 4];
  }
  return r;
}

// i -> -i; the side between new positions i, i+1 is the old side between -i-1, -i.
MiquelInstance reflect(const MiquelInstance& m) {
  MiquelInstance r = m;
  for (int i = 0; i < 4; ++i) {
    r.a[i] = m.a[(4 - i) % 4];
    r.b[i] = m.b[(4 - i) % 4];
    r.sides[i] = m.sides[(7 - i) % 4];
  }
  return r;
}

bool all_distinct(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool on_block(const IncidenceStructure& s, Index b, std::initializer_list<Index> pts) {
  return std::all_of(pts.begin(), pts.end(), [&](Index p) { return s.incident(p, b); });
}

}  // namespace

MiquelInstance canonical_form(const MiquelInstance& m) {
  MiquelInstance best = m;
  MiquelInstance cur = m;
  for (int r = 0; r < 4; ++r) {
    best = std::min(best, cur);
    best = std::min(best, reflect(cur));
    cur = rotate(cur);
  }
  return best;
}

bool is_miquel_instance(const IncidenceStructure& s, const MiquelInstance& m) {
  std::vector<Index> pts(m.a.begin(), m.a.end());
  pts.insert(pts.end(), m.b.begin(), m.b.end());
  std::vector<Index> chains(m.sides.begin(), m.sides.end());
  chains.push_back(m.horizontal);
  for (Index p : pts) {
    if (p >= s.num_points()) return false;
  }
  for (Index c : chains) {
    if (c >= s.num_blocks()) return false;
  }
  if (!all_distinct(pts) || !all_distinct(chains)) return false;
  if (!on_block(s, m.horizontal, {m.a[0], m.a[1], m.a[2], m.a[3]})) return false;
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    if (!on_block(s, m.sides[i], {m.a[i], m.b[i], m.a[j], m.b[j]})) return false;
  }
  return true;
}

std::string describe(const IncidenceStructure& s, const MiquelInstance& m) {
  std::string out = "a:";
  for (Index p : m.a) out += " " + s.point_label(p);
  out += "; b:";
  for (Index p : m.b) out += " " + s.point_label(p);
  out += "; chain A: " + s.block_label(m.horizontal) + "; sides:";
  for (Index c : m.sides) out += " " + s.block_label(c);
  return out;
}

MiquelEnumeration enumerate_miquel_instances(const IncidenceStructure& s, std::size_t budget,
                                             bool deduplicate) {
  MiquelEnumeration out;
  out.deduplicated = deduplicate;

  auto emit = [&](const MiquelInstance& m) {
    if (out.raw_count >= budget) {
      out.cap_reached = true;
      return false;
    }
    ++out.raw_count;
    out.instances.push_back(m);
    return true;
  };

  for (Index horizontal = 0; horizontal < s.num_blocks(); ++horizontal) {
    auto on = s.points_on(horizontal);
    const std::size_t k = on.size();
    if (k < 4) continue;
    std::array<std::size_t, 4> pick{};
    for (pick[0] = 0; pick[0] < k; ++pick[0]) {
      for (pick[1] = 0; pick[1] < k; ++pick[1]) {
        for (pick[2] = 0; pick[2] < k; ++pick[2]) {
          for (pick[3] = 0; pick[3] < k; ++pick[3]) {
            if (!all_distinct({pick[0], pick[1], pick[2], pick[3]})) continue;
            // One representative per dihedral orbit: a[0] smallest, a[1] < a[3].
            if (deduplicate && (pick[0] > std::min({pick[1], pick[2], pick[3]}) || pick[1] > pick[3])) {
              continue;
            }
            MiquelInstance m;
            m.horizontal = horizontal;
            for (int i = 0; i < 4; ++i) m.a[i] = on[pick[i]];

            std::array<std::vector<Index>, 4> side_choices;
            bool possible = true;
            for (int i = 0; i < 4 && possible; ++i) {
              for (Index c : s.common_blocks(m.a[i], m.a[(i + 1) % 4])) {
                if (c != horizontal) side_choices[i].push_back(c);
              }
              possible = !side_choices[i].empty();
            }
            if (!possible) continue;

            for (Index c0 : side_choices[0]) {
              for (Index c1 : side_choices[1]) {
                for (Index c2 : side_choices[2]) {
                  for (Index c3 : side_choices[3]) {
                    if (!all_distinct({c0, c1, c2, c3, horizontal})) continue;
                    m.sides = {c0, c1, c2, c3};
                    // b[i] lies on the sides meeting at a[i].
                    std::array<std::vector<Index>, 4> b_choices;
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) {
                      for (Index p : s.common_points(m.sides[(i + 3) % 4], m.sides[i])) {
                        if (p != m.a[i]) b_choices[i].push_back(p);
                      }
                      ok = !b_choices[i].empty();
                    }
                    if (!ok) continue;
                    for (Index b0 : b_choices[0]) {
                      for (Index b1 : b_choices[1]) {
                        for (Index b2 : b_choices[2]) {
                          for (Index b3 : b_choices[3]) {
                            m.b = {b0, b1, b2, b3};
                            if (!all_distinct({m.a[0], m.a[1], m.a[2], m.a[3], b0, b1, b2, b3})) continue;
                            if (!emit(m)) {
                              std::sort(out.instances.begin(), out.instances.end());
                              return out;
                            }
                          }
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.instances.begin(), out.instances.end());
  return out;
}

std::string to_string(MiquelVariant v) { return v == MiquelVariant::Strong ? "strong" : "weak"; }

std::string to_string(MiquelStatus s) {
  switch (s) {
    case MiquelStatus::Pass: return "pass";
    case MiquelStatus::Fail: return "fail";
    case MiquelStatus::CapReached: return "cap reached";
  }
  return "?";
}

bool instance_violates(const IncidenceStructure& s, const MiquelInstance& m, MiquelVariant variant) {
  if (!is_miquel_instance(s, m)) return false;
  if (variant == MiquelVariant::Strong) {
    for (Index c : s.blocks_through(m.b[0])) {
      if (on_block(s, c, {m.b[1], m.b[2], m.b[3]})) return false;
    }
    return true;
  }
  for (int omit = 0; omit < 4; ++omit) {
    std::vector<Index> three;
    for (int i = 0; i < 4; ++i) {
      if (i != omit) three.push_back(m.b[i]);
    }
    for (Index c : s.blocks_through(three[0])) {
      if (s.incident(three[1], c) && s.incident(three[2], c) && !s.incident(m.b[omit], c)) return true;
    }
  }
  return false;
}

MiquelCheck check_miquel(const IncidenceStructure& s, MiquelVariant variant, std::size_t budget) {
  auto found = enumerate_miquel_instances(s, budget, true);
  MiquelCheck out;
  out.instances_checked = found.instances.size();
  for (const auto& m : found.instances) {
    if (instance_violates(s, m, variant)) out.counterexamples.push_back(m);
  }
  if (!out.counterexamples.empty()) {
    out.status = MiquelStatus::Fail;
  } else if (found.cap_reached) {
    out.status = MiquelStatus::CapReached;
  } else {
    out.status = MiquelStatus::Pass;
  }
  return out;
}

}  // namespace coxcfg
