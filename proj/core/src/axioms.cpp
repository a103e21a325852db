#include "coxcfg/axioms.hpp"

#include <algorithm>
#include <tuple>

namespace coxcfg {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::I: return "I";
    case Condition::II: return "II";
    case Condition::III: return "III";
    case Condition::IV: return "IV";
    case Condition::V: return "V";
  }
  return "?";
}

std::string describe(const IncidenceStructure& s, const Witness& w) {
  std::string out = "condition " + to_string(w.condition) + " violated; points:";
  for (Index p : w.points) out += " " + s.point_label(p);
  out += "; blocks:";
  for (Index b : w.blocks) out += " " + s.block_label(b);
  return out;
}

namespace {

bool on_common_block(const IncidenceStructure& s, Index p, Index q, Index r) {
  for (Index b : s.blocks_through(p)) {
    if (s.incident(q, b) && s.incident(r, b)) return true;
  }
  return false;
}

bool blocks_share_point(const IncidenceStructure& s, Index a, Index b, Index c) {
  for (Index p : s.points_on(a)) {
    if (s.incident(p, b) && s.incident(p, c)) return true;
  }
  return false;
}

std::optional<Witness> check_I(const IncidenceStructure& s) {
  for (Index p = 0; p < s.num_points(); ++p) {
    for (Index q = p + 1; q < s.num_points(); ++q) {
      auto common = s.common_blocks(p, q);
      if (common.size() != 0 && common.size() != 2) return Witness{Condition::I, {p, q}, common};
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_II(const IncidenceStructure& s) {
  for (Index a = 0; a < s.num_blocks(); ++a) {
    for (Index b = a + 1; b < s.num_blocks(); ++b) {
      auto common = s.common_points(a, b);
      if (common.size() >= 3) {
        common.resize(3);
        return Witness{Condition::II, common, {a, b}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_III(const IncidenceStructure& s) {
  for (Index b = 0; b < s.num_blocks(); ++b) {
    if (s.block_rank(b) < 3) {
      auto pts = s.points_on(b);
      return Witness{Condition::III, {pts.begin(), pts.end()}, {b}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_IV(const IncidenceStructure& s) {
  const auto v = s.num_points();
  std::vector<std::vector<Index>> collinear(v);
  for (Index b = 0; b < s.num_blocks(); ++b) {
    for (Index p : s.points_on(b)) {
      for (Index q : s.points_on(b)) {
        if (p != q) collinear[p].push_back(q);
      }
    }
  }
  for (auto& row : collinear) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  for (Index p = 0; p < v; ++p) {
    for (Index q : collinear[p]) {
      if (q <= p) continue;
      for (Index r : collinear[q]) {
        if (r <= q || !std::binary_search(collinear[p].begin(), collinear[p].end(), r)) continue;
        if (!on_common_block(s, p, q, r)) return Witness{Condition::IV, {p, q, r}, {}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_V(const IncidenceStructure& s) {
  const auto nb = s.num_blocks();
  std::vector<std::vector<Index>> meets(nb);
  for (Index p = 0; p < s.num_points(); ++p) {
    for (Index a : s.blocks_through(p)) {
      for (Index b : s.blocks_through(p)) {
        if (a != b) meets[a].push_back(b);
      }
    }
  }
  for (auto& row : meets) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  for (Index a = 0; a < nb; ++a) {
    for (Index b : meets[a]) {
      if (b <= a) continue;
      for (Index c : meets[b]) {
        if (c <= b || !std::binary_search(meets[a].begin(), meets[a].end(), c)) continue;
        if (!blocks_share_point(s, a, b, c)) return Witness{Condition::V, {}, {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> check_condition(const IncidenceStructure& s, Condition c) {
  switch (c) {
    case Condition::I: return check_I(s);
    case Condition::II: return check_II(s);
    case Condition::III: return check_III(s);
    case Condition::IV: return check_IV(s);
    case Condition::V: return check_V(s);
  }
  return std::nullopt;
}

bool witness_violates(const IncidenceStructure& s, const Witness& w) {
  auto valid_points = std::all_of(w.points.begin(), w.points.end(), [&](Index p) { return p < s.num_points(); });
  auto valid_blocks = std::all_of(w.blocks.begin(), w.blocks.end(), [&](Index b) { return b < s.num_blocks(); });
  if (!valid_points || !valid_blocks) return false;
  switch (w.condition) {
    case Condition::I: {
      if (w.points.size() != 2 || w.points[0] == w.points[1]) return false;
      auto n = s.common_blocks(w.points[0], w.points[1]).size();
      return n != 0 && n != 2;
    }
    case Condition::II: {
      if (w.points.size() != 3 || w.blocks.size() != 2 || w.blocks[0] == w.blocks[1]) return false;
      return std::all_of(w.points.begin(), w.points.end(), [&](Index p) {
        return s.incident(p, w.blocks[0]) && s.incident(p, w.blocks[1]);
      });
    }
    case Condition::III:
      return w.blocks.size() == 1 && s.block_rank(w.blocks[0]) < 3;
    case Condition::IV: {
      if (w.points.size() != 3) return false;
      auto [p, q, r] = std::tuple{w.points[0], w.points[1], w.points[2]};
      auto col = [&](Index x, Index y) { return !s.common_blocks(x, y).empty(); };
      return col(p, q) && col(q, r) && col(p, r) && !on_common_block(s, p, q, r);
    }
    case Condition::V: {
      if (w.blocks.size() != 3) return false;
      auto [a, b, c] = std::tuple{w.blocks[0], w.blocks[1], w.blocks[2]};
      auto meet = [&](Index x, Index y) { return !s.common_points(x, y).empty(); };
      return meet(a, b) && meet(b, c) && meet(a, c) && !blocks_share_point(s, a, b, c);
    }
  }
  return false;
}

WeakChainReport is_weak_chain_structure(const IncidenceStructure& s) {
  WeakChainReport r;
  r.no_two_blocks_share_three_points = check_II(s);
  r.blocks_have_three_points = check_III(s);
  r.collinear_triples_close = check_IV(s);
  r.ok = !r.no_two_blocks_share_three_points && !r.blocks_have_three_points && !r.collinear_triples_close;
  return r;
}

}  // namespace coxcfg
