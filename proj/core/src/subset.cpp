#include "coxcfg/subset.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace coxcfg {

Subset Subset::of(std::initializer_list<int> elements) {
  Bits bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= 32) throw std::invalid_argument("subset element out of range");
    bits |= Bits{1} << e;
  }
  return Subset(bits);
}

Subset Subset::of(const std::vector<int>& elements) {
  Bits bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= 32) throw std::invalid_argument("subset element out of range");
    bits |= Bits{1} << e;
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

Subset parse_subset(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("malformed subset label: " + std::string(text));
  }
  text = trim(text.substr(1, text.size() - 2));
  Subset out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1 || value > 32) {
      throw std::invalid_argument("malformed subset element: " + std::string(token));
    }
    if (out.contains(value - 1)) throw std::invalid_argument("repeated subset element");
    out = out.with(value - 1);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in subset label");
  }
  return out;
}

std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << n); ++bits) {
    if (std::popcount(bits) == k) out.emplace_back(bits);
  }
  return out;
}

std::vector<Subset> subsets_of_parity(int n, int parity) {
  std::vector<Subset> out;
  for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << n); ++bits) {
    if (std::popcount(bits) % 2 == parity) out.emplace_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> subsets_of(Subset ground) {
  std::vector<Subset> out;
  // Enumerate submasks of the ground word.
  Subset::Bits g = ground.bits();
  for (Subset::Bits sub = g;; sub = (sub - 1) & g) {
    out.emplace_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxcfg
