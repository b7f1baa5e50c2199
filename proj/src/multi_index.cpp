#include "logjet/multi_index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace logjet {

MultiIndex MultiIndex::unit(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw std::invalid_argument("unit: position out of range");
  std::vector<std::uint32_t> c(n, 0);
  c[i - 1] = 1;
  return MultiIndex(std::move(c));
}

std::uint64_t MultiIndex::norm() const {
  return std::accumulate(c_.begin(), c_.end(), std::uint64_t(0));
}

bool MultiIndex::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

MultiIndex MultiIndex::hat() const {
  if (c_.empty()) throw std::invalid_argument("hat: empty index");
  return MultiIndex(std::vector<std::uint32_t>(c_.begin(), c_.end() - 1));
}

MultiIndex MultiIndex::zero_last() const {
  MultiIndex r = *this;
  if (!r.c_.empty()) r.c_.back() = 0;
  return r;
}

MultiIndex MultiIndex::embed(std::size_t n) const {
  if (n < c_.size()) throw std::invalid_argument("embed: target length too small");
  std::vector<std::uint32_t> c = c_;
  c.resize(n, 0);
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("MultiIndex+: length mismatch");
  MultiIndex r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("MultiIndex-: length mismatch");
  MultiIndex r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (r.c_[k] < o.c_[k]) throw std::invalid_argument("MultiIndex-: not componentwise <=");
    r.c_[k] -= o.c_[k];
  }
  return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] > o.c_[k]) return false;
  return true;
}

MultiIndex MultiIndex::min(const MultiIndex& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("min: length mismatch");
  MultiIndex r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = std::min(r.c_[k], o.c_[k]);
  return r;
}

bool in_slot_set(const Params& params, const MultiIndex& j) {
  std::uint64_t w = j.norm();
  return w > 0 && w <= params.pm;
}

std::size_t s_index(const std::vector<MultiIndex>& slots) {
  if (slots.empty()) throw std::invalid_argument("s_index: empty slot list");
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (slots[k].last() != 0) return k + 1;
  return slots.size();
}

namespace {

// Lexicographic successor of x within the box 0 <= x <= bound.
bool next_below(std::vector<std::uint32_t>& x, const MultiIndex& bound) {
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] < bound[k]) {
      ++x[k];
      std::fill(x.begin() + k + 1, x.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Triple> decompositions(const MultiIndex& i, bool forbid_b_eq_i,
                                   bool forbid_c_eq_i) {
  std::vector<Triple> out;
  std::vector<std::uint32_t> a(i.size(), 0);
  do {
    MultiIndex ma(a);
    MultiIndex rest = i - ma;
    std::vector<std::uint32_t> b(i.size(), 0);
    do {
      MultiIndex mb(b);
      MultiIndex mc = rest - mb;
      if (forbid_b_eq_i && mb == i) continue;
      if (forbid_c_eq_i && mc == i) continue;
      out.push_back(Triple{ma, mb, mc});
    } while (next_below(b, rest));
  } while (next_below(a, i));
  return out;
}

std::vector<MultiIndex> indices_up_to_weight(std::size_t n, std::uint64_t w) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(n, 0);
  // compositions of wt into n parts, lexicographically
  auto emit = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = static_cast<std::uint32_t>(left);
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      cur[pos] = static_cast<std::uint32_t>(v);
      self(self, pos + 1, left - v);
    }
  };
  for (std::uint64_t wt = 0; wt <= w; ++wt) emit(emit, 0, wt);
  return out;
}

std::vector<MultiIndex> slot_set(const Params& params) {
  std::vector<MultiIndex> out;
  for (auto& j : indices_up_to_weight(params.n, params.pm))
    if (!j.is_zero()) out.push_back(j);
  return out;
}

std::vector<MultiIndex> relation_inner_set(const Params& params) {
  std::vector<MultiIndex> out;
  for (auto& j : indices_up_to_weight(params.n, 2 * params.pm))
    if (j.norm() > params.pm) out.push_back(j);
  return out;
}

std::string render(const MultiIndex& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(i[k]);
  }
  s += ')';
  return s;
}

namespace {

void fail_parse(std::string_view text) {
  throw std::invalid_argument("parse_multi_index: malformed input '" + std::string(text) + "'");
}

}  // namespace

MultiIndex parse_multi_index(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail_parse(text);
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::uint32_t> c;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) fail_parse(text);
      c.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MultiIndex(std::move(c));
}

}  // namespace logjet
