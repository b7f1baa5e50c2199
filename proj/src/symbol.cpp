#include "logjet/symbol.hpp"

namespace logjet {

bool is_canonical(const Params& params, const DeltaSymbol& s) {
  for (const auto& j : s.slots)
    if (!in_slot_set(params, j)) return false;
  return true;
}

std::optional<DeltaSymbol> canonicalize(const Params& params, DeltaSymbol s) {
  if (!is_canonical(params, s)) return std::nullopt;
  return s;
}

std::string render(const DeltaSymbol& s) {
  std::string out = "d(";
  out += render(s.eta);
  for (std::size_t k = 0; k < s.slots.size(); ++k) {
    out += (k == 0) ? ";" : ",";
    out += render(s.slots[k]);
  }
  out += ')';
  return out;
}

namespace {

void fail_parse(std::string_view text) {
  throw std::invalid_argument("parse_symbol: malformed input '" + std::string(text) + "'");
}

// Extracts the "(...)" group starting at pos; advances pos past it.
std::string_view take_group(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(') fail_parse(text);
  std::size_t end = text.find(')', pos);
  if (end == std::string_view::npos) fail_parse(text);
  std::string_view g = text.substr(pos, end - pos + 1);
  pos = end + 1;
  return g;
}

}  // namespace

DeltaSymbol parse_symbol(std::string_view text) {
  if (text.size() < 4 || text.substr(0, 2) != "d(" || text.back() != ')') fail_parse(text);
  std::string_view body = text.substr(2, text.size() - 3);
  std::size_t pos = 0;
  DeltaSymbol s;
  s.eta = parse_multi_index(take_group(body, pos));
  if (pos < body.size()) {
    if (body[pos] != ';') fail_parse(text);
    ++pos;
    while (true) {
      s.slots.push_back(parse_multi_index(take_group(body, pos)));
      if (pos == body.size()) break;
      if (body[pos] != ',') fail_parse(text);
      ++pos;
    }
  }
  return s;
}

}  // namespace logjet
