#include "logjet/chain.hpp"

namespace logjet {

Chain Chain::single(const Params& params, DeltaSymbol s, Coeff c) {
  Chain v(s.degree());
  v.add_term(params, std::move(s), c);
  return v;
}

void Chain::add_term(const Params& params, DeltaSymbol s, Coeff c) {
  if (s.degree() != degree_) throw std::invalid_argument("Chain::add_term: degree mismatch");
  auto cs = canonicalize(params, std::move(s));
  if (!cs) return;
  add_canonical(params, *cs, c);
}

void Chain::add_canonical(const Params& params, const DeltaSymbol& s, Coeff c) {
  c %= params.p;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second = add_mod(it->second, c, params.p);
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff Chain::coefficient(const DeltaSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

Chain add(const Params& params, const Chain& a, const Chain& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("add: degree mismatch");
  Chain out = a;
  for (const auto& [s, c] : b.terms()) out.add_canonical(params, s, c);
  return out;
}

Chain scale(const Params& params, Coeff c, const Chain& a) {
  c %= params.p;
  Chain out(a.degree());
  if (c == 0) return out;
  for (const auto& [s, cs] : a.terms())
    out.add_canonical(params, s, mul_mod(c, cs, params.p));
  return out;
}

Chain sub(const Params& params, const Chain& a, const Chain& b) {
  return add(params, a, scale(params, neg_mod(1 % params.p, params.p), b));
}

std::string render(const Chain& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += render(s);
  }
  return out;
}

Chain parse_chain(const Params& params, std::string_view text, std::size_t zero_degree) {
  if (text == "0") return Chain(zero_degree);
  std::vector<std::pair<DeltaSymbol, Coeff>> parsed;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(" + ", pos);
    std::string_view tok =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    Coeff c = 1;
    std::size_t star = tok.find('*');
    if (star != std::string_view::npos) {
      c = static_cast<Coeff>(std::stoul(std::string(tok.substr(0, star))));
      tok = tok.substr(star + 1);
    }
    parsed.emplace_back(parse_symbol(tok), c);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  Chain out(parsed.front().first.degree());
  for (auto& [s, c] : parsed) out.add_term(params, std::move(s), c);
  return out;
}

}  // namespace logjet
