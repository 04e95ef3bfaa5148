#pragma once

// Test-only reference models. Nothing here calls into the builders: carries
// come from integer arithmetic, Boolean expansions from symbolic rewriting of
// the carry recurrence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ling/netlist.hpp"

namespace ling::oracle {

inline std::uint64_t mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// Carry out of bit i (the value written c[i]) from plain integer addition.
inline bool carry_out_of(unsigned i, std::uint64_t a, std::uint64_t b, bool cin) {
  const std::uint64_t m = mask(i + 1);
  return (((a & m) + (b & m) + (cin ? 1 : 0)) >> (i + 1)) & 1;
}

/// Ling carry H[i] = c[i] | c[i-1], with c[-1] = cin.
inline bool ling_carry_of(unsigned i, std::uint64_t a, std::uint64_t b, bool cin) {
  const bool below = i == 0 ? cin : carry_out_of(i - 1, a, b, cin);
  return carry_out_of(i, a, b, cin) || below;
}

/// Four-bit Ling carries exactly as the grouped formulas read, no carry-in:
/// H3 = G3 + P2*G1, H2 = G2 + P1*G0, H1 = G1, H0 = G0.
inline std::vector<bool> ling4_formulas(std::uint64_t a, std::uint64_t b) {
  bool g[4], p[4];
  for (int i = 0; i < 4; ++i) {
    const bool ai = (a >> i) & 1, bi = (b >> i) & 1;
    g[i] = ai && bi;
    p[i] = ai || bi;
  }
  const bool G0 = g[0], G1 = g[1] || g[0], G2 = g[2] || g[1], G3 = g[3] || g[2];
  const bool P1 = p[1] && p[0], P2 = p[2] && p[1];
  return {G0, G1, G2 || (P1 && G0), G3 || (P2 && G1)};
}

// Sum of products over literal names ("g[0]", "p[2]", "cin").
using Product = std::set<std::string>;
using Sop = std::set<Product>;

inline std::string lit(const char* r, unsigned i) { return std::string(r) + "[" + std::to_string(i) + "]"; }

/// Drops products that contain another product (x + x*y = x).
inline Sop absorb(const Sop& sop) {
  Sop out;
  for (const auto& t : sop) {
    const bool covered = std::any_of(sop.begin(), sop.end(), [&](const Product& u) {
      return u != t && std::includes(t.begin(), t.end(), u.begin(), u.end());
    });
    if (!covered) out.insert(t);
  }
  return out;
}

/// Expands c[i] = g[i] + p[i]*c[i-1] (c[-1] = cin or 0) without simplification.
inline Sop expand_carry(int i, bool has_cin) {
  if (i < 0) return has_cin ? Sop{{"cin"}} : Sop{};
  Sop out{{lit("g", i)}};
  for (Product t : expand_carry(i - 1, has_cin)) {
    t.insert(lit("p", i));
    out.insert(t);
  }
  return out;
}

/// H[i] = c[i] + c[i-1] expanded, unsimplified.
inline Sop expand_ling_raw(int i, bool has_cin) {
  Sop out = expand_carry(i, has_cin);
  const Sop below = expand_carry(i - 1, has_cin);
  out.insert(below.begin(), below.end());
  return out;
}

/// SOP read back from a two-level net: an OR of ANDs / literals, or a single
/// AND / literal.
inline Sop read_sop(const Netlist& n, NetId root) {
  auto product_of = [&](NetId id) {
    const Gate& g = n.gate(id);
    Product t;
    const bool literal = g.name == "cin" || g.name.rfind("g[", 0) == 0 || g.name.rfind("p[", 0) == 0;
    if (g.kind == GateKind::And && !literal) {
      for (NetId in : g.inputs) t.insert(n.gate(in).name);
    } else {
      t.insert(g.name);
    }
    return t;
  };
  Sop out;
  const Gate& g = n.gate(root);
  if (g.kind == GateKind::Or && g.name.rfind("p[", 0) != 0) {
    for (NetId in : g.inputs) out.insert(product_of(in));
  } else {
    out.insert(product_of(root));
  }
  return out;
}

inline bool eval_sop(const Sop& sop, std::uint64_t a, std::uint64_t b, bool cin) {
  auto value = [&](const std::string& name) {
    if (name == "cin") return cin;
    const unsigned i = static_cast<unsigned>(std::stoul(name.substr(2, name.size() - 3)));
    const bool ai = (a >> i) & 1, bi = (b >> i) & 1;
    return name[0] == 'g' ? (ai && bi) : (ai || bi);
  };
  return std::any_of(sop.begin(), sop.end(), [&](const Product& t) {
    return std::all_of(t.begin(), t.end(), value);
  });
}

/// Random DAG with `inputs` primary inputs over all gate kinds, fan-in up to
/// `max_fanin`; some outputs and tapped nets.
inline Netlist random_netlist(std::mt19937_64& rng, unsigned inputs, unsigned gates, unsigned max_fanin) {
  NetlistBuilder nb;
  for (unsigned i = 0; i < inputs; ++i) nb.add_input("x" + std::to_string(i));
  auto pick = [&](std::size_t bound) { return static_cast<NetId>(rng() % bound); };
  for (unsigned k = 0; k < gates; ++k) {
    const unsigned choice = rng() % 10;
    const std::size_t existing = nb.size();
    if (choice == 0) {
      nb.constant(rng() & 1);
    } else if (choice == 1) {
      nb.make_not(pick(existing));
    } else {
      const GateKind kind = choice < 5 ? GateKind::And : choice < 8 ? GateKind::Or : GateKind::Xor;
      const unsigned fanin = 2 + static_cast<unsigned>(rng() % (max_fanin - 1));
      std::vector<NetId> ins;
      for (unsigned j = 0; j < fanin; ++j) ins.push_back(pick(existing));
      nb.add_node(kind, std::move(ins), (rng() & 1) ? "n" + std::to_string(k) : std::string{});
    }
  }
  const std::size_t total = nb.size();
  const unsigned outputs = 1 + static_cast<unsigned>(rng() % 6);
  for (unsigned k = 0; k < outputs; ++k) nb.add_output(static_cast<NetId>(total - 1 - rng() % std::min<std::size_t>(total, 8)));
  for (unsigned k = 0; k < 3; ++k) nb.tap("t" + std::to_string(k), pick(total));
  return std::move(nb).finish();
}

}  // namespace ling::oracle
