#include "ling/builders.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ling {

namespace {

std::string role(const char* prefix, unsigned index) {
  return std::string(prefix) + "[" + std::to_string(index) + "]";
}

/// A block covers bit positions base .. base + bits.size() - 1 and reports its
/// sum nets and carry-out.
struct BlockResult {
  std::vector<NetId> sums;
  NetId cout;
};

/// Inputs and prepared bits for a whole adder, shared by every family.
struct AdderFrame {
  NetlistBuilder builder;
  std::optional<NetId> cin;
  std::vector<BitSignals> bits;

  AdderFrame(unsigned width, bool has_cin) {
    std::vector<NetId> a;
    std::vector<NetId> b;
    for (unsigned i = 0; i < width; ++i) a.push_back(builder.add_input(role("a", i)));
    for (unsigned i = 0; i < width; ++i) b.push_back(builder.add_input(role("b", i)));
    if (has_cin) cin = builder.add_input("cin");
    for (unsigned i = 0; i < width; ++i) bits.push_back(bit_prepare(builder, a[i], b[i], i));
  }

  Netlist finish(const AdderSpec& spec, const std::vector<NetId>& sums, NetId cout) && {
    for (NetId s : sums) builder.add_output(s);
    builder.add_output(cout);
    builder.tap("cout", cout);
    builder.set_meta(spec);
    return std::move(builder).finish();
  }
};

/// Sum bit from a Ling carry. Position -1 stands in for the carry-in:
/// H[-1] = cin, p[-1] = 1, c[-1] = cin.
NetId ling_sum(NetlistBuilder& nb, std::span<const BitSignals> bits, std::span<const NetId> ling_carry,
               std::span<const NetId> carry, std::size_t i, std::optional<NetId> cin, SumForm form) {
  const NetId d = bits[i].d;
  if (i == 0 && !cin) return d;

  const NetId h_prev = i == 0 ? *cin : ling_carry[i - 1];
  if (form == SumForm::xor_form) {
    const NetId c_prev = i == 0 ? *cin : carry[i - 1];
    return nb.make_xor({d, c_prev});
  }
  const NetId p_prev = i == 0 ? nb.constant(true) : bits[i - 1].p;
  const NetId when_low = nb.make_and({nb.make_not(h_prev), d});
  const NetId when_high = nb.make_and({h_prev, nb.make_xor({d, p_prev})});
  return nb.make_or({when_low, when_high});
}

BlockResult rca_block(NetlistBuilder& nb, std::span<const BitSignals> bits, unsigned base,
                      std::optional<NetId> cin) {
  BlockResult out;
  std::optional<NetId> carry = cin;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const auto pos = base + static_cast<unsigned>(i);
    const NetId s = carry ? nb.make_xor({bits[i].d, *carry}) : bits[i].d;
    nb.tap(role("s", pos), s);
    out.sums.push_back(s);
    const NetId c = carry ? nb.make_or({bits[i].g, nb.make_and({bits[i].p, *carry})}) : bits[i].g;
    nb.tap(role("c", pos), c);
    carry = c;
  }
  out.cout = *carry;
  return out;
}

BlockResult cla_block(NetlistBuilder& nb, std::span<const BitSignals> bits, unsigned base,
                      std::optional<NetId> cin) {
  std::vector<NetId> carries;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    // c[i] = g[i] + p[i]g[i-1] + p[i]p[i-1]g[i-2] + ... + p[i]...p[0]cin
    std::vector<NetId> terms{bits[i].g};
    std::vector<NetId> prefix{bits[i].p};
    for (std::size_t j = i; j-- > 0;) {
      std::vector<NetId> product = prefix;
      product.push_back(bits[j].g);
      terms.push_back(nb.make_and(std::move(product)));
      prefix.push_back(bits[j].p);
    }
    if (cin) {
      prefix.push_back(*cin);
      terms.push_back(nb.make_and(std::move(prefix)));
    }
    const NetId c = nb.disjunction(std::move(terms));
    nb.tap(role("c", base + static_cast<unsigned>(i)), c);
    carries.push_back(c);
  }

  BlockResult out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    std::optional<NetId> c_prev = i == 0 ? cin : std::optional<NetId>(carries[i - 1]);
    const NetId s = c_prev ? nb.make_xor({bits[i].d, *c_prev}) : bits[i].d;
    nb.tap(role("s", base + static_cast<unsigned>(i)), s);
    out.sums.push_back(s);
  }
  out.cout = carries.back();
  return out;
}

/// Real carries c[i] = p[i]*H[i], then the sum bits.
BlockResult finish_ling_block(NetlistBuilder& nb, std::span<const BitSignals> bits, unsigned base,
                              std::optional<NetId> cin, SumForm form,
                              const std::vector<NetId>& ling_carry) {
  std::vector<NetId> carries;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const NetId c = nb.make_and({bits[i].p, ling_carry[i]});
    nb.tap(role("c", base + static_cast<unsigned>(i)), c);
    carries.push_back(c);
  }
  BlockResult out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const NetId s = ling_sum(nb, bits, ling_carry, carries, i, cin, form);
    nb.tap(role("s", base + static_cast<unsigned>(i)), s);
    out.sums.push_back(s);
  }
  out.cout = carries.back();
  return out;
}

BlockResult ling_flat_block(NetlistBuilder& nb, std::span<const BitSignals> bits, unsigned base,
                            std::optional<NetId> cin, SumForm form) {
  std::vector<NetId> ling_carry;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    // H[i] = g[i] + g[i-1] + p[i-1]g[i-2] + p[i-1]p[i-2]g[i-3] + ... (+ p[i-1]...p[0]cin)
    std::vector<NetId> terms{bits[i].g};
    if (i >= 1) {
      terms.push_back(bits[i - 1].g);
      std::vector<NetId> prefix{bits[i - 1].p};
      for (std::size_t j = i - 1; j-- > 0;) {
        std::vector<NetId> product = prefix;
        product.push_back(bits[j].g);
        terms.push_back(nb.make_and(std::move(product)));
        prefix.push_back(bits[j].p);
      }
      if (cin) {
        prefix.push_back(*cin);
        terms.push_back(nb.make_and(std::move(prefix)));
      }
    } else if (cin) {
      terms.push_back(*cin);
    }
    const NetId h = nb.disjunction(std::move(terms));
    nb.tap(role("H", base + static_cast<unsigned>(i)), h);
    ling_carry.push_back(h);
  }
  return finish_ling_block(nb, bits, base, cin, form, ling_carry);
}

BlockResult ling4_block(NetlistBuilder& nb, std::span<const BitSignals> bits, std::optional<NetId> cin,
                        SumForm form, bool boundary_propagate) {
  const NetId g_low = cin ? *cin : nb.constant(false);

  // Gs[i] = g[i] + g[i-1]
  std::vector<NetId> gs;
  gs.push_back(nb.make_or({bits[0].g, g_low}));
  for (std::size_t i = 1; i < 4; ++i) gs.push_back(nb.make_or({bits[i].g, bits[i - 1].g}));
  for (unsigned i = 0; i < 4; ++i) nb.tap(role("Gs", i), gs[i]);

  // Ps[i] = p[i] * p[i-1]; Ps[0] only matters when a carry-in feeds H[1] and H[3].
  std::vector<NetId> ps(3);
  if (cin) {
    ps[0] = nb.make_and({bits[0].p, nb.constant(boundary_propagate)});
    nb.tap("Ps[0]", ps[0]);
  }
  for (unsigned i = 1; i < 3; ++i) {
    ps[i] = nb.make_and({bits[i].p, bits[i - 1].p});
    nb.tap(role("Ps", i), ps[i]);
  }

  std::vector<NetId> h(4);
  h[0] = gs[0];
  h[1] = cin ? nb.make_or({gs[1], nb.make_and({ps[0], *cin})}) : gs[1];
  h[2] = nb.make_or({gs[2], nb.make_and({ps[1], gs[0]})});
  std::vector<NetId> h3_terms{gs[3], nb.make_and({ps[2], gs[1]})};
  if (cin) h3_terms.push_back(nb.make_and({ps[2], ps[0], *cin}));
  h[3] = nb.make_or(std::move(h3_terms));
  for (unsigned i = 0; i < 4; ++i) nb.tap(role("H", i), h[i]);

  return finish_ling_block(nb, bits, 0, cin, form, h);
}

}  // namespace

BitSignals bit_prepare(NetlistBuilder& builder, NetId a, NetId b, unsigned index) {
  BitSignals bits{builder.make_and({a, b}), builder.make_or({a, b}), builder.make_xor({a, b})};
  builder.tap(role("g", index), bits.g);
  builder.tap(role("p", index), bits.p);
  builder.tap(role("d", index), bits.d);
  return bits;
}

Netlist build_rca(unsigned width, bool has_cin) {
  const AdderSpec spec{Family::rca, width, 4, has_cin, SumForm::xor_form};
  spec.validate();
  AdderFrame frame(width, has_cin);
  const auto block = rca_block(frame.builder, frame.bits, 0, frame.cin);
  return std::move(frame).finish(spec, block.sums, block.cout);
}

Netlist build_cla_flat(unsigned width, bool has_cin) {
  const AdderSpec spec{Family::cla_flat, width, 4, has_cin, SumForm::xor_form};
  spec.validate();
  AdderFrame frame(width, has_cin);
  const auto block = cla_block(frame.builder, frame.bits, 0, frame.cin);
  return std::move(frame).finish(spec, block.sums, block.cout);
}

Netlist build_ling4(bool has_cin, SumForm sum_form) {
  return detail::build_ling4_with_boundary(has_cin, sum_form, true);
}

Netlist detail::build_ling4_with_boundary(bool has_cin, SumForm sum_form, bool boundary_propagate) {
  const AdderSpec spec{Family::ling4, 4, 4, has_cin, sum_form};
  AdderFrame frame(4, has_cin);
  const auto block = ling4_block(frame.builder, frame.bits, frame.cin, sum_form, boundary_propagate);
  return std::move(frame).finish(spec, block.sums, block.cout);
}

Netlist build_ling_flat(unsigned width, bool has_cin, SumForm sum_form) {
  const AdderSpec spec{Family::ling_flat, width, 4, has_cin, sum_form};
  spec.validate();
  AdderFrame frame(width, has_cin);
  const auto block = ling_flat_block(frame.builder, frame.bits, 0, frame.cin, sum_form);
  return std::move(frame).finish(spec, block.sums, block.cout);
}

Netlist build_grouped(GroupFamily family, unsigned width, unsigned group_size, bool has_cin,
                      SumForm sum_form) {
  const AdderSpec spec{family == GroupFamily::ling ? Family::ling_grouped : Family::cla_grouped,
                       width, group_size, has_cin,
                       family == GroupFamily::ling ? sum_form : SumForm::xor_form};
  spec.validate();
  AdderFrame frame(width, has_cin);
  std::vector<NetId> sums;
  std::optional<NetId> carry = frame.cin;
  const std::span<const BitSignals> all(frame.bits);
  for (unsigned base = 0; base < width; base += group_size) {
    const auto slice = all.subspan(base, group_size);
    const auto block = family == GroupFamily::ling
                           ? ling_flat_block(frame.builder, slice, base, carry, sum_form)
                           : cla_block(frame.builder, slice, base, carry);
    sums.insert(sums.end(), block.sums.begin(), block.sums.end());
    carry = block.cout;
  }
  return std::move(frame).finish(spec, sums, *carry);
}

Netlist build(const AdderSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::rca:
      return build_rca(spec.width, spec.has_cin);
    case Family::cla_flat:
      return build_cla_flat(spec.width, spec.has_cin);
    case Family::ling4:
      return build_ling4(spec.has_cin, spec.sum_form);
    case Family::ling_flat:
      return build_ling_flat(spec.width, spec.has_cin, spec.sum_form);
    case Family::cla_grouped:
      return build_grouped(GroupFamily::cla, spec.width, spec.group_size, spec.has_cin, spec.sum_form);
    case Family::ling_grouped:
      return build_grouped(GroupFamily::ling, spec.width, spec.group_size, spec.has_cin, spec.sum_form);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace ling
