#pragma once

#include "ling/adder_spec.hpp"
#include "ling/netlist.hpp"

namespace ling {

struct BitSignals {
  NetId g;  // a & b
  NetId p;  // a | b
  NetId d;  // a ^ b
};

/// Adds g[i] = AND(a, b), p[i] = OR(a, b), d[i] = XOR(a, b) and taps them.
BitSignals bit_prepare(NetlistBuilder& builder, NetId a, NetId b, unsigned index);

/// Ripple-carry chain: c[i] = g[i] + p[i]*c[i-1], s[i] = d[i] ^ c[i-1].
Netlist build_rca(unsigned width, bool has_cin);

/// Every carry as one flat sum of products over g, p (and cin). Width <= 16.
Netlist build_cla_flat(unsigned width, bool has_cin);

/// Four-bit Ling adder from pairwise Ling generate/propagate terms:
///
///   Gs[i] = g[i] + g[i-1]      Ps[i] = p[i] * p[i-1]
///   H[3] = Gs[3] + Ps[2]*Gs[1]     H[2] = Gs[2] + Ps[1]*Gs[0]
///   H[1] = Gs[1]                   H[0] = Gs[0]
///   c[i] = p[i] * H[i]             cout = c[3]
///
/// Position -1 is grounded (g = p = CONST0) without carry-in. With carry-in it
/// becomes g = cin, p = CONST1, H = cin, which adds Ps[0]*cin to H[1] and
/// Ps[2]*Ps[0]*cin to H[3].
Netlist build_ling4(bool has_cin, SumForm sum_form);

/// Ling carries as flat sums of products:
///   H[i] = g[i] + g[i-1] + sum_{j<i-1} p[i-1]*...*p[j+1]*g[j]  (+ p[i-1]*...*p[0]*cin)
/// Width <= 16.
Netlist build_ling_flat(unsigned width, bool has_cin, SumForm sum_form);

enum class GroupFamily { cla, ling };

/// width / group_size flat blocks, each block's carry-out feeding the next
/// block's carry-in. Taps use global bit indices.
Netlist build_grouped(GroupFamily family, unsigned width, unsigned group_size, bool has_cin,
                      SumForm sum_form);

/// Dispatches on spec.family after spec.validate().
Netlist build(const AdderSpec& spec);

namespace detail {

/// ling4 with an explicit value for the boundary propagate p[-1] under
/// carry-in. Only the grounded (false) variant differs from build_ling4; it
/// exists so the identity suite can be shown to catch a bad boundary.
Netlist build_ling4_with_boundary(bool has_cin, SumForm sum_form, bool boundary_propagate);

}  // namespace detail

}  // namespace ling
