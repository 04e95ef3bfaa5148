#include "ling/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "ling/builders.hpp"

namespace ling {

namespace {

constexpr std::size_t kLanes = 64;

std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

auto vector_key(const Failure& f) { return std::make_tuple(f.cin, f.b, f.a); }

/// Failure collector keeping the kMaxStoredFailures smallest vectors. Equal
/// vectors keep discovery order.
class FailureSink {
 public:
  void add(Failure failure) {
    ++count_;
    auto pos = std::upper_bound(kept_.begin(), kept_.end(), failure, [](const Failure& x, const Failure& y) {
      return vector_key(x) < vector_key(y);
    });
    if (pos - kept_.begin() >= static_cast<std::ptrdiff_t>(kMaxStoredFailures)) return;
    kept_.insert(pos, std::move(failure));
    if (kept_.size() > kMaxStoredFailures) kept_.pop_back();
  }

  void merge_into(VerifyReport& report) const {
    report.failure_count += count_;
    report.failures.insert(report.failures.end(), kept_.begin(), kept_.end());
  }

 private:
  std::uint64_t count_ = 0;
  std::vector<Failure> kept_;
};

/// How operand vectors map onto primary inputs. Adder shapes split a, b, cin;
/// raw shapes put the whole assignment into `a`.
struct Shape {
  bool adder = false;
  unsigned width = 0;  // operand width (adder) or input count (raw)
  bool has_cin = false;

  unsigned input_bits() const { return adder ? 2 * width + (has_cin ? 1 : 0) : width; }
};

Shape adder_shape(const Netlist& netlist) {
  if (!netlist.adder_shaped()) throw std::invalid_argument("netlist is not adder-shaped");
  return Shape{true, netlist.meta()->width, netlist.meta()->has_cin};
}

std::vector<std::uint64_t> pack(const Shape& shape, std::span<const OperandVector> batch) {
  std::vector<std::uint64_t> lanes(shape.input_bits(), 0);
  for (std::size_t k = 0; k < batch.size(); ++k) {
    const auto& v = batch[k];
    const std::uint64_t lane = std::uint64_t{1} << k;
    for (unsigned i = 0; i < shape.width; ++i) {
      if ((v.a >> i) & 1) lanes[i] |= lane;
    }
    if (!shape.adder) continue;
    for (unsigned i = 0; i < shape.width; ++i) {
      if ((v.b >> i) & 1) lanes[shape.width + i] |= lane;
    }
    if (shape.has_cin && v.cin) lanes[2 * shape.width] |= lane;
  }
  return lanes;
}

/// Reads lane k of the outputs back as an integer: the first `sum_bits`
/// outputs form the sum, an optional final output is the carry.
SumCarry unpack(const std::vector<std::uint64_t>& values, std::span<const NetId> outputs, std::size_t lane,
                bool last_is_carry) {
  SumCarry out;
  const std::size_t sum_bits = last_is_carry ? outputs.size() - 1 : outputs.size();
  for (std::size_t i = 0; i < sum_bits; ++i) out.sum |= ((values[outputs[i]] >> lane) & 1) << i;
  if (last_is_carry) out.cout = (values[outputs.back()] >> lane) & 1;
  return out;
}

/// Vector source: either an explicit list or the exhaustive enumeration.
struct VectorSpace {
  Shape shape;
  std::vector<OperandVector> listed;
  std::uint64_t exhaustive_count = 0;
  bool exhaustive = false;

  std::uint64_t size() const { return exhaustive ? exhaustive_count : listed.size(); }

  OperandVector at(std::uint64_t index) const {
    if (!exhaustive) return listed[index];
    if (!shape.adder) return OperandVector{index, 0, false};
    const std::uint64_t mask = low_mask(shape.width);
    return OperandVector{index & mask, (index >> shape.width) & mask, ((index >> (2 * shape.width)) & 1) != 0};
  }
};

using BatchCheck = std::function<void(std::span<const OperandVector>, FailureSink&)>;

VerifyReport run_sweep(const VectorSpace& space, const SweepOptions& options, const BatchCheck& check) {
  VerifyReport report;
  report.mode = options.mode;
  report.vectors_tested = space.size();
  if (options.mode == SweepMode::random) report.seed = options.seed;

  const std::uint64_t batches = (space.size() + kLanes - 1) / kLanes;
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.jobs == 0 ? 1 : options.jobs, 1, std::max<std::uint64_t>(batches, 1)));
  std::vector<FailureSink> sinks(jobs);

  auto work = [&](unsigned worker) {
    const std::uint64_t first = batches * worker / jobs;
    const std::uint64_t last = batches * (worker + 1) / jobs;
    std::vector<OperandVector> batch;
    batch.reserve(kLanes);
    for (std::uint64_t bi = first; bi < last; ++bi) {
      batch.clear();
      const std::uint64_t end = std::min(space.size(), (bi + 1) * kLanes);
      for (std::uint64_t v = bi * kLanes; v < end; ++v) batch.push_back(space.at(v));
      check(batch, sinks[worker]);
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  for (const auto& sink : sinks) sink.merge_into(report);
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& x, const Failure& y) { return vector_key(x) < vector_key(y); });
  if (report.failures.size() > kMaxStoredFailures) report.failures.resize(kMaxStoredFailures);
  return report;
}

VectorSpace make_space(const Shape& shape, const SweepOptions& options) {
  VectorSpace space;
  space.shape = shape;
  if (options.mode == SweepMode::exhaustive) {
    if (shape.input_bits() > kExhaustiveInputCap) {
      throw std::invalid_argument("exhaustive sweep over " + std::to_string(shape.input_bits()) +
                                  " input bits exceeds the cap of " + std::to_string(kExhaustiveInputCap));
    }
    space.exhaustive = true;
    space.exhaustive_count = std::uint64_t{1} << shape.input_bits();
  } else if (shape.adder) {
    space.listed = sweep_vectors(shape.width, shape.has_cin, options);
  } else {
    if (shape.width > 64) throw std::invalid_argument("random sweep supports at most 64 raw inputs");
    // Raw assignments: corners over the full input word, then uniform draws.
    space.listed = sweep_vectors(shape.width, false, options);
    for (auto& v : space.listed) v.b = 0;
    std::sort(space.listed.begin(), space.listed.end());
    space.listed.erase(std::unique(space.listed.begin(), space.listed.end()), space.listed.end());
  }
  return space;
}

struct OperandHash {
  std::size_t operator()(const OperandVector& v) const {
    std::uint64_t h = v.a * 0x9E3779B97F4A7C15ULL;
    h ^= v.b + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (v.cin ? 0xA5A5A5A5ULL : 0));
  }
};

std::string identity_label(const char* form, unsigned i) {
  std::string label(form);
  for (std::size_t pos; (pos = label.find("#-1")) != std::string::npos;) {
    label.replace(pos, 3, std::to_string(static_cast<int>(i) - 1));
  }
  for (std::size_t pos; (pos = label.find('#')) != std::string::npos;) {
    label.replace(pos, 1, std::to_string(i));
  }
  return label;
}

}  // namespace

std::string_view to_string(SweepMode mode) { return mode == SweepMode::exhaustive ? "exhaustive" : "random"; }

std::vector<OperandVector> corner_vectors(unsigned width, bool has_cin) {
  const std::uint64_t mask = low_mask(width);
  const std::uint64_t alternating = 0x5555555555555555ULL & mask;
  const std::vector<std::uint64_t> operands{
      0, 1, mask, std::uint64_t{1} << (width - 1), alternating, ~alternating & mask};
  std::vector<OperandVector> out;
  std::unordered_set<OperandVector, OperandHash> seen;
  for (int cin = 0; cin <= (has_cin ? 1 : 0); ++cin) {
    for (std::uint64_t a : operands) {
      for (std::uint64_t b : operands) {
        OperandVector v{a & mask, b & mask, cin != 0};
        if (seen.insert(v).second) out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<OperandVector> sweep_vectors(unsigned width, bool has_cin, const SweepOptions& options) {
  if (width == 0 || width > kMaxWidth) throw std::invalid_argument("width out of range");
  if (options.mode == SweepMode::exhaustive) {
    const unsigned bits = 2 * width + (has_cin ? 1 : 0);
    if (bits > kExhaustiveInputCap) throw std::invalid_argument("exhaustive sweep exceeds input cap");
    VectorSpace space;
    space.shape = Shape{true, width, has_cin};
    space.exhaustive = true;
    space.exhaustive_count = std::uint64_t{1} << bits;
    std::vector<OperandVector> out;
    out.reserve(space.size());
    for (std::uint64_t v = 0; v < space.size(); ++v) out.push_back(space.at(v));
    return out;
  }

  std::vector<OperandVector> out = corner_vectors(width, has_cin);
  std::unordered_set<OperandVector, OperandHash> seen(out.begin(), out.end());
  std::mt19937_64 rng(options.seed);
  const std::uint64_t mask = low_mask(width);
  for (std::uint64_t n = 0; n < options.samples; ++n) {
    OperandVector v;
    v.a = rng() & mask;
    v.b = rng() & mask;
    v.cin = has_cin && (rng() & 1) != 0;
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

VerifyReport verify_against_oracle(const Netlist& netlist, const SweepOptions& options) {
  const Shape shape = adder_shape(netlist);
  const VectorSpace space = make_space(shape, options);
  const auto outputs = netlist.primary_outputs();

  return run_sweep(space, options, [&](std::span<const OperandVector> batch, FailureSink& sink) {
    const auto values = evaluate_packed(netlist, pack(shape, batch));
    for (std::size_t k = 0; k < batch.size(); ++k) {
      const SumCarry expected = integer_add(shape.width, batch[k]);
      const SumCarry actual = unpack(values, outputs, k, true);
      if (expected != actual) sink.add(Failure{batch[k].a, batch[k].b, batch[k].cin, expected, actual, {}});
    }
  });
}

VerifyReport check_ling_identities(const Netlist& ling, const SweepOptions& options) {
  const Shape shape = adder_shape(ling);
  if (!is_ling(ling.meta()->family)) throw std::invalid_argument("identity suite needs a Ling netlist");
  const unsigned w = shape.width;
  const Netlist reference = w <= kMaxFlatWidth ? build_cla_flat(w, shape.has_cin) : build_rca(w, shape.has_cin);

  struct Position {
    NetId g, p, h, c, ref_c;
  };
  std::vector<Position> positions;
  for (unsigned i = 0; i < w; ++i) {
    const auto name = [i](const char* r) { return std::string(r) + "[" + std::to_string(i) + "]"; };
    positions.push_back(Position{ling.tap_or_throw(name("g")), ling.tap_or_throw(name("p")),
                                 ling.tap_or_throw(name("H")), ling.tap_or_throw(name("c")),
                                 reference.tap_or_throw(name("c"))});
  }

  const VectorSpace space = make_space(shape, options);
  return run_sweep(space, options, [&](std::span<const OperandVector> batch, FailureSink& sink) {
    const auto lanes = pack(shape, batch);
    const auto values = evaluate_packed(ling, lanes);
    const auto ref = evaluate_packed(reference, lanes);
    const std::uint64_t valid = low_mask(static_cast<unsigned>(batch.size()));
    const std::uint64_t cin_lane = shape.has_cin ? lanes[2 * w] : 0;

    for (std::size_t k = 0; k < batch.size(); ++k) {
      for (unsigned i = 0; i < w; ++i) {
        const Position& pos = positions[i];
        const std::uint64_t g = values[pos.g], p = values[pos.p], h = values[pos.h], c = values[pos.c];
        const std::uint64_t ref_c = ref[pos.ref_c];
        const std::uint64_t ref_prev = i == 0 ? cin_lane : ref[positions[i - 1].ref_c];

        struct Check {
          const char* label;
          std::uint64_t expected, actual;
        };
        const Check checks[] = {
            {"H[#] == c[#] | c[#-1]", ref_c | ref_prev, h},
            {"c[#] == p[#] & H[#]", p & h, c},
            {"g[#] -> p[#]", g | p, p},
        };
        for (const auto& chk : checks) {
          if ((((chk.expected ^ chk.actual) & valid) >> k & 1) == 0) continue;
          Failure f{batch[k].a, batch[k].b, batch[k].cin, {}, {}, identity_label(chk.label, i)};
          f.expected.sum = (chk.expected >> k) & 1;
          f.actual.sum = (chk.actual >> k) & 1;
          sink.add(std::move(f));
        }
      }
    }
  });
}

VerifyReport check_ling_identities(unsigned width, bool has_cin, const SweepOptions& options) {
  return check_ling_identities(build_ling_flat(width, has_cin, SumForm::xor_form), options);
}

VerifyReport equivalence_check(const Netlist& lhs, const Netlist& rhs, const SweepOptions& options) {
  if (lhs.primary_inputs().size() != rhs.primary_inputs().size() ||
      lhs.primary_outputs().size() != rhs.primary_outputs().size()) {
    throw std::invalid_argument("netlists have different I/O shapes");
  }
  Shape shape;
  bool carry_split = false;
  if (lhs.adder_shaped() && rhs.adder_shaped()) {
    if (lhs.meta()->width != rhs.meta()->width || lhs.meta()->has_cin != rhs.meta()->has_cin) {
      throw std::invalid_argument("adder netlists differ in width or carry-in");
    }
    shape = adder_shape(lhs);
    carry_split = true;
  } else {
    if (lhs.primary_inputs().size() > 64 || lhs.primary_outputs().size() > 64) {
      throw std::invalid_argument("raw equivalence supports at most 64 inputs and outputs");
    }
    shape = Shape{false, static_cast<unsigned>(lhs.primary_inputs().size()), false};
  }

  const VectorSpace space = make_space(shape, options);
  return run_sweep(space, options, [&](std::span<const OperandVector> batch, FailureSink& sink) {
    const auto lanes = pack(shape, batch);
    const auto left = evaluate_packed(lhs, lanes);
    const auto right = evaluate_packed(rhs, lanes);
    for (std::size_t k = 0; k < batch.size(); ++k) {
      const SumCarry l = unpack(left, lhs.primary_outputs(), k, carry_split);
      const SumCarry r = unpack(right, rhs.primary_outputs(), k, carry_split);
      if (l != r) sink.add(Failure{batch[k].a, batch[k].b, batch[k].cin, l, r, {}});
    }
  });
}

std::string to_json(const VerifyReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["mode"] = std::string(to_string(report.mode));
  doc["vectors_tested"] = report.vectors_tested;
  doc["failure_count"] = report.failure_count;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json entry{{"a", f.a},
                       {"b", f.b},
                       {"cin", f.cin ? 1 : 0},
                       {"expected", {{"sum", f.expected.sum}, {"cout", f.expected.cout ? 1 : 0}}},
                       {"actual", {{"sum", f.actual.sum}, {"cout", f.actual.cout ? 1 : 0}}}};
    if (!f.check.empty()) entry["check"] = f.check;
    failures.push_back(std::move(entry));
  }
  doc["failures"] = std::move(failures);
  doc["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace ling
