// Bottom-up minimal cut set computation.
//
// With the defense configuration fixed, every defense subtree is a constant,
// so each INH gate reduces to a monotone expression over risk leaves:
//
//   defense inactive          ->  event
//   defense active, disabler  ->  event AND disabler
//   defense active, none      ->  false
//
// Each node then gets the antichain of its minimal cut sets; AND takes the
// pairwise union product, OR the union, VOT(k) the at-least-k expansion, and
// every result is minimised by subsumption.

#include <algorithm>

#include "afdt/kernels.h"
#include "afdt/model.h"

namespace afdt {

void minimize(Family& family) {
  std::vector<std::pair<std::size_t, LeafSet>> keyed;
  keyed.reserve(family.size());
  for (auto& s : family) keyed.emplace_back(s.count(), std::move(s));
  std::sort(keyed.begin(), keyed.end());

  Family kept;
  kept.reserve(keyed.size());
  for (auto& [count, s] : keyed) {
    bool subsumed = false;
    for (const auto& k : kept) {
      if (k.subset_of(s)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(std::move(s));
  }
  family = std::move(kept);
}

namespace {

class Engine {
 public:
  Engine(const Circuit& c, std::span<const std::uint8_t> defense, std::size_t max_cuts)
      : c_(c), defense_(defense), max_cuts_(max_cuts), width_(c.risk_count()) {}

  Family run() {
    const auto& gates = c_.gates();
    // Defense subtrees are AND/OR over BDS leaves; evaluate them as booleans.
    std::vector<std::uint8_t> value;
    c_.evaluate([](std::uint32_t) { return false; },
                [&](std::uint32_t i) { return defense_[i] != 0; }, value);

    families_.resize(gates.size());
    for (std::size_t g = 0; g < gates.size(); ++g) {
      const auto& gate = gates[g];
      const std::uint32_t* in = c_.operands().data() + gate.first;
      Family f;
      switch (gate.op) {
        case Circuit::Op::kRisk: {
          LeafSet s(width_);
          s.set(gate.leaf);
          f.push_back(std::move(s));
          break;
        }
        case Circuit::Op::kDefense:
          break;  // never read as a risk family
        case Circuit::Op::kAnd:
          f = truth();
          for (std::uint32_t i = 0; i < gate.count && !f.empty(); ++i) f = conjoin(f, families_[in[i]], g);
          break;
        case Circuit::Op::kOr:
          for (std::uint32_t i = 0; i < gate.count; ++i)
            f.insert(f.end(), families_[in[i]].begin(), families_[in[i]].end());
          minimize(f);
          break;
        case Circuit::Op::kVot:
          f = at_least(gate.k, {in, gate.count}, g);
          break;
        case Circuit::Op::kInh:
          if (!value[gate.defense])
            f = families_[gate.event];
          else if (gate.disabler >= 0)
            f = conjoin(families_[gate.event], families_[gate.disabler], g);
          break;
      }
      check(f, g);
      families_[g] = std::move(f);
    }
    return families_.back();
  }

 private:
  Family truth() const { return Family{LeafSet(width_)}; }

  void check(const Family& f, std::size_t g) const {
    if (f.size() > max_cuts_)
      throw Error(ErrorCode::kBudgetExceeded, c_.node_id(g),
                  "cut set family at '" + c_.node_id(g) + "' exceeds " + std::to_string(max_cuts_) + " sets");
  }

  // Pairwise unions, minimised. Partial results are compacted whenever they
  // outgrow twice the cap so a blowup fails fast instead of exhausting memory.
  Family conjoin(const Family& a, const Family& b, std::size_t g) const {
    Family out;
    for (const auto& x : a) {
      for (const auto& y : b) out.push_back(x | y);
      if (out.size() > 2 * max_cuts_) {
        minimize(out);
        check(out, g);
      }
    }
    minimize(out);
    return out;
  }

  // at_least[j] over inputs i..n-1, built from the last input backwards:
  //   AL(i, j) = (F_i AND AL(i+1, j-1)) OR AL(i+1, j)
  Family at_least(std::uint32_t k, std::span<const std::uint32_t> inputs, std::size_t g) const {
    std::vector<Family> al(k + 1);  // al[j] for the current suffix
    al[0] = truth();
    for (std::size_t i = inputs.size(); i-- > 0;) {
      const Family& fi = families_[inputs[i]];
      for (std::uint32_t j = k; j >= 1; --j) {
        Family next = al[j];
        Family with = conjoin(fi, al[j - 1], g);
        next.insert(next.end(), with.begin(), with.end());
        minimize(next);
        check(next, g);
        al[j] = std::move(next);
      }
    }
    return al[k];
  }

  const Circuit& c_;
  std::span<const std::uint8_t> defense_;
  std::size_t max_cuts_;
  std::size_t width_;
  std::vector<Family> families_;
};

}  // namespace

Family cut_family(const Circuit& circuit, std::span<const std::uint8_t> defense, std::size_t max_cuts) {
  return Engine(circuit, defense, max_cuts).run();
}

}  // namespace afdt
