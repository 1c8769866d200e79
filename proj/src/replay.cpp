#include "roughmap/replay.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "roughmap/format.hpp"
#include "roughmap/rough_approx.hpp"

namespace roughmap {

namespace {

// Elements are given by their 1-based labels.
Partition blocks_1based(const Universe& u, std::vector<std::vector<Element>> blocks) {
  for (auto& b : blocks)
    for (auto& x : b) --x;
  return partition_from_blocks(u, blocks);
}

class BlockBuilder {
 public:
  explicit BlockBuilder(std::string name) : start_(std::chrono::steady_clock::now()) {
    block_.name = std::move(name);
  }

  void text(std::string assertion, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    block_.checks.push_back({std::move(assertion), std::move(expected), std::move(actual), pass});
  }

  void truth(std::string assertion, bool expected, bool actual) {
    text(std::move(assertion), expected ? "true" : "false", actual ? "true" : "false");
  }

  void verdict(const Instance& instance, std::string_view claim_name, std::string expected) {
    const Verdict v = evaluate(claim_by_name(claim_name), instance);
    std::string actual(outcome_name(v.outcome));
    if (v.reason) actual += "(" + std::string(ill_typed_reason_name(*v.reason)) + ")";
    // Compare on the outcome and reason; the witness is shown for the record.
    std::string shown = v.witness ? actual + ": " + format_witness(*v.witness, instance) : actual;
    const bool pass = actual == expected;
    block_.checks.push_back({std::string(claim_name) + " verdict", expected, shown, pass});
  }

  ReplayBlock finish() {
    block_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    return std::move(block_);
  }

 private:
  ReplayBlock block_;
  std::chrono::steady_clock::time_point start_;
};

ReplayBlock replay_refinement() {
  BlockBuilder b("refinement instance: |U| = 6, |V| = 2");
  const Instance in = refinement_instance();
  const Universe& v = in.v;
  const SurjMap& f = in.f;
  const Partition& r1 = in.partitions[0];
  const Partition& r2 = in.partitions[1];

  const BinRelation fr1 = relmap(f, r1);
  const BinRelation fr2 = relmap(f, r2);
  b.text("f(R1)", "{(a, a), (b, b), (a, b), (b, a)}", format_relation(fr1, v));
  b.text("f(R2)", "{(a, a), (b, b)}", format_relation(fr2, v));
  b.truth("R1 <= R2", true, refines(r1, r2));
  b.truth("R2 <= R1", false, refines(r2, r1));
  b.truth("f(R1) <= f(R2)", false, is_subrelation(fr1, fr2));
  b.truth("f(R2) <= f(R1)", true, is_subrelation(fr2, fr1));

  const BinRelation f_meet = relmap(f, partition_meet(r1, r2));
  const BinRelation meet_of_images = relation_intersection(fr1, fr2);
  b.truth("f(R1 & R2) = f(R1)", true, f_meet == fr1);
  b.truth("f(R1) & f(R2) = f(R2)", true, meet_of_images == fr2);
  b.truth("f(R1 & R2) strictly contains f(R1) & f(R2)", true,
          is_subrelation(meet_of_images, f_meet) && !(meet_of_images == f_meet));

  const BinRelation raw_union = relation_union_raw(r1, r2);
  b.truth("R1 | R2 is an equivalence", true, relation_classify(raw_union).equivalence());
  b.truth("R1 | R2 = R2", true, raw_union == partition_to_relation(r2));
  const BinRelation f_union = relmap(f, relation_to_partition(raw_union));
  const BinRelation union_of_images = relation_union(fr1, fr2);
  b.text("f(R1 | R2)", "{(a, a), (b, b)}", format_relation(f_union, v));
  b.text("f(R1) | f(R2)", "{(a, a), (b, b), (a, b), (b, a)}", format_relation(union_of_images, v));
  b.truth("f(R1 | R2) >= f(R1) | f(R2)", false, is_subrelation(union_of_images, f_union));

  b.verdict(in, "L31-1-fwd", "Fails");
  const Verdict fwd = evaluate(claim(ClaimId::L31_1Fwd), in);
  b.text("L31-1-fwd witness pair", "(a, b)",
         fwd.witness && fwd.witness->pair
             ? "(" + v.label(fwd.witness->pair->first) + ", " + v.label(fwd.witness->pair->second) + ")"
             : "none");

  Instance swapped = in;
  std::swap(swapped.partitions[0], swapped.partitions[1]);
  std::swap(swapped.partition_names[0], swapped.partition_names[1]);
  b.verdict(swapped, "L31-1-bwd", "Fails");
  b.verdict(in, "L31-2-inc", "Fails");
  b.verdict(in, "L31-3-inc", "Fails");
  b.verdict(in, "L32", "IllTyped(difference-not-reflexive)");
  return b.finish();
}

ReplayBlock replay_approximation() {
  BlockBuilder b("approximation instance: |U| = 4, |V| = 2");
  const Instance in = approximation_instance();
  const Partition& r = in.partitions[0];
  const Subset& x = *in.x;

  b.text("lower_R X", "{1}", format_subset(lower_approx(r, x), in.u));
  b.text("upper_R X", "{1}", format_subset(upper_approx(r, x), in.u));
  b.truth("X definable", true, is_definable(r, x));
  const Subset fx = image_subset(in.f, x);
  b.text("f(X)", "{a}", format_subset(fx, in.v));
  const BinRelation fr = relmap(in.f, r);
  b.text("f(R)", "{(a, a), (b, b), (a, b), (b, a)}", format_relation(fr, in.v));
  const Partition mapped = relation_to_partition(fr);
  b.text("lower_f(R) f(X)", "{}", format_subset(lower_approx(mapped, fx), in.v));
  b.text("upper_f(R) f(X)", "{a, b}", format_subset(upper_approx(mapped, fx), in.v));
  b.text("f(lower_R X)", "{a}", format_subset(image_subset(in.f, lower_approx(r, x)), in.v));
  b.text("f(upper_R X)", "{a}", format_subset(image_subset(in.f, upper_approx(r, x)), in.v));
  for (auto name : {"T41-1", "T41-2", "T43-1", "T43-2"}) b.verdict(in, name, "Fails");
  return b.finish();
}

ReplayBlock replay_bijective() {
  BlockBuilder b("bijective spot check: |U| = |V| = 4");
  Instance in = bijective_instance();
  const Partition& r = in.partitions[0];
  b.truth("f(R) = direct image of R", true,
          relmap(in.f, r) == direct_image(in.f, partition_to_relation(r)));
  std::size_t holds = 0;
  for (Mask m = 0; m <= full_mask(4); ++m) {
    in.x = Subset::from_mask(4, m);
    for (auto name : {"T42-1", "T42-2"})
      if (evaluate(claim_by_name(name), in).outcome == Outcome::Holds) ++holds;
  }
  b.text("T42-1 and T42-2 hold for all 16 subsets", "32", std::to_string(holds));
  return b.finish();
}

}  // namespace

Instance refinement_instance() {
  Universe u = numbered_universe(6);
  Universe v = lettered_universe(2);
  const std::vector<std::size_t> table{0, 0, 1, 1, 0, 0};
  SurjMap f = make_map(u, v, table);
  std::vector<Partition> parts{blocks_1based(u, {{1}, {2}, {3}, {4, 5, 6}}),
                               blocks_1based(u, {{3}, {1, 2, 4, 5, 6}})};
  return Instance{std::move(u), std::move(v), f, std::move(parts), std::nullopt, {"R1", "R2"}};
}

Instance approximation_instance() {
  Universe u = numbered_universe(4);
  Universe v = lettered_universe(2);
  const std::vector<std::size_t> table{0, 0, 1, 1};
  SurjMap f = make_map(u, v, table);
  std::vector<Partition> parts{blocks_1based(u, {{1}, {2, 3}, {4}})};
  return Instance{std::move(u), std::move(v), f, std::move(parts), Subset::of(4, {0}), {"R"}};
}

Instance bijective_instance() {
  Instance in = approximation_instance();
  in.v = lettered_universe(4);
  const std::vector<std::size_t> table{0, 1, 2, 3};
  in.f = make_map(in.u, in.v, table);
  return in;
}

bool ReplayBlock::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

bool ReplayReport::pass() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.pass(); });
}

ReplayReport replay_paper() {
  return {{replay_refinement(), replay_approximation(), replay_bijective()}};
}

std::string render_replay(const ReplayReport& report) {
  std::ostringstream out;
  for (const auto& block : report.blocks) {
    out << "== " << block.name << "\n";
    for (const auto& c : block.checks) {
      out << (c.pass ? "  PASS  " : "  FAIL  ") << c.assertion << " = " << c.actual;
      if (!c.pass) out << "   (expected " << c.expected << ")";
      out << "\n";
    }
  }
  out << (report.pass() ? "all assertions match\n" : "MISMATCH\n");
  return out.str();
}

}  // namespace roughmap
