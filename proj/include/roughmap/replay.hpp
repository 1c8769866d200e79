#pragma once

// Recomputes the two published worked instances and compares every displayed
// object against its printed value.
//
//   refinement instance:     U = {1..6}, V = {a, b}, f = 1,2,5,6 -> a; 3,4 -> b,
//                            R1 = {{1},{2},{3},{4,5,6}}, R2 = {{3},{1,2,4,5,6}}
//   approximation instance:  U = {1..4}, V = {a, b}, f = 1,2 -> a; 3,4 -> b,
//                            R = {{1},{2,3},{4}}, X = {1}

#include <string>
#include <vector>

#include "roughmap/claims.hpp"

namespace roughmap {

Instance refinement_instance();
Instance approximation_instance();
// The approximation instance's U and R under the bijection 1..4 -> a..d.
Instance bijective_instance();

struct ReplayCheck {
  std::string assertion;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReplayBlock {
  std::string name;
  std::vector<ReplayCheck> checks;
  double elapsed_ms = 0;

  bool pass() const;
};

struct ReplayReport {
  std::vector<ReplayBlock> blocks;

  bool pass() const;
};

ReplayReport replay_paper();

std::string render_replay(const ReplayReport& report);

}  // namespace roughmap
