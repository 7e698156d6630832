#pragma once

#include <string>
#include <vector>

namespace cyclic {

/* Built-in verification suite: ten numbered checks that recompute reference
   tables, register sequences, sieving verdicts, and oracle equivalences from
   scratch.  Each check carries a group tag so the CLI can run a slice:
   group 3 covers word statistics and sieving on general codes, group 4 the
   parity check characterizations. */
struct CriterionResult {
  int id = 0;
  int group = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first mismatch on failure
};

// group 0 runs everything; 3 or 4 runs one slice.  Results come back in
// id order.
std::vector<CriterionResult> run_acceptance(int group = 0);

}  // namespace cyclic
