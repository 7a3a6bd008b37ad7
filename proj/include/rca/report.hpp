#ifndef RCA_REPORT_HPP
#define RCA_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rca/carrier.hpp"

namespace rca {

enum class Verdict { pass, fail, sampled_pass };

// A concrete violating assignment, variable name -> element, in the order
// the axiom quantifies them. Always the lexicographically first violation
// under element enumeration order (or the first failing sample).
struct Counterexample {
  std::vector<std::pair<std::string, Element>> bindings;
  std::string note;  // optional extra context, e.g. the missing witness kind
};

// Verdict for one named axiom or condition (C1..C6, BC1..BC3, K1..K3,
// RC1/RC2, DLC1..DLC5, LO, A1/A2, LA1..LA3, REQ1/REQ2, O/O1/O2/P/I/OI,
// OC/OB, ...). Universally quantified checks over the interval carrier are
// sampled and report sampled_pass with the sample count, never plain pass.
struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> counterexample;
  int samples = 0;

  static AxiomReport passed(std::string axiom);
  static AxiomReport sampled(std::string axiom, int samples);
  static AxiomReport failed(std::string axiom, Counterexample ce);

  bool ok() const { return verdict != Verdict::fail; }
};

bool all_pass(std::span<const AxiomReport> reports);

std::string verdict_to_string(Verdict v);

// One line per report: "C1: pass", "C5: FAIL at a={0}, b={2}", ...
std::string to_text(const AxiomReport& r);
std::string to_text(std::span<const AxiomReport> reports);

}  // namespace rca

#endif
