#include "rca/report.hpp"

namespace rca {

AxiomReport AxiomReport::passed(std::string axiom) {
  return AxiomReport{std::move(axiom), Verdict::pass, std::nullopt, 0};
}

AxiomReport AxiomReport::sampled(std::string axiom, int samples) {
  return AxiomReport{std::move(axiom), Verdict::sampled_pass, std::nullopt,
                     samples};
}

AxiomReport AxiomReport::failed(std::string axiom, Counterexample ce) {
  return AxiomReport{std::move(axiom), Verdict::fail, std::move(ce), 0};
}

bool all_pass(std::span<const AxiomReport> reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::sampled_pass: return "sampled-pass";
  }
  return "?";
}

std::string to_text(const AxiomReport& r) {
  std::string out = r.axiom + ": ";
  switch (r.verdict) {
    case Verdict::pass:
      out += "pass";
      break;
    case Verdict::sampled_pass:
      out += "sampled-pass (" + std::to_string(r.samples) + " samples)";
      break;
    case Verdict::fail: {
      out += "FAIL at ";
      bool first = true;
      for (const auto& [name, value] : r.counterexample->bindings) {
        if (!first) out += ", ";
        out += name + "=" + value.to_string();
        first = false;
      }
      if (!r.counterexample->note.empty())
        out += " (" + r.counterexample->note + ")";
      break;
    }
  }
  return out;
}

std::string to_text(std::span<const AxiomReport> reports) {
  std::string out;
  for (const auto& r : reports) {
    out += to_text(r);
    out += "\n";
  }
  return out;
}

}  // namespace rca
