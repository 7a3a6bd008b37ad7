#ifndef RCA_EXTENSIONS_HPP
#define RCA_EXTENSIONS_HPP

#include <optional>

#include "rca/duality.hpp"

namespace rca {

// A locally-compact-style extension instance: a dense homeomorphic
// embedding of a base space into a total space.
struct Extension {
  DenseEmbedding embedding;

  const FiniteSpace& base() const { return embedding.domain(); }
  const FiniteSpace& total() const { return embedding.codomain(); }
};

// (A1)/(A2): the structure is compatible with the topology of its space.
std::vector<AxiomReport> check_admissible(const SpaceBackedStructure& s);

// (LA1)-(LA3) for space-backed structures (exhaustive) and for the interval
// carrier (sampled; compact regular closed = bounded there).
std::vector<AxiomReport> check_la(const SpaceBackedStructure& s);
std::vector<AxiomReport> check_la_interval(const ContactStructure& s,
                                           const CheckOptions& opts = {});

// Extension -> admissible structure, with the transport from the regular
// closed algebra of the total space (verified to be an isomorphism).
struct AlphaResult {
  SpaceBackedStructure structure;
  std::vector<Element> r_table;  // indexed by RC(total) element bits
};
AlphaResult alpha(const Extension& ext);

// Admissible structure -> extension via the dual space and x -> sigma_x.
struct BetaResult {
  DualSpaceResult dual;
  Extension extension;
};
BetaResult beta(const SpaceBackedStructure& s);

// All (atom graph, ideal generator) structures over RC(X) passing the local
// contact and admissibility axioms, with the refinement order materialized
// (s_i precedes s_j iff rho_j is contained in rho_i and ideal_j in ideal_i).
struct AdmissibleFamily {
  std::vector<SpaceBackedStructure> structures;
  std::vector<std::vector<bool>> leq;
};
AdmissibleFamily enumerate_admissible(const FiniteSpace& space,
                                      int atom_bound = 4);

bool admissible_leq(const SpaceBackedStructure& s1,
                    const SpaceBackedStructure& s2);

// Extension order and equivalence, decided by exhaustive search over maps
// between the total spaces.
bool extension_leq(const Extension& e1, const Extension& e2);
bool extensions_equivalent(const Extension& e1, const Extension& e2);

// Leader-style structure on the full power set of a finite space: a
// relation and an ideal family over all subsets.
struct LocalProximity {
  FiniteSpace space;
  std::vector<std::vector<bool>> beta;  // [mask][mask]
  std::vector<bool> b_family;           // [mask]

  bool in_contact(std::uint32_t m, std::uint32_t n) const {
    return beta[m][n];
  }
  // A << B under beta: A apart from the complement of B.
  bool proximally_inside(std::uint32_t a, std::uint32_t b) const;
};

// The unique separated local proximity extending an admissible structure,
// and its restriction back to the regular closed algebra.
LocalProximity bridge_to_local_proximity(const SpaceBackedStructure& s);
SpaceBackedStructure restrict_local_proximity(const LocalProximity& lp);

// Separation, the contact axioms on the power set, and BC1/BC2.
std::vector<AxiomReport> check_local_proximity(const LocalProximity& lp);

// (REQ1)/(REQ2): the map extends over the chosen local compactifications.
std::vector<AxiomReport> check_req(const SpaceMap& f,
                                   const SpaceBackedStructure& s1,
                                   const SpaceBackedStructure& s2);

// phi_f(G) = cl(f^-1(int(G))) between the chosen structures.
AlgebraMorphism induced_morphism(const SpaceMap& f,
                                 const SpaceBackedStructure& s1,
                                 const SpaceBackedStructure& s2);

// The extension g = L(f) between the dual compactifications, with the
// commuting square verified pointwise.
struct ExtendResult {
  BetaResult b1;
  BetaResult b2;
  SpaceMap g;
};
ExtendResult extend_map(const SpaceMap& f, const SpaceBackedStructure& s1,
                        const SpaceBackedStructure& s2);

// Exhaustive search for a continuous g with g o f1 = f2 o f; all solutions.
std::vector<SpaceMap> search_extensions(const SpaceMap& f,
                                        const BetaResult& b1,
                                        const BetaResult& b2);

// The condition checkers of the main extension theorem, plus the directly
// computed properties of g and the clause-by-clause agreement matrix.
struct ClauseAgreement {
  std::string clause;     // "a", "b", "b1", "b2", "c", "d", "e", "f", "g"
  std::string condition;  // human-readable right-hand side
  bool condition_holds;
  bool direct_holds;
  bool agree() const { return condition_holds == direct_holds; }
};
struct MainConditionsReport {
  std::vector<AxiomReport> conditions;  // skeletal, O, O1, O2, P, I, OI
  std::vector<ClauseAgreement> matrix;
  ExtendResult extended;
};
MainConditionsReport check_main_conditions(const SpaceMap& f,
                                           const SpaceBackedStructure& s1,
                                           const SpaceBackedStructure& s2);

// (OC)/(OB) over the full power set, plus the stronger classical condition
// (sufficient but not necessary, reported without asserting equivalence).
std::vector<AxiomReport> check_compactification_conditions(
    const SpaceMap& f, const SpaceBackedStructure& s1,
    const SpaceBackedStructure& s2);

}  // namespace rca

#endif
