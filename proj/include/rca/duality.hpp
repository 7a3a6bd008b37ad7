#ifndef RCA_DUALITY_HPP
#define RCA_DUALITY_HPP

#include <memory>

#include "rca/space.hpp"

namespace rca {

// The dual space of a finite structure: points are clusters, closed sets are
// generated by the lambda images. When the ideal is proper only bounded
// clusters enter and lambda is the restricted version.
struct DualSpaceResult {
  FiniteSpace space;
  std::vector<Cluster> points;
  bool bounded_only = false;
  std::vector<std::uint32_t> lambda;  // element bits -> point set
  std::shared_ptr<const ContactStructure> source;
};

// Algebra -> space. Validates the axioms first (normal contact axioms when
// the ideal is everything, the local ones otherwise) and throws
// PreconditionError naming the failing axiom.
DualSpaceResult psi_a(const ContactStructure& s);

// Space -> algebra: the standard structure over the regular closed sets.
SpaceBackedStructure psi_t(const FiniteSpace& space);

// x -> sigma_x into psi_a(psi_t(space)).
SpaceMap t_map(const FiniteSpace& space);

bool is_homeomorphism(const SpaceMap& f);

// Verifies that lambda is a structure isomorphism onto the standard
// structure of the dual space: Boolean bijection, contact preserved both
// ways, ideal preserved both ways. Exposed separately so corrupted tables
// can be probed.
std::vector<AxiomReport> verify_lambda_iso(const ContactStructure& source,
                                           const DualSpaceResult& dual,
                                           const std::vector<std::uint32_t>& lambda);
std::vector<AxiomReport> lambda_g_iso_check(const ContactStructure& s);

// A function between finite structures, stored as a full value table, or a
// symbolic rule on the interval carrier (identity, meet with a fixed
// element, affine rescaling).
class AlgebraMorphism {
 public:
  enum class Rule { table, identity, meet_with, affine };

  static AlgebraMorphism from_table(ContactStructure source,
                                    ContactStructure target,
                                    std::vector<Element> table);
  static AlgebraMorphism identity(ContactStructure s);
  static AlgebraMorphism meet_with(ContactStructure s, Element m);
  static AlgebraMorphism affine(ContactStructure s, Rational scale,
                                Rational shift);

  Element apply(const Element& a) const;
  const ContactStructure& source() const { return *source_; }
  const ContactStructure& target() const { return *target_; }
  Rule rule() const { return rule_; }
  const std::vector<Element>& table() const { return table_; }
  const Element& fixed_element() const { return fixed_; }
  const Rational& scale() const { return scale_; }
  const Rational& shift() const { return shift_; }

 private:
  AlgebraMorphism() = default;
  std::shared_ptr<const ContactStructure> source_, target_;
  Rule rule_ = Rule::table;
  std::vector<Element> table_;
  Element fixed_;
  Rational scale_ = 1, shift_ = 0;
};

// Extensional equality of finite structures (carrier, relation, ideal).
bool structures_equal_finite(const ContactStructure& a,
                             const ContactStructure& b);

// DLC1-DLC5 plus the strengthened DLC3S. Finite backends only.
std::vector<AxiomReport> check_dhlc(const AlgebraMorphism& m,
                                    const CheckOptions& opts = {});

// The normalization: a -> join of phi(b) over bounded b deep inside a.
// Idempotent; fixes exactly the DLC5 maps.
AlgebraMorphism normalize(const AlgebraMorphism& m);

// Morphism composition: plain composition followed by normalization.
AlgebraMorphism compose(const AlgebraMorphism& phi2,
                        const AlgebraMorphism& phi1);

// Contravariant map translations.
AlgebraMorphism lambda_t(const SpaceMap& f);
SpaceMap lambda_a(const AlgebraMorphism& m);

// Left adjoint of a Boolean homomorphism: the smallest a with phi(a) above b.
struct AdjointMap {
  std::shared_ptr<const ContactStructure> source;  // of the adjoint
  std::shared_ptr<const ContactStructure> target;
  std::vector<Element> table;  // indexed by source element bits

  Element apply(const Element& b) const;
};
AdjointMap left_adjoint(const AlgebraMorphism& m);

// (LO): the adjoint transports contact forward.
AxiomReport check_lo(const AlgebraMorphism& m);

}  // namespace rca

#endif
