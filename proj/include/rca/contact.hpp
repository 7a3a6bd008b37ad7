#ifndef RCA_CONTACT_HPP
#define RCA_CONTACT_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rca/carrier.hpp"
#include "rca/report.hpp"

namespace rca {

class ContactStructure;

struct CheckOptions {
  int samples = 1000;        // budget for sampled (interval-carrier) checks
  std::uint64_t seed = 0;    // sampling seed, echoed in reports
  int atom_bound = 12;       // refuse exhaustive sweeps above this many atoms
};

// A contact relation, kept as an intensional evaluator so that the interval
// carrier is supported. The catalog:
//   atom_graph    finite backend; contact iff some atom of a is adjacent to
//                 some atom of b (loops included) and neither side is 0
//   standard      interval backend; contact iff the point sets intersect
//   two_point     interval backend; contact iff the point sets intersect or
//                 both are unbounded on the same side
//   alexandroff   contact iff base contact or both arguments unbounded
//   beta_rho      the greatest admissible compactification relation of the
//                 base structure (see the decision notes in the evaluator)
//   supremum      pointwise supremum of a family in the compactification
//                 order
//   custom        programmatic evaluator, used by tests; not serializable
class ContactRelation {
 public:
  enum class Kind {
    atom_graph,
    standard,
    two_point,
    alexandroff,
    beta_rho,
    supremum,
    custom,
  };

  // Validates reflexivity and symmetry.
  static ContactRelation atom_graph(std::vector<std::vector<bool>> adjacency);
  // No validation; used to probe axiom failures of broken graphs.
  static ContactRelation atom_graph_unchecked(
      std::vector<std::vector<bool>> adjacency);
  static ContactRelation standard();
  static ContactRelation two_point();
  static ContactRelation alexandroff(ContactStructure base);
  static ContactRelation beta_rho_of(ContactStructure base);
  static ContactRelation supremum_of(std::vector<ContactRelation> members);
  static ContactRelation custom(
      std::function<bool(const Element&, const Element&)> eval,
      std::string label);

  bool contact(const Element& a, const Element& b) const;

  Kind kind() const { return kind_; }
  const std::vector<std::vector<bool>>& adjacency() const { return adj_; }
  const ContactStructure& base() const;
  const std::vector<ContactRelation>& members() const { return members_; }
  const std::string& label() const { return label_; }

 private:
  ContactRelation() = default;
  Kind kind_ = Kind::custom;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::uint64_t> rows_;  // adjacency rows as bit masks
  std::shared_ptr<const ContactStructure> base_;
  std::vector<ContactRelation> members_;
  std::function<bool(const Element&, const Element&)> eval_;
  std::string label_;
};

// An ideal of "bounded" elements. Finite backend: everything below a fixed
// generator. Interval backend: the ray-free elements, or everything.
class Ideal {
 public:
  enum class Kind { all, generated, bounded };

  static Ideal all();
  static Ideal generated(Element generator);
  static Ideal bounded();

  bool contains(const Element& e) const;
  bool proper_on(const Carrier& c) const;  // 1 not in the ideal

  Kind kind() const { return kind_; }
  const Element& generator() const { return generator_; }

 private:
  Kind kind_ = Kind::all;
  Element generator_;
};

// A carrier with a contact relation and an ideal. No axioms are imposed at
// construction; deliberately broken structures are legal inputs for the
// axiom checkers.
class ContactStructure {
 public:
  ContactStructure(Carrier carrier, ContactRelation rho, Ideal ib);

  const Carrier& carrier() const { return carrier_; }
  const ContactRelation& rho() const { return rho_; }
  const Ideal& ib() const { return ib_; }

  bool contact(const Element& a, const Element& b) const;
  bool in_ideal(const Element& e) const { return ib_.contains(e); }
  bool ideal_proper() const { return ib_.proper_on(carrier_); }

  // The relation clusters are read against: the Alexandroff extension when
  // the ideal is proper, otherwise rho itself (the two coincide then).
  ContactRelation designated_relation() const;

 private:
  Carrier carrier_;
  ContactRelation rho_;
  Ideal ib_;
};

// a "deep inside" b: a(-rho)b*.
bool way_below(const ContactStructure& s, const Element& a, const Element& b);
bool way_below_under(const ContactRelation& c, const Element& a,
                     const Element& b);

// Axiom checkers. Exhaustive on finite carriers, sampled on the interval
// carrier (verdict sampled_pass, never pass). Counterexamples are the
// lexicographically first violating tuple in enumeration order.
std::vector<AxiomReport> check_ca(const ContactStructure& s,
                                  const CheckOptions& opts = {});
std::vector<AxiomReport> check_nca(const ContactStructure& s,
                                   const CheckOptions& opts = {});
std::vector<AxiomReport> check_lca(const ContactStructure& s,
                                   const CheckOptions& opts = {});

// Membership of c in the compactification catalog over base: c must be a
// normal contact relation containing rho and agreeing with rho against
// ideal elements (reports NCA axioms plus RC1/RC2).
std::vector<AxiomReport> check_ka_membership(const ContactStructure& base,
                                             const ContactRelation& c,
                                             const CheckOptions& opts = {});

// Pointwise containment c1 <= c2 as relations, reported under `name`.
// Together with the compactification order: c1 precedes c2 iff c2 is
// contained in c1.
AxiomReport check_relation_subset(const Carrier& carrier, std::string name,
                                  const ContactRelation& c1,
                                  const ContactRelation& c2,
                                  const CheckOptions& opts = {});

ContactRelation alexandroff_extension(const ContactStructure& s);
ContactRelation beta_rho(const ContactStructure& s);
ContactRelation supremum_relation(const ContactStructure& base,
                                  std::vector<ContactRelation> members);

// A cluster: a maximal mutually-in-contact element set playing the role of
// a point. Finite clusters are materialized; interval clusters exist as
// point clusters and the cluster at infinity.
class Cluster {
 public:
  enum class Kind { finite_set, rational_point, infinity };

  Kind kind() const { return kind_; }
  bool contains(const Element& e) const;
  const std::vector<bool>& members() const { return members_; }
  const std::vector<int>& seed_atoms() const { return seeds_; }
  const Rational& point() const { return point_; }
  bool bounded() const { return bounded_; }
  const ContactStructure& structure() const { return *structure_; }

  bool same_members(const Cluster& other) const;

 private:
  friend std::vector<Cluster> clusters(const ContactStructure&);
  friend Cluster sigma_infinity(const ContactStructure&);
  friend Cluster point_cluster(const ContactStructure&, const Rational&);
  friend Cluster finite_cluster(const ContactStructure&, std::vector<bool>);
  Cluster() = default;
  std::shared_ptr<const ContactStructure> structure_;
  Kind kind_ = Kind::finite_set;
  std::vector<bool> members_;  // indexed by element bits (finite backend)
  std::vector<int> seeds_;     // atoms whose ultrafilters generate this cluster
  Rational point_;
  bool bounded_ = false;
};

// All clusters of a finite structure, one per ultrafilter, deduplicated.
// Ordered by smallest seeding atom. Rejects the interval carrier.
std::vector<Cluster> clusters(const ContactStructure& s);

// The cluster of unbounded elements; requires a proper ideal.
Cluster sigma_infinity(const ContactStructure& s);

// sigma_x = {F | x in F} on the interval carrier.
Cluster point_cluster(const ContactStructure& s, const Rational& x);

// Materialize a finite-backend cluster from its member set, indexed by
// element bits. No axioms are imposed; check_cluster_axioms decides them.
Cluster finite_cluster(const ContactStructure& s, std::vector<bool> members);

// Equal traces on the ideal; by the uniqueness property this decides full
// equality for clusters of one structure.
bool bounded_trace_equal(const Cluster& c1, const Cluster& c2);

// K1-K3 for a finite cluster against the structure's designated relation.
std::vector<AxiomReport> check_cluster_axioms(const ContactStructure& s,
                                              const Cluster& sigma,
                                              const CheckOptions& opts = {});

// Explicit interpolation witness: e with a << e << d (verified against the
// structure's own evaluator). Interval carrier; returns nullopt when the
// catalog construction does not apply.
std::optional<Element> interpolate_between(const ContactStructure& s,
                                           const Element& a, const Element& d);

// The level-L dyadic family witnessing complete separation of a disjoint
// pair: elements c_{k/2^L}, k = 1..2^L-1, each verified to satisfy
// a << c << b* and nested c_j << c_k for j < k. Returns nullopt when any
// clause fails verification.
std::optional<std::vector<Element>> dyadic_family(const ContactStructure& s,
                                                  const Element& a,
                                                  const Element& b, int level);

}  // namespace rca

#endif
