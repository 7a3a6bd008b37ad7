#ifndef RCA_CARRIER_HPP
#define RCA_CARRIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rca/interval_set.hpp"

namespace rca {

enum class CarrierKind { atoms, interval };

// A Boolean-algebra backend. Either the finite power-set algebra on n atoms
// or the interval-line algebra of finite unions of closed rational intervals
// and rays. Carriers are small immutable values; an element remembers its
// carrier so cross-carrier mixing is rejected.
class Carrier {
 public:
  static Carrier atoms(int atom_count);
  static Carrier interval_line();

  CarrierKind kind() const { return kind_; }
  int atom_count() const { return atom_count_; }
  bool finite() const { return kind_ == CarrierKind::atoms; }

  bool operator==(const Carrier&) const = default;

 private:
  Carrier(CarrierKind k, int n) : kind_(k), atom_count_(n) {}
  CarrierKind kind_;
  int atom_count_;
};

class Element {
 public:
  Element() : carrier_(Carrier::atoms(0)) {}

  const Carrier& carrier() const { return carrier_; }
  std::uint64_t bits() const { return bits_; }
  const IntervalSet& interval() const { return set_; }

  bool operator==(const Element& other) const = default;
  // Deterministic total order within one carrier (enumeration order on the
  // finite backend, lexicographic on components otherwise).
  bool operator<(const Element& other) const;

  std::string to_string() const;

 private:
  friend class ElementOps;
  Carrier carrier_;
  std::uint64_t bits_ = 0;
  IntervalSet set_;
};

Element zero(const Carrier& c);
Element one(const Carrier& c);
Element atom(const Carrier& c, int index);                     // finite only
Element from_atom_bits(const Carrier& c, std::uint64_t bits);  // finite only
Element from_interval_set(IntervalSet s);

Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
bool leq(const Element& a, const Element& b);
bool is_zero(const Element& a);
bool is_one(const Element& a);

// Indices of the atoms below a, ascending. Finite backend only.
std::vector<int> atoms_below(const Element& a);

// All 2^n elements of a finite carrier in ascending bit order. Rejects the
// interval carrier and any atom count above the bound.
std::vector<Element> enumerate_elements(const Carrier& c, int atom_bound = 12);

}  // namespace rca

#endif
