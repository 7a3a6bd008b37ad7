#include "rca/carrier.hpp"

#include "rca/errors.hpp"

namespace rca {

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.carrier() == b.carrier()))
    throw PreconditionError("elements belong to different carriers");
}

void require_finite(const Carrier& c, const char* what) {
  if (!c.finite())
    throw UnsupportedError(std::string(what) + " requires the finite carrier");
}

}  // namespace

class ElementOps {
 public:
  static Element make_bits(const Carrier& c, std::uint64_t bits) {
    Element e;
    e.carrier_ = c;
    e.bits_ = bits;
    return e;
  }
  static Element make_interval(IntervalSet s) {
    Element e;
    e.carrier_ = Carrier::interval_line();
    e.set_ = std::move(s);
    return e;
  }
};

Carrier Carrier::atoms(int atom_count) {
  if (atom_count < 0 || atom_count > 62)
    throw PreconditionError("atom count out of range");
  return Carrier(CarrierKind::atoms, atom_count);
}

Carrier Carrier::interval_line() { return Carrier(CarrierKind::interval, -1); }

bool Element::operator<(const Element& other) const {
  if (carrier_.kind() != other.carrier_.kind())
    return carrier_.kind() < other.carrier_.kind();
  if (carrier_.finite()) return bits_ < other.bits_;
  return set_ < other.set_;
}

std::string Element::to_string() const {
  if (carrier_.finite()) {
    std::string out = "{";
    bool first = true;
    for (int i : atoms_below(*this)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }
  return set_.to_string();
}

Element zero(const Carrier& c) {
  if (c.finite()) return ElementOps::make_bits(c, 0);
  return ElementOps::make_interval(IntervalSet::empty());
}

Element one(const Carrier& c) {
  if (c.finite()) {
    std::uint64_t full =
        c.atom_count() == 0 ? 0 : ((std::uint64_t{1} << c.atom_count()) - 1);
    return ElementOps::make_bits(c, full);
  }
  return ElementOps::make_interval(IntervalSet::line());
}

Element atom(const Carrier& c, int index) {
  require_finite(c, "atom");
  if (index < 0 || index >= c.atom_count())
    throw PreconditionError("atom index out of range");
  return ElementOps::make_bits(c, std::uint64_t{1} << index);
}

Element from_atom_bits(const Carrier& c, std::uint64_t bits) {
  require_finite(c, "from_atom_bits");
  if (c.atom_count() < 64 && (bits >> c.atom_count()) != 0)
    throw PreconditionError("atom bits out of range for carrier");
  return ElementOps::make_bits(c, bits);
}

Element from_interval_set(IntervalSet s) {
  return ElementOps::make_interval(std::move(s));
}

Element meet(const Element& a, const Element& b) {
  require_same(a, b);
  if (a.carrier().finite())
    return ElementOps::make_bits(a.carrier(), a.bits() & b.bits());
  return ElementOps::make_interval(a.interval().meet(b.interval()));
}

Element join(const Element& a, const Element& b) {
  require_same(a, b);
  if (a.carrier().finite())
    return ElementOps::make_bits(a.carrier(), a.bits() | b.bits());
  return ElementOps::make_interval(a.interval().join(b.interval()));
}

Element complement(const Element& a) {
  if (a.carrier().finite())
    return ElementOps::make_bits(a.carrier(),
                                 ~a.bits() & one(a.carrier()).bits());
  return ElementOps::make_interval(a.interval().complement());
}

bool leq(const Element& a, const Element& b) {
  require_same(a, b);
  if (a.carrier().finite()) return (a.bits() & ~b.bits()) == 0;
  return a.interval().subset_of(b.interval());
}

bool is_zero(const Element& a) {
  if (a.carrier().finite()) return a.bits() == 0;
  return a.interval().is_empty();
}

bool is_one(const Element& a) {
  if (a.carrier().finite()) return a.bits() == one(a.carrier()).bits();
  return a.interval().is_line();
}

std::vector<int> atoms_below(const Element& a) {
  require_finite(a.carrier(), "atoms_below");
  std::vector<int> out;
  for (int i = 0; i < a.carrier().atom_count(); ++i)
    if (a.bits() >> i & 1) out.push_back(i);
  return out;
}

std::vector<Element> enumerate_elements(const Carrier& c, int atom_bound) {
  require_finite(c, "enumerate_elements");
  if (c.atom_count() > atom_bound)
    throw PreconditionError("carrier exceeds the enumeration bound");
  std::vector<Element> out;
  std::uint64_t count = std::uint64_t{1} << c.atom_count();
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m)
    out.push_back(ElementOps::make_bits(c, m));
  return out;
}

}  // namespace rca
