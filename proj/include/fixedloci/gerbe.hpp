// Cohomology-class bookkeeping for mu_r-gerbes over an abstract Picard
// group: Kummer boundary classes, contracted-product addition, root-gerbe
// detection, and the equivariant twist over base x BGm.
//
// Only the Pic/r*Pic summand of the classifying group is modeled; the
// Brauer part is taken to be zero, so a class is a root-gerbe class
// exactly when it lies in this ledger.
#pragma once

#include <string>
#include <vector>

#include "fixedloci/abelian.hpp"
#include "fixedloci/errors.hpp"
#include "fixedloci/int_matrix.hpp"
#include "fixedloci/smith.hpp"

namespace fixedloci {

struct PicModel {
  FinAbGroup pic;
  std::vector<std::string> labels;  // optional generator names, free then torsion

  std::size_t generators() const { return pic.free_rank + pic.torsion.moduli.size(); }

  bool operator==(const PicModel& o) const {
    return pic == o.pic && labels == o.labels;
  }
};

inline void validate_pic(const PicModel& base) {
  require_input(base.pic.is_valid(), "pic model: torsion moduli must form a divisor chain of entries > 1");
  require_input(base.labels.empty() || base.labels.size() == base.generators(),
                "pic model: need one label per generator or none");
}

// Coordinates are listed free generators first, then torsion generators.
// The j-th coordinate lives mod r on a free generator and mod gcd(r, m_j)
// on a torsion generator of modulus m_j.
inline std::vector<Int> class_moduli(const PicModel& base, const Int& r) {
  std::vector<Int> mods(base.pic.free_rank, r);
  for (const Int& m : base.pic.torsion.moduli)
    mods.push_back(boost::multiprecision::gcd(r, m));
  return mods;
}

struct GerbeClass {
  PicModel base;
  Int r = 1;
  std::vector<Int> value;  // reduced per class_moduli

  bool operator==(const GerbeClass& o) const {
    return base == o.base && r == o.r && value == o.value;
  }
};

namespace detail {

inline Int reduce_mod(const Int& x, const Int& m) {
  if (m == 1)
    return 0;
  Int y = x % m;
  if (y < 0)
    y += m;
  return y;
}

}  // namespace detail

// An element of pic itself (not of pic/r*pic): free coordinates are
// arbitrary integers, torsion coordinates are reduced mod their modulus.
inline std::vector<Int> reduce_pic_element(const PicModel& base, std::vector<Int> v) {
  validate_pic(base);
  require_input(v.size() == base.generators(), "pic element: need one coordinate per generator");
  for (std::size_t i = 0; i < base.pic.torsion.moduli.size(); ++i) {
    std::size_t j = base.pic.free_rank + i;
    v[j] = detail::reduce_mod(v[j], base.pic.torsion.moduli[i]);
  }
  return v;
}

// Boundary class of a line bundle under the degree-r Kummer sequence:
// the image of L in pic/r*pic.
inline GerbeClass kummer_class(const PicModel& base, const std::vector<Int>& big_l, const Int& r) {
  validate_pic(base);
  require_input(r >= 1, "gerbe class: r must be at least 1");
  require_input(big_l.size() == base.generators(),
                "gerbe class: need one coordinate per generator");
  GerbeClass c;
  c.base = base;
  c.r = r;
  std::vector<Int> mods = class_moduli(base, r);
  for (std::size_t j = 0; j < big_l.size(); ++j)
    c.value.push_back(detail::reduce_mod(big_l[j], mods[j]));
  return c;
}

inline void validate_class(const GerbeClass& c) {
  validate_pic(c.base);
  require_input(c.r >= 1, "gerbe class: r must be at least 1");
  require_input(c.value.size() == c.base.generators(),
                "gerbe class: need one coordinate per generator");
  std::vector<Int> mods = class_moduli(c.base, c.r);
  for (std::size_t j = 0; j < c.value.size(); ++j)
    require_input(c.value[j] == detail::reduce_mod(c.value[j], mods[j]),
                  "gerbe class: coordinate not reduced");
}

// Classes add under the contracted product.
inline GerbeClass add_classes(const GerbeClass& c1, const GerbeClass& c2) {
  validate_class(c1);
  validate_class(c2);
  require_input(c1.base == c2.base && c1.r == c2.r, "gerbe classes: mismatched base or r");
  GerbeClass out = c1;
  std::vector<Int> mods = class_moduli(c1.base, c1.r);
  for (std::size_t j = 0; j < out.value.size(); ++j)
    out.value[j] = detail::reduce_mod(c1.value[j] + c2.value[j], mods[j]);
  return out;
}

inline bool is_trivial(const GerbeClass& c) {
  validate_class(c);
  for (const Int& x : c.value)
    if (x != 0)
      return false;
  return true;
}

// Independent route for triviality of a Kummer class: L lies in r*pic
// iff the column system [ r*I | torsion relations ] hits L.
inline bool kummer_trivial_by_lattice(const PicModel& base, const std::vector<Int>& big_l,
                                      const Int& r) {
  validate_pic(base);
  require_input(r >= 1, "gerbe class: r must be at least 1");
  require_input(big_l.size() == base.generators(),
                "gerbe class: need one coordinate per generator");
  const std::size_t gens = base.generators();
  const std::size_t tors = base.pic.torsion.moduli.size();
  IntMatrix a(gens, gens + tors);
  for (std::size_t j = 0; j < gens; ++j)
    a.at(j, j) = r;
  for (std::size_t i = 0; i < tors; ++i)
    a.at(base.pic.free_rank + i, gens + i) = base.pic.torsion.moduli[i];
  return lattice_solvable(a, big_l);
}

// Presentation of pic/r*pic as a cokernel, for structure comparisons.
inline FinAbGroup classes_structure(const PicModel& base, const Int& r) {
  validate_pic(base);
  require_input(r >= 1, "gerbe class: r must be at least 1");
  const std::size_t gens = base.generators();
  const std::size_t tors = base.pic.torsion.moduli.size();
  if (gens == 0)
    return FinAbGroup{};
  IntMatrix a(gens, gens + tors);
  for (std::size_t j = 0; j < gens; ++j)
    a.at(j, j) = r;
  for (std::size_t i = 0; i < tors; ++i)
    a.at(base.pic.free_rank + i, gens + i) = base.pic.torsion.moduli[i];
  return coker_structure(a);
}

// The class of L boxtimes [w] over base x BGm: one more free generator
// (the BGm weight), coordinate w mod r, appended after the free part.
inline GerbeClass equivariant_twist(const GerbeClass& c, const Int& w) {
  validate_class(c);
  GerbeClass out;
  out.base.pic.free_rank = c.base.pic.free_rank + 1;
  out.base.pic.torsion = c.base.pic.torsion;
  if (!c.base.labels.empty()) {
    out.base.labels.assign(c.base.labels.begin(),
                           c.base.labels.begin() + static_cast<long>(c.base.pic.free_rank));
    out.base.labels.push_back("w");
    out.base.labels.insert(out.base.labels.end(),
                           c.base.labels.begin() + static_cast<long>(c.base.pic.free_rank),
                           c.base.labels.end());
  }
  out.r = c.r;
  out.value.assign(c.value.begin(), c.value.begin() + static_cast<long>(c.base.pic.free_rank));
  out.value.push_back(detail::reduce_mod(w, c.r));
  out.value.insert(out.value.end(), c.value.begin() + static_cast<long>(c.base.pic.free_rank),
                   c.value.end());
  return out;
}

// "(a1 mod m1 [label], ...)"; a bare "()" is the class over a point.
inline std::string format_gerbe_class(const GerbeClass& c) {
  validate_class(c);
  std::vector<Int> mods = class_moduli(c.base, c.r);
  std::string out = "(";
  for (std::size_t j = 0; j < c.value.size(); ++j) {
    if (j)
      out += ", ";
    out += c.value[j].str() + " mod " + mods[j].str();
    if (!c.base.labels.empty())
      out += " [" + c.base.labels[j] + "]";
  }
  return out + ")";
}

}  // namespace fixedloci
