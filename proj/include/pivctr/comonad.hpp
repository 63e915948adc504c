#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "pivctr/center.hpp"

namespace pivctr {

// Z(V) = (+)_i (X_i (x) V) (x) X_i*, a finite direct sum in the fusion case.
struct EndRealization {
  Obj base, total;
  std::vector<Obj> part;         // raw (X_i V) X_i*
  std::vector<Morphism> proj;    // pi_V(X_i): total -> part[i]
  std::vector<Morphism> sect;    // part[i] -> total
};

struct Comodule {
  Obj carrier;
  Morphism rho;  // carrier -> Z(carrier)
};

class Comonad {
 public:
  explicit Comonad(const Cat& C) : C_(C) {}
  const Cat& cat() const { return C_; }

  const EndRealization& Z(const Obj& v) const;
  Obj Zobj(const Obj& v) const { return Z(v).total; }
  Morphism Zmor(const Morphism& f) const;
  // typed part term (X_i (x) leaf V) (x) X_i*
  Term part_term(const Obj& v, int i) const;

  // pi_V(W): Z(V) -> (W V) W*
  Morphism pi(const Obj& v, const Obj& w) const;
  Arrow pi(const Obj& v, const Term& w) const;

  Morphism delta(const Obj& v) const;
  Morphism epsilon(const Obj& v) const;
  // section of epsilon: inclusion of the unit summand
  Morphism iota(const Obj& v) const;
  Morphism Z2(const Obj& v, const Obj& w) const;
  Morphism Z0() const;

 private:
  const Cat& C_;
  mutable std::mutex mu_;
  mutable std::map<std::string, EndRealization> real_;
  mutable std::map<std::string, Morphism> delta_, z2_;
};

ValidationReport verify_realization(const Comonad& Z, const Obj& v);
// coassociativity, counit laws, and monoidality of delta and epsilon against
// every simple W
ValidationReport verify_comonad_laws(const Comonad& Z, const Obj& v);

ValidationReport validate_comodule(const Comonad& Z, const Comodule& m);
Comodule comodule_from_center(const Comonad& Z, const CenterObject& v);
CenterObject center_from_comodule(const Comonad& Z, const Comodule& m);
Comodule free_comodule(const Comonad& Z, const Obj& v);  // R(V) = (Z(V), delta_V)
CenterObject free_center(const Comonad& Z, const Obj& v);
Comodule unit_comodule(const Comonad& Z);
Comodule tensor_comodule(const Comonad& Z, const Comodule& m, const Comodule& n);

// H^l_{X,M}: Z(X) M -> Z(X M) and H^r_{M,X}: M Z(X) -> Z(M X)
Morphism hopf_left(const Comonad& Z, const Obj& x, const Comodule& m);
Morphism hopf_right(const Comonad& Z, const Comodule& m, const Obj& x);
ValidationReport verify_lemma_hopf_ops(const Comonad& Z, const std::vector<Obj>& xs,
                                       const std::vector<Comodule>& ms);

}  // namespace pivctr
