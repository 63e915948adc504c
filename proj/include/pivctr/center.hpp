#pragma once

#include <vector>

#include "pivctr/functor.hpp"

namespace pivctr {

// (V, sigma_V) with sigma_V(X_i): V (x) X_i -> X_i (x) V stored at simples.
struct CenterObject {
  Obj carrier;
  std::vector<Morphism> hb;
};

CenterObject unit_center(const Cat& C);

// sigma_V(W) for an arbitrary object W, extended by naturality.
Morphism half_braiding(const Cat& C, const CenterObject& v, const Obj& w);
// typed: V (x) t -> t (x) V
Arrow half_braiding(const Cat& C, const CenterObject& v, const Term& t);

ValidationReport validate_center_object(const Cat& C, const CenterObject& v);

CenterObject tensor_center(const Cat& C, const CenterObject& v, const CenterObject& w);
// c_{V,W} = sigma_V(W): V (x) W -> W (x) V
Morphism braiding(const Cat& C, const CenterObject& v, const CenterObject& w);

// f: V -> W with sigma_W(X) o (f (x) id) = (id (x) f) o sigma_V(X)
bool is_center_morphism(const Cat& C, const Morphism& f, const CenterObject& v, const CenterObject& w);
std::vector<Morphism> center_hom(const Cat& C, const CenterObject& v, const CenterObject& w);

// F~(V): carrier F(V), sigma'(X_{f(i)}) = F2(X_i,V)^{-1} o F(sigma(X_i)) o F2(V,X_i)
CenterObject induced_autoeq(const MonFunctor& F, const CenterObject& v);

bool center_equal(const CenterObject& a, const CenterObject& b);

}  // namespace pivctr
