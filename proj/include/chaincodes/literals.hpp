#pragma once

#include <string>

#include "chaincodes/field_algebra.hpp"
#include "chaincodes/ring_algebra.hpp"

namespace chaincodes {

// Element literals: polynomials in x for cyclic groups ("1+x+x^2"), words in r and s
// for dihedral groups ("r^2s + s"), and a coefficient list "[c_0, c_1, ...]" for any group.
// Over the polynomial chain ring, coefficients may be parenthesized: "(1+u)x".

/// Name of a group element: "x^3", "r^2s", "g5".
std::string element_name(const FiniteGroup& group, Elem g);

FAlgebraElement parse_element(const std::string& text, const GroupPtr& group, Coeff p);
RAlgebraElement parse_r_element(const std::string& text, const GroupPtr& group, const RingPtr& ring);
Scalar parse_scalar(const std::string& text, const ChainRing& ring);

std::string format_element(const FAlgebraElement& e);
std::string format_element(const RAlgebraElement& e);

}  // namespace chaincodes
