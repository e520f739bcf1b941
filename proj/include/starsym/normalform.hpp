#pragma once

#include "starsym/core.hpp"

namespace starsym {

// Layered factorization of a monomial into squarefree factors with weakly
// decreasing supports: layer i is {j : exponent of F_j >= i}, so layer 1 is
// the support and the number of layers is the largest exponent.
using NormalForm = std::vector<FormSubset>;

FormSubset support(const FMonomial& M);

// The unique factorization described above.  Throws
// invalid_input("empty-monomial") on the unit monomial.
NormalForm normal_form(const FMonomial& M);

// Inverse of normal_form: the exponent of F_j is the number of layers
// containing j.  Validates that every layer is nonempty and that the layers
// are nested downward; s is the ambient number of forms.
FMonomial from_layers(const NormalForm& layers, int s);

// Largest exponent = number of layers.  Throws on the unit monomial.
int lambda(const FMonomial& M);

// Symbolic degree: sum over layers of max(0, c - s + |layer|).  This is the
// largest u such that M lies in the u-th symbolic power (0 for monomials in
// none, including the unit).  Only params.s and params.c are read.
int sdeg(const FMonomial& M, const StarParams& params);

}  // namespace starsym
