#pragma once

// Divided differences, Demazure operators, key and Schur polynomials.

#include "gtkey/combinat.hpp"
#include "gtkey/multipoly.hpp"

namespace gtkey {

/// s_i acting on variable indices, 1 <= i <= n-1.
MultiPoly swap_vars(const MultiPoly& f, int i);
/// (f - s_i f) / (z_i - z_{i+1}), computed monomial by monomial.
MultiPoly divided_difference(const MultiPoly& f, int i);
/// pi_i(f) = d_i(z_i f).
MultiPoly pi_op(const MultiPoly& f, int i);
/// pi_{i_1} ... pi_{i_l} f; the last letter acts first.
MultiPoly apply_word(const MultiPoly& f, const Word& w);

/// z^lambda in lambda.size() variables.
MultiPoly monomial_of(const Partition& lambda);

/// pi_sigma(z^lambda) via the canonical reduced word of sigma.
MultiPoly key_via_operators(const Partition& lambda, const Permutation& sigma);
/// Same, with an explicit (reduced) word for sigma.
MultiPoly key_via_word(const Partition& lambda, const Word& w);

/// Sum of z^weight over GT(lambda) with lambda padded to n parts.
MultiPoly schur(const Partition& lambda, int n);
/// Sum of z^weight over GT(lambda/mu) with n letters.
MultiPoly skew_schur(const Partition& lambda, const Partition& mu, int n);

/// f(1,...,1); throws std::domain_error if the value is not an integer.
Integer eval_ones(const MultiPoly& f);

/// Number of SSYT of shape lambda and content mu (mu padded to lambda's length).
Integer kostka(const Partition& lambda, const WeightVector& mu);
/// Number of SSYT of shape lambda/mu and content nu.
Integer skew_kostka(const Partition& lambda, const Partition& mu, const WeightVector& nu);

/// Number of distinct rearrangements of a vector.
Integer rearrangements(const std::vector<Entry>& v);

/// Throws std::logic_error unless all coefficients are non-negative integers.
void require_nonnegative_integral(const MultiPoly& f, const char* what);

}  // namespace gtkey
