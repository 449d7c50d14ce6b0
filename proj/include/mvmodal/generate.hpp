#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mvmodal/formula.hpp"

namespace mvmodal {

/// Building blocks for formula enumeration and sampling.
struct Signature {
  std::vector<Formula> leaves;
  /// Neg, Box, Dia or Coef; Coef is expanded over `coefs`.
  std::vector<Op> unary;
  std::vector<TruthValue> coefs;
  /// Any core binary operator.
  std::vector<Op> binary;
};

/// Atoms with !, ->, /\, \/, &, |+|, <-> and every coefficient.
Signature form0_signature(const std::vector<std::string>& atoms, Resolution r);
/// form0_signature plus box and dia.
Signature modal_signature(const std::vector<std::string>& atoms, Resolution r);
/// form0_signature plus <|, with top and bot as leaves.
Signature qfl2_signature(const std::vector<std::string>& atoms, Resolution r);

/// Every formula over the signature whose depth is at most `depth`, ordered by
/// depth and then by construction order. Structurally distinct by construction.
std::vector<Formula> formulas_up_to_depth(const Signature& sig, int depth);

/// result[s] lists every formula with exactly s nodes, 1 <= s <= max_size.
std::vector<std::vector<Formula>> formulas_by_size(const Signature& sig, int max_size);

/// Uniform-ish random formula of depth at most max_depth.
Formula random_formula(const Signature& sig, int max_depth, std::mt19937_64& rng);

}  // namespace mvmodal
