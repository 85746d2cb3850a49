#pragma once

// Umbrella header: exact evaluation and image classification of commutative
// non-associative multilinear polynomials on spin-factor Jordan algebras J_n
// and their Hermitian 2x2 matrix models over R, C, H, O.

#include "jnpoly/automorphism.hpp"
#include "jnpoly/cayley_dickson.hpp"
#include "jnpoly/classify.hpp"
#include "jnpoly/errors.hpp"
#include "jnpoly/evaluate.hpp"
#include "jnpoly/hermitian.hpp"
#include "jnpoly/magma.hpp"
#include "jnpoly/oracle.hpp"
#include "jnpoly/parser.hpp"
#include "jnpoly/polynomial.hpp"
#include "jnpoly/preimage.hpp"
#include "jnpoly/random.hpp"
#include "jnpoly/rational.hpp"
#include "jnpoly/scalar.hpp"
#include "jnpoly/spin.hpp"
