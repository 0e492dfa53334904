#ifndef BELLHOPF_BELLHOPF_HPP
#define BELLHOPF_BELLHOPF_HPP

// Umbrella header: exact Bell/Stirling combinatorics, truncated EGF
// arithmetic, boson normal ordering with coherent-state expectations (plus
// a numeric truncated-Fock cross-check), set-partition diagrams with their
// monomial coding, the graded Hopf algebra of diagram codes, and the
// statistical-mechanics layer built on all of it.

#include <bellhopf/boson.hpp>
#include <bellhopf/combinatorics.hpp>
#include <bellhopf/diagrams.hpp>
#include <bellhopf/fock.hpp>
#include <bellhopf/hopf.hpp>
#include <bellhopf/monomial.hpp>
#include <bellhopf/numbers.hpp>
#include <bellhopf/polynomial.hpp>
#include <bellhopf/series.hpp>
#include <bellhopf/statmech.hpp>

#endif
