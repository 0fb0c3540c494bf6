#pragma once

// Dense univariate polynomials, constant term first.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "toral/linalg.hpp"

namespace toral {

using QPoly = std::vector<mpq_class>;
using ZPoly = IntVec;

void trim(QPoly & p);
void trim(ZPoly & p);
// -1 for the zero polynomial
long degree(QPoly const & p);
long degree(ZPoly const & p);

QPoly to_qpoly(ZPoly const & p);

QPoly poly_add(QPoly const & a, QPoly const & b);
QPoly poly_sub(QPoly const & a, QPoly const & b);
QPoly poly_mul(QPoly const & a, QPoly const & b);
QPoly poly_scale(QPoly const & a, mpq_class const & s);
// (quotient, remainder); b nonzero
std::pair<QPoly, QPoly> poly_divmod(QPoly const & a, QPoly const & b);
QPoly poly_rem(QPoly const & a, QPoly const & b);
mpq_class poly_eval(QPoly const & p, mpq_class const & x);
// p(q(t)) reduced modulo m
QPoly poly_compose_mod(QPoly const & p, QPoly const & q, QPoly const & m);

ZPoly zpoly_mul(ZPoly const & a, ZPoly const & b);
mpz_class zpoly_eval(ZPoly const & p, mpz_class const & x);

std::string to_string(QPoly const & p, char const * var = "t");
std::string to_string(ZPoly const & p, char const * var = "t");

enum class Irreducibility { Verified, Reducible, Unknown };

struct IrreducibilityReport {
    Irreducibility status;
    std::string method; // which test settled it
};

// Irreducibility over Q of a monic integer polynomial of degree >= 1.
// Tries, in order: integer roots, factor-degree patterns modulo small primes,
// then a bounded search for monic integer factors.
IrreducibilityReport check_irreducible(ZPoly const & f, unsigned long search_budget = 2000000);

} // namespace toral
