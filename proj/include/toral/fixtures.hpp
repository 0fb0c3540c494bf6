#pragma once

// Worked instances used by the CLI `fixtures` command and by the tests.

#include "toral/linalg.hpp"
#include "toral/poly.hpp"

namespace toral::fixtures {

// f = t^2 - 10 t + 1: two nonconjugate but 2-block conjugate matrices.
namespace quad10 {
inline ZPoly f() { return {1, -10, 1}; }
inline IntMat a() { return {{8, 5}, {3, 2}}; }
inline IntMat b() { return {{9, 8}, {1, 1}}; }
inline IntMat a_prime() { return {{-1, -4}, {3, 11}}; }
inline IntMat b_prime() { return {{0, 1}, {-1, 10}}; }
// (B + B) M = M (A + A'), det M = 1
inline IntMat m()
{
    return {{7, 5, -3, -10}, {1, 0, 0, -1}, {3, 1, -2, -4}, {0, 1, 1, 0}};
}
// (A + A) N = N (B + B'), det N = -1
inline IntMat n()
{
    return {{-3, -2, 2, -1}, {-1, -2, -3, 0}, {8, 7, 1, 2}, {3, 3, -2, 1}};
}
inline IntMat m11() { return {{7, 5}, {1, 0}}; }
inline IntMat m21() { return {{3, 1}, {0, 1}}; }
inline IntMat m12() { return {{-3, -10}, {0, -1}}; }
inline IntMat m22() { return {{-2, -4}, {1, 0}}; }
inline IntMat w11() { return {{-3, -2}, {-1, -2}}; }
inline IntMat w12() { return {{8, 7}, {3, 3}}; }
inline IntMat w21() { return {{1, 2}, {-3, -3}}; }
inline IntMat w22() { return {{-3, -2}, {8, 7}}; }
// generators as power-basis coordinates (constant first)
inline QPoly a1() { return {-2, 1}; }
inline QPoly a2() { return {3}; }
inline QPoly b1() { return {mpq_class(-1, 3), mpq_class(-1, 3)}; }
inline QPoly b2() { return {0, 1}; }
} // namespace quad10

// f = t^2 - 20 t + 1: an element swapping B and its inverse.
namespace quad20 {
inline ZPoly f() { return {1, -20, 1}; }
inline IntMat b() { return {{3, 10}, {5, 17}}; }
inline IntMat b_inv() { return {{17, -10}, {-5, 3}}; }
inline IntMat xi()
{
    return {{5, 0, 0, 2}, {7, -5, -1, 0}, {0, 24, 5, 14}, {-12, 0, 0, -5}};
}
} // namespace quad20

// f = t^3 - 23 t^2 + 7 t - 1: a pair that is not block conjugate.
namespace cubic23 {
inline ZPoly f() { return {-1, 7, -23, 1}; }
inline IntMat a() { return {{-1, 2, 0}, {-1, 1, 1}, {-8, -6, 23}}; }
inline IntMat b() { return {{0, 1, 0}, {-1, 0, 2}, {-11, -3, 23}}; }
// (B + B) E = E A
inline IntMat embedding()
{
    return {{1, 0, 0}, {-1, 2, 0}, {0, 0, 1}, {-1, 1, 0}, {0, -1, 1}, {-4, -3, 11}};
}
// Z-bases as power-basis coordinates
inline std::vector<QPoly> ideal_i() { return {{2}, {1, 1}, {1, 0, 1}}; }
inline std::vector<QPoly> order_r() { return {{1}, {0, 1}, {mpq_class(1, 2), 0, mpq_class(1, 2)}}; }
} // namespace cubic23

// Minimal polynomials of theta for the non-invertible ideal family.
namespace dtz {
inline ZPoly cubic() { return {-1, -1, 0, 1}; }
inline ZPoly quartic() { return {-1, -1, 0, 0, 1}; }
} // namespace dtz

} // namespace toral::fixtures
