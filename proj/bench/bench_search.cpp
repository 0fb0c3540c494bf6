// Serial reference vs OpenMP kernel on the bounded searches. Prints wall
// times and fails if the two disagree.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "toral/fixtures.hpp"
#include "toral/lmt.hpp"
#include "toral/tori_galois.hpp"

using namespace toral;
namespace fx = toral::fixtures;

namespace {

template <class F>
double timed(F && f)
{
    auto const t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char ** argv)
{
    std::int64_t const bound = argc > 1 ? std::atoll(argv[1]) : 400;
    std::int64_t const xi_bound = argc > 2 ? std::atoll(argv[2]) : 2;
    std::cout << "threads: " << omp_get_max_threads() << "\n";
    int bad = 0;

    auto const a = Automorphism::create(fx::quad10::a());
    auto const b = Automorphism::create(fx::quad10::b(), a.ctx());
    FracIdeal const i = matrix_to_ideal(a).ideal, j = matrix_to_ideal(b).ideal;
    ArithSearchStats ss, sp;
    std::optional<FieldElem> rs, rp;
    double const ts = timed([&] { rs = is_arith_equivalent_bounded(i, j, bound, &ss, false); });
    double const tp = timed([&] { rp = is_arith_equivalent_bounded(i, j, bound, &sp, true); });
    bad += rs.has_value() != rp.has_value() || ss.candidates != sp.candidates;
    std::cout << "arith search, bound " << bound << ", " << ss.candidates << " candidates: serial " << ts
              << " s, parallel " << tp << " s, speedup " << ts / tp << "\n";

    auto const q = Automorphism::create(fx::quad20::b());
    XiSearchStats xs, xp;
    std::optional<IntMat> ms, mp;
    double const us = timed([&] { ms = find_inverse_swap_direct(q, xi_bound, &xs, false); });
    double const up = timed([&] { mp = find_inverse_swap_direct(q, xi_bound, &xp, true); });
    bad += ms != mp || xs.candidates != xp.candidates;
    std::cout << "inverse-swap search, bound " << xi_bound << ", " << xs.candidates << " candidates: serial " << us
              << " s, parallel " << up << " s, speedup " << us / up << "\n";

    std::cout << (bad ? "MISMATCH" : "serial and parallel agree") << "\n";
    return bad;
}
