#pragma once

// Wire formats.
//
//   matrix:       "rows cols" on the first line, then one line per row
//   polynomial:   "deg c0 c1 ... c_deg" on one line, constant first, monic
//   certificate:  sections introduced by a line "left", "right" or "M",
//                 each followed by a matrix; "right" repeats once per block
//
// Blank lines and lines starting with '#' are ignored between sections.

#include <string>

#include "toral/block.hpp"

namespace toral {

// Throws InputError on malformed dimensions or non-integer tokens.
IntMat parse_matrix(std::string const & text);
std::string format_matrix(IntMat const & m);

// Throws InputError unless monic of the stated degree.
ZPoly parse_poly(std::string const & text);
std::string format_poly(ZPoly const & p);

BlockCertificate parse_certificate(std::string const & text);
std::string format_certificate(BlockCertificate const & c);

struct RecheckReport {
    bool shapes_ok = false;
    bool equation_ok = false;
    mpz_class det;
    std::string reason;

    bool ok() const { return shapes_ok && equation_ok && (det == 1 || det == -1); }
};

// Re-multiplies (+left)^k M and M (+right) entry by entry and takes det M by
// its own elimination; nothing from the construction side is called.
RecheckReport recheck_certificate(BlockCertificate const & c);

std::string read_file(std::string const & path);

} // namespace toral
