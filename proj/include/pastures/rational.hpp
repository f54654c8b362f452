#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pastures {

using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Parses "p" or "p/q" (optional leading '-'). Rejects zero denominators.
Rat rat_parse(const std::string& s);

// "p/q" in lowest terms; plain "p" when the denominator is 1.
std::string rat_str(const Rat& x);

} // namespace pastures
