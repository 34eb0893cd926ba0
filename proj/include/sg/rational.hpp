#pragma once

#include <gmpxx.h>
#include <string>

namespace sg {

// Exact rational scalar used by all linear algebra. Everything downstream
// (hom spaces, ranks, radical computations) assumes exact arithmetic; float
// would silently break rank decisions.
using Rat = mpq_class;

inline std::string to_string(const Rat& x) { return x.get_str(); }

} // namespace sg
