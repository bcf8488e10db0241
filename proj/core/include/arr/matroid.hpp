#ifndef ARR_MATROID_HPP
#define ARR_MATROID_HPP

#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

/// Connected components of the matroid of normals. Returns sorted index
/// sets, ordered by least member; a singleton list means the arrangement is
/// irreducible (not a product).
std::vector<std::vector<int64_t>> decompose(const Arrangement& a);

} // namespace arr

#endif
