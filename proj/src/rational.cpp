#include "qmod/rational.hpp"

#include <ostream>

namespace qmod {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

} // namespace qmod
