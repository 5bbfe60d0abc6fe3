#include "torsec/rational.hpp"

#include <stdexcept>

namespace torsec {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace torsec
