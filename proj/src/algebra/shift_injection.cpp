#include "rwp/algebra/shift_injection.hpp"

#include <algorithm>

#include "rwp/error.hpp"

namespace rwp {

  ShiftInjection::ShiftInjection(std::int64_t t, std::int64_t d)
      : _empty(false), _t(t), _d(d) {
    if (t < 1 || t + d < 1) {
      throw input_error("shift (" + std::to_string(t) + ", " + std::to_string(d)
                        + ") does not map into the positive integers");
    }
  }

  ShiftInjection shift_compose(ShiftInjection const& f, ShiftInjection const& g) {
    if (f.is_empty() || g.is_empty()) {
      return ShiftInjection::empty();
    }
    // i is in the domain iff i >= t_f and i + d_f >= t_g.
    return ShiftInjection(std::max(f.least(), g.least() - f.shift()),
                          f.shift() + g.shift());
  }

  std::string to_string(ShiftInjection const& f) {
    if (f.is_empty()) {
      return "empty";
    }
    return "i->i" + std::string(f.shift() < 0 ? "" : "+")
           + std::to_string(f.shift()) + " on i>=" + std::to_string(f.least());
  }

  std::ostream& operator<<(std::ostream& os, ShiftInjection const& f) {
    return os << to_string(f);
  }

}  // namespace rwp
