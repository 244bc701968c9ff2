#include "gtkey/numeric.hpp"

namespace gtkey {

Entry checked_mul(Entry a, Entry b) {
  Entry r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw input_error("entry overflow in dilation");
  return r;
}

Entry checked_add(Entry a, Entry b) {
  Entry r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw input_error("entry overflow");
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw input_error("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace gtkey
