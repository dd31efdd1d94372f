#include "trop/rational.hpp"

namespace trop {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw Error("ParseError", "bad rational literal: " + s);
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("ParseError", "bad rational literal: " + s);
  if (q.get_den() == 0) throw Error("ParseError", "zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace trop
