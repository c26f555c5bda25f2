#include "spgr/rational.hpp"

#include <stdexcept>

namespace spgr {

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto ok_digits = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den =
      slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
  if (!ok_digits(num) || !ok_digits(den) || den.front() == '-')
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  Int d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rat r(Int(std::string(num)), d);
  r.canonicalize();
  return r;
}

}  // namespace spgr
