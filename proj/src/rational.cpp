#include "pastures/rational.hpp"

#include <cctype>

#include "pastures/errors.hpp"

namespace pastures {

Rat rat_parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = t[0] == '-' ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw DomainError("not a rational: '" + s + "'");
  Int n(num), d(den);
  if (d == 0) throw DomainError("zero denominator: '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

} // namespace pastures
