#include "nefkit/rational.hpp"

#include <sstream>

#include "nefkit/errors.hpp"

namespace nefkit {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) return Rat(-num, -den);
  return Rat(num, den);
}

Rat parse_rat(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw InputError("not a rational: \"" + text + "\"");
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      throw InputError("not a rational: \"" + text + "\"");
    return make_rat(Int(num), Int(den));
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("not a rational: \"" + text + "\"");
  }
}

std::string format_rat(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw InputError("dot product of vectors of different lengths");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw InputError("sum of vectors of different lengths");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw InputError("difference of vectors of different lengths");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scaled(const RatVec& v, const Rat& factor) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec canonical(const RatVec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;

  Int den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
  Int num_gcd = 0;
  for (const auto& x : v) num_gcd = gcd(num_gcd, Int(numerator(x) * (den_lcm / denominator(x))));
  if (num_gcd == 0) return v;  // zero vector
  const Rat factor = make_rat(den_lcm, num_gcd);
  return scaled(v, factor);
}

int compare_lex(const RatVec& a, const RatVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

std::string format_vec(const RatVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << format_rat(v[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace nefkit
