#include "gt/error.hpp"
#include "gt/rational.hpp"

#include <cctype>

namespace gt {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ConstantClass: return "ConstantClass";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::NotDefined: return "NotDefined";
    case ErrorCode::NotMappingClass: return "NotMappingClass";
    case ErrorCode::InvalidPuncture: return "InvalidPuncture";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || s.find('/') != std::string::npos) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Rational q;
    if (q.get_num().set_str(digits, 10) != 0) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q.get_den() = den;
    q.canonicalize();
    return q;
  }
  Rational q;
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0)))
      throw bad();
  }
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gt
