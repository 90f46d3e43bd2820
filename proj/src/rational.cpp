#include "gwc/rational.hpp"

#include <cctype>

namespace gwc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::Reducible: return "Reducible";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::ZeroDivision: return "ZeroDivision";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::NotIsolated: return "NotIsolated";
    case Errc::NotAtOrigin: return "NotAtOrigin";
    case Errc::SmoothPoint: return "SmoothPoint";
    case Errc::ConstantTermPresent: return "ConstantTermPresent";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DegenerateTraceForm: return "DegenerateTraceForm";
    case Errc::NegativeGenus: return "NegativeGenus";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::MuMismatch: return "MuMismatch";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::SmoothnessCheckFailed: return "SmoothnessCheckFailed";
    case Errc::FactorizationInvalid: return "FactorizationInvalid";
    case Errc::InsufficientGlobalData: return "InsufficientGlobalData";
    case Errc::InconsistentGlobalData: return "InconsistentGlobalData";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::Precondition: return "Precondition";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_internal(Errc c) {
  return c == Errc::Internal || c == Errc::ZeroElement || c == Errc::Degenerate;
}

Rational rat_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) fail(Errc::ZeroDivision, "0 to a negative power");
    return rat_pow(Rational(1) / base, -exp);
  }
  Rational result(1);
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den.is_zero()) fail(Errc::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const GwcError&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& n) { return n.str(); }

Integer gcd_int(Integer a, Integer b) {
  return boost::multiprecision::gcd(a, b);
}

Integer squarefree_part(Integer n) {
  if (n.is_zero()) fail(Errc::ZeroEntry, "squarefree part of 0");
  int sgn = n.sign();
  n = abs(n);
  Integer out(1);
  for (Integer d(2); d * d <= n; ++d) {
    if (n % d != 0) continue;
    int mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    if (mult & 1) out *= d;
  }
  out *= n;  // leftover cofactor is prime or 1
  return sgn < 0 ? -out : out;
}

std::vector<Integer> prime_factors(Integer n) {
  if (n.is_zero()) fail(Errc::ZeroEntry, "factoring 0");
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d(2); d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Integer mod_pow(Integer base, Integer exp, const Integer& mod) {
  Integer result(1);
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if ((exp & 1) != 0) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

int legendre_symbol(Integer a, const Integer& p) {
  a %= p;
  if (a < 0) a += p;
  if (a.is_zero()) return 0;
  Integer r = mod_pow(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

}  // namespace gwc
