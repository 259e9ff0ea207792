#include "gammalat/rational.hpp"

#include <cctype>

#include "gammalat/error.hpp"

namespace gammalat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingKappa: return "MissingKappa";
    case ErrorKind::InvalidKappa: return "InvalidKappa";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NonIncreasingIndices: return "NonIncreasingIndices";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PoleArgument: return "PoleArgument";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

Integer factorial(std::uint32_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_ratio(std::uint32_t n, std::uint32_t l) {
  if (l > n) throw Error(ErrorKind::InvalidArgument, "falling_ratio requires l <= n");
  Integer r = 1;
  for (std::uint32_t i = l + 1; i <= n; ++i) r *= i;
  return r;
}

}  // namespace gammalat
