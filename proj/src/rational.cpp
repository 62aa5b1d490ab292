#include "projcone/rational.hpp"

#include <cctype>
#include <vector>

namespace projcone {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rational_str(const Rat& value) {
  return value.get_str();
}

Rat pow_rational(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  bool invert = exp < 0;
  unsigned long e = invert ? -static_cast<unsigned long>(exp) : exp;
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rat r = invert ? Rat(den, num) : Rat(num, den);
  r.canonicalize();
  return r;
}

Int common_denominator(const std::vector<Rat>& values) {
  Int lcm = 1;
  for (const Rat& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  return lcm;
}

}  // namespace projcone
