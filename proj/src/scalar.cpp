#include "wnrep/scalar.hpp"

#include <cctype>
#include <climits>
#include <ostream>

#include "wnrep/errors.hpp"

namespace wnrep {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw RangeError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("malformed rational '" + std::string(text) + "'", i);
  std::string num(text.substr(0, num_end));
  if (num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  std::size_t pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1)
      throw ParseError("malformed rational '" + std::string(text) + "'", pos + 1);
    den = std::string(text.substr(pos + 1, den_end - pos - 1));
    pos = den_end;
  }
  if (pos != text.size())
    throw ParseError("malformed rational '" + std::string(text) + "'", pos);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", num_end + 1);
  return Scalar(mpq_class(n, d));
}

bool Scalar::is_integer() const { return v_.get_den() == 1; }

long Scalar::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw RangeError("integer part out of range: " + str());
  return q.get_si();
}

long Scalar::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw RangeError("integer part out of range: " + str());
  return q.get_si();
}

long Scalar::to_long() const {
  if (!is_integer()) throw RangeError("not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw RangeError("integer out of range: " + str());
  return v_.get_num().get_si();
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(v_))); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw RangeError("division by zero");
  return Scalar(mpq_class(1 / v_));
}

Scalar Scalar::frac() const { return *this - Scalar(floor()); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw RangeError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Scalar::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar falling(const Scalar& c, long k) {
  Scalar r(1);
  for (long i = 0; i < k; ++i) r *= c - Scalar(i);
  return r;
}

Scalar binomial(const Scalar& c, long k) {
  if (k < 0) return Scalar(0);
  Scalar r = falling(c, k);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return r / Scalar(mpq_class(fact));
}

}  // namespace wnrep
