#include "rihull/rational.hpp"

#include <cctype>
#include <cmath>

#include "rihull/errors.hpp"

namespace rihull {

Rat::Rat(long n, long d) {
  if (d == 0) throw error("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw error("rational with zero denominator");
  q_.canonicalize();
}

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(text.substr(0, i));
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size() || i == den_begin) return std::nullopt;
    den = std::string(text.substr(den_begin));
    if (den[0] == '0') return std::nullopt;  // grammar forbids leading zero and zero denominator
  }
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return Rat(std::move(q));
}

Rat Rat::from_double_exact(double x) {
  if (!std::isfinite(x)) throw error("non-finite double has no rational value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw error("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw error("rational division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

Rat Rat::pow_int(long k) const {
  if (k == 0) return Rat(1);
  const bool neg = k < 0;
  const unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  if (neg && is_zero()) throw error("zero to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
  mpq_class r = neg ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return Rat(std::move(r));
}

}  // namespace rihull
