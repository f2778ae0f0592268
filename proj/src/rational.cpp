#include "kr/rational.hpp"

#include <stdexcept>

namespace kr {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return v_.get_num().get_str();
  return str();
}

}  // namespace kr
