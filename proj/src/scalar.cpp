#include "trilie/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace trilie {

const char* field_name(Field f) {
  return f == Field::rational ? "rational" : "gaussian_rational";
}

Field parse_field(std::string_view name) {
  if (name == "rational") return Field::rational;
  if (name == "gaussian_rational") return Field::gaussian_rational;
  throw ParseError("unknown scalar_field '" + std::string(name) + "'");
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re = Rational(num, den);
  re.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

Scalar inverse(const Scalar& s) {
  Scalar one(1);
  return one /= s;
}

namespace {

// A rational token: optional sign, digits, optional "/digits".
Rational rational_from_token(std::string_view t) {
  if (t.empty()) throw ParseError("empty coefficient");
  std::size_t pos = 0;
  bool neg = false;
  if (t[pos] == '+' || t[pos] == '-') {
    neg = t[pos] == '-';
    ++pos;
  }
  std::string num, den;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) num += t[pos++];
  if (num.empty()) throw ParseError("malformed coefficient '" + std::string(t) + "'");
  if (pos < t.size()) {
    if (t[pos] != '/') throw ParseError("malformed coefficient '" + std::string(t) + "'");
    ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) den += t[pos++];
    if (den.empty() || pos != t.size())
      throw ParseError("malformed coefficient '" + std::string(t) + "'");
  }
  if (den.empty()) den = "1";
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(t) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.find('i') != std::string_view::npos)
    throw ParseError("expected a rational, got '" + std::string(text) + "'");
  return rational_from_token(text);
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty coefficient");
  // Split into sign-prefixed terms.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t p = 0; p < text.size(); ++p) {
    char c = text[p];
    if ((c == '+' || c == '-') && p > 0) {
      terms.push_back(cur);
      cur.clear();
    }
    if (c == ' ') continue;
    cur += c;
  }
  terms.push_back(cur);
  if (terms.size() > 2) throw ParseError("malformed coefficient '" + std::string(text) + "'");

  Scalar out;
  bool saw_re = false, saw_im = false;
  for (const std::string& term : terms) {
    std::size_t ipos = term.find('i');
    if (ipos == std::string::npos) {
      if (saw_re) throw ParseError("two real terms in '" + std::string(text) + "'");
      out.re = rational_from_token(term);
      saw_re = true;
    } else {
      if (saw_im || term.find('i', ipos + 1) != std::string::npos)
        throw ParseError("malformed imaginary part in '" + std::string(text) + "'");
      // Accept "i", "-i", "3i", "3i/4", "3/4i".
      std::string stripped = term.substr(0, ipos) + term.substr(ipos + 1);
      if (stripped.empty() || stripped == "+" || stripped == "-") stripped += "1";
      out.im = rational_from_token(stripped);
      saw_im = true;
    }
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Scalar& s) {
  if (s.im == 0) return s.re.get_str();
  std::string im_part;
  Rational a = abs(s.im);
  std::string num = a.get_num().get_str();
  std::string den = a.get_den().get_str();
  im_part = (num == "1" ? "i" : num + "i");
  if (den != "1") im_part += "/" + den;
  if (s.re == 0) return (s.im < 0 ? "-" : "") + im_part;
  return s.re.get_str() + (s.im < 0 ? "-" : "+") + im_part;
}

}  // namespace trilie
