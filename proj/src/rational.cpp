#include "ginv/rational.hpp"

#include <cctype>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

BigInteger parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  return BigInteger(std::string(digits), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  BigInteger num;
  BigInteger den = 1;
  auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    num = parse_integer(body, text);
  } else {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

std::string to_string(const BigInteger& z) { return z.get_str(10); }

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const BigInteger& num = q.get_num();
  const BigInteger& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigInteger rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  BigRational root(rn, rd);
  root.canonicalize();
  return root;
}

}  // namespace ginv
