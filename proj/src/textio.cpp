#include "teich/textio.hpp"

#include <cctype>
#include <sstream>

#include "teich/matrix.hpp"

namespace teich {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool eof() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
  char take() { skip_ws(); return s[i++]; }
};

Int parse_int(Cursor& c) {
  c.skip_ws();
  std::string digits;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) digits += c.s[c.i++];
  if (digits.empty()) throw std::invalid_argument("expected digits in '" + c.s + "'");
  return Int(digits);
}

// term := [sign] ( digits ['*'] 'w'? | 'w' )
// element := term { ('+'|'-') term }
QuadInt parse_quadint_body(Cursor& c, const Discriminant& disc) {
  Int a = 0, b = 0;
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = (c.take() == '-') ? -1 : 1;
    } else if (!first) {
      break;
    }
    c.skip_ws();
    Int coeff = 1;
    bool have_digits = false;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      coeff = parse_int(c);
      have_digits = true;
    }
    c.skip_ws();
    bool is_w = false;
    if (c.i < c.s.size() && (c.s[c.i] == '*' || c.s[c.i] == 'w')) {
      if (c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
        if (c.i >= c.s.size() || c.s[c.i] != 'w') throw std::invalid_argument("expected 'w' after '*'");
      }
      if (c.s[c.i] == 'w') { ++c.i; is_w = true; }
    }
    if (!have_digits && !is_w) throw std::invalid_argument("malformed element '" + c.s + "'");
    if (is_w) b += sign * coeff;
    else a += sign * coeff;
    first = false;
  }
  return {a, b, disc};
}

}  // namespace

QuadInt parse_quadint(const std::string& text, const Discriminant& disc) {
  Cursor c{text};
  QuadInt r = parse_quadint_body(c, disc);
  if (!c.eof()) throw std::invalid_argument("trailing input in element '" + text + "'");
  return r;
}

QuadRat parse_quadrat(const std::string& text, const Discriminant& disc) {
  Cursor c{text};
  c.skip_ws();
  if (c.peek() == '(') {
    c.take();
    QuadInt num = parse_quadint_body(c, disc);
    if (c.take() != ')') throw std::invalid_argument("expected ')' in '" + text + "'");
    if (c.peek() == '/') {
      c.take();
      int sign = 1;
      if (c.peek() == '-') { c.take(); sign = -1; }
      Int den = parse_int(c);
      if (!c.eof()) throw std::invalid_argument("trailing input in '" + text + "'");
      return QuadRat(num, sign * den);
    }
    if (!c.eof()) throw std::invalid_argument("trailing input in '" + text + "'");
    return QuadRat(num);
  }
  QuadInt num = parse_quadint_body(c, disc);
  if (c.peek() == '/') {
    c.take();
    int sign = 1;
    if (c.peek() == '-') { c.take(); sign = -1; }
    Int den = parse_int(c);
    if (!c.eof()) throw std::invalid_argument("trailing input in '" + text + "'");
    return QuadRat(num, sign * den);
  }
  if (!c.eof()) throw std::invalid_argument("trailing input in element '" + text + "'");
  return QuadRat(num);
}

std::string to_string(const QuadInt& x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << x.a.get_str();
  } else {
    bool wrote = false;
    if (x.a != 0) { os << x.a.get_str(); wrote = true; }
    if (x.b > 0 && wrote) os << "+";
    if (x.b == -1) os << "-";
    else if (x.b != 1) os << x.b.get_str() << "*";
    os << "w";
  }
  return os.str();
}

std::string to_string(const QuadRat& x) {
  if (x.den == 1) return to_string(x.num);
  std::ostringstream os;
  os << "(" << to_string(x.num) << ")/" << x.den.get_str();
  return os.str();
}

Mat2K parse_matrix(const std::string& text, const Discriminant& disc) {
  std::vector<std::string> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(row);
  if (rows.size() != 2) throw std::invalid_argument("matrix needs two ';'-separated rows");
  std::array<QuadRat, 4> e;
  for (int r = 0; r < 2; ++r) {
    auto comma = rows[r].find(',');
    if (comma == std::string::npos) throw std::invalid_argument("matrix row needs two entries");
    e[2 * r] = parse_quadrat(rows[r].substr(0, comma), disc);
    e[2 * r + 1] = parse_quadrat(rows[r].substr(comma + 1), disc);
  }
  return Mat2K(e[0], e[1], e[2], e[3]);
}

std::string to_string(const Mat2K& m) {
  return to_string(m.e00) + "," + to_string(m.e01) + ";" + to_string(m.e10) + "," +
         to_string(m.e11);
}

}  // namespace teich
