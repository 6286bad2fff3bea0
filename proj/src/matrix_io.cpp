#include "framedual/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace framedual {

namespace {

enum class Kind { Integer, Fraction, Decimal, Complex };

struct Cell {
  std::string text;
  Kind kind;
  std::size_t line;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw FrameError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_integer(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<double> parse_decimal(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  double value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<Kind> real_kind(std::string_view s) {
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto den = s.substr(slash + 1);
    if (is_integer(s.substr(0, slash)) && is_integer(den) && den[0] != '-' && den[0] != '+') return Kind::Fraction;
    return std::nullopt;
  }
  if (is_integer(s)) return Kind::Integer;
  if (parse_decimal(s)) return Kind::Decimal;
  return std::nullopt;
}

// Splits "a+bi" into real and imaginary parts; the imaginary part keeps its sign.
std::pair<std::string, std::string> split_complex(std::string_view s) {
  s.remove_suffix(1);  // trailing 'i'
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string_view::npos ? "0" : std::string(s.substr(0, split));
  std::string im(split == std::string_view::npos ? s : s.substr(split));
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re, im};
}

Kind classify(std::string_view s, std::size_t line) {
  if (s.empty()) fail(line, "empty entry");
  if (s.back() == 'i') {
    const auto [re, im] = split_complex(s);
    if (!real_kind(re) || !real_kind(im)) fail(line, "malformed complex entry '" + std::string(s) + "'");
    return Kind::Complex;
  }
  const auto kind = real_kind(s);
  if (!kind) fail(line, "malformed entry '" + std::string(s) + "'");
  return *kind;
}

double real_value(std::string_view s) {
  if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
  return *parse_decimal(s);
}

Complex complex_value(std::string_view s) {
  if (s.back() != 'i') return {real_value(s), 0.0};
  const auto [re, im] = split_complex(s);
  return {real_value(re), real_value(im)};
}

std::optional<Field> header_field(std::string_view line, std::size_t number) {
  const auto pos = line.find("field=");
  if (pos == std::string_view::npos) return std::nullopt;
  const auto value = trim(line.substr(pos + 6));
  if (value == "real") return Field::Real;
  if (value == "complex") return Field::Complex;
  if (value == "rational") return Field::Rational;
  fail(number, "unknown field '" + std::string(value) + "'");
}

}  // namespace

Rational parse_rational(std::string_view token) {
  using boost::multiprecision::cpp_int;
  const std::string_view s = trim(token);
  const auto kind = real_kind(s);
  if (!kind) throw FrameError(ErrorCode::ParseError, "not a rational number: '" + std::string(s) + "'");
  // cpp_int reads a leading 0 as octal, so leading zeros are dropped.
  auto integer = [](std::string_view digits) {
    bool negative = false;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
      negative = digits[0] == '-';
      digits.remove_prefix(1);
    }
    while (digits.size() > 1 && digits[0] == '0') digits.remove_prefix(1);
    const cpp_int value(std::string{digits});
    return negative ? cpp_int(-value) : value;
  };
  if (*kind == Kind::Integer) return Rational(integer(s));
  if (*kind == Kind::Fraction) {
    const auto slash = s.find('/');
    const cpp_int den = integer(s.substr(slash + 1));
    if (den == 0) throw FrameError(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(integer(s.substr(0, slash))) / Rational(den);
  }

  std::string_view rest = s;
  bool negative = false;
  if (rest[0] == '+' || rest[0] == '-') {
    negative = rest[0] == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    const auto exp_text = rest.substr(e + 1);
    const auto [end, ec] = std::from_chars(exp_text.data() + (exp_text[0] == '+' ? 1 : 0),
                                           exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || end != exp_text.data() + exp_text.size()) {
      throw FrameError(ErrorCode::ParseError, "bad exponent in '" + std::string(s) + "'");
    }
    rest = rest.substr(0, e);
  }
  std::string digits;
  for (char c : rest)
    if (c != '.') digits.push_back(c);
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    exponent -= static_cast<long>(rest.size() - dot - 1);
  }
  if (digits.empty()) digits = "0";
  Rational value{integer(digits)};
  const Rational ten = exponent >= 0 ? Rational(10) : Rational(1) / Rational(10);
  for (long k = 0; k < std::labs(exponent); ++k) value *= ten;
  return negative ? Rational(-value) : value;
}

Matrix parse_matrix(std::string_view text, bool exact) {
  std::optional<Field> declared;
  std::vector<std::vector<Cell>> rows;
  std::size_t number = 0;
  bool seen_content = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!seen_content && !declared) declared = header_field(line, number);
      continue;
    }
    seen_content = true;
    std::vector<Cell> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      row.push_back({std::string(cell), classify(cell, number), number});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(number, "expected " + std::to_string(rows.front().size()) + " entries, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FrameError(ErrorCode::ParseError, "no matrix rows");

  bool any_complex = false, any_decimal = false, any_fraction = false;
  for (const auto& row : rows) {
    for (const Cell& c : row) {
      any_complex |= c.kind == Kind::Complex;
      any_decimal |= c.kind == Kind::Decimal;
      any_fraction |= c.kind == Kind::Fraction;
    }
  }

  Field field;
  if (declared) {
    field = *declared;
    if (field != Field::Complex && any_complex) {
      for (const auto& row : rows)
        for (const Cell& c : row)
          if (c.kind == Kind::Complex) fail(c.line, "complex entry in a " + std::string(to_string(field)) + " file");
    }
    if (field == Field::Real && (any_fraction || exact)) field = Field::Rational;
  } else if (any_complex) {
    field = Field::Complex;
  } else if (any_decimal && !exact) {
    field = Field::Real;
  } else {
    field = Field::Rational;
  }

  const auto r = static_cast<Index>(rows.size());
  const auto c = static_cast<Index>(rows.front().size());
  switch (field) {
    case Field::Rational: {
      RationalMatrix a(r, c);
      for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) a(i, j) = parse_rational(rows[i][j].text);
      return Matrix(std::move(a));
    }
    case Field::Real: {
      RealMatrix a(r, c);
      for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) a(i, j) = real_value(rows[i][j].text);
      return Matrix(std::move(a));
    }
    case Field::Complex: {
      ComplexMatrix a(r, c);
      for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) a(i, j) = complex_value(rows[i][j].text);
      return Matrix(std::move(a));
    }
  }
  throw FrameError(ErrorCode::ParseError, "unreachable");
}

Matrix read_matrix_file(const std::filesystem::path& path, bool exact) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameError(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str(), exact);
  } catch (const FrameError& e) {
    throw FrameError(e.code(), path.string() + ": " + e.what());
  }
}

std::string format_double(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_entry(const Scalar& s) {
  switch (s.field()) {
    case Field::Rational: return to_string(std::get<Rational>(s.value()));
    case Field::Real: return format_double(std::get<double>(s.value()));
    case Field::Complex: {
      const Complex z = std::get<Complex>(s.value());
      const double im = z.imag() == 0 ? 0.0 : z.imag();
      std::string out = format_double(z.real());
      out += std::signbit(im) ? "-" : "+";
      out += format_double(std::abs(im));
      out += "i";
      return out;
    }
  }
  return {};
}

std::string format_matrix(const Matrix& a) {
  std::string out = "# field=" + std::string(to_string(a.field())) + "\n";
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ",";
      out += format_entry(a.at(i, j));
    }
    out += "\n";
  }
  return out;
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FrameError(ErrorCode::ParseError, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw FrameError(ErrorCode::ParseError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw FrameError(ErrorCode::ParseError, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& a) { write_text_atomic(path, format_matrix(a)); }

}  // namespace framedual
