#include "eitangle/io.hpp"

#include <charconv>
#include <system_error>

#include "eitangle/errors.hpp"

namespace eitangle {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string s = format_double(v.real());
  if (v.imag() >= 0.0) s += '+';
  s += format_double(v.imag());
  s += 'i';
  return s;
}

namespace {

double parse_number(const char* first, const char* last) {
  // from_chars rejects a leading '+'
  if (first != last && *first == '+') ++first;
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw DomainError("parse_complex: malformed number");
  return out;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw DomainError("parse_complex: empty input");

  if (s.back() != 'i' && s.back() != 'I')
    return {parse_number(s.data(), s.data() + s.size()), 0.0};

  // Split "re{+,-}imi" at the last sign that does not follow an exponent.
  const std::size_t body = s.size() - 1;  // drop trailing 'i'
  std::size_t split = std::string::npos;
  for (std::size_t k = body; k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::size_t from) -> double {
    std::string im(s, from, body - from);
    if (im.empty() || im == "+") return 1.0;
    if (im == "-") return -1.0;
    return parse_number(im.data(), im.data() + im.size());
  };
  if (split == std::string::npos) return {0.0, imag_part(0)};
  return {parse_number(s.data(), s.data() + split), imag_part(split)};
}

}  // namespace eitangle
