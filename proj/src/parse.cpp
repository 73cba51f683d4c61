#include "supercup/parse.hpp"

#include <cctype>

namespace supercup {

namespace {

struct Scanner {
  const std::string& s;
  size_t at = 0;

  void skip_ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ValidationError("syntax error at position " + std::to_string(at) + ": expected " +
                          expected);
  }

  void expect(char c) {
    skip_ws();
    if (at >= s.size() || s[at] != c) fail(std::string("'") + c + "'");
    ++at;
  }

  void expect_word(const std::string& w) {
    skip_ws();
    if (s.compare(at, w.size(), w) != 0) fail("'" + w + "'");
    at += w.size();
  }

  Int integer() {
    skip_ws();
    size_t start = at;
    if (at < s.size() && (s[at] == '-' || s[at] == '+')) ++at;
    size_t digits = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (at == digits) {
      at = start;
      fail("an integer");
    }
    return std::stoll(s.substr(start, at - start));
  }

  std::vector<Int> integer_list(int count) {
    std::vector<Int> out;
    for (int i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    return out;
  }

  void expect_end() {
    skip_ws();
    if (at != s.size()) fail("end of input");
  }
};

}  // namespace

SuperWeight parse_weight(const std::string& text) {
  Scanner sc{text};
  sc.expect_word("gl");
  sc.expect('(');
  Int m = sc.integer();
  sc.expect('|');
  Int n = sc.integer();
  sc.expect(')');
  if (m < 0 || n < 0) throw ValidationError("gl(m|n): m and n must be non-negative");
  sc.expect('[');
  std::vector<Int> top = sc.integer_list(static_cast<int>(m));
  sc.expect('|');
  std::vector<Int> bottom = sc.integer_list(static_cast<int>(n));
  sc.expect(']');
  sc.expect_end();
  return SuperWeight(static_cast<int>(m), static_cast<int>(n), std::move(top), std::move(bottom));
}

}  // namespace supercup
