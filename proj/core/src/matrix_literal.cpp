#include <cctype>
#include <string>
#include <vector>

#include "spinal/errors.hpp"
#include "spinal/int_matrix.hpp"

namespace spinal {
namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  IntMatrix parse() {
    std::vector<std::vector<Integer>> rows;
    expect('[');
    if (!peek_is(']')) {
      do {
        rows.push_back(parse_row());
      } while (accept(','));
    }
    expect(']');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");

    // "[[],[]]" is a k x 0 matrix; keep the row count.
    if (!rows.empty() && rows.front().empty()) {
      for (const auto& r : rows)
        if (!r.empty()) fail("ragged rows");
      return IntMatrix(rows.size(), 0);
    }
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) fail("ragged rows");
    return IntMatrix::from_rows(rows);
  }

 private:
  std::vector<Integer> parse_row() {
    std::vector<Integer> row;
    expect('[');
    if (!peek_is(']')) {
      do {
        row.push_back(parse_integer());
      } while (accept(','));
    }
    expect(']');
    return row;
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("matrix literal: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntMatrix parse_matrix_literal(std::string_view text) {
  return LiteralParser(text).parse();
}

}  // namespace spinal
