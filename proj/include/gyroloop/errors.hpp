#pragma once

#include <stdexcept>
#include <string>

namespace gyroloop {

// Base class for all gyroloop errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonSquareError : Error {
  explicit NonSquareError(const std::string& msg) : Error(msg) {}
};

struct EntryOutOfRangeError : Error {
  int row, col, value;
  EntryOutOfRangeError(int r, int c, int v)
      : Error("entry out of range at (" + std::to_string(r) + "," +
              std::to_string(c) + "): " + std::to_string(v)),
        row(r), col(c), value(v) {}
};

struct NotLatinSquareError : Error {
  bool is_row;   // true: row witness, false: column witness
  int index;     // offending row or column
  int symbol;    // repeated symbol
  NotLatinSquareError(bool row, int idx, int sym)
      : Error(std::string(row ? "row " : "column ") + std::to_string(idx) +
              " is not a permutation (symbol " + std::to_string(sym) +
              " repeated or missing)"),
        is_row(row), index(idx), symbol(sym) {}
};

struct NoTwoSidedIdentityError : Error {
  NoTwoSidedIdentityError() : Error("no two-sided identity element") {}
};

struct NoTwoSidedInverseError : Error {
  int element;
  explicit NoTwoSidedInverseError(int a)
      : Error("element " + std::to_string(a) + " has no two-sided inverse"),
        element(a) {}
};

struct IndexOutOfRangeError : Error {
  explicit IndexOutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct SizeMismatchError : Error {
  explicit SizeMismatchError(const std::string& msg) : Error(msg) {}
};

struct MalformedCycleError : Error {
  explicit MalformedCycleError(const std::string& msg) : Error(msg) {}
};

struct RepeatedElementError : Error {
  int label;
  explicit RepeatedElementError(int lab)
      : Error("label " + std::to_string(lab) + " repeated in cycle form"),
        label(lab) {}
};

struct LabelOutOfRangeError : Error {
  int label;
  explicit LabelOutOfRangeError(int lab)
      : Error("label " + std::to_string(lab) + " out of range"), label(lab) {}
};

struct NotAGyrogroupError : Error {
  explicit NotAGyrogroupError(const std::string& msg) : Error(msg) {}
};

struct OrderTooLargeError : Error {
  explicit OrderTooLargeError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  std::string file;
  int line;
  ParseError(const std::string& f, int ln, const std::string& reason)
      : Error(f + ":" + std::to_string(ln) + ": " + reason), file(f), line(ln) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace gyroloop
