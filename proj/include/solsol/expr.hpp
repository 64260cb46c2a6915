#pragma once

#include <stdexcept>
#include <string>

namespace solsol {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient expression over the grammar
//
//   expr     :=  ['-'] factor
//   factor   :=  number | root | number '*' root
//   root     :=  'sqrt' '(' number ')'
//   number   :=  integer [ '/' integer ] | decimal
//
// e.g. "2", "4/3", "sqrt(35/136)", "-sqrt(3)", "1/2*sqrt(3)", "0.25".
// The source string is kept so that exact table data survives a round trip;
// the value is evaluated to binary64 once at parse time.
class CoeffExpr {
 public:
  CoeffExpr() = default;

  static CoeffExpr parse(const std::string& text);
  static CoeffExpr from_value(double v);  // decimal form, round-trip exact

  double value() const { return value_; }
  const std::string& str() const { return text_; }

 private:
  std::string text_ = "0";
  double value_ = 0.0;
};

}  // namespace solsol
