// Text format for models and properties.
//
//   # comment
//   clocks: x, y
//   params: p in [0, 2]; q in [1, 3]
//   init: l0
//   loc l0 inv: x <= p & y <= 2
//   loc l1
//   edge l0 -> l1 on a when 1 <= x & x <= 2*p reset {x}
//
// Guard atoms compare one clock (coefficient +-1) against an integer linear
// expression over parameters; `when true` or omitting `when` means no guard.
//
// Properties:  EF {l1, l2}   AF {bad}   TP at p = 1, q = 2
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polyparam/pta.hpp"

namespace polyparam::pta {

struct ParseError : std::runtime_error {
  ParseError(size_t line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  size_t line;
};

PTA parse_model(const std::string& text);
PTA parse_model_file(const std::string& path);

// Canonical round-trippable rendering.
std::string print_model(const PTA& a);

enum class PropertyKind { Reach, Unavoid, TracePreserve };

struct Property {
  PropertyKind kind = PropertyKind::Reach;
  std::vector<size_t> goals;        // Reach / Unavoid
  std::vector<Rational> valuation;  // TracePreserve reference point
};

// Throws std::invalid_argument on malformed input or unknown names.
Property parse_property(const std::string& text, const PTA& a);

std::string print_property(const Property& p, const PTA& a);

}  // namespace polyparam::pta
