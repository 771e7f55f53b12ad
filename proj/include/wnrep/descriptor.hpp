#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wnrep/dmod.hpp"
#include "wnrep/glmod.hpp"

namespace wnrep {

/// Parses `factor ("*" factor)*` with factor O | OF | XL(r) | DL(r). Whitespace is ignored.
DModule parse_dmodule(std::string_view text);

/// Syntax tree of a gl-module descriptor.
struct GlExpr {
  enum class Kind { Wedge, Sym, Char, Dual, Tensor, Restrict };
  Kind kind = Kind::Wedge;
  long degree = 0;                        // Wedge, Sym
  std::vector<Scalar> values;             // Char
  DModule dmodule;                        // Restrict
  Scalar kappa;                           // Restrict
  std::vector<std::shared_ptr<const GlExpr>> args;  // Dual: 1, Tensor: 2

  /// Canonical text; parse_glexpr(print()) reproduces the tree.
  std::string print() const;
  friend bool operator==(const GlExpr& a, const GlExpr& b);
};

using GlExprPtr = std::shared_ptr<const GlExpr>;

GlExprPtr parse_glexpr(std::string_view text);

/// Materializes the expression over gl(n), or over the given diagonal blocks.
GlModulePtr build_glmodule(const GlExpr& e, int n, const std::vector<int>& blocks = {});

inline GlModulePtr parse_glmodule(std::string_view text, int n, const std::vector<int>& blocks = {}) {
  return build_glmodule(*parse_glexpr(text), n, blocks);
}

}  // namespace wnrep
