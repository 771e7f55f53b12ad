#include "wnrep/descriptor.hpp"

#include <cctype>

#include "wnrep/errors.hpp"

namespace wnrep {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
      throw ParseError("empty descriptor", 0);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos_);
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
  }

  Scalar rational() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ > d;
    };
    if (!digits()) throw ParseError("malformed rational", start);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!digits()) throw ParseError("malformed rational", start);
    }
    try {
      return Scalar::parse(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw ParseError("malformed rational", start);
    }
  }

  long integer() {
    const std::size_t start = (skip(), pos_);
    Scalar r = rational();
    if (!r.is_integer() || r.sign() < 0) throw ParseError("expected a nonnegative integer", start);
    return r.to_long();
  }

  DFactor factor() {
    skip();
    const std::size_t start = pos_;
    for (auto [tok, kind] : {std::pair{"XL(", FactorKind::XL}, std::pair{"DL(", FactorKind::DL}}) {
      if (!accept(tok)) continue;
      const std::size_t at = (skip(), pos_);
      Scalar l = rational();
      if (l.is_integer()) throw ParseError("integral twist parameter", at);
      expect(")");
      return {kind, l};
    }
    if (accept("OF")) return DFactor::fpoly();
    if (accept("O")) return DFactor::poly();
    throw ParseError("unknown factor kind", start);
  }

  DModule dmodule() {
    std::vector<DFactor> fs{factor()};
    while (accept("*")) fs.push_back(factor());
    return DModule(std::move(fs));
  }

  GlExprPtr glterm() {
    skip();
    const std::size_t start = pos_;
    auto e = std::make_shared<GlExpr>();
    if (accept("wedge(")) {
      e->kind = GlExpr::Kind::Wedge;
      e->degree = integer();
    } else if (accept("sym(")) {
      e->kind = GlExpr::Kind::Sym;
      e->degree = integer();
    } else if (accept("char(")) {
      e->kind = GlExpr::Kind::Char;
      e->values.push_back(rational());
      while (accept(",")) e->values.push_back(rational());
    } else if (accept("dual(")) {
      e->kind = GlExpr::Kind::Dual;
      e->args.push_back(glmodule());
    } else if (accept("resD(")) {
      e->kind = GlExpr::Kind::Restrict;
      e->dmodule = dmodule();
      expect(";");
      e->kappa = rational();
    } else {
      throw ParseError("unknown gl-module term", start);
    }
    expect(")");
    return e;
  }

  GlExprPtr glmodule() {
    GlExprPtr left = glterm();
    while (accept("#")) {
      auto t = std::make_shared<GlExpr>();
      t->kind = GlExpr::Kind::Tensor;
      t->args = {left, glterm()};
      left = t;
    }
    return left;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DModule parse_dmodule(std::string_view text) {
  Parser p(text);
  DModule d = p.dmodule();
  p.finish();
  return d;
}

GlExprPtr parse_glexpr(std::string_view text) {
  Parser p(text);
  GlExprPtr e = p.glmodule();
  p.finish();
  return e;
}

std::string GlExpr::print() const {
  switch (kind) {
    case Kind::Wedge: return "wedge(" + std::to_string(degree) + ")";
    case Kind::Sym: return "sym(" + std::to_string(degree) + ")";
    case Kind::Char: {
      std::string s = "char(";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].str();
      return s + ")";
    }
    case Kind::Dual: return "dual(" + args.at(0)->print() + ")";
    case Kind::Tensor: return args.at(0)->print() + "#" + args.at(1)->print();
    case Kind::Restrict: return "resD(" + dmodule.descriptor() + ";" + kappa.str() + ")";
  }
  return {};
}

bool operator==(const GlExpr& a, const GlExpr& b) {
  if (a.kind != b.kind || a.degree != b.degree || a.values != b.values ||
      !(a.dmodule == b.dmodule) || a.kappa != b.kappa || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

GlModulePtr build_glmodule(const GlExpr& e, int n, const std::vector<int>& blocks) {
  if (n <= 0) throw DimensionError("gl-module rank must be positive");
  const bool single = blocks.empty() || (blocks.size() == 1 && blocks[0] == n);
  switch (e.kind) {
    case GlExpr::Kind::Wedge:
      if (!single) throw UnsupportedError("wedge over a block algebra");
      if (e.degree > n) throw RangeError("wedge degree exceeds rank");
      return wedge(n, static_cast<int>(e.degree));
    case GlExpr::Kind::Sym:
      if (!single) throw UnsupportedError("sym over a block algebra");
      return sym(n, static_cast<int>(e.degree));
    case GlExpr::Kind::Char: {
      std::vector<Scalar> c = e.values;
      if (c.size() == 1) c.assign(static_cast<std::size_t>(n), e.values[0]);
      if (static_cast<int>(c.size()) != n) throw DimensionError("char needs 1 or n values");
      return character(c, blocks);
    }
    case GlExpr::Kind::Dual: return dual_gl(*build_glmodule(*e.args.at(0), n, blocks));
    case GlExpr::Kind::Tensor:
      return tensor_gl(build_glmodule(*e.args.at(0), n, blocks), build_glmodule(*e.args.at(1), n, blocks));
    case GlExpr::Kind::Restrict:
      if (!single) throw UnsupportedError("restriction over a block algebra");
      if (e.dmodule.n() != n) throw DimensionError("resD module has the wrong number of factors");
      return restrict_kappa(e.dmodule, e.kappa);
  }
  throw InternalError("unknown gl expression kind");
}

}  // namespace wnrep
