#include "bdcurves/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bdcurves {

enum class Op { Number, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt };

struct Expr::Node {
  Op op = Op::Number;
  double number = 0.0;
  int index = -1;
  std::string name;
  Func func = Func::Sin;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

constexpr std::array<std::pair<std::string_view, Func>, 9> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"sinh", Func::Sinh},
    {"cosh", Func::Cosh},
    {"tanh", Func::Tanh},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
}};

std::string_view func_name(Func f) {
  for (const auto& [name, fn] : kFunctions) {
    if (fn == f) return name;
  }
  return "?";
}

NodePtr make_number(double v) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::Number;
  n->number = v;
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_neg(NodePtr a) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::Neg;
  n->a = std::move(a);
  return n;
}

NodePtr make_call(Func f, NodePtr a) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::Call;
  n->func = f;
  n->a = std::move(a);
  return n;
}

bool is_number(const NodePtr& n, double v) { return n->op == Op::Number && n->number == v; }

// Constructors that fold the trivial cases produced by differentiation.
NodePtr add(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0)) return b;
  if (is_number(b, 0.0)) return a;
  if (a->op == Op::Number && b->op == Op::Number) return make_number(a->number + b->number);
  return make_binary(Op::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (is_number(b, 0.0)) return a;
  if (is_number(a, 0.0)) return b->op == Op::Number ? make_number(-b->number) : make_neg(b);
  if (a->op == Op::Number && b->op == Op::Number) return make_number(a->number - b->number);
  return make_binary(Op::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0) || is_number(b, 0.0)) return make_number(0.0);
  if (is_number(a, 1.0)) return b;
  if (is_number(b, 1.0)) return a;
  if (a->op == Op::Number && b->op == Op::Number) return make_number(a->number * b->number);
  return make_binary(Op::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0)) return make_number(0.0);
  if (is_number(b, 1.0)) return a;
  return make_binary(Op::Div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
  if (a->op == Op::Number) return make_number(-a->number);
  if (a->op == Op::Neg) return a->a;
  return make_neg(std::move(a));
}

bool depends(const NodePtr& n, int index) {
  switch (n->op) {
    case Op::Number:
      return false;
    case Op::Param:
      return index < 0 || n->index == index;
    case Op::Neg:
    case Op::Call:
      return depends(n->a, index);
    default:
      return depends(n->a, index) || depends(n->b, index);
  }
}

NodePtr diff(const NodePtr& n, int index) {
  if (!depends(n, index)) return make_number(0.0);
  switch (n->op) {
    case Op::Number:
      return make_number(0.0);
    case Op::Param:
      return make_number(1.0);
    case Op::Neg:
      return neg(diff(n->a, index));
    case Op::Add:
      return add(diff(n->a, index), diff(n->b, index));
    case Op::Sub:
      return sub(diff(n->a, index), diff(n->b, index));
    case Op::Mul:
      return add(mul(diff(n->a, index), n->b), mul(n->a, diff(n->b, index)));
    case Op::Div:
      return div(sub(mul(diff(n->a, index), n->b), mul(n->a, diff(n->b, index))),
                 mul(n->b, n->b));
    case Op::Pow: {
      if (!depends(n->b, index)) {
        const NodePtr reduced = n->b->op == Op::Number
                                    ? make_number(n->b->number - 1.0)
                                    : sub(n->b, make_number(1.0));
        return mul(mul(n->b, make_binary(Op::Pow, n->a, reduced)), diff(n->a, index));
      }
      // d(a^b) = a^b (b' log a + b a' / a)
      const NodePtr lhs = mul(diff(n->b, index), make_call(Func::Log, n->a));
      const NodePtr rhs = div(mul(n->b, diff(n->a, index)), n->a);
      return mul(n, add(lhs, rhs));
    }
    case Op::Call: {
      const NodePtr& a = n->a;
      const NodePtr da = diff(a, index);
      NodePtr outer;
      switch (n->func) {
        case Func::Sin:
          outer = make_call(Func::Cos, a);
          break;
        case Func::Cos:
          outer = neg(make_call(Func::Sin, a));
          break;
        case Func::Tan: {
          const NodePtr c = make_call(Func::Cos, a);
          outer = div(make_number(1.0), mul(c, c));
          break;
        }
        case Func::Sinh:
          outer = make_call(Func::Cosh, a);
          break;
        case Func::Cosh:
          outer = make_call(Func::Sinh, a);
          break;
        case Func::Tanh: {
          const NodePtr c = make_call(Func::Cosh, a);
          outer = div(make_number(1.0), mul(c, c));
          break;
        }
        case Func::Exp:
          outer = n;
          break;
        case Func::Log:
          outer = div(make_number(1.0), a);
          break;
        case Func::Sqrt:
          outer = div(make_number(0.5), n);
          break;
      }
      return mul(outer, da);
    }
  }
  return make_number(0.0);
}

template <class S>
struct ConstantOf;

template <>
struct ConstantOf<double> {
  static double make(double v, std::span<const double>) { return v; }
};

template <>
struct ConstantOf<Jet> {
  static Jet make(double v, std::span<const Jet> args) {
    return Jet(v, args.empty() ? 0 : args[0].order());
  }
};

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

template <class S>
S eval(const Expr::Node& n, std::span<const S> args) {
  switch (n.op) {
    case Op::Number:
      return ConstantOf<S>::make(n.number, args);
    case Op::Param:
      if (n.index < 0 || static_cast<std::size_t>(n.index) >= args.size()) {
        throw std::out_of_range("expression parameter '" + n.name + "' has no binding");
      }
      return args[n.index];
    case Op::Neg:
      return -eval(*n.a, args);
    case Op::Add:
      return eval(*n.a, args) + eval(*n.b, args);
    case Op::Sub:
      return eval(*n.a, args) - eval(*n.b, args);
    case Op::Mul:
      return eval(*n.a, args) * eval(*n.b, args);
    case Op::Div:
      return eval(*n.a, args) / eval(*n.b, args);
    case Op::Pow:
      if (n.b->op == Op::Number) return pow(eval(*n.a, args), n.b->number);
      return pow(eval(*n.a, args), eval(*n.b, args));
    case Op::Call: {
      const S a = eval(*n.a, args);
      switch (n.func) {
        case Func::Sin: return sin(a);
        case Func::Cos: return cos(a);
        case Func::Tan: return tan(a);
        case Func::Sinh: return sinh(a);
        case Func::Cosh: return cosh(a);
        case Func::Tanh: return tanh(a);
        case Func::Exp: return exp(a);
        case Func::Log: return log(a);
        case Func::Sqrt: return sqrt(a);
      }
    }
  }
  return ConstantOf<S>::make(0.0, args);
}

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Expr::Node& n, std::string& out) {
  auto child = [&out](const Expr::Node& c, int min_prec) {
    const bool paren = precedence(c.op) < min_prec;
    if (paren) out += '(';
    print(c, out);
    if (paren) out += ')';
  };
  switch (n.op) {
    case Op::Number:
      if (n.number < 0) {
        out += '(' + format_double(n.number) + ')';
      } else {
        out += format_double(n.number);
      }
      return;
    case Op::Param:
      out += n.name;
      return;
    case Op::Neg:
      out += '-';
      child(*n.a, 4);
      return;
    case Op::Call:
      out += func_name(n.func);
      out += '(';
      print(*n.a, out);
      out += ')';
      return;
    case Op::Pow:
      child(*n.a, 5);
      out += '^';
      child(*n.b, 4);
      return;
    default: {
      const int p = precedence(n.op);
      child(*n.a, p);
      out += n.op == Op::Add ? " + " : n.op == Op::Sub ? " - " : n.op == Op::Mul ? "*" : "/";
      child(*n.b, p + 1);
      return;
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> params, const ConstantTable& constants)
      : text_(text), params_(params), constants_(constants) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in expression '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(Op::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(Op::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make_binary(Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;  // "2e" followed by something else: the e is a name
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make_number(v);
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string id(text_.substr(start, pos_ - start));
    for (const auto& [fname, fn] : kFunctions) {
      if (fname == id) {
        if (!accept('(')) fail("function '" + id + "' needs '('");
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make_call(fn, arg);
      }
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (params_[i] == id) {
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::Param;
        n->index = static_cast<int>(i);
        n->name = id;
        return n;
      }
    }
    if (auto it = constants_.find(id); it != constants_.end()) return make_number(it->second);
    pos_ = start;
    fail("unknown name '" + id + "'");
  }

  std::string_view text_;
  std::span<const std::string> params_;
  const ConstantTable& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstantTable builtin_constants() {
  return {{"pi", std::numbers::pi}, {"e", std::numbers::e}};
}

Expr::Expr() : node_(make_number(0.0)) {}

Expr Expr::constant(double v) { return Expr(make_number(v)); }

Expr Expr::parameter(int index, std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Param;
  n->index = index;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::parse(std::string_view text, std::span<const std::string> parameters,
                 const ConstantTable& constants) {
  return Expr(Parser(text, parameters, constants).parse());
}

double Expr::evaluate(std::span<const double> args) const { return eval<double>(*node_, args); }

Jet Expr::evaluate(std::span<const Jet> args) const { return eval<Jet>(*node_, args); }

Expr Expr::derivative(int index) const { return Expr(diff(node_, index)); }

bool Expr::is_constant() const { return !depends(node_, -1); }

bool Expr::depends_on(int index) const { return depends(node_, index); }

std::string Expr::to_string() const {
  std::string out;
  print(*node_, out);
  return out;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr(add(a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(sub(a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(mul(a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(div(a.node_, b.node_)); }
Expr operator-(const Expr& a) { return Expr(neg(a.node_)); }
Expr pow(const Expr& a, const Expr& b) { return Expr(make_binary(Op::Pow, a.node_, b.node_)); }

Expr apply(std::string_view func, const Expr& a) {
  for (const auto& [name, fn] : kFunctions) {
    if (name == func) return Expr(make_call(fn, a.node_));
  }
  throw std::invalid_argument("unknown function " + std::string(func));
}

double evaluate_constant(std::string_view text, const ConstantTable& constants) {
  return Expr::parse(text, {}, constants).evaluate(std::span<const double>{});
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace bdcurves
