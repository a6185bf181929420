#include "qcp/qasm.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcp/errors.hpp"

namespace qcp {
namespace {

enum class TokKind {
  identifier,
  number,
  string,
  symbol,  // single-char punctuation
  arrow,   // ->
  end,
};

struct Token {
  TokKind kind = TokKind::end;
  std::string text;
  double value = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokKind::end;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        consume();
      current_.kind = TokKind::identifier;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
        consume();
      current_.kind = TokKind::number;
      current_.text = text_.substr(start, pos_ - start);
      try {
        current_.value = std::stod(current_.text);
      } catch (const std::exception&) {
        throw ParseError("malformed number '" + current_.text + "'",
                         current_.line, current_.column);
      }
      return;
    }
    if (c == '"') {
      consume();
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') consume();
      if (pos_ >= text_.size())
        throw ParseError("unterminated string literal", current_.line,
                         current_.column);
      current_.kind = TokKind::string;
      current_.text = text_.substr(start, pos_ - start);
      consume();  // closing quote
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      consume();
      consume();
      current_.kind = TokKind::arrow;
      current_.text = "->";
      return;
    }
    current_.kind = TokKind::symbol;
    current_.text = std::string(1, c);
    consume();
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') consume();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        consume();
      } else {
        break;
      }
    }
  }

  void consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Circuit parse() {
    while (lex_.peek().kind != TokKind::end) statement();
    return Circuit(register_size_, std::move(gates_));
  }

 private:
  void statement() {
    Token t = lex_.peek();
    if (t.kind != TokKind::identifier)
      lex_.fail("expected statement, found '" + t.text + "'", t);
    if (t.text == "OPENQASM") {
      lex_.next();
      Token version = expect(TokKind::number, "version number");
      if (version.text.rfind("2", 0) != 0)
        lex_.fail("unsupported OPENQASM version " + version.text, version);
      expect_symbol(";");
    } else if (t.text == "include") {
      lex_.next();
      expect(TokKind::string, "include file name");
      expect_symbol(";");
    } else if (t.text == "qreg") {
      lex_.next();
      Token name = expect(TokKind::identifier, "register name");
      if (have_qreg_)
        lex_.fail("multiple quantum registers are not supported", name);
      expect_symbol("[");
      Token size = expect(TokKind::number, "register size");
      expect_symbol("]");
      expect_symbol(";");
      have_qreg_ = true;
      qreg_name_ = name.text;
      register_size_ = static_cast<int>(size.value);
      if (register_size_ < 0 ||
          size.value != std::floor(size.value))
        lex_.fail("invalid register size '" + size.text + "'", size);
    } else if (t.text == "creg") {
      lex_.next();
      expect(TokKind::identifier, "register name");
      expect_symbol("[");
      expect(TokKind::number, "register size");
      expect_symbol("]");
      expect_symbol(";");
    } else if (t.text == "barrier") {
      lex_.next();
      skip_to_semicolon();
    } else if (t.text == "measure") {
      lex_.next();
      skip_to_semicolon();
    } else if (gate_signature(t.text)) {
      gate_application();
    } else {
      lex_.fail("unsupported statement '" + t.text + "'", t);
    }
  }

  void gate_application() {
    Token name = lex_.next();
    GateSignature sig = *gate_signature(name.text);
    std::vector<double> params;
    if (lex_.peek().kind == TokKind::symbol && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().kind == TokKind::symbol && lex_.peek().text == ")")) {
        params.push_back(expression());
        while (lex_.peek().kind == TokKind::symbol && lex_.peek().text == ",") {
          lex_.next();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    if (static_cast<int>(params.size()) != sig.num_params)
      lex_.fail("gate '" + name.text + "' expects " +
                    std::to_string(sig.num_params) + " parameter(s), got " +
                    std::to_string(params.size()),
                name);

    std::vector<std::optional<int>> args;
    args.push_back(argument(name));
    while (lex_.peek().kind == TokKind::symbol && lex_.peek().text == ",") {
      lex_.next();
      args.push_back(argument(name));
    }
    expect_symbol(";");

    if (static_cast<int>(args.size()) != sig.arity)
      lex_.fail("gate '" + name.text + "' expects " + std::to_string(sig.arity) +
                    " qubit argument(s), got " + std::to_string(args.size()),
                name);

    bool broadcast = false;
    for (const auto& a : args) broadcast = broadcast || !a.has_value();
    if (!broadcast) {
      std::vector<int> qubits;
      for (const auto& a : args) qubits.push_back(*a);
      gates_.push_back(Gate{name.text, params, std::move(qubits)});
      return;
    }
    // Whole-register application; only meaningful for single-qubit gates.
    if (sig.arity != 1)
      lex_.fail("whole-register application of multi-qubit gate '" + name.text +
                    "' is not supported",
                name);
    for (int q = 0; q < register_size_; ++q)
      gates_.push_back(Gate{name.text, params, {q}});
  }

  /// q[i] -> index i; bare register name -> nullopt (broadcast).
  std::optional<int> argument(const Token& context) {
    Token name = expect(TokKind::identifier, "qubit argument");
    if (!have_qreg_)
      lex_.fail("gate application before qreg declaration", context);
    if (name.text != qreg_name_)
      lex_.fail("unknown register '" + name.text + "'", name);
    if (!(lex_.peek().kind == TokKind::symbol && lex_.peek().text == "["))
      return std::nullopt;
    lex_.next();
    Token index = expect(TokKind::number, "qubit index");
    expect_symbol("]");
    int q = static_cast<int>(index.value);
    if (q < 0 || q >= register_size_ || index.value != std::floor(index.value))
      lex_.fail("qubit index " + index.text + " out of range for register of size " +
                    std::to_string(register_size_),
                index);
    return q;
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double v = term();
    while (lex_.peek().kind == TokKind::symbol &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.next().text;
      double rhs = term();
      v = (op == "+") ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := factor (('*'|'/') factor)*
  double term() {
    double v = factor();
    while (lex_.peek().kind == TokKind::symbol &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      std::string op = lex_.next().text;
      double rhs = factor();
      v = (op == "*") ? v * rhs : v / rhs;
    }
    return v;
  }

  double factor() {
    Token t = lex_.peek();
    if (t.kind == TokKind::symbol && (t.text == "-" || t.text == "+")) {
      lex_.next();
      double v = factor();
      return t.text == "-" ? -v : v;
    }
    if (t.kind == TokKind::number) {
      lex_.next();
      return t.value;
    }
    if (t.kind == TokKind::identifier && t.text == "pi") {
      lex_.next();
      return std::numbers::pi;
    }
    if (t.kind == TokKind::symbol && t.text == "(") {
      lex_.next();
      double v = expression();
      expect_symbol(")");
      return v;
    }
    lex_.fail("expected parameter expression, found '" + t.text + "'", t);
  }

  Token expect(TokKind kind, const std::string& what) {
    Token t = lex_.peek();
    if (t.kind != kind) lex_.fail("expected " + what + ", found '" + t.text + "'", t);
    return lex_.next();
  }

  void expect_symbol(const std::string& sym) {
    Token t = lex_.peek();
    if (t.kind != TokKind::symbol || t.text != sym)
      lex_.fail("expected '" + sym + "', found '" + t.text + "'", t);
    lex_.next();
  }

  void skip_to_semicolon() {
    while (lex_.peek().kind != TokKind::end) {
      Token t = lex_.next();
      if (t.kind == TokKind::symbol && t.text == ";") return;
    }
    lex_.fail("unterminated statement", lex_.peek());
  }

  Lexer lex_;
  bool have_qreg_ = false;
  std::string qreg_name_;
  int register_size_ = 0;
  std::vector<Gate> gates_;
};

std::string format_param(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12f", value);
  return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (c.num_qubits() > 0) out << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    auto sig = gate_signature(g.name);
    if (!sig)
      throw std::invalid_argument("cannot emit unsupported gate '" + g.name + "'");
    out << g.name;
    if (!g.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i > 0) out << ",";
        out << format_param(g.params[i]);
      }
      out << ")";
    }
    out << " ";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) out << ",";
      out << "q[" << g.qubits[i] << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qcp
