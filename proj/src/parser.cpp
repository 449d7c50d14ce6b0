#include <cctype>
#include <optional>
#include <string>

#include "mvmodal/formula.hpp"

namespace mvmodal {
namespace {

enum class Tok {
  End,
  Ident,
  Int,
  LBrack,
  RBrack,
  Slash,
  LParen,
  RParen,
  Comma,
  Bang,
  Arrow,     // ->
  DArrow,    // <->
  Or,        // \/
  SOr,       // |+|
  And,       // /\ .
  SAnd,      // &
  Comp,      // <|
  CompP,     // <|p
  CompN,     // <|n
  Ge,
  Le,
  Gt,
  Lt,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '@' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto emit = [&](Tok t, std::size_t len) {
      out.push_back({t, std::string(s.substr(start, len)), start});
      i += len;
    };
    if (starts("<->")) {
      emit(Tok::DArrow, 3);
    } else if (starts("<|")) {
      // <|p and <|n are sugar tokens only when not followed by an identifier character.
      bool suffix = i + 2 < s.size() && (s[i + 2] == 'p' || s[i + 2] == 'n') &&
                    (i + 3 >= s.size() || !ident_char(s[i + 3]));
      if (suffix) {
        emit(s[i + 2] == 'p' ? Tok::CompP : Tok::CompN, 3);
      } else {
        emit(Tok::Comp, 2);
      }
    } else if (starts("->")) {
      emit(Tok::Arrow, 2);
    } else if (starts("\\/")) {
      emit(Tok::Or, 2);
    } else if (starts("/\\")) {
      emit(Tok::And, 2);
    } else if (starts("|+|")) {
      emit(Tok::SOr, 3);
    } else if (starts(">=")) {
      emit(Tok::Ge, 2);
    } else if (starts("<=")) {
      emit(Tok::Le, 2);
    } else {
      switch (c) {
        case '[':
          emit(Tok::LBrack, 1);
          break;
        case ']':
          emit(Tok::RBrack, 1);
          break;
        case '/':
          emit(Tok::Slash, 1);
          break;
        case '(':
          emit(Tok::LParen, 1);
          break;
        case ')':
          emit(Tok::RParen, 1);
          break;
        case ',':
          emit(Tok::Comma, 1);
          break;
        case '!':
          emit(Tok::Bang, 1);
          break;
        case '&':
          emit(Tok::SAnd, 1);
          break;
        case '>':
          emit(Tok::Gt, 1);
          break;
        case '<':
          emit(Tok::Lt, 1);
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Resolution r, const ParseOptions& opts)
      : toks_(tokenize(text)), res_(r), opts_(opts) {}

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
  void expect(Tok t, const char* what) {
    if (!accept(t)) fail(std::string("expected ") + what);
  }

  Formula formula() {
    Formula a = iff();
    if (accept(Tok::Comp)) return Formula::comp(a, iff());
    if (accept(Tok::CompP)) return Formula::comp_p(a, iff(), opts_.reserved);
    if (accept(Tok::CompN)) return Formula::ncomp(a, iff(), opts_.reserved);
    return a;
  }

  Formula iff() {
    Formula a = impf();
    while (accept(Tok::DArrow)) a = Formula::iff(a, impf());
    return a;
  }

  Formula impf() {
    Formula a = orf();
    if (accept(Tok::Arrow)) return Formula::imp(a, impf());
    return a;
  }

  Formula orf() {
    Formula a = andf();
    while (true) {
      if (accept(Tok::Or)) {
        a = Formula::max(a, andf());
      } else if (accept(Tok::SOr)) {
        a = Formula::sdisj(a, andf());
      } else {
        return a;
      }
    }
  }

  Formula andf() {
    Formula a = unary();
    while (true) {
      if (accept(Tok::And)) {
        a = Formula::min(a, unary());
      } else if (accept(Tok::SAnd)) {
        a = Formula::sconj(a, unary());
      } else {
        return a;
      }
    }
  }

  int integer() {
    if (peek().kind != Tok::Int) fail("expected integer");
    std::size_t at = peek().pos;
    const std::string& t = next().text;
    if (t.size() > 6) throw ParseError("integer too large", at);
    return std::stoi(t);
  }

  Formula coefficient() {
    std::optional<Op> rel;
    if (accept(Tok::Ge)) {
      rel = Op::CoefGe;
    } else if (accept(Tok::Le)) {
      rel = Op::CoefLe;
    } else if (accept(Tok::Gt)) {
      rel = Op::CoefGt;
    } else if (accept(Tok::Lt)) {
      rel = Op::CoefLt;
    }
    std::size_t at = peek().pos;
    int k = integer();
    expect(Tok::Slash, "'/'");
    int d = integer();
    if (d != res_.denominator()) {
      throw ParseError("coefficient denominator " + std::to_string(d) + " must be " +
                           std::to_string(res_.denominator()),
                       at);
    }
    if (k > d) throw ParseError("coefficient " + std::to_string(k) + "/" + std::to_string(d) + " exceeds 1", at);
    expect(Tok::RBrack, "']'");
    TruthValue v(res_, k);
    Formula a = unary();
    return rel ? Formula::coef_rel(*rel, v, a) : Formula::coef(v, a);
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::neg(unary());
    if (accept(Tok::LBrack)) return coefficient();
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind != Tok::Ident) fail(peek().kind == Tok::End ? "unexpected end of input" : "unexpected '" + peek().text + "'");
    std::string word = next().text;
    if (word == "box") return Formula::box(unary());
    if (word == "dia") return Formula::dia(unary());
    if (word == "box_p") return Formula::box_p(unary(), opts_.reserved);
    if (word == "dia_p") return Formula::dia_p(unary(), opts_.reserved);
    if (word == "top") return Formula::top();
    if (word == "bot") return Formula::bot();
    if (word == "dienes" || word == "goedel") {
      expect(Tok::LParen, "'('");
      Formula a = formula();
      expect(Tok::Comma, "','");
      Formula b = formula();
      expect(Tok::RParen, "')'");
      return word == "dienes" ? Formula::dienes(a, b) : Formula::goedel(a, b, res_);
    }
    if (word == "sum" || word == "prod") {
      expect(Tok::LParen, "'('");
      std::size_t at = peek().pos;
      int k = integer();
      if (k < 1) throw ParseError("repetition count must be positive", at);
      expect(Tok::Comma, "','");
      Formula a = formula();
      expect(Tok::RParen, "')'");
      return word == "sum" ? Formula::sum(k, a) : Formula::prod(k, a);
    }
    return Formula::atom(word);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Resolution res_;
  const ParseOptions& opts_;
};

}  // namespace

Formula parse(std::string_view text, Resolution r, const ParseOptions& opts) {
  return Parser(text, r, opts).run();
}

}  // namespace mvmodal
