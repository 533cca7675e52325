#include "pinpoint/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "pinpoint/error.hpp"

namespace pinpoint {
namespace {

struct Token {
  enum class Kind { kOpen, kClose, kWord, kColon } kind;
  std::string text;
  std::size_t column;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

bool is_valid_name(const std::string& s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::Kind::kOpen, "(", i + 1});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::kClose, ")", i + 1});
      ++i;
    } else if (c == ':') {
      out.push_back({Token::Kind::kColon, ":", i + 1});
      ++i;
    } else if (is_name_char(c)) {
      std::size_t start = i;
      while (i < line.size() && is_name_char(line[i])) ++i;
      out.push_back({Token::Kind::kWord, std::string(line.substr(start, i - start)), start + 1});
    } else {
      throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : tokens_(std::move(tokens)), line_(line_no), end_column_(line_len + 1) {}

  bool at_end() const { return pos_ >= tokens_.size(); }

  bool peek_label() const {
    return tokens_.size() >= pos_ + 2 && tokens_[pos_].kind == Token::Kind::kWord &&
           tokens_[pos_ + 1].kind == Token::Kind::kColon;
  }

  std::string label() {
    const Token& t = tokens_[pos_];
    if (!is_valid_name(t.text)) fail(t.column, "invalid axiom id '" + t.text + "'");
    pos_ += 2;
    return t.text;
  }

  std::variant<Gci, RoleInclusion> axiom() {
    expect_open();
    const Token& kw = word("axiom keyword");
    if (kw.text == "sub") {
      Concept lhs = parse_concept_expr();
      Concept rhs = parse_concept_expr();
      expect_close();
      return Gci{std::move(lhs), std::move(rhs)};
    }
    if (kw.text == "rsub") {
      std::string sub = name();
      std::string sup = name();
      expect_close();
      return RoleInclusion{std::move(sub), std::move(sup)};
    }
    if (kw.text == "inst" || kw.text == "type" || kw.text == "rel") {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  std::to_string(line_) + ":" + std::to_string(kw.column) +
                      ": ABox assertion '" + kw.text + "' is not supported");
    }
    fail(kw.column, "unknown axiom form '" + kw.text + "'");
  }

  Concept parse_concept_expr() {
    if (at_end()) fail(end_column_, "expected concept");
    const Token& t = tokens_[pos_];
    if (t.kind == Token::Kind::kWord) {
      ++pos_;
      if (t.text == "Top") return Concept::top();
      if (t.text == "Bot") return Concept::bot();
      if (!is_valid_name(t.text)) fail(t.column, "invalid concept name '" + t.text + "'");
      return Concept::atom(t.text);
    }
    expect_open();
    const Token& kw = word("concept constructor");
    Concept out;
    if (kw.text == "not") {
      out = Concept::negation(parse_concept_expr());
    } else if (kw.text == "and" || kw.text == "or") {
      std::vector<Concept> cs;
      cs.push_back(parse_concept_expr());
      cs.push_back(parse_concept_expr());
      while (!at_end() && tokens_[pos_].kind != Token::Kind::kClose) cs.push_back(parse_concept_expr());
      out = kw.text == "and" ? Concept::conjunction(std::move(cs))
                             : Concept::disjunction(std::move(cs));
    } else if (kw.text == "some" || kw.text == "all") {
      std::string role = name();
      Concept filler = parse_concept_expr();
      out = kw.text == "some" ? Concept::some(std::move(role), std::move(filler))
                              : Concept::all(std::move(role), std::move(filler));
    } else {
      fail(kw.column, "unknown constructor '" + kw.text + "'");
    }
    expect_close();
    return out;
  }

  void expect_end() {
    if (!at_end()) fail(tokens_[pos_].column, "trailing input '" + tokens_[pos_].text + "'");
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  void expect_open() {
    if (at_end()) fail(end_column_, "expected '('");
    if (tokens_[pos_].kind != Token::Kind::kOpen) {
      fail(tokens_[pos_].column, "expected '(' but found '" + tokens_[pos_].text + "'");
    }
    ++pos_;
  }

  void expect_close() {
    if (at_end()) fail(end_column_, "expected ')'");
    if (tokens_[pos_].kind != Token::Kind::kClose) {
      fail(tokens_[pos_].column, "expected ')' but found '" + tokens_[pos_].text + "'");
    }
    ++pos_;
  }

  const Token& word(const char* what) {
    if (at_end()) fail(end_column_, std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::kWord) fail(t.column, std::string("expected ") + what);
    ++pos_;
    return t;
  }

  std::string name() {
    const Token& t = word("name");
    if (!is_valid_name(t.text) || t.text == "Top" || t.text == "Bot") {
      fail(t.column, "invalid name '" + t.text + "'");
    }
    return t.text;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_column_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Ontology o;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    LineParser p(std::move(tokens), line_no, line.size());
    std::string id;
    if (p.peek_label()) id = p.label();
    auto body = p.axiom();
    p.expect_end();
    if (id.empty()) id = "ax" + std::to_string(o.size() + 1);
    o.add(Axiom{std::move(id), std::move(body)});
  }
  return o;
}

Gci parse_gci(std::string_view text) {
  auto tokens = tokenize(text, 1);
  LineParser p(std::move(tokens), 1, text.size());
  auto body = p.axiom();
  p.expect_end();
  if (!std::holds_alternative<Gci>(body)) {
    throw ParseError(1, 1, "expected a concept inclusion '(sub C D)'");
  }
  return std::get<Gci>(std::move(body));
}

Concept parse_concept(std::string_view text) {
  LineParser p(tokenize(text, 1), 1, text.size());
  Concept c = p.parse_concept_expr();
  p.expect_end();
  return c;
}

std::string serialize_ontology(const Ontology& o) {
  std::string out;
  for (const auto& a : o) {
    if (!out.empty()) out += '\n';
    out += to_string(a);
  }
  return out;
}

Ontology load_ontology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ontology(ss.str());
}

}  // namespace pinpoint
