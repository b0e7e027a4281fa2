#include "crn/parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "crn/errors.hpp"

namespace crn {

namespace {

enum class TokenKind { identifier, integer, plus, arrow, reversible_arrow, colon, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#' || c == ';') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({TokenKind::integer, std::string(line.substr(start, i - start)), start});
    } else if (is_ident_start(c)) {
      while (i < line.size() && is_ident_char(line[i])) ++i;
      tokens.push_back({TokenKind::identifier, std::string(line.substr(start, i - start)), start});
    } else if (c == '+') {
      tokens.push_back({TokenKind::plus, "+", start});
      ++i;
    } else if (c == ':') {
      tokens.push_back({TokenKind::colon, ":", start});
      ++i;
    } else if (line.substr(i, 2) == "->") {
      tokens.push_back({TokenKind::arrow, "->", start});
      i += 2;
    } else if (line.substr(i, 3) == "<->") {
      tokens.push_back({TokenKind::reversible_arrow, "<->", start});
      i += 3;
    } else {
      throw SyntaxError("unexpected character '" + std::string(1, c) + "' at column " +
                            std::to_string(start + 1),
                        line_no);
    }
  }
  tokens.push_back({TokenKind::end, "", line.size()});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  struct Parsed {
    std::optional<std::string> label;
    std::vector<NetworkBuilder::Term> reactant;
    std::vector<NetworkBuilder::Term> product;
    bool reversible = false;
  };

  Parsed parse() {
    Parsed out;
    if (peek().kind == TokenKind::identifier && peek(1).kind == TokenKind::colon) {
      out.label = next().text;
      next();
    }
    out.reactant = parse_complex();
    const Token& arrow = next();
    if (arrow.kind == TokenKind::reversible_arrow)
      out.reversible = true;
    else if (arrow.kind != TokenKind::arrow)
      fail("expected '->' or '<->'", arrow);
    out.product = parse_complex();
    if (peek().kind != TokenKind::end) fail("unexpected trailing input", peek());
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    throw SyntaxError(what + " at column " + std::to_string(at.column + 1), line_);
  }

  static bool ends_complex(TokenKind k) {
    return k == TokenKind::arrow || k == TokenKind::reversible_arrow || k == TokenKind::end;
  }

  std::int64_t parse_coefficient(const Token& t) const {
    std::int64_t value = 0;
    for (char c : t.text) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        fail("coefficient too large", t);
      value = value * 10 + (c - '0');
    }
    return value;
  }

  std::vector<NetworkBuilder::Term> parse_complex() {
    std::vector<NetworkBuilder::Term> terms;
    if (peek().kind == TokenKind::integer && peek().text.find_first_not_of('0') == std::string::npos &&
        ends_complex(peek(1).kind)) {
      next();
      return terms;
    }
    while (true) {
      std::int64_t coefficient = 1;
      if (peek().kind == TokenKind::integer) {
        const Token& t = next();
        coefficient = parse_coefficient(t);
        if (coefficient == 0) fail("stoichiometric coefficient must be positive", t);
      }
      const Token& name = next();
      if (name.kind != TokenKind::identifier) fail("expected a species name", name);
      terms.emplace_back(coefficient, name.text);
      if (peek().kind != TokenKind::plus) break;
      next();
    }
    return terms;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

Network parse_network(std::string_view text) {
  NetworkBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::vector<Token> tokens = tokenize(line, line_no);
    if (tokens.size() == 1) continue;

    LineParser::Parsed rx = LineParser(std::move(tokens), line_no).parse();
    if (rx.reversible) {
      std::optional<std::string> fwd, bwd;
      if (rx.label) {
        fwd = *rx.label + "f";
        bwd = *rx.label + "b";
      }
      builder.add_reaction(std::move(fwd), rx.reactant, rx.product, line_no);
      builder.add_reaction(std::move(bwd), rx.product, rx.reactant, line_no);
    } else {
      builder.add_reaction(std::move(rx.label), rx.reactant, rx.product, line_no);
    }
  }
  return std::move(builder).build();
}

Network parse_network_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string to_dsl(const Network& net) {
  std::string out;
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    if (const auto& label = net.reactions()[j].label) out += *label + ": ";
    out += net.reaction_string(j);
    out += '\n';
  }
  return out;
}

}  // namespace crn
