#include "stpaw/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace stpaw {
namespace {

struct Token {
  enum class Kind : std::uint8_t {
    Word,
    String,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
  };
  Kind kind = Kind::Word;
  std::string text;  // decoded content for strings
  int line = 1;
  int scol = 1;
  int ecol = 1;
};

struct ParseError {
  std::string code;
  std::string message;
  SourceSpan span;
};

SourceSpan token_span(const std::string& file, const Token& token) {
  return SourceSpan{file, token.line, token.scol, token.line, token.ecol};
}

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c == '.';
}

// Lexes one line. Throws ParseError (code P001) on lexical problems.
std::vector<Token> lex_line(std::string_view line, int line_no,
                            const std::string& file) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') break;
    const int scol = static_cast<int>(i) + 1;
    if (c == '"') {
      std::string text;
      std::size_t j = i + 1;
      while (j < line.size() && line[j] != '"') {
        if (line[j] == '\\') {
          if (j + 1 >= line.size() ||
              (line[j + 1] != '"' && line[j + 1] != '\\')) {
            throw ParseError{"P001", "invalid escape sequence in string",
                             SourceSpan{file, line_no, static_cast<int>(j) + 1,
                                        line_no, static_cast<int>(j) + 2}};
          }
          text.push_back(line[j + 1]);
          j += 2;
          continue;
        }
        text.push_back(line[j]);
        ++j;
      }
      if (j >= line.size()) {
        throw ParseError{"P001", "unterminated string literal",
                         SourceSpan{file, line_no, scol, line_no,
                                    static_cast<int>(line.size())}};
      }
      tokens.push_back(Token{Token::Kind::String, std::move(text), line_no, scol,
                             static_cast<int>(j) + 1});
      i = j + 1;
      continue;
    }
    const auto punct = [&](Token::Kind kind) {
      tokens.push_back(Token{kind, std::string(1, line[i]), line_no, scol, scol});
      ++i;
    };
    switch (c) {
      case '[': punct(Token::Kind::LBracket); continue;
      case ']': punct(Token::Kind::RBracket); continue;
      case '{': punct(Token::Kind::LBrace); continue;
      case '}': punct(Token::Kind::RBrace); continue;
      case ',': punct(Token::Kind::Comma); continue;
      case ';': punct(Token::Kind::Semicolon); continue;
      default: break;
    }
    if (!is_word_char(c)) {
      throw ParseError{
          "P001",
          "unexpected character '" + std::string(1, line[i]) + "'",
          SourceSpan{file, line_no, scol, line_no, scol}};
    }
    std::size_t j = i;
    while (j < line.size() && is_word_char(static_cast<unsigned char>(line[j])))
      ++j;
    tokens.push_back(Token{Token::Kind::Word, std::string(line.substr(i, j - i)),
                           line_no, scol, static_cast<int>(j)});
    i = j;
  }
  // A trailing semicolon terminates the statement; anything after it is
  // a second statement on one line, which the grammar does not allow.
  if (!tokens.empty() && tokens.back().kind == Token::Kind::Semicolon)
    tokens.pop_back();
  for (const Token& token : tokens) {
    if (token.kind == Token::Kind::Semicolon) {
      throw ParseError{"P001", "';' before end of statement",
                       token_span(file, token)};
    }
  }
  return tokens;
}

// Cursor over one statement's tokens; all expect_* throw ParseError P005.
class Cursor {
 public:
  Cursor(const std::vector<Token>& tokens, const std::string& file)
      : tokens_(tokens), file_(file) {}

  bool at_end() const { return index_ >= tokens_.size(); }

  const Token& peek() const { return tokens_[index_]; }

  bool peek_keyword(std::string_view keyword) const {
    return !at_end() && peek().kind == Token::Kind::Word && peek().text == keyword;
  }

  const Token& next(std::string_view wanted) {
    if (at_end()) {
      const Token& last = tokens_.back();
      throw ParseError{"P005",
                       "expected " + std::string(wanted) + " after '" +
                           last.text + "'",
                       SourceSpan{file_, last.line, last.ecol, last.line,
                                  last.ecol}};
    }
    return tokens_[index_++];
  }

  const Token& expect_word(std::string_view wanted) {
    const Token& token = next(wanted);
    if (token.kind != Token::Kind::Word) {
      throw ParseError{"P005", "expected " + std::string(wanted),
                       token_span(file_, token)};
    }
    return token;
  }

  void expect_keyword(std::string_view keyword) {
    const Token& token = next("'" + std::string(keyword) + "'");
    if (token.kind != Token::Kind::Word || token.text != keyword) {
      throw ParseError{"P005", "expected '" + std::string(keyword) + "'",
                       token_span(file_, token)};
    }
  }

  const Token& expect_string(std::string_view wanted) {
    const Token& token = next(wanted);
    if (token.kind != Token::Kind::String) {
      throw ParseError{"P005", "expected " + std::string(wanted) + " in quotes",
                       token_span(file_, token)};
    }
    return token;
  }

  bool expect_bool(std::string_view attribute) {
    const Token& token = expect_word("'true' or 'false'");
    if (token.text == "true") return true;
    if (token.text == "false") return false;
    throw ParseError{"P005",
                     std::string(attribute) + " must be 'true' or 'false'",
                     token_span(file_, token)};
  }

  void expect_punct(Token::Kind kind, std::string_view what) {
    const Token& token = next("'" + std::string(what) + "'");
    if (token.kind != kind) {
      throw ParseError{"P005", "expected '" + std::string(what) + "'",
                       token_span(file_, token)};
    }
  }

  // Bracketed, comma-separated words. May be empty.
  std::vector<std::pair<std::string, SourceSpan>> word_list() {
    expect_punct(Token::Kind::LBracket, "[");
    std::vector<std::pair<std::string, SourceSpan>> items;
    if (!at_end() && peek().kind == Token::Kind::RBracket) {
      ++index_;
      return items;
    }
    while (true) {
      const Token& word = expect_word("identifier");
      items.emplace_back(word.text, token_span(file_, word));
      const Token& sep = next("',' or ']'");
      if (sep.kind == Token::Kind::RBracket) break;
      if (sep.kind != Token::Kind::Comma) {
        throw ParseError{"P005", "expected ',' or ']'", token_span(file_, sep)};
      }
    }
    return items;
  }

  // Braced, comma-separated words. May not be empty.
  std::vector<std::pair<std::string, SourceSpan>> word_set() {
    expect_punct(Token::Kind::LBrace, "{");
    std::vector<std::pair<std::string, SourceSpan>> items;
    while (true) {
      const Token& word = expect_word("model kind");
      items.emplace_back(word.text, token_span(file_, word));
      const Token& sep = next("',' or '}'");
      if (sep.kind == Token::Kind::RBrace) break;
      if (sep.kind != Token::Kind::Comma) {
        throw ParseError{"P005", "expected ',' or '}'", token_span(file_, sep)};
      }
    }
    return items;
  }

  void expect_end() {
    if (!at_end()) {
      throw ParseError{"P005", "unexpected token after statement",
                       token_span(file_, peek())};
    }
  }

 private:
  const std::vector<Token>& tokens_;
  const std::string& file_;
  std::size_t index_ = 0;
};

enum class RefKind : std::uint8_t {
  Loss,
  Hazard,
  Element,
  Link,
  Uca,
  AddressTarget,  // UCA or scenario
  Factor,
};

struct PendingRef {
  RefKind kind = RefKind::Loss;
  std::string id;
  SourceSpan span;
};

std::string_view ref_noun(RefKind kind) {
  switch (kind) {
    case RefKind::Loss: return "loss";
    case RefKind::Hazard: return "hazard";
    case RefKind::Element: return "element";
    case RefKind::Link: return "link";
    case RefKind::Uca: return "uca";
    case RefKind::AddressTarget: return "uca or scenario";
    case RefKind::Factor: return "causal factor";
  }
  return "entity";
}

std::string_view entity_noun(const EntityRef& ref) {
  struct Visitor {
    std::string_view operator()(const Loss*) const { return "loss"; }
    std::string_view operator()(const Hazard*) const { return "hazard"; }
    std::string_view operator()(const Element*) const { return "element"; }
    std::string_view operator()(const Link*) const { return "link"; }
    std::string_view operator()(const AdaptationDeclaration*) const {
      return "adaptation";
    }
    std::string_view operator()(const UnsafeControlAction*) const { return "uca"; }
    std::string_view operator()(const LossScenario*) const { return "scenario"; }
    std::string_view operator()(const Mitigation*) const { return "mitigation"; }
    std::string_view operator()(const FactorDeclaration*) const { return "factor"; }
  };
  return std::visit(Visitor{}, ref);
}

class Parser {
 public:
  Parser(std::string_view source, std::string file_name)
      : source_(source), file_(std::move(file_name)) {}

  ParseResult run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      ++line_no;
      std::size_t nl = source_.find('\n', pos);
      std::string_view line = nl == std::string_view::npos
                                  ? source_.substr(pos)
                                  : source_.substr(pos, nl - pos);
      parse_line(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!saw_project_) {
      error({"P005", "missing project declaration",
             SourceSpan{file_, 1, 1, 1, 1}});
    }
    resolve_references();
    ParseResult result;
    result.project = std::move(project_);
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  void parse_line(std::string_view line, int line_no) {
    try {
      const std::vector<Token> tokens = lex_line(line, line_no, file_);
      if (tokens.empty()) return;
      parse_statement(tokens);
    } catch (const ParseError& e) {
      error(e);
    }
  }

  void parse_statement(const std::vector<Token>& tokens) {
    const Token& head = tokens.front();
    if (head.kind != Token::Kind::Word) {
      throw ParseError{"P005", "expected statement keyword",
                       token_span(file_, head)};
    }
    Cursor cursor(tokens, file_);
    cursor.expect_word("statement keyword");  // consume head
    SourceSpan span = token_span(file_, head);
    span.end_line = tokens.back().line;
    span.end_col = tokens.back().ecol;

    if (head.text == "project") return parse_project(cursor, span);
    if (head.text == "loss") return parse_loss(cursor, span);
    if (head.text == "hazard") return parse_hazard(cursor, span);
    if (head.text == "factor") return parse_factor(cursor, span);
    if (head.text == "element") return parse_element(cursor, span);
    if (head.text == "link") return parse_link(cursor, span);
    if (head.text == "adaptation") return parse_adaptation(cursor, span);
    if (head.text == "uca") return parse_uca(cursor, span);
    if (head.text == "na") return parse_na(cursor, span);
    if (head.text == "scenario") return parse_scenario(cursor, span);
    if (head.text == "mitigation") return parse_mitigation(cursor, span);
    if (head.text == "obligation_response")
      return parse_obligation_response(cursor, span);
    throw ParseError{"P002", "unknown statement keyword '" + head.text + "'",
                     token_span(file_, head)};
  }

  void parse_project(Cursor& cursor, const SourceSpan& span) {
    const Token& name = cursor.expect_string("project name");
    cursor.expect_end();
    if (saw_project_) {
      throw ParseError{"P005", "duplicate project declaration", span};
    }
    saw_project_ = true;
    project_.name = name.text;
    project_.span = span;
  }

  // Declared id: syntax-checked here, uniqueness-checked against every
  // entity kind (one namespace). Returns false when the statement must be
  // dropped (duplicate).
  bool declare(const Token& id_token) {
    if (!is_valid_identifier(id_token.text)) {
      throw ParseError{"P005", "invalid identifier '" + id_token.text + "'",
                       token_span(file_, id_token)};
    }
    const auto [it, inserted] = declared_.emplace(id_token.text, id_token.line);
    if (!inserted) {
      error({"P003",
             "duplicate identifier '" + id_token.text + "'; first declared at line " +
                 std::to_string(it->second),
             token_span(file_, id_token)});
      return false;
    }
    return true;
  }

  void reference(RefKind kind, const Token& token) {
    pending_.push_back(PendingRef{kind, token.text, token_span(file_, token)});
  }

  void parse_loss(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("loss identifier");
    const Token& text = cursor.expect_string("loss description");
    cursor.expect_end();
    if (!declare(id)) return;
    project_.losses.push_back(Loss{id.text, text.text, span});
  }

  void parse_hazard(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("hazard identifier");
    const Token& text = cursor.expect_string("hazard description");
    cursor.expect_keyword("leads_to");
    const auto loss_refs = cursor.word_list();
    cursor.expect_end();
    if (!declare(id)) return;
    Hazard hazard{id.text, text.text, {}, span};
    for (const auto& [ref_id, ref_span] : loss_refs) {
      pending_.push_back(PendingRef{RefKind::Loss, ref_id, ref_span});
      hazard.leads_to.push_back(ref_id);
    }
    project_.hazards.push_back(std::move(hazard));
  }

  void parse_factor(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("factor identifier");
    const Token& text = cursor.expect_string("factor description");
    cursor.expect_end();
    if (!declare(id)) return;
    project_.factor_extensions.push_back(FactorDeclaration{id.text, text.text, span});
  }

  void parse_element(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("element identifier");
    cursor.expect_keyword("role");
    const Token& role_token = cursor.expect_word("element role");
    const std::optional<ElementRole> role = role_from_keyword(role_token.text);
    if (!role) {
      throw ParseError{"P005", "unknown role '" + role_token.text + "'",
                       token_span(file_, role_token)};
    }
    cursor.expect_keyword("in");
    const Token& boundary_token = cursor.expect_word("boundary");
    const std::optional<Boundary> boundary =
        boundary_from_keyword(boundary_token.text);
    if (!boundary) {
      throw ParseError{"P005", "unknown boundary '" + boundary_token.text + "'",
                       token_span(file_, boundary_token)};
    }
    if (*boundary != boundary_for_role(*role)) {
      throw ParseError{
          "P005",
          "role " + std::string(to_keyword(*role)) + " belongs to the " +
              std::string(to_keyword(boundary_for_role(*role))) + " boundary",
          token_span(file_, boundary_token)};
    }
    cursor.expect_keyword("name");
    const Token& name = cursor.expect_string("element name");
    Element element{id.text, *role, *boundary, name.text, std::nullopt, span};
    if (cursor.peek_keyword("models")) {
      cursor.expect_keyword("models");
      if (*role != ElementRole::Knowledge) {
        throw ParseError{"P005",
                         "models clause is only valid on Knowledge elements",
                         SourceSpan{file_, span.end_line, span.end_col,
                                    span.end_line, span.end_col}};
      }
      KnowledgeModels models;
      for (auto& [kind, kind_span] : cursor.word_set()) {
        bool* flag = nullptr;
        if (kind == "managed_system") flag = &models.managed_system;
        else if (kind == "environment") flag = &models.environment;
        else if (kind == "goals") flag = &models.goals;
        else if (kind == "working") flag = &models.working;
        if (flag == nullptr) {
          throw ParseError{"P005", "unknown model kind '" + kind + "'",
                           SourceSpan{kind_span}};
        }
        if (*flag) {
          throw ParseError{"P005", "duplicate model kind '" + kind + "'",
                           SourceSpan{kind_span}};
        }
        *flag = true;
      }
      element.models = models;
    }
    cursor.expect_end();
    if (!declare(id)) return;
    project_.elements.push_back(std::move(element));
  }

  void parse_link(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("link identifier");
    cursor.expect_keyword("kind");
    const Token& kind_token = cursor.expect_word("link kind");
    const std::optional<LinkKind> kind = link_kind_from_keyword(kind_token.text);
    if (!kind) {
      throw ParseError{"P005", "unknown link kind '" + kind_token.text + "'",
                       token_span(file_, kind_token)};
    }
    cursor.expect_keyword("from");
    const Token& source = cursor.expect_word("source element");
    cursor.expect_keyword("to");
    const Token& target = cursor.expect_word("target element");
    cursor.expect_keyword("label");
    const Token& label = cursor.expect_string("link label");
    cursor.expect_end();
    if (!declare(id)) return;
    reference(RefKind::Element, source);
    reference(RefKind::Element, target);
    project_.links.push_back(
        Link{id.text, *kind, source.text, target.text, label.text, span});
  }

  void parse_adaptation(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("adaptation identifier");
    cursor.expect_keyword("affects_safety");
    const bool affects_safety = cursor.expect_bool("affects_safety");
    cursor.expect_keyword("option_set");
    const Token& option_token = cursor.expect_word("option set");
    const std::optional<OptionSet> option_set =
        option_set_from_keyword(option_token.text);
    if (!option_set) {
      throw ParseError{"P005",
                       "option_set must be 'predetermined' or 'runtime'",
                       token_span(file_, option_token)};
    }
    cursor.expect_keyword("assurance");
    const Token& assurance_token = cursor.expect_word("assurance");
    const std::optional<Assurance> assurance =
        assurance_from_keyword(assurance_token.text);
    if (!assurance) {
      throw ParseError{
          "P005", "assurance must be 'unconditional', 'conditional' or 'runtime'",
          token_span(file_, assurance_token)};
    }
    cursor.expect_keyword("monotonic");
    const bool monotonic = cursor.expect_bool("monotonic");
    cursor.expect_keyword("declared_type");
    const Token& type_token = cursor.expect_word("adaptation type");
    const std::optional<AdaptationType> declared =
        adaptation_type_from_keyword(type_token.text);
    if (!declared) {
      throw ParseError{"P005",
                       "declared_type must be one of 0, I, II, IIb, III",
                       token_span(file_, type_token)};
    }
    cursor.expect_end();
    if (!declare(id)) return;
    project_.adaptations.push_back(AdaptationDeclaration{
        id.text, affects_safety, *option_set, *assurance, monotonic, *declared,
        span});
  }

  void parse_uca(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("uca identifier");
    cursor.expect_keyword("on");
    const Token& action = cursor.expect_word("action link");
    cursor.expect_keyword("phrase");
    const Token& phrase_token = cursor.expect_word("guide phrase");
    const std::optional<GuidePhrase> phrase =
        phrase_from_keyword(phrase_token.text);
    if (!phrase) {
      throw ParseError{"P005", "unknown guide phrase '" + phrase_token.text + "'",
                       token_span(file_, phrase_token)};
    }
    cursor.expect_keyword("context");
    const Token& context = cursor.expect_string("context");
    cursor.expect_keyword("hazards");
    const auto hazard_refs = cursor.word_list();
    if (hazard_refs.empty()) {
      throw ParseError{"P005", "uca must name at least one hazard", span};
    }
    cursor.expect_end();
    if (!declare(id)) return;
    reference(RefKind::Link, action);
    UnsafeControlAction uca{id.text, action.text, *phrase, context.text, {}, span};
    for (const auto& [ref_id, ref_span] : hazard_refs) {
      pending_.push_back(PendingRef{RefKind::Hazard, ref_id, ref_span});
      uca.hazards.push_back(ref_id);
    }
    project_.ucas.push_back(std::move(uca));
  }

  void parse_na(Cursor& cursor, const SourceSpan& span) {
    cursor.expect_keyword("on");
    const Token& action = cursor.expect_word("action link");
    cursor.expect_keyword("phrase");
    const Token& phrase_token = cursor.expect_word("guide phrase");
    const std::optional<GuidePhrase> phrase =
        phrase_from_keyword(phrase_token.text);
    if (!phrase) {
      throw ParseError{"P005", "unknown guide phrase '" + phrase_token.text + "'",
                       token_span(file_, phrase_token)};
    }
    cursor.expect_keyword("reason");
    const Token& reason = cursor.expect_string("reason");
    cursor.expect_end();
    reference(RefKind::Link, action);
    project_.na_records.push_back(
        NotApplicableRecord{action.text, *phrase, reason.text, span});
  }

  void parse_scenario(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("scenario identifier");
    cursor.expect_keyword("for");
    const Token& uca = cursor.expect_word("uca");
    cursor.expect_keyword("factors");
    const auto factor_refs = cursor.word_list();
    if (factor_refs.empty()) {
      throw ParseError{"P005", "scenario must name at least one causal factor",
                       span};
    }
    cursor.expect_keyword("text");
    const Token& text = cursor.expect_string("scenario text");
    cursor.expect_end();
    if (!declare(id)) return;
    reference(RefKind::Uca, uca);
    LossScenario scenario{id.text, uca.text, {}, text.text, span};
    for (const auto& [name, name_span] : factor_refs) {
      pending_.push_back(PendingRef{RefKind::Factor, name, name_span});
      scenario.factors.push_back(name);
    }
    project_.scenarios.push_back(std::move(scenario));
  }

  void parse_mitigation(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("mitigation identifier");
    const Token& text = cursor.expect_string("mitigation statement");
    cursor.expect_keyword("addresses");
    const auto targets = cursor.word_list();
    if (targets.empty()) {
      throw ParseError{"P005",
                       "mitigation must address at least one uca or scenario",
                       span};
    }
    cursor.expect_end();
    if (!declare(id)) return;
    Mitigation mitigation{id.text, text.text, {}, span};
    for (const auto& [ref_id, ref_span] : targets) {
      pending_.push_back(PendingRef{RefKind::AddressTarget, ref_id, ref_span});
      mitigation.addresses.push_back(ref_id);
    }
    project_.mitigations.push_back(std::move(mitigation));
  }

  void parse_obligation_response(Cursor& cursor, const SourceSpan& span) {
    const Token& id = cursor.expect_word("obligation identifier");
    cursor.expect_keyword("status");
    const Token& status_token = cursor.expect_word("status");
    ResponseStatus status = ResponseStatus::Addressed;
    if (status_token.text == "addressed") {
      status = ResponseStatus::Addressed;
    } else if (status_token.text == "na") {
      status = ResponseStatus::NotApplicable;
    } else {
      throw ParseError{"P005", "status must be 'addressed' or 'na'",
                       token_span(file_, status_token)};
    }
    ObligationResponse response{id.text, status, {}, "", span};
    if (cursor.peek_keyword("by")) {
      cursor.expect_keyword("by");
      for (auto& [ref_id, ref_span] : cursor.word_list()) {
        (void)ref_span;  // kind-checked during obligation coverage
        response.by.push_back(ref_id);
      }
    }
    if (cursor.peek_keyword("reason")) {
      cursor.expect_keyword("reason");
      response.reason = cursor.expect_string("reason").text;
    }
    cursor.expect_end();
    if (status == ResponseStatus::Addressed && response.by.empty()) {
      throw ParseError{
          "P005", "addressed obligation response requires a non-empty by list",
          span};
    }
    if (status == ResponseStatus::NotApplicable && response.reason.empty()) {
      throw ParseError{"P005", "na obligation response requires a reason", span};
    }
    project_.obligation_responses.push_back(std::move(response));
  }

  void resolve_references() {
    for (const PendingRef& ref : pending_) {
      if (ref.kind == RefKind::Factor) {
        if (!factor_known(project_, ref.id)) {
          error({"P004", "unknown causal factor '" + ref.id + "'", ref.span});
        }
        continue;
      }
      const std::optional<EntityRef> entity = resolve(project_, ref.id);
      if (!entity) {
        error({"P004",
               "unknown " + std::string(ref_noun(ref.kind)) + " '" + ref.id + "'",
               ref.span});
        continue;
      }
      const bool kind_ok = [&] {
        switch (ref.kind) {
          case RefKind::Loss:
            return std::holds_alternative<const Loss*>(*entity);
          case RefKind::Hazard:
            return std::holds_alternative<const Hazard*>(*entity);
          case RefKind::Element:
            return std::holds_alternative<const Element*>(*entity);
          case RefKind::Link:
            return std::holds_alternative<const Link*>(*entity);
          case RefKind::Uca:
            return std::holds_alternative<const UnsafeControlAction*>(*entity);
          case RefKind::AddressTarget:
            return std::holds_alternative<const UnsafeControlAction*>(*entity) ||
                   std::holds_alternative<const LossScenario*>(*entity);
          case RefKind::Factor:
            return true;
        }
        return false;
      }();
      if (!kind_ok) {
        error({"P004",
               "'" + ref.id + "' is a " + std::string(entity_noun(*entity)) +
                   ", expected a " + std::string(ref_noun(ref.kind)),
               ref.span});
      }
    }
  }

  void error(const ParseError& e) {
    diagnostics_.push_back(Diagnostic{Severity::Error, e.code, e.message, e.span});
  }

  std::string_view source_;
  std::string file_;
  Project project_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<PendingRef> pending_;
  std::map<std::string, int, std::less<>> declared_;  // id -> first line
  bool saw_project_ = false;
};

}  // namespace

ParseResult parse(std::string_view source, std::string file_name) {
  return Parser(source, std::move(file_name)).run();
}

ParseResult parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult result;
    result.diagnostics.push_back(Diagnostic{
        Severity::Error, "P001", "cannot open file '" + path + "'",
        SourceSpan{path, 1, 1, 1, 1}});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

}  // namespace stpaw
