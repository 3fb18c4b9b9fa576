#include "cpd/dsl.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "cpd/counterexample.hpp"

namespace cpd {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
  Name,    // identifier or <...> composite label
  Colon,
  Semi,
  Comma,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Arrow,   // ->
  DArrow,  // =>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& source) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < source.size()) {
    char c = source[i];
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance(source[i]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      continue;
    }
    int tline = line, tcol = col;
    auto push = [&](Tok kind, std::string text) {
      out.push_back(Token{kind, std::move(text), tline, tcol});
    };
    if (name_start(c)) {
      std::string text;
      while (i < source.size() && name_char(source[i])) {
        text += source[i];
        advance(source[i]);
      }
      push(Tok::Name, std::move(text));
      continue;
    }
    if (c == '<') {
      // A composite label like <a1,b1> or <<a1,b1>,c>, lexed as one name.
      std::string text;
      int depth = 0;
      do {
        char d = source[i];
        if (d == '<') {
          ++depth;
        } else if (d == '>') {
          --depth;
        } else if (!(name_char(d) || d == ',')) {
          throw ParseError(line, col, std::string("unexpected character '") + d +
                                          "' inside a composite label");
        }
        text += d;
        advance(d);
        if (depth == 0) break;
      } while (i < source.size());
      if (depth != 0) {
        throw ParseError(tline, tcol, "unterminated composite label");
      }
      push(Tok::Name, std::move(text));
      continue;
    }
    switch (c) {
      case ':': advance(c); push(Tok::Colon, ":"); continue;
      case ';': advance(c); push(Tok::Semi, ";"); continue;
      case ',': advance(c); push(Tok::Comma, ","); continue;
      case '{': advance(c); push(Tok::LBrace, "{"); continue;
      case '}': advance(c); push(Tok::RBrace, "}"); continue;
      case '(': advance(c); push(Tok::LParen, "("); continue;
      case ')': advance(c); push(Tok::RParen, ")"); continue;
      case '-':
        advance(c);
        if (i < source.size() && source[i] == '>') {
          advance('>');
          push(Tok::Arrow, "->");
          continue;
        }
        throw ParseError(tline, tcol, "expected '->'");
      case '=':
        advance(c);
        if (i < source.size() && source[i] == '>') {
          advance('>');
          push(Tok::DArrow, "=>");
          continue;
        }
        throw ParseError(tline, tcol, "expected '=>'");
      default:
        throw ParseError(tline, tcol,
                         std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

// A boundary path as written: either id(vertex) or a nonempty edge sequence
// whose start vertex is resolved against the skeleton later.
struct PathExpr {
  bool is_id = false;
  std::string vertex;  // when is_id
  std::vector<std::string> edges;
  int line = 0, col = 0;
};

Path resolve_path(const PathExpr& p, const Graph& skeleton) {
  if (p.is_id) return identity_path(p.vertex);
  const std::string& first = p.edges.front();
  if (!skeleton.edges.contains(first)) {
    throw ParseError(p.line, p.col, "unknown edge '" + first + "'");
  }
  return Path{skeleton.source(first), p.edges};
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const DslDocument* fallback)
      : toks_(std::move(tokens)), fallback_(fallback) {}

  DslDocument parse_document() {
    while (!at(Tok::End)) {
      const Token& t = peek();
      if (t.kind != Tok::Name) {
        fail(t, "expected a definition (computad2, com3, or morphism2)");
      }
      if (t.text == "computad2") {
        parse_computad2();
      } else if (t.text == "com3") {
        parse_com3();
      } else if (t.text == "morphism2") {
        parse_morphism2();
      } else {
        fail(t, "expected a definition (computad2, com3, or morphism2)");
      }
    }
    return std::move(doc_);
  }

  TermPtr parse_standalone_term(const Computad2& K) {
    TermPtr t = parse_cell(K.skeleton);
    expect(Tok::End);
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const DslDocument* fallback_;
  DslDocument doc_;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + ", got " + got);
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) fail(peek(), std::string("expected ") + token_name(kind));
    return take();
  }

  std::string expect_name() { return expect(Tok::Name).text; }

  bool at_keyword(const char* kw) const {
    return at(Tok::Name) && peek().text == kw;
  }

  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(peek(), std::string("expected '") + kw + "'");
    take();
  }

  void register_name(const Token& t) {
    if (doc_.has(t.text)) {
      throw ParseError(t.line, t.col, "duplicate definition of '" + t.text + "'");
    }
    doc_.order.push_back(t.text);
  }

  const Computad2& resolve_computad(const Token& name) const {
    if (const Computad2* k = doc_.find_computad(name.text)) return *k;
    if (fallback_) {
      if (const Computad2* k = fallback_->find_computad(name.text)) return *k;
    }
    throw ParseError(name.line, name.col,
                     "unknown computad '" + name.text + "'");
  }

  // path := id ( vertex ) | edge+
  PathExpr parse_path() {
    PathExpr p;
    const Token& first = peek();
    p.line = first.line;
    p.col = first.col;
    if (at_keyword("id")) {
      take();
      expect(Tok::LParen);
      p.is_id = true;
      p.vertex = expect_name();
      expect(Tok::RParen);
      return p;
    }
    while (at(Tok::Name)) p.edges.push_back(take().text);
    if (p.edges.empty()) fail(peek(), "expected a path");
    return p;
  }

  // cell := id ( path ) | v ( cell , cell ) | h ( cell , cell ) | generator
  TermPtr parse_cell(const Graph& skeleton) {
    const Token& t = peek();
    if (t.kind != Tok::Name) fail(t, "expected a cell expression");
    if (t.text == "id") {
      take();
      expect(Tok::LParen);
      PathExpr p = parse_path();
      expect(Tok::RParen);
      return id1(resolve_path(p, skeleton));
    }
    if (t.text == "v" || t.text == "h") {
      bool vertical = t.text == "v";
      take();
      expect(Tok::LParen);
      TermPtr a = parse_cell(skeleton);
      expect(Tok::Comma);
      TermPtr b = parse_cell(skeleton);
      expect(Tok::RParen);
      return vertical ? vcomp(std::move(a), std::move(b))
                      : hcomp(std::move(a), std::move(b));
    }
    return gen(take().text);
  }

  void parse_computad2() {
    take();  // computad2
    const Token name = expect(Tok::Name);
    expect(Tok::LBrace);
    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<std::pair<std::string, std::pair<PathExpr, PathExpr>>> gens;
    std::unordered_set<std::string> seen_sections;
    while (!at(Tok::RBrace)) {
      const Token section = expect(Tok::Name);
      if (seen_sections.count(section.text)) {
        throw ParseError(section.line, section.col,
                         "duplicate section '" + section.text + "'");
      }
      seen_sections.insert(section.text);
      expect(Tok::Colon);
      if (section.text == "objects") {
        while (at(Tok::Name)) {
          vertices.push_back(take().text);
          if (!at(Tok::Comma)) break;
          take();
        }
      } else if (section.text == "edges") {
        while (at(Tok::Name)) {
          EdgeDecl e;
          e.name = take().text;
          expect(Tok::Colon);
          e.src = expect_name();
          expect(Tok::Arrow);
          e.tgt = expect_name();
          edges.push_back(std::move(e));
          if (!at(Tok::Comma)) break;
          take();
        }
      } else if (section.text == "gens2") {
        while (at(Tok::Name)) {
          std::string gname = take().text;
          expect(Tok::Colon);
          PathExpr src = parse_path();
          expect(Tok::DArrow);
          PathExpr tgt = parse_path();
          gens.emplace_back(std::move(gname), std::make_pair(std::move(src),
                                                             std::move(tgt)));
          if (!at(Tok::Comma)) break;
          take();
        }
      } else {
        fail(section, "expected a section (objects, edges, or gens2)");
      }
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);

    register_name(name);
    Graph skeleton = make_graph(vertices, edges);
    std::vector<Gen2Decl> gens2;
    for (auto& [gname, paths] : gens) {
      gens2.push_back(Gen2Decl{std::move(gname),
                               resolve_path(paths.first, skeleton),
                               resolve_path(paths.second, skeleton)});
    }
    doc_.computads.emplace(name.text,
                           make_computad2(std::move(vertices), std::move(edges),
                                          std::move(gens2)));
  }

  void parse_com3() {
    take();  // com3
    const Token name = expect(Tok::Name);
    expect_keyword("over");
    const Token base_name = expect(Tok::Name);
    const Computad2& base = resolve_computad(base_name);
    expect(Tok::LBrace);
    std::vector<Gen3Decl> gens3;
    if (!at(Tok::RBrace)) {
      expect_keyword("gens3");
      expect(Tok::Colon);
      while (at(Tok::Name)) {
        Gen3Decl g;
        g.name = take().text;
        expect(Tok::Colon);
        g.src = parse_cell(base.skeleton);
        expect(Tok::DArrow);
        g.tgt = parse_cell(base.skeleton);
        gens3.push_back(std::move(g));
        if (!at(Tok::Comma)) break;
        take();
      }
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);

    register_name(name);
    doc_.com3s.emplace(name.text,
                       Com3Entry{base_name.text, make_com3(base, std::move(gens3))});
  }

  void parse_morphism2() {
    take();  // morphism2
    const Token name = expect(Tok::Name);
    expect(Tok::Colon);
    const Token src_name = expect(Tok::Name);
    expect(Tok::Arrow);
    const Token dst_name = expect(Tok::Name);
    const Computad2& src = resolve_computad(src_name);
    const Computad2& dst = resolve_computad(dst_name);
    expect(Tok::LBrace);
    std::unordered_map<std::string, std::string> on_v, on_e, on_i;
    std::unordered_set<std::string> seen_sections;
    while (!at(Tok::RBrace)) {
      const Token section = expect(Tok::Name);
      if (seen_sections.count(section.text)) {
        throw ParseError(section.line, section.col,
                         "duplicate section '" + section.text + "'");
      }
      seen_sections.insert(section.text);
      expect(Tok::Colon);
      std::unordered_map<std::string, std::string>* target = nullptr;
      if (section.text == "vertices") {
        target = &on_v;
      } else if (section.text == "edges") {
        target = &on_e;
      } else if (section.text == "gens2") {
        target = &on_i;
      } else {
        fail(section, "expected a section (vertices, edges, or gens2)");
      }
      while (at(Tok::Name)) {
        const Token from = take();
        expect(Tok::Arrow);
        std::string to = expect_name();
        if (!target->emplace(from.text, std::move(to)).second) {
          throw ParseError(from.line, from.col,
                           "'" + from.text + "' is assigned twice");
        }
        if (!at(Tok::Comma)) break;
        take();
      }
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);

    register_name(name);
    doc_.morphisms.emplace(
        name.text,
        MorphismEntry{src_name.text, dst_name.text,
                      make_computad2_morphism(src, dst, std::move(on_v),
                                              std::move(on_e), std::move(on_i))});
  }
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

void print_computad2(std::ostream& out, const std::string& name,
                     const Computad2& K) {
  out << "computad2 " << name << " {\n";
  if (K.skeleton.vertices.size() > 0) {
    out << "  objects: ";
    bool first = true;
    for (const auto& v : K.skeleton.vertices) {
      if (!first) out << ", ";
      out << v;
      first = false;
    }
    out << ";\n";
  }
  if (K.skeleton.edges.size() > 0) {
    out << "  edges: ";
    bool first = true;
    for (const auto& e : K.skeleton.edges) {
      if (!first) out << ", ";
      out << e << ": " << K.skeleton.source(e) << " -> " << K.skeleton.target(e);
      first = false;
    }
    out << ";\n";
  }
  if (K.indets2.size() > 0) {
    out << "  gens2: ";
    bool first = true;
    for (const auto& g : K.indets2) {
      const Boundary2& b = K.boundary_of(g);
      if (!first) out << ", ";
      out << g << ": " << path_label(b.src1) << " => " << path_label(b.tgt1);
      first = false;
    }
    out << ";\n";
  }
  out << "}\n";
}

void print_map_section(std::ostream& out, const char* section,
                       const FinSet& domain,
                       const std::function<const std::string&(const std::string&)>& image) {
  if (domain.size() == 0) return;
  out << "  " << section << ": ";
  bool first = true;
  for (const auto& x : domain) {
    if (!first) out << ", ";
    out << x << " -> " << image(x);
    first = false;
  }
  out << ";\n";
}

}  // namespace

bool DslDocument::has(const std::string& name) const {
  return computads.count(name) || com3s.count(name) || morphisms.count(name);
}

const Computad2* DslDocument::find_computad(const std::string& name) const {
  auto it = computads.find(name);
  return it == computads.end() ? nullptr : &it->second;
}

const Com3Object* DslDocument::find_com3(const std::string& name) const {
  auto it = com3s.find(name);
  return it == com3s.end() ? nullptr : &it->second.object;
}

const Computad2Morphism* DslDocument::find_morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  return it == morphisms.end() ? nullptr : &it->second.morphism;
}

DslDocument parse_dsl(const std::string& source, const DslDocument* fallback) {
  Parser parser(lex(source), fallback);
  return parser.parse_document();
}

DslDocument parse_dsl_file(const std::string& path, const DslDocument* fallback) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dsl(buffer.str(), fallback);
}

const DslDocument& builtin_document() {
  static const DslDocument doc = [] {
    PaperScene scene = build_paper_objects();
    DslDocument d;
    d.order = {"paper_A", "paper_B", "paper_C", "paper_alpha", "paper_beta"};
    d.computads.emplace("paper_A", scene.A);
    d.computads.emplace("paper_B", scene.B);
    d.computads.emplace("paper_C", scene.C);
    d.morphisms.emplace("paper_alpha",
                        MorphismEntry{"paper_A", "paper_C", scene.alpha});
    d.morphisms.emplace("paper_beta",
                        MorphismEntry{"paper_B", "paper_C", scene.beta});
    return d;
  }();
  return doc;
}

DslDocument load_documents(const std::vector<std::string>& paths) {
  DslDocument env = builtin_document();
  std::unordered_set<std::string> user_defined;
  for (const auto& path : paths) {
    DslDocument parsed = parse_dsl_file(path, &env);
    for (const auto& name : parsed.order) {
      if (user_defined.count(name)) {
        throw ValidationError("'" + name + "' is defined in more than one file");
      }
      user_defined.insert(name);
      // A user definition replaces a built-in of the same name.
      if (env.has(name)) {
        env.computads.erase(name);
        env.com3s.erase(name);
        env.morphisms.erase(name);
        std::erase(env.order, name);
      }
      env.order.push_back(name);
      if (const Computad2* k = parsed.find_computad(name)) {
        env.computads.emplace(name, *k);
      } else if (auto it = parsed.com3s.find(name); it != parsed.com3s.end()) {
        env.com3s.emplace(name, it->second);
      } else if (auto im = parsed.morphisms.find(name); im != parsed.morphisms.end()) {
        env.morphisms.emplace(name, im->second);
      }
    }
  }
  return env;
}

std::string print_dsl(const DslDocument& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& name : doc.order) {
    if (!first) out << '\n';
    first = false;
    if (const Computad2* K = doc.find_computad(name)) {
      print_computad2(out, name, *K);
    } else if (auto ic = doc.com3s.find(name); ic != doc.com3s.end()) {
      const Com3Object& M = ic->second.object;
      out << "com3 " << name << " over " << ic->second.base_name << " {\n";
      if (M.indets3.size() > 0) {
        out << "  gens3: ";
        bool first_gen = true;
        for (const auto& g : M.indets3) {
          const ParallelPair2& b = M.boundary_of(g);
          if (!first_gen) out << ", ";
          out << g << ": " << term_to_string(b.first.expansion()) << " => "
              << term_to_string(b.second.expansion());
          first_gen = false;
        }
        out << ";\n";
      }
      out << "}\n";
    } else if (auto im = doc.morphisms.find(name); im != doc.morphisms.end()) {
      const Computad2Morphism& f = im->second.morphism;
      out << "morphism2 " << name << " : " << im->second.src_name << " -> "
          << im->second.dst_name << " {\n";
      print_map_section(out, "vertices", f.src.skeleton.vertices,
                        [&](const std::string& v) -> const std::string& {
                          return f.vertex_image(v);
                        });
      print_map_section(out, "edges", f.src.skeleton.edges,
                        [&](const std::string& e) -> const std::string& {
                          return f.edge_image(e);
                        });
      print_map_section(out, "gens2", f.src.indets2,
                        [&](const std::string& g) -> const std::string& {
                          return f.indet_image(g);
                        });
      out << "}\n";
    }
  }
  return out.str();
}

TermPtr parse_cell_term(const std::string& source, const Computad2& K) {
  Parser parser(lex(source), nullptr);
  return parser.parse_standalone_term(K);
}

bool documents_equal(const DslDocument& a, const DslDocument& b) {
  if (a.computads.size() != b.computads.size()) return false;
  if (a.com3s.size() != b.com3s.size()) return false;
  if (a.morphisms.size() != b.morphisms.size()) return false;
  for (const auto& [name, K] : a.computads) {
    const Computad2* other = b.find_computad(name);
    if (!other || !same_presentation(K, *other)) return false;
  }
  for (const auto& [name, entry] : a.com3s) {
    const Com3Object* other = b.find_com3(name);
    if (!other || !same_presentation(entry.object, *other)) return false;
  }
  for (const auto& [name, entry] : a.morphisms) {
    const Computad2Morphism* other = b.find_morphism(name);
    if (!other || !(entry.morphism == *other)) return false;
  }
  return true;
}

}  // namespace cpd
