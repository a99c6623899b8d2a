#include "dgm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "dgm/error.hpp"

namespace dgm::dsl {

const GradedMap* Document::find_map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return &m.map;
  }
  return nullptr;
}

bool operator==(const Document& a, const Document& b) {
  return a.field == b.field && same_module(a.module, b.module) && a.maps == b.maps &&
         a.has_deformation == b.has_deformation && a.deformation == b.deformation;
}

namespace {

enum class Tok { Ident, Int, LBrace, RBrace, Semi, Colon, Comma, Plus, Minus, Star, Slash, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t pos = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      out.push_back({Tok::Ident, std::string(text.substr(pos, end - pos)), l, col});
      advance(end - pos);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end < text.size() && (std::isalpha(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        throw ParseError(Errc::SyntaxError, l, col, "malformed number");
      }
      out.push_back({Tok::Int, std::string(text.substr(pos, end - pos)), l, col});
      advance(end - pos);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ';': kind = Tok::Semi; break;
      case ':': kind = Tok::Colon; break;
      case ',': kind = Tok::Comma; break;
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
        } else {
          kind = Tok::Minus;
        }
        break;
      default:
        throw ParseError(Errc::SyntaxError, l, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(pos, len)), l, col});
    advance(len);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Document run() {
    Document doc;
    parse_field(doc);
    parse_module(doc);
    std::vector<std::pair<DeformationEntry, Token>> references;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && t.text == "map") {
        parse_map(doc);
      } else if (t.kind == Tok::Ident && t.text == "deformation") {
        if (doc.has_deformation) fail(Errc::DuplicateName, t, "second deformation block");
        parse_deformation(doc, references);
      } else {
        fail(Errc::SyntaxError, t, "expected 'map' or 'deformation', found " + describe(t));
      }
    }
    for (const auto& [entry, where] : references) {
      if (doc.find_map(entry.map) == nullptr) {
        fail(Errc::UnknownName, where, "deformation refers to undefined map '" + entry.map + "'");
      }
    }
    std::sort(doc.deformation.begin(), doc.deformation.end(),
              [](const auto& a, const auto& b) { return a.order < b.order; });
    return doc;
  }

 private:
  [[noreturn]] static void fail(Errc code, const Token& t, const std::string& what) {
    throw ParseError(code, t.line, t.column, what);
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return "'" + t.text + "'";
    return std::string(tok_name(t.kind));
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      fail(Errc::SyntaxError, t, "expected " + std::string(tok_name(kind)) + ", found " + describe(t));
    }
    return next();
  }
  const Token& expect_keyword(std::string_view word) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != word) {
      fail(Errc::SyntaxError, t, "expected '" + std::string(word) + "', found " + describe(t));
    }
    return next();
  }

  long long parse_int() {
    bool negative = accept(Tok::Minus);
    const Token& t = expect(Tok::Int);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || value > (1LL << 30)) fail(Errc::SyntaxError, t, "integer out of range");
    return negative ? -value : value;
  }

  void parse_field(Document& doc) {
    expect_keyword("field");
    const Token& t = expect(Tok::Ident);
    if (t.text == "Q") {
      doc.field = FieldSpec::rationals();
    } else if (t.text == "GF") {
      const Token& p = expect(Tok::Int);
      std::uint64_t modulus = 0;
      auto [ptr, ec] = std::from_chars(p.text.data(), p.text.data() + p.text.size(), modulus);
      if (ec != std::errc()) fail(Errc::SyntaxError, p, "modulus out of range");
      if (!is_prime(modulus)) fail(Errc::NonPrimeModulus, p, "modulus " + p.text + " is not prime");
      doc.field = FieldSpec::prime(modulus);
    } else {
      fail(Errc::SyntaxError, t, "expected 'Q' or 'GF', found " + describe(t));
    }
    accept(Tok::Semi);
  }

  void parse_module(Document& doc) {
    expect_keyword("module");
    const Token& name = expect(Tok::Ident);
    expect(Tok::LBrace);
    std::vector<BasisElement> basis;
    std::map<std::string, bool> seen;
    while (peek().kind == Tok::Ident && peek().text == "basis") {
      next();
      if (peek().kind != Tok::Semi) {
        do {
          const Token& id = expect(Tok::Ident);
          if (seen.count(id.text) != 0) fail(Errc::DuplicateName, id, "duplicate basis name '" + id.text + "'");
          seen[id.text] = true;
          expect(Tok::Colon);
          basis.push_back({id.text, static_cast<int>(parse_int())});
        } while (accept(Tok::Comma));
      }
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);
    doc.module = make_module(name.text, doc.field, std::move(basis));
  }

  Scalar parse_coefficient() {
    const Token& num = expect(Tok::Int);
    std::string text = num.text;
    if (accept(Tok::Slash)) text += "/" + expect(Tok::Int).text;
    try {
      return Scalar::parse(current_field_, text);
    } catch (const Error& e) {
      fail(e.code(), num, e.what());
    }
  }

  // [-] [scalar *] ident, with the separator sign already folded into `sign`.
  void parse_term(GradedMap& f, std::size_t src, bool negative) {
    if (accept(Tok::Minus)) negative = !negative;
    Scalar c = Scalar::one(current_field_);
    if (peek().kind == Tok::Int) {
      c = parse_coefficient();
      expect(Tok::Star);
    }
    if (negative) c = -c;
    const Token& dst = expect(Tok::Ident);
    const auto idx = module_->find(dst.text);
    if (!idx) fail(Errc::UnknownBasisName, dst, "unknown basis name '" + dst.text + "'");
    if (module_->degree(*idx) != module_->degree(src) + f.degree()) {
      fail(Errc::DegreeMismatch, dst,
           "|" + dst.text + "| = " + std::to_string(module_->degree(*idx)) + " but the map sends degree " +
               std::to_string(module_->degree(src)) + " to " +
               std::to_string(module_->degree(src) + f.degree()));
    }
    f.add_entry(*idx, src, c);
  }

  void parse_map(Document& doc) {
    module_ = doc.module;
    current_field_ = doc.field;
    expect_keyword("map");
    const Token& name = expect(Tok::Ident);
    if (doc.find_map(name.text) != nullptr) fail(Errc::DuplicateName, name, "duplicate map '" + name.text + "'");
    expect_keyword("degree");
    const int degree = static_cast<int>(parse_int());
    expect(Tok::LBrace);
    GradedMap f = GradedMap::zero(doc.module, doc.module, degree);
    std::map<std::size_t, bool> sources;
    while (peek().kind != Tok::RBrace) {
      const Token& src = expect(Tok::Ident);
      const auto idx = module_->find(src.text);
      if (!idx) fail(Errc::UnknownBasisName, src, "unknown basis name '" + src.text + "'");
      if (sources.count(*idx) != 0) fail(Errc::DuplicateName, src, "second entry for source '" + src.text + "'");
      sources[*idx] = true;
      expect(Tok::Arrow);
      parse_term(f, *idx, false);
      while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        const bool negative = next().kind == Tok::Minus;
        parse_term(f, *idx, negative);
      }
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);
    doc.maps.push_back({name.text, std::move(f)});
  }

  void parse_deformation(Document& doc, std::vector<std::pair<DeformationEntry, Token>>& references) {
    expect_keyword("deformation");
    doc.has_deformation = true;
    expect(Tok::LBrace);
    std::map<int, bool> orders;
    while (peek().kind != Tok::RBrace) {
      const Token& kw = expect_keyword("order");
      const long long k = parse_int();
      if (k < 1) fail(Errc::SyntaxError, kw, "deformation orders start at 1");
      if (orders.count(static_cast<int>(k)) != 0) fail(Errc::DuplicateName, kw, "order listed twice");
      orders[static_cast<int>(k)] = true;
      expect(Tok::Colon);
      const Token& ref = expect(Tok::Ident);
      expect(Tok::Semi);
      DeformationEntry entry{static_cast<int>(k), ref.text};
      doc.deformation.push_back(entry);
      references.emplace_back(entry, ref);
    }
    expect(Tok::RBrace);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ModulePtr module_;
  FieldSpec current_field_;
};

}  // namespace

Document parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Document& doc) {
  std::ostringstream os;
  if (doc.field.is_rationals()) {
    os << "field Q\n";
  } else {
    os << "field GF " << doc.field.modulus() << "\n";
  }
  os << "module " << doc.module->name() << " {\n";
  if (doc.module->dimension() > 0) {
    os << "  basis ";
    const auto& basis = doc.module->basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i > 0) os << ", ";
      os << basis[i].name << " : " << basis[i].degree;
    }
    os << ";\n";
  }
  os << "}\n";
  for (const auto& m : doc.maps) {
    os << "map " << m.name << " degree " << m.map.degree() << " {";
    if (m.map.is_zero()) {
      os << " }\n";
      continue;
    }
    os << "\n";
    for (const auto& [j, col] : m.map.columns()) {
      os << "  " << doc.module->element(j).name << " -> " << col.to_string() << ";\n";
    }
    os << "}\n";
  }
  if (doc.has_deformation) {
    os << "deformation {";
    if (doc.deformation.empty()) {
      os << " }\n";
    } else {
      os << "\n";
      for (const auto& e : doc.deformation) os << "  order " << e.order << " : " << e.map << ";\n";
      os << "}\n";
    }
  }
  return os.str();
}

LoadedComplex load_complex(const Document& doc) {
  const GradedMap* d = doc.find_map("d");
  if (d == nullptr) throw Error(Errc::MissingDifferential, "document has no map named 'd'");
  if (d->degree() == -1 && !is_differential(*d)) {
    throw Error(Errc::NotADifferential, "map 'd' does not square to zero");
  }
  DgModule complex(doc.module, *d);
  std::vector<GradedMap> lifts;
  for (const auto& e : doc.deformation) {
    const GradedMap* m = doc.find_map(e.map);
    if (m == nullptr) throw Error(Errc::UnknownName, "deformation refers to undefined map '" + e.map + "'");
    if (m->degree() != -1) {
      throw Error(Errc::DegreeMismatch, "deformation term '" + e.map + "' must have degree -1");
    }
    const auto k = static_cast<std::size_t>(e.order);
    if (lifts.size() < k) lifts.resize(k, GradedMap::zero(doc.module, doc.module, -1));
    lifts[k - 1] = *m;
  }
  return LoadedComplex{std::move(complex), doc.maps, std::move(lifts)};
}

Document make_document(const DgModule& v, const std::vector<GradedMap>& lifts) {
  Document doc;
  doc.field = v.field();
  doc.module = v.module();
  doc.maps.push_back({"d", v.differential()});
  doc.has_deformation = true;
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const std::string name = "d" + std::to_string(k + 1);
    doc.maps.push_back({name, lifts[k]});
    doc.deformation.push_back({static_cast<int>(k + 1), name});
  }
  return doc;
}

Document read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void write_file(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << print(doc);
  if (!out) throw Error(Errc::InvalidArgument, "write failed for " + path.string());
}

}  // namespace dgm::dsl
