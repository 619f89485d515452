#include "modgb_cli/problem.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace modgb::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Cursor over one line; columns are 1-based in errors.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a name");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  template <class T>
  T number() {
    const std::size_t col = pos_;
    std::string d = digits();
    T v{};
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || p != d.data() + d.size()) fail_at(col, "number out of range");
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    fail_at(pos_, msg);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
    throw ParseError(line_, offset_ + pos + 1, msg);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct Header {
  std::string name;
  std::string_view body;
  std::size_t line;
  std::size_t offset;
};

std::string_view strip_comment(std::string_view line) {
  auto h = line.find('#');
  return h == std::string_view::npos ? line : line.substr(0, h);
}

Field field_from(Cursor& c) {
  std::string name = c.identifier();
  if (name == "QQ") {
    if (!c.at_end()) c.fail("unexpected text after field");
    return Field::rationals();
  }
  if (name != "GF") c.fail_at(0, "unknown field '" + name + "' (use QQ or GF <prime>)");
  const bool paren = c.accept('(');
  const std::size_t col = c.pos();
  auto p = c.number<std::uint32_t>();
  if (paren) c.expect(')');
  if (!c.at_end()) c.fail("unexpected text after field");
  if (!is_prime(p)) c.fail_at(col, "field modulus " + std::to_string(p) + " is not prime");
  return Field::prime(p);
}

ModuleElement parse_element(Cursor& c, const FreeModule::Ptr& F,
                            const std::map<std::string, std::size_t>& vars,
                            const std::map<std::string, std::uint32_t>& basis) {
  const Field K = F->field();
  const std::size_t n = F->num_vars();
  std::vector<Term> terms;
  bool first = true;
  while (!c.at_end()) {
    bool negative = false;
    if (c.accept('-')) {
      negative = true;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = 1;
    if (c.at_digit()) {
      mpz_class num(c.digits());
      mpz_class den = 1;
      if (c.accept('/')) {
        const std::size_t col = c.pos();
        den = mpz_class(c.digits());
        if (den == 0) c.fail_at(col, "zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      if (!c.accept('*')) c.fail("a term must end with a basis name");
    }
    std::vector<Exponent> exps(n, 0);
    std::optional<std::uint32_t> position;
    while (true) {
      const std::size_t col = c.pos();
      std::string name = c.identifier();
      if (auto b = basis.find(name); b != basis.end()) {
        position = b->second;
        break;
      }
      auto v = vars.find(name);
      if (v == vars.end()) c.fail_at(col, "unknown name '" + name + "'");
      Exponent e = 1;
      if (c.accept('^')) e = c.number<Exponent>();
      if (exps[v->second] > UINT32_MAX - e) c.fail_at(col, "exponent overflow");
      exps[v->second] += e;
      if (!c.accept('*')) c.fail("a term must end with a basis name");
    }
    if (negative) coeff = -coeff;
    Scalar s;
    try {
      s = Scalar::from_rational(K, coeff);
    } catch (const InvalidInput& e) {
      c.fail(e.what());
    }
    terms.push_back(Term{std::move(s), {Monomial(std::move(exps)), *position}});
    const char next = c.peek();
    if (next != '\0' && next != '+' && next != '-') c.fail("expected '+', '-' or end of line");
  }
  if (terms.empty()) c.fail("empty generator");
  return ModuleElement::from_terms(F, std::move(terms));
}

}  // namespace

Field parse_field(std::string_view text) {
  Cursor c(text, 1, 0);
  return field_from(c);
}

Problem parse_problem(std::string_view text, std::optional<Field> field_override) {
  std::vector<Header> headers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, first + 1, "expected 'header:'");
      std::string name(line.substr(first, colon - first));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      headers.push_back(Header{name, line.substr(colon + 1), line_no, colon + 1});
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  FreeModuleSpec spec;
  MonomialOrder order;
  bool have_ring = false, have_basis = false, have_field = false, have_order = false;
  std::vector<const Header*> gen_lines;
  for (const auto& h : headers) {
    Cursor c(h.body, h.line, h.offset);
    auto once = [&](bool& seen) {
      if (seen) throw ParseError(h.line, 1, "duplicate '" + h.name + "' header");
      if (!gen_lines.empty()) throw ParseError(h.line, 1, "'" + h.name + "' must precede generators");
      seen = true;
    };
    if (h.name == "ring") {
      once(have_ring);
      if (!c.at_end()) {
        do spec.variables.push_back(c.identifier());
        while (c.accept(','));
        if (!c.at_end()) c.fail("expected ',' or end of line");
      }
    } else if (h.name == "field") {
      once(have_field);
      Field f = field_from(c);
      spec.field = field_override.value_or(f);
    } else if (h.name == "basis") {
      once(have_basis);
      do {
        spec.basis_names.push_back(c.identifier());
        c.expect('=');
        spec.basis_degrees.push_back(c.number<Degree>());
      } while (c.accept(','));
      if (!c.at_end()) c.fail("expected ',' or end of line");
    } else if (h.name == "order") {
      once(have_order);
      const std::size_t col = c.pos();
      std::string ring = c.identifier();
      if (ring == "lex") order.ring = RingOrder::lex;
      else if (ring == "grlex") order.ring = RingOrder::grlex;
      else if (ring == "grevlex") order.ring = RingOrder::grevlex;
      else c.fail_at(col, "unknown ring order '" + ring + "' (use lex, grlex or grevlex)");
      if (c.accept(',')) {
        const std::size_t pcol = c.pos();
        std::string pos = c.identifier();
        if (pos == "pot") order.position = PositionStrategy::position_over_term;
        else if (pos == "top") order.position = PositionStrategy::term_over_position;
        else c.fail_at(pcol, "unknown position strategy '" + pos + "' (use pot or top)");
      }
      if (!c.at_end()) c.fail("unexpected text after order");
    } else if (h.name == "gen") {
      gen_lines.push_back(&h);
    } else {
      throw ParseError(h.line, 1, "unknown header '" + h.name + "'");
    }
  }
  if (!have_ring) throw ParseError(line_no, 1, "missing 'ring:' header");
  if (!have_basis) throw ParseError(line_no, 1, "missing 'basis:' header");
  if (!have_field && field_override) spec.field = *field_override;

  std::map<std::string, std::size_t> vars;
  std::map<std::string, std::uint32_t> basis;
  for (std::size_t i = 0; i < spec.variables.size(); ++i) vars[spec.variables[i]] = i;
  for (std::uint32_t j = 0; j < spec.basis_names.size(); ++j) basis[spec.basis_names[j]] = j;

  Problem p;
  try {
    p.ambient = FreeModule::make(spec, order);
  } catch (const InvalidInput& e) {
    throw ParseError(1, 1, e.what());
  }
  for (const Header* h : gen_lines) {
    std::string_view body = h->body;
    const auto a = body.find_first_not_of(" \t");
    const auto b = body.find_last_not_of(" \t");
    if (a != std::string_view::npos && body.substr(a, b - a + 1) == "0") {
      p.gens.emplace_back(p.ambient);
      continue;
    }
    Cursor c(body, h->line, h->offset);
    p.gens.push_back(parse_element(c, p.ambient, vars, basis));
  }
  return p;
}

Problem read_problem_file(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  Problem p = parse_problem(ss.str(), field_override);
  p.name = path;
  return p;
}

std::string print_problem(const Problem& p) {
  const auto& spec = p.ambient->spec();
  std::ostringstream os;
  os << "ring: ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) os << (i ? ", " : "") << spec.variables[i];
  os << "\nfield: " << spec.field.to_string() << "\nbasis: ";
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    os << (j ? ", " : "") << spec.basis_names[j] << '=' << spec.basis_degrees[j];
  }
  os << "\norder: " << to_string(p.ambient->order().ring) << ", "
     << to_string(p.ambient->order().position) << '\n';
  for (const auto& g : p.gens) os << "gen: " << g.to_string() << '\n';
  return os.str();
}

}  // namespace modgb::cli
