#include "ncc/atlas.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "ncc/atlas_data.hpp"

namespace ncc {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view src, const Valuation& vars) : src_(src), vars_(vars) {}

  long parse() {
    const long v = sum();
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AtlasError("expression '" + std::string(src_) + "': " + what);
  }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long sum() {
    long v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  long product() {
    long v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const long d = unary();
        if (d == 0) fail("division by zero");
        long q = v / d;
        if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
        v = q;
      } else {
        return v;
      }
    }
  }

  long unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  long atom() {
    skip();
    if (eat('(')) {
      const long v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= src_.size()) fail("unexpected end");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = 10 * v + (src_[pos_++] - '0');
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        name += src_[pos_++];
      }
      if (name == "min" || name == "max") {
        if (!eat('(')) fail("expected '(' after " + name);
        const long a = sum();
        if (!eat(',')) fail("expected ','");
        const long b = sum();
        if (!eat(')')) fail("expected ')'");
        return name == "min" ? std::min(a, b) : std::max(a, b);
      }
      const auto it = vars_.find(name);
      if (it == vars_.end()) fail("unbound variable " + name);
      return it->second;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  const Valuation& vars_;
  std::size_t pos_ = 0;
};

TypeTag parse_tag(const std::string& s) {
  if (s == "complex") return TypeTag::complex;
  if (s == "cayley") return TypeTag::cayley;
  if (s == "split") return TypeTag::split;
  if (s == "nonsplit") return TypeTag::nonsplit;
  throw AtlasError("unknown type_tag '" + s + "'");
}

Family parse_family(const std::string& s) {
  if (s == "sl") return Family::sl;
  if (s == "gl") return Family::gl;
  if (s == "so") return Family::so_pq;
  if (s == "sp") return Family::sp;
  throw AtlasError("unknown family '" + s + "'");
}

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Replaces each "{expr}" in a label template by its value.
std::string substitute(const std::string& tmpl, const Valuation& v) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i);
      if (close == std::string::npos) throw AtlasError("unterminated '{' in '" + tmpl + "'");
      out += std::to_string(evaluate_expression(tmpl.substr(i + 1, close - i - 1), v));
      i = close + 1;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

}  // namespace

long evaluate_expression(std::string_view expr, const Valuation& vars) {
  return ExprParser(expr, vars).parse();
}

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::complex: return "complex";
    case TypeTag::cayley: return "cayley";
    case TypeTag::split: return "split";
    case TypeTag::nonsplit: return "nonsplit";
  }
  return "?";
}

bool AtlasRow::rank_relation_holds(const Valuation& v) const {
  const long rr = rank_r(v), ss = rank_s(v);
  switch (type_tag) {
    case TypeTag::complex:
    case TypeTag::nonsplit: return rr == 2 * ss;
    case TypeTag::cayley:
    case TypeTag::split: return rr == ss;
  }
  return false;
}

std::vector<AtlasRow> parse_atlas(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw AtlasError(std::string("atlas: malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw AtlasError("atlas: top level must be an array");
  std::vector<AtlasRow> rows;
  for (const auto& j : doc) {
    AtlasRow row;
    try {
      row.id = j.at("id").get<std::string>();
      row.g_name = j.at("g_name").get<std::string>();
      row.gc_name = j.at("gc_name").get<std::string>();
      row.h_name = j.at("h_name").get<std::string>();
      row.g1_name = j.at("g1_name").get<std::string>();
      row.type_tag = parse_tag(j.at("type_tag").get<std::string>());
      row.root_system = j.at("root_system").get<std::string>();
      row.euler_labels = j.at("euler_labels").get<std::vector<std::string>>();
      row.params = j.at("params").get<std::vector<std::string>>();
      row.constraint = j.value("constraint", "");
      row.r = j.at("r").get<std::string>();
      row.s = j.at("s").get<std::string>();
      row.g1_dim = j.at("g1_dim").get<std::string>();
      for (const auto& sample : j.at("samples")) row.samples.push_back(sample.get<Valuation>());
      if (j.contains("realization") && !j.at("realization").is_null()) {
        const auto& rj = j.at("realization");
        row.realization = Realization{parse_family(rj.at("family").get<std::string>()),
                                      rj.at("params").get<std::vector<std::string>>(),
                                      rj.at("euler").get<std::string>()};
      }
    } catch (const nlohmann::json::exception& e) {
      throw AtlasError("atlas: malformed row '" + row.id + "': " + e.what());
    }
    if (row.samples.empty()) throw AtlasError("atlas: row '" + row.id + "' has no samples");
    for (const auto& v : row.samples) {
      if (!row.rank_relation_holds(v)) {
        throw AtlasError("atlas: row '" + row.id + "' violates the " + to_string(row.type_tag) +
                         " rank relation");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<AtlasRow>& load_atlas() {
  static const std::vector<AtlasRow> rows = parse_atlas(detail::kAtlasJson);
  return rows;
}

std::vector<AtlasRow> lookup(std::string_view query) {
  const std::string q = normalize(query);
  std::vector<AtlasRow> out;
  for (const auto& row : load_atlas()) {
    if (normalize(row.g_name) == q || normalize(to_string(row.type_tag)) == q ||
        normalize(row.root_system) == q || normalize(row.id) == q) {
      out.push_back(row);
    }
  }
  return out;
}

std::string AlgebraDescriptor::spec() const {
  std::string out = to_string(family) + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

AlgebraPtr AlgebraDescriptor::build(const Tolerances& tol) const {
  return Algebra::build(family, params, tol);
}

std::optional<AlgebraDescriptor> realizable(const AtlasRow& row, const Valuation& v) {
  if (!row.realization) return std::nullopt;
  AlgebraDescriptor d;
  d.family = row.realization->family;
  for (const auto& p : row.realization->params) {
    d.params.push_back(static_cast<int>(evaluate_expression(p, v)));
  }
  d.euler_label = substitute(row.realization->euler, v);
  switch (d.family) {
    case Family::sl: d.dim = d.params[0] * d.params[0] - 1; break;
    case Family::gl: d.dim = d.params[0] * d.params[0]; break;
    case Family::so_pq: {
      const int n = d.params[0] + d.params[1];
      d.dim = n * (n - 1) / 2;
      break;
    }
    case Family::sp: d.dim = d.params[0] * (d.params[0] + 1) / 2; break;
  }
  return d;
}

}  // namespace ncc
