#include "frobnil/config_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "frobnil/error.hpp"

namespace frobnil {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, origin + ":" + std::to_string(line) + ": " + msg);
}

std::string strip(std::string s) {
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool valid_label(const std::string& s) {
  if (s.empty() || !std::isalnum(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return s != "x" && s != "u";
}

/// "g2 + 2*g - 1/2*g3" or "0". A bare run is looked up as a label first, so
/// labels like "1" keep working; otherwise it must be a rational (only the
/// literal 0 is allowed bare).
AlgebraElement parse_combination(const std::string& origin, int lineno,
                                 const std::string& text,
                                 const std::map<std::string, BasisIndex>& labels) {
  AlgebraElement out;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto read_run = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '/'))
      ++pos;
    return text.substr(start, pos - start);
  };
  const auto rational_of = [&](const std::string& s) {
    try {
      return Rational::from_string(s);
    } catch (const Error&) {
      fail(origin, lineno, "expected a rational or declared label, got '" + s + "'");
    }
  };

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail(origin, lineno, "empty linear combination");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail(origin, lineno, "expected '+' or '-' between terms");
    }
    first = false;
    skip_ws();

    const std::string run = read_run();
    if (run.empty()) fail(origin, lineno, "expected a term");
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      const std::string label = read_run();
      const auto it = labels.find(label);
      if (it == labels.end()) fail(origin, lineno, "undeclared label '" + label + "'");
      out.add_term(it->second, Rational(sign) * rational_of(run));
    } else {
      const auto it = labels.find(run);
      if (it != labels.end()) {
        out.add_term(it->second, Rational(sign));
      } else if (!rational_of(run).is_zero()) {
        fail(origin, lineno, "bare scalars other than 0 need a label");
      }
    }
  }
  return out;
}

}  // namespace

AlgebraData parse_algebra_config(std::istream& in, const std::string& origin) {
  AlgebraData d;
  std::map<std::string, BasisIndex> labels;
  std::map<std::string, Rational> traces;
  std::optional<std::string> unit_label;
  std::vector<std::tuple<int, std::string, std::string, std::string>> mults;
  bool have_trace_degree = false;

  std::string raw;
  int lineno = 0;
  enum class Section { Preamble, Basis, Unit, Trace, Mult } section = Section::Preamble;
  bool have_header = false;

  std::vector<std::pair<Parity, std::optional<int>>> basis_meta;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_header) {
      if (line != "frobnil-algebra v1")
        fail(origin, lineno, "expected header 'frobnil-algebra v1'");
      have_header = true;
      continue;
    }
    if (line == "[basis]") { section = Section::Basis; continue; }
    if (line == "[unit]") { section = Section::Unit; continue; }
    if (line == "[trace]") { section = Section::Trace; continue; }
    if (line == "[mult]") { section = Section::Mult; continue; }
    if (line.front() == '[') fail(origin, lineno, "unknown section '" + line + "'");

    std::istringstream ls(line);
    switch (section) {
      case Section::Preamble: {
        std::string key;
        ls >> key;
        if (key == "name") {
          ls >> d.name;
        } else if (key == "trace_parity") {
          std::string v;
          ls >> v;
          if (v == "even") d.trace_parity = Parity::even;
          else if (v == "odd") d.trace_parity = Parity::odd;
          else fail(origin, lineno, "trace_parity must be even or odd");
        } else if (key == "trace_degree") {
          ls >> d.trace_degree;
          if (ls.fail()) fail(origin, lineno, "trace_degree needs an integer");
          have_trace_degree = true;
        } else {
          fail(origin, lineno, "unexpected directive '" + key + "'");
        }
        break;
      }
      case Section::Basis: {
        std::string label, par;
        ls >> label >> par;
        if (!valid_label(label)) fail(origin, lineno, "bad basis label '" + label + "'");
        if (labels.count(label)) fail(origin, lineno, "duplicate label '" + label + "'");
        Parity p;
        if (par == "even") p = Parity::even;
        else if (par == "odd") p = Parity::odd;
        else fail(origin, lineno, "parity must be even or odd");
        std::optional<int> deg;
        int dv = 0;
        if (ls >> dv) deg = dv;
        labels[label] = static_cast<BasisIndex>(d.basis_labels.size());
        d.basis_labels.push_back(label);
        basis_meta.emplace_back(p, deg);
        break;
      }
      case Section::Unit: {
        std::string label;
        ls >> label;
        if (!labels.count(label)) fail(origin, lineno, "undeclared unit label '" + label + "'");
        unit_label = label;
        break;
      }
      case Section::Trace: {
        std::string label, value;
        ls >> label >> value;
        if (!labels.count(label)) fail(origin, lineno, "undeclared label '" + label + "'");
        traces[label] = Rational::from_string(value);
        break;
      }
      case Section::Mult: {
        const auto eq = line.find('=');
        const auto star = line.find('*');
        if (eq == std::string::npos || star == std::string::npos || star > eq)
          fail(origin, lineno, "product lines look like a*b = combination");
        const std::string lhs1 = strip(line.substr(0, star));
        const std::string lhs2 = strip(line.substr(star + 1, eq - star - 1));
        const std::string rhs = strip(line.substr(eq + 1));
        if (!labels.count(lhs1) || !labels.count(lhs2))
          fail(origin, lineno, "undeclared label in product");
        mults.emplace_back(lineno, lhs1, lhs2, rhs);
        break;
      }
    }
  }

  if (!have_header) fail(origin, lineno, "missing header 'frobnil-algebra v1'");
  if (d.basis_labels.empty()) fail(origin, lineno, "no basis declared");
  if (!unit_label) fail(origin, lineno, "no [unit] declared");
  if (d.name.empty()) d.name = origin;

  const std::size_t dim = d.basis_labels.size();
  d.unit_index = labels[*unit_label];
  d.parities.resize(dim);
  d.trace.assign(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) d.parities[i] = basis_meta[i].first;
  for (const auto& [label, value] : traces) d.trace[labels[label]] = value;

  if (have_trace_degree) {
    std::vector<int> degs(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!basis_meta[i].second)
        fail(origin, lineno, "trace_degree given but '" + d.basis_labels[i] + "' has no degree");
      degs[i] = *basis_meta[i].second;
    }
    d.degrees = std::move(degs);
  }

  d.products.assign(dim, std::vector<AlgebraElement>(dim));
  for (const auto& [ln, a, b, rhs] : mults) {
    AlgebraElement value;
    if (strip(rhs) != "0") value = parse_combination(origin, ln, rhs, labels);
    d.products[labels[a]][labels[b]] = std::move(value);
  }

  return d;
}

FrobeniusSuperalgebra load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  AlgebraData d = parse_algebra_config(in, path.filename().string());
  const ValidationReport report = validate(d);
  if (!report.frobenius_ok())
    throw Error(ErrorCode::ValidationFailed,
                "'" + path.string() + "' fails the axioms:\n" + report.summary());
  return FrobeniusSuperalgebra::create(std::move(d));
}

}  // namespace frobnil
