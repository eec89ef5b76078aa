#pragma once

// Line-oriented group-spec files. A spec names the field, the variables and
// the generators; each generator lists one row per variable giving the image
// of that variable as coefficients on all variables. Rows being images makes
// the triangular convention explicit and avoids any transpose ambiguity.
//
//   # example
//   field:
//     p: 2
//     k: 6
//     modulus: 1 1 0 0 0 0 1     # optional, low-to-high, k+1 entries
//   vars: x1 x2 x3 y
//   bind b: [0,0,0,1,0,0]        # a scalar usable in generator entries
//   generator tau3:
//     1 0 0 0
//     0 1 0 0
//     0 0 1 0
//     b 0 0 1
//   options:
//     gprime: tau3
//
// Scalar entries are integers (prime subfield), binding names, or bracketed
// low-to-high coefficient lists like [0,1].

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tvg/group.hpp"

namespace tvg {

struct AnalysisOptions {
  std::vector<std::string> gprime;     // generator names for an explicit G'
  std::size_t order_cap = Group::kDefaultOrderCap;
  std::uint32_t degree_cap = 24;       // minimal-generator sweep budget
  std::uint32_t min_degree_cap = 0;    // 0: default |G| * p
  std::size_t witness_cap = 5000000;
  bool witness_whole_field = false;
};

struct GroupSpecFile {
  const Field* field = nullptr;
  std::uint32_t nvars = 0;
  std::vector<std::string> var_names;
  std::vector<std::pair<std::string, FieldElem>> bindings;
  std::vector<std::pair<std::string, GroupElement>> generators;
  AnalysisOptions options;

  const GroupElement& generator(const std::string& name) const {
    for (const auto& [n, g] : generators)
      if (n == name) return g;
    throw SpecError("unknown generator '" + name + "'");
  }

  ScalarNamer scalar_namer() const {
    auto binds = bindings;
    return [binds](FieldElem c) -> std::optional<std::string> {
      for (const auto& [name, val] : binds)
        if (val == c) return name;
      return std::nullopt;
    };
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, int line_no, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw SpecError("line " + std::to_string(line_no) + ": expected an integer for " + what +
                    ", got '" + tok + "'");
  }
}

}  // namespace detail

/// Parses and validates a group-spec file. Bindings must appear before the
/// generators that use them; every generator must be unitriangular.
inline GroupSpecFile parse_spec_file(const std::string& text) {
  GroupSpecFile spec;
  std::optional<unsigned> p, k;
  std::optional<std::vector<unsigned>> modulus;
  std::optional<std::uint32_t> nvars_opt;

  struct PendingGen {
    std::string name;
    int line_no;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<PendingGen> pending;
  std::vector<std::pair<std::string, std::string>> pending_binds;  // name, token
  std::vector<std::tuple<std::string, std::string, int>> pending_opts;

  enum class Section { None, Field, Generator, Options };
  Section section = Section::None;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto starts = [&](const std::string& kw) {
      return line.rfind(kw, 0) == 0;
    };

    if (starts("field:")) {
      section = Section::Field;
      continue;
    }
    if (starts("options:")) {
      section = Section::Options;
      continue;
    }
    if (starts("generator ")) {
      std::string rest = detail::trim(line.substr(10));
      if (rest.empty() || rest.back() != ':')
        throw SpecError("line " + std::to_string(line_no) + ": expected 'generator <name>:'");
      pending.push_back({detail::trim(rest.substr(0, rest.size() - 1)), line_no, {}});
      section = Section::Generator;
      continue;
    }
    if (starts("vars:")) {
      spec.var_names = detail::split_ws(line.substr(5));
      if (spec.var_names.empty())
        throw SpecError("line " + std::to_string(line_no) + ": vars needs at least one name");
      section = Section::None;
      continue;
    }
    if (starts("n:")) {
      nvars_opt = static_cast<std::uint32_t>(
          detail::parse_int(detail::trim(line.substr(2)), line_no, "n"));
      section = Section::None;
      continue;
    }
    if (starts("bind ")) {
      std::string rest = line.substr(5);
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw SpecError("line " + std::to_string(line_no) + ": expected 'bind <name>: <value>'");
      pending_binds.emplace_back(detail::trim(rest.substr(0, colon)),
                                 detail::trim(rest.substr(colon + 1)));
      section = Section::None;
      continue;
    }

    switch (section) {
      case Section::Field: {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
          throw SpecError("line " + std::to_string(line_no) + ": expected 'key: value' in field block");
        std::string key = detail::trim(line.substr(0, colon));
        std::string val = detail::trim(line.substr(colon + 1));
        if (key == "p")
          p = static_cast<unsigned>(detail::parse_int(val, line_no, "p"));
        else if (key == "k")
          k = static_cast<unsigned>(detail::parse_int(val, line_no, "k"));
        else if (key == "modulus") {
          std::vector<unsigned> m;
          for (const auto& t : detail::split_ws(val))
            m.push_back(static_cast<unsigned>(detail::parse_int(t, line_no, "modulus")));
          modulus = m;
        } else {
          throw SpecError("line " + std::to_string(line_no) + ": unknown field key '" + key + "'");
        }
        break;
      }
      case Section::Generator:
        pending.back().rows.push_back(detail::split_ws(line));
        break;
      case Section::Options: {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
          throw SpecError("line " + std::to_string(line_no) +
                          ": expected 'key: value' in options block");
        pending_opts.emplace_back(detail::trim(line.substr(0, colon)),
                                  detail::trim(line.substr(colon + 1)), line_no);
        break;
      }
      case Section::None:
        throw SpecError("line " + std::to_string(line_no) + ": unexpected content '" + line + "'");
    }
  }

  if (!p || !k) throw SpecError("spec must declare p and k in a field block");
  const Field& fld = modulus ? Field::get(*p, *k, *modulus) : Field::get(*p, *k);
  spec.field = &fld;

  if (!spec.var_names.empty()) {
    spec.nvars = static_cast<std::uint32_t>(spec.var_names.size());
    if (nvars_opt && *nvars_opt != spec.nvars)
      throw SpecError("n disagrees with the number of names in vars");
  } else if (nvars_opt) {
    spec.nvars = *nvars_opt;
    for (std::uint32_t i = 1; i <= spec.nvars; ++i)
      spec.var_names.push_back("x" + std::to_string(i));
  } else {
    throw SpecError("spec must declare vars or n");
  }

  // scalar entries: integer, binding name, or [c0,c1,...]
  auto parse_scalar = [&](const std::string& tok, int at_line) -> FieldElem {
    if (!tok.empty() && tok.front() == '[') {
      if (tok.back() != ']')
        throw SpecError("line " + std::to_string(at_line) + ": unterminated coefficient list");
      std::vector<unsigned> cs;
      std::string body = tok.substr(1, tok.size() - 2);
      std::string cur;
      for (char ch : body + ",") {
        if (ch == ',') {
          if (!detail::trim(cur).empty())
            cs.push_back(
                static_cast<unsigned>(detail::parse_int(detail::trim(cur), at_line, "coefficient")));
          cur.clear();
        } else {
          cur += ch;
        }
      }
      return fld.from_coeffs(cs);
    }
    for (const auto& [name, val] : spec.bindings)
      if (name == tok) return val;
    if (!tok.empty() && (std::isdigit(tok.front()) || tok.front() == '-'))
      return fld.from_int(detail::parse_int(tok, at_line, "scalar"));
    throw SpecError("line " + std::to_string(at_line) + ": unknown scalar '" + tok + "'");
  };

  for (const auto& [name, tok] : pending_binds)
    spec.bindings.emplace_back(name, parse_scalar(tok, 0));

  for (const auto& pg : pending) {
    if (pg.rows.size() != spec.nvars)
      throw SpecError("generator '" + pg.name + "' (line " + std::to_string(pg.line_no) +
                      "): expected " + std::to_string(spec.nvars) + " rows, got " +
                      std::to_string(pg.rows.size()));
    std::vector<LinearForm> images;
    for (std::size_t i = 0; i < pg.rows.size(); ++i) {
      if (pg.rows[i].size() != spec.nvars)
        throw SpecError("generator '" + pg.name + "' row " + std::to_string(i + 1) +
                        ": expected " + std::to_string(spec.nvars) + " entries");
      LinearForm l = LinearForm::zero(fld, spec.nvars);
      for (std::size_t j = 0; j < pg.rows[i].size(); ++j)
        l.coeffs[j] = parse_scalar(pg.rows[i][j], pg.line_no);
      images.push_back(l);
    }
    GroupElement g(fld, std::move(images));
    // triangular validation with a row-level diagnostic
    for (std::uint32_t i = 0; i < spec.nvars; ++i) {
      if (g.image(i).coeffs[i] != fld.one())
        throw SpecError("generator '" + pg.name + "' row " + std::to_string(i + 1) + " (" +
                        spec.var_names[i] + "): diagonal coefficient must be 1");
      for (std::uint32_t j = i + 1; j < spec.nvars; ++j)
        if (!g.image(i).coeffs[j].is_zero())
          throw SpecError("generator '" + pg.name + "' row " + std::to_string(i + 1) + " (" +
                          spec.var_names[i] + "): image may only add variables before " +
                          spec.var_names[i] +
                          (i == 0 ? " (the first variable must be fixed)" : ""));
    }
    spec.generators.emplace_back(pg.name, std::move(g));
  }
  if (spec.generators.empty()) throw SpecError("spec declares no generators");

  for (const auto& [key, val, at_line] : pending_opts) {
    if (key == "gprime") {
      spec.options.gprime = detail::split_ws(val);
      for (const auto& name : spec.options.gprime) spec.generator(name);  // existence check
    } else if (key == "order_cap") {
      spec.options.order_cap = static_cast<std::size_t>(detail::parse_int(val, at_line, key));
    } else if (key == "degree_cap") {
      spec.options.degree_cap = static_cast<std::uint32_t>(detail::parse_int(val, at_line, key));
    } else if (key == "min_degree_cap") {
      spec.options.min_degree_cap = static_cast<std::uint32_t>(detail::parse_int(val, at_line, key));
    } else if (key == "witness_cap") {
      spec.options.witness_cap = static_cast<std::size_t>(detail::parse_int(val, at_line, key));
    } else if (key == "witness_whole_field") {
      spec.options.witness_whole_field = (val == "true" || val == "1");
    } else {
      throw SpecError("line " + std::to_string(at_line) + ": unknown option '" + key + "'");
    }
  }
  return spec;
}

}  // namespace tvg
