#include "lgeo/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "lgeo/errors.hpp"

namespace lgeo {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// "p_0..p_3" -> p_0 p_1 p_2 p_3
std::vector<std::string> expand_range(const std::string& token, std::size_t line, std::size_t column) {
  const auto dots = token.find("..");
  if (dots == std::string::npos) return {token};
  std::string lo, hi;
  try {
    lo = canonical_variable_name(token.substr(0, dots));
    hi = canonical_variable_name(token.substr(dots + 2));
  } catch (const InputError&) {
    throw ParseError("invalid variable range '" + token + "'", line, column);
  }
  const auto ulo = lo.rfind('_'), uhi = hi.rfind('_');
  if (ulo == std::string::npos || uhi == std::string::npos || lo.substr(0, ulo) != hi.substr(0, uhi))
    throw ParseError("variable range '" + token + "' needs indexed names with one base", line, column);
  const std::size_t first = std::stoul(lo.substr(ulo + 1));
  const std::size_t last = std::stoul(hi.substr(uhi + 1));
  if (first > last) throw ParseError("empty variable range '" + token + "'", line, column);
  return indexed_names(lo.substr(0, ulo), first, last);
}

std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError("probabilities must be rational strings such as \"3/10\"");
}

std::vector<DiscreteRandomVariable> variables_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_array())
    throw InputError("model JSON needs a \"variables\" array");
  std::vector<DiscreteRandomVariable> vars;
  for (const auto& v : doc["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
      throw InputError("each variable needs a string \"name\"");
    if (!v.contains("arity") || !v["arity"].is_number_integer() || v["arity"].get<long>() < 1)
      throw InputError("variable '" + v["name"].get<std::string>() + "' needs a positive integer \"arity\"");
    const std::string name = v["name"].get<std::string>();
    const auto arity = v["arity"].get<std::size_t>();
    if (v.contains("pmf")) {
      if (!v["pmf"].is_array()) throw InputError("\"pmf\" of '" + name + "' must be an array");
      std::vector<Rational> pmf;
      for (const auto& p : v["pmf"]) pmf.push_back(rational_from_json(p));
      vars.emplace_back(name, arity, std::move(pmf));
    } else {
      vars.emplace_back(name, arity);
    }
  }
  return vars;
}

std::vector<std::string> string_list(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array of variable names");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw InputError(std::string(what) + " must be an array of variable names");
    out.push_back(s.get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line/column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

std::string extension_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return {};
  return path.substr(dot);
}

}  // namespace

Ideal parse_ideal_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) lines.emplace_back(number, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing ring declaration", 1, 1);

  auto [ring_line, ring_text] = lines.front();
  const std::string_view body = trim(ring_text);
  const auto words = split_words(body);
  if (words.empty() || words.front() != "ring")
    throw ParseError("expected 'ring <names>'", ring_line, column_of(ring_text, body));
  if (words.size() == 1) throw ParseError("ring declaration lists no variables", ring_line, ring_text.size() + 1);
  std::vector<std::string> names;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const std::size_t column = column_of(ring_text, body) + body.find(words[i]);
    for (auto& n : expand_range(words[i], ring_line, column)) names.push_back(n);
  }

  std::size_t next = 1;
  MonomialOrder order = MonomialOrder::grevlex();
  if (lines.size() > 1) {
    const auto [order_line, order_text] = lines[1];
    const auto order_words = split_words(order_text);
    if (order_words.front() == "order") {
      const std::size_t column = column_of(order_text, trim(order_text));
      if (order_words.size() != 2) throw ParseError("expected 'order lex|grevlex'", order_line, column);
      if (order_words[1] == "lex")
        order = MonomialOrder::lex();
      else if (order_words[1] != "grevlex")
        throw ParseError("unknown monomial order '" + order_words[1] + "'", order_line, column);
      next = 2;
    }
  }

  Ring ring;
  try {
    ring = PolyRing::make(names, order);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), ring_line, 1);
  }

  std::vector<Polynomial> gens;
  for (std::size_t i = next; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    try {
      gens.push_back(parse_polynomial(line, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_no, e.column());
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
  }
  return Ideal(ring, std::move(gens));
}

std::string format_ideal(const Ideal& ideal) {
  const MonomialOrder& order = ideal.ring()->order();
  if (order.kind() == MonomialOrder::Kind::block)
    throw InputError("ideal files support only lex and grevlex orders");
  std::string out = "ring";
  for (const auto& n : ideal.ring()->names()) out += " " + n;
  out += "\norder " + order.name() + "\n";
  for (const auto& g : ideal.generators()) out += print_polynomial(g) + "\n";
  return out;
}

std::vector<DiscreteRandomVariable> parse_variables_json(std::string_view text) {
  return variables_from_json(parse_json(text));
}

ModelInput parse_model_json(std::string_view text) {
  const json doc = parse_json(text);
  auto vars = variables_from_json(doc);
  const bool has_edges = doc.contains("edges");
  const bool has_generators = doc.contains("generators");
  if (has_edges && has_generators) throw InputError("model JSON has both \"edges\" and \"generators\"");
  if (has_generators) {
    if (!doc["generators"].is_array()) throw InputError("\"generators\" must be an array");
    std::vector<std::vector<std::string>> generators;
    for (const auto& g : doc["generators"]) generators.push_back(string_list(g, "a generator"));
    return toric_model_from_generators(generators, vars);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (has_edges) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      const auto ends = string_list(e, "an edge");
      if (ends.size() != 2) throw InputError("an edge needs exactly two endpoints");
      edges.emplace_back(ends[0], ends[1]);
    }
  }
  return ModelGraph::from_named_edges(std::move(vars), edges);
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ModelInput load_model(const std::string& path) {
  const std::string ext = extension_of(path);
  if (ext != ".ideal" && ext != ".mat" && ext != ".json")
    throw InputError("unknown model file extension '" + ext + "' (expected .ideal, .mat or .json)");
  const std::string text = read_file(path);
  if (ext == ".ideal") return parse_ideal_text(text);
  if (ext == ".mat") return ToricModel::from_matrix(parse_int_matrix(text));
  return parse_model_json(text);
}

std::string emit_json(const Ideal& ideal) {
  ordered_json doc;
  doc["ring"]["variables"] = ideal.ring()->names();
  doc["ring"]["order"] = ideal.ring()->order().name();
  doc["generators"] = ordered_json::array();
  for (const auto& g : ideal.generators()) doc["generators"].push_back(print_polynomial(g));
  return doc.dump();
}

std::string emit_json(const IntMatrix& matrix) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c).get_str());
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

std::string emit_json(std::string_view key, std::uint64_t value) {
  return "{" + json(std::string(key)).dump() + ": " + json(value).dump() + "}";
}

std::string emit_json(std::string_view key, std::string_view value) {
  return "{" + json(std::string(key)).dump() + ": " + json(std::string(value)).dump() + "}";
}

std::string emit_json(std::string_view key, const std::vector<std::size_t>& values) {
  return "{" + json(std::string(key)).dump() + ": " + json(values).dump() + "}";
}

}  // namespace lgeo
