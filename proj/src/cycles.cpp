#include "kclosure/cycles.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kclosure/errors.hpp"

namespace kclosure {

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

unsigned parse_point(const std::string& s, std::size_t& i, unsigned degree) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("cycle notation: expected a point at position " +
                     std::to_string(i) + " in '" + s + "'");
  unsigned long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<unsigned long>(s[i] - '0');
    if (v > degree)
      throw ParseError("cycle notation: point " + std::to_string(v) +
                       " exceeds degree " + std::to_string(degree));
    ++i;
  }
  if (v == 0)
    throw ParseError("cycle notation: points are 1-based, got 0 in '" + s +
                     "'");
  return static_cast<unsigned>(v);
}

}  // namespace

Permutation parse_cycles(const std::string& text, unsigned degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  skip_ws(text, i);
  if (i == text.size())
    throw ParseError("cycle notation: empty input (use '()' for the identity)");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: expected '(' at position " +
                       std::to_string(i) + " in '" + text + "'");
    ++i;
    std::vector<Point> cycle;
    skip_ws(text, i);
    while (i < text.size() && text[i] != ')') {
      unsigned v = parse_point(text, i, degree);
      Point a = static_cast<Point>(v - 1);
      if (used[a])
        throw ParseError("cycle notation: point " + std::to_string(v) +
                         " repeated in '" + text + "'");
      used[a] = true;
      cycle.push_back(a);
      skip_ws(text, i);
    }
    if (i == text.size())
      throw ParseError("cycle notation: unclosed '(' in '" + text + "'");
    ++i;  // consume ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws(text, i);
  }
  return Permutation(std::move(img));
}

std::string emit_cycles(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (Point a = 0; a < g.degree(); ++a) {
    if (seen[a] || g[a] == a) continue;
    out += '(';
    Point b = a;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(b + 1);
      seen[b] = true;
      b = g[b];
    } while (b != a);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

PermGroup to_group(const GroupSpec& spec) {
  if (spec.degree == 0)
    throw ParseError("group spec '" + spec.name + "': degree must be positive");
  std::vector<Permutation> gens;
  gens.reserve(spec.generators.size());
  for (const auto& s : spec.generators)
    gens.push_back(parse_cycles(s, spec.degree));
  return PermGroup(spec.degree, std::move(gens));
}

GroupSpec from_group(std::string name, const PermGroup& g) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = g.degree();
  for (const auto& gen : g.generators()) spec.generators.push_back(emit_cycles(gen));
  return spec;
}

std::string emit_group_spec(const GroupSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "# name: " + spec.name + "\n";
  out += "degree " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += "gen " + g + "\n";
  return out;
}

GroupSpec parse_group_spec(std::istream& in) {
  GroupSpec spec;
  bool have_degree = false;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    skip_ws(line, i);
    if (i == line.size()) continue;
    if (line[i] == '#') {
      std::string rest = line.substr(i + 1);
      std::size_t j = 0;
      skip_ws(rest, j);
      if (rest.compare(j, 5, "name:") == 0 && spec.name.empty()) {
        j += 5;
        skip_ws(rest, j);
        std::size_t end = rest.find_last_not_of(" \t\r");
        if (end != std::string::npos && end >= j)
          spec.name = rest.substr(j, end - j + 1);
      }
      continue;
    }
    std::istringstream fields(line.substr(i));
    std::string keyword;
    fields >> keyword;
    if (keyword == "degree") {
      if (have_degree)
        throw ParseError("group spec line " + std::to_string(lineno) +
                         ": duplicate degree");
      long long n = -1;
      if (!(fields >> n) || n <= 0)
        throw ParseError("group spec line " + std::to_string(lineno) +
                         ": degree wants a positive integer");
      std::string extra;
      if (fields >> extra)
        throw ParseError("group spec line " + std::to_string(lineno) +
                         ": trailing text after degree");
      spec.degree = static_cast<unsigned>(n);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree)
        throw ParseError("group spec line " + std::to_string(lineno) +
                         ": gen before degree");
      std::string rest;
      std::getline(fields, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      std::size_t e = rest.find_last_not_of(" \t\r");
      if (b == std::string::npos)
        throw ParseError("group spec line " + std::to_string(lineno) +
                         ": gen wants cycle notation");
      rest = rest.substr(b, e - b + 1);
      parse_cycles(rest, spec.degree);  // reject bad input at parse time
      spec.generators.push_back(rest);
    } else {
      throw ParseError("group spec line " + std::to_string(lineno) +
                       ": unknown directive '" + keyword + "'");
    }
  }
  if (!have_degree) throw ParseError("group spec: missing degree line");
  return spec;
}

GroupSpec parse_group_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_group_spec(in);
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group spec file: " + path);
  try {
    return parse_group_spec(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace kclosure
