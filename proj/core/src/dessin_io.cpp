#include "dessins/dessin_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dessins {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_degree_line(std::string_view line) {
  line = trim(line);
  if (line.substr(0, 6) != "degree") throw InvalidArgument("expected 'degree n', got '" + std::string(line) + "'");
  const std::string rest(trim(line.substr(6)));
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(rest, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad degree '" + rest + "'");
  }
  if (used != rest.size() || n == 0) throw InvalidArgument("bad degree '" + rest + "'");
  return n;
}

Dessin assemble(std::size_t n, const std::string& x, const std::string& y, const std::optional<std::string>& z) {
  Permutation px = parse_permutation(x, n), py = parse_permutation(y, n);
  if (z) return Dessin::from_triple(px, py, parse_permutation(*z, n));
  return Dessin::from_pair(px, py);
}

}  // namespace

std::string format_dessin_text(const Dessin& d) {
  std::ostringstream out;
  out << "degree " << d.degree() << "\n"
      << "x = " << render(d.x()) << "\n"
      << "y = " << render(d.y()) << "\n"
      << "z = " << render(d.z()) << "\n";
  return out.str();
}

Dessin parse_dessin_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::optional<std::string> x, y, z;
  while (std::getline(in, line)) {
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    if (!n) {
      n = parse_degree_line(l);
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("expected 'name = permutation', got '" + line + "'");
    const std::string_view name = trim(l.substr(0, eq));
    std::string value(trim(l.substr(eq + 1)));
    if (name == "x") {
      x = value;
    } else if (name == "y") {
      y = value;
    } else if (name == "z") {
      z = value;
    } else {
      throw InvalidArgument("unknown permutation name '" + std::string(name) + "'");
    }
  }
  if (!n || !x || !y) throw InvalidArgument("a dessin file needs a degree line, x and y");
  return assemble(*n, *x, *y, z);
}

std::string dessin_to_json(const Dessin& d) {
  nlohmann::ordered_json j;
  j["degree"] = d.degree();
  j["x"] = render(d.x());
  j["y"] = render(d.y());
  j["z"] = render(d.z());
  return j.dump(2) + "\n";
}

Dessin dessin_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::optional<std::string> z;
    if (j.contains("z")) z = j.at("z").get<std::string>();
    return assemble(j.at("degree").get<std::size_t>(), j.at("x").get<std::string>(), j.at("y").get<std::string>(), z);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad dessin JSON: ") + e.what());
  }
}

Dessin parse_dessin(std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') return dessin_from_json(t);
  return parse_dessin_text(t);
}

std::string dessin_to_dot(const Dessin& d, bool suppress_small_white) {
  std::ostringstream out;
  out << "graph dessin {\n  node [shape=circle, label=\"\", width=0.15];\n";
  const auto bx = cycles(d.x(), true);
  const auto wy = cycles(d.y(), true);
  std::vector<std::size_t> black(d.degree()), white(d.degree());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    out << "  b" << i << " [style=filled, fillcolor=black];\n";
    for (auto p : bx[i]) black[p] = i;
  }
  for (std::size_t i = 0; i < wy.size(); ++i) {
    for (auto p : wy[i]) white[p] = i;
    if (suppress_small_white && wy[i].size() <= 2) continue;
    out << "  w" << i << " [style=filled, fillcolor=white];\n";
  }
  for (std::size_t i = 0; i < wy.size(); ++i) {
    if (suppress_small_white && wy[i].size() == 2) {
      out << "  b" << black[wy[i][0]] << " -- b" << black[wy[i][1]] << " [label=\"" << wy[i][0] << "," << wy[i][1]
          << "\"];\n";
    } else if (suppress_small_white && wy[i].size() == 1) {
      out << "  h" << wy[i][0] << " [shape=point, width=0.01];\n";
      out << "  b" << black[wy[i][0]] << " -- h" << wy[i][0] << " [label=\"" << wy[i][0] << "\"];\n";
    } else {
      for (auto p : wy[i]) out << "  b" << black[p] << " -- w" << white[p] << " [label=\"" << p << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

PermGroup parse_group(std::string_view text) {
  const auto t = trim(text);
  std::size_t n = 0;
  std::vector<std::string> gens;
  if (!t.empty() && t.front() == '{') {
    try {
      auto j = nlohmann::json::parse(t);
      n = j.at("degree").get<std::size_t>();
      for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("bad group JSON: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(t)};
    std::string line;
    bool have_degree = false;
    while (std::getline(in, line)) {
      const auto l = trim(line);
      if (l.empty() || l.front() == '#') continue;
      if (!have_degree) {
        n = parse_degree_line(l);
        have_degree = true;
      } else {
        const auto eq = l.find('=');
        gens.emplace_back(trim(eq == std::string_view::npos ? l : l.substr(eq + 1)));
      }
    }
  }
  if (n == 0) throw InvalidArgument("group file needs a positive degree");
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_permutation(g, n));
  return PermGroup(n, std::move(perms));
}

std::string group_to_json(const PermGroup& g) {
  nlohmann::ordered_json j;
  j["degree"] = g.degree();
  j["generators"] = nlohmann::json::array();
  for (const auto& p : g.generators()) j["generators"].push_back(render(p));
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << content;
}

}  // namespace dessins
