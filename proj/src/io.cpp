#include "linext/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>
#include <vector>

#include "linext/error.hpp"

namespace linext {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return std::stoull(token);
}

// Non-comment, non-blank lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      out = std::move(t);
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::uint64_t> parse_row(const std::string& text, std::size_t expected, std::size_t line,
                                     const char* what) {
  std::istringstream ss(text);
  std::vector<std::uint64_t> row;
  std::string token;
  while (ss >> token) row.push_back(parse_unsigned(token, line, what));
  if (row.size() != expected) {
    throw ParseError(line, "expected " + std::to_string(expected) + " entries, got " + std::to_string(row.size()));
  }
  return row;
}

template <typename Rows>
std::string emit_rows(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

AbelianGroup parse_group_spec(const std::string& text, std::size_t cap) {
  std::vector<std::uint32_t> orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9) {
      throw InputError("bad group specification '" + text + "'");
    }
    orders.push_back(static_cast<std::uint32_t>(std::stoul(t)));
  }
  if (orders.empty()) throw InputError("empty group specification");
  return make_group(std::move(orders), cap);
}

FiniteLoop parse_loop(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing 'loop <l>' header");
  const std::size_t header_line = reader.line();
  std::istringstream hs(line);
  std::string keyword, size_token, extra;
  hs >> keyword >> size_token;
  if (keyword != "loop" || size_token.empty() || (hs >> extra)) {
    throw ParseError(header_line, "expected 'loop <l>' header");
  }
  const auto l = parse_unsigned(size_token, header_line, "loop order");
  if (l < 1 || l > 4096) throw ParseError(header_line, "loop order out of range");

  std::vector<LoopElement> table;
  table.reserve(l * l);
  std::vector<char> seen(l);
  std::size_t last_line = header_line;
  for (std::size_t r = 0; r < l; ++r) {
    if (!reader.next(line)) throw ParseError(reader.line(), "expected " + std::to_string(l) + " rows");
    last_line = reader.line();
    auto row = parse_row(line, l, last_line, "element index");
    std::fill(seen.begin(), seen.end(), 0);
    for (auto v : row) {
      if (v >= l) throw ParseError(last_line, "row " + std::to_string(r) + ": entry " + std::to_string(v) + " out of range");
      if (seen[v]) {
        throw ParseError(last_line, "row " + std::to_string(r) + " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
      table.push_back(static_cast<LoopElement>(v));
    }
  }
  if (reader.next(line)) throw ParseError(reader.line(), "trailing content after the table");
  try {
    return FiniteLoop(l, std::move(table));
  } catch (const InputError& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

FiniteLoop parse_loop_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_loop(in);
}

std::string emit_loop(const FiniteLoop& loop) {
  return "loop " + std::to_string(loop.order()) + "\n" + emit_rows(loop.rows());
}

CocycleHeader parse_cocycle_header(const std::string& line, std::size_t line_number) {
  std::istringstream hs(line);
  std::string keyword, l_field, group_field, extra;
  hs >> keyword >> l_field >> group_field;
  if (keyword != "cocycle" || l_field.rfind("l=", 0) != 0 || group_field.rfind("group=", 0) != 0 || (hs >> extra)) {
    throw ParseError(line_number, "expected 'cocycle l=<l> group=<orders>' header");
  }
  CocycleHeader h;
  h.order = parse_unsigned(l_field.substr(2), line_number, "loop order");
  h.group = group_field.substr(6);
  if (h.group.empty()) throw ParseError(line_number, "empty group field");
  return h;
}

LoopCocycle parse_cocycle(std::istream& in, const FiniteLoop& loop, const CocycleParseOptions& options) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing cocycle header");
  const std::size_t header_line = reader.line();
  const auto header = parse_cocycle_header(line, header_line);
  if (header.order != loop.order()) {
    throw ParseError(header_line, "cocycle is for a loop of order " + std::to_string(header.order) +
                                      " but the loop has order " + std::to_string(loop.order()));
  }
  std::shared_ptr<const AutomorphismGroup> aut;
  try {
    auto group = parse_group_spec(header.group, options.aut.size_cap);
    if (options.automorphisms && options.automorphisms->group() == group) {
      aut = options.automorphisms;
    } else {
      aut = std::make_shared<const AutomorphismGroup>(enumerate_automorphisms(group, options.aut));
    }
  } catch (const InputError& e) {
    throw ParseError(header_line, e.what());
  }

  const std::size_t l = loop.order();
  auto read_table = [&](const char* name) {
    if (!reader.next(line) || line != name) {
      throw ParseError(reader.line(), std::string("expected '") + name + "' section");
    }
    std::vector<AutIndex> table;
    for (std::size_t r = 0; r < l; ++r) {
      if (!reader.next(line)) throw ParseError(reader.line(), std::string("missing rows in ") + name);
      for (auto v : parse_row(line, l, reader.line(), "automorphism index")) {
        if (v >= aut->size()) {
          throw ParseError(reader.line(), "automorphism index " + std::to_string(v) + " out of range (|Aut| = " +
                                              std::to_string(aut->size()) + ")");
        }
        table.push_back(static_cast<AutIndex>(v));
      }
    }
    return table;
  };
  auto p = read_table("P");
  auto q = read_table("Q");
  if (reader.next(line)) throw ParseError(reader.line(), "trailing content after the Q table");
  try {
    return LoopCocycle(loop, aut, std::move(p), std::move(q));
  } catch (const InputError& e) {
    throw ParseError(header_line, e.what());
  }
}

LoopCocycle parse_cocycle_file(const std::string& path, const FiniteLoop& loop, const CocycleParseOptions& options) {
  std::istringstream in(read_file(path));
  return parse_cocycle(in, loop, options);
}

std::string emit_cocycle(const LoopCocycle& c) {
  const std::size_t l = c.loop().order();
  std::vector<std::vector<AutIndex>> p(l), q(l);
  for (LoopElement a = 0; a < l; ++a) {
    for (LoopElement b = 0; b < l; ++b) {
      p[a].push_back(c.P(a, b));
      q[a].push_back(c.Q(a, b));
    }
  }
  return "cocycle l=" + std::to_string(l) + " group=" + c.group().spec() + "\nP\n" + emit_rows(p) + "Q\n" +
         emit_rows(q);
}

std::string emit_extension(const ExtensionLoop& ext) {
  const auto& c = ext.cocycle();
  return "# extension l=" + std::to_string(c.loop().order()) + " group=" + c.group().spec() + "\n" +
         "# element (xi,a) has index xi*" + std::to_string(c.group().size()) + "+a\n" + emit_loop(ext.loop());
}

std::string orbit_report(const LoopCocycle& c, const OrbitDecomposition& dec) {
  const char* mode = dec.mode == OrbitMode::Phi ? "phi" : dec.mode == OrbitMode::Psi ? "psi" : "gamma";
  std::ostringstream out;
  out << "# orbit table mode=" << mode << " orbits=" << dec.orbits.size() << "\n";
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    const auto& orbit = dec.orbits[k];
    const auto rep = orbit.representative();
    out << "orbit " << k << " rep=(" << rep.first << "," << rep.second << ")\n";
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      const auto m = orbit.members[i];
      const auto v = c.at(m);
      out << "  (" << m.first << "," << m.second << ") via " << gamma_name(orbit.carriers[i]) << " P=" << v.p
          << " Q=" << v.q << "\n";
    }
  }
  return out.str();
}

std::string fingerprint(const std::string& content) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : content) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace linext
