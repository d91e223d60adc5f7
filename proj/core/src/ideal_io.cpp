#include "diq/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include "diq/error.hpp"
#include "diq/parse.hpp"

namespace diq {
namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

const Basis& basis_for(const Ideal& ideal, const OrderPtr& order) {
  return order ? ideal.basis(order) : ideal.basis();
}

}  // namespace

RingPtr parse_ring_header(std::string_view line) {
  auto words = split_words(strip(line));
  if (words.empty() || words[0] != "ring") {
    throw ParseError("expected a 'ring <vars>' header", 0);
  }
  std::string vars;
  std::size_t i = 1;
  for (; i < words.size() && words[i] != "mod"; ++i) vars += words[i];
  if (vars.empty()) throw ParseError("ring header lists no variables", 0);
  CoefficientField field = CoefficientField::rationals();
  if (i < words.size()) {
    if (i + 2 != words.size()) throw ParseError("expected 'mod <prime>'", 0);
    const std::string& p = words[i + 1];
    if (p.find_first_not_of("0123456789") != std::string::npos || p.size() > 12) {
      throw ParseError("modulus is not a small natural number", 0);
    }
    field = CoefficientField::prime_field(std::stoull(p));
  }
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= vars.size()) {
    const auto comma = vars.find(',', start);
    const auto end = comma == std::string::npos ? vars.size() : comma;
    names.push_back(vars.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return RingCtx::make(std::move(names), field);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

Ideal parse_ideal(std::string_view text) {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    const std::string_view line = strip(raw);
    if (!line.empty()) {
      try {
        if (!ring) {
          ring = parse_ring_header(line);
        } else {
          gens.push_back(parse_poly(line, ring));
        }
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
      } catch (const PreconditionError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), 0);
      }
    }
    if (nl == std::string_view::npos) break;
  }
  if (!ring) throw ParseError("missing 'ring' header", 0);
  return Ideal(ring, std::move(gens));
}

Ideal read_ideal(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

Ideal read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_ideal(in);
}

std::string format_ring_header(const RingCtx& ring) {
  std::string s = "ring ";
  for (std::size_t i = 0; i < ring.user_nvars(); ++i) {
    if (i) s += ',';
    s += ring.name(i);
  }
  if (ring.field().is_prime()) s += " mod " + std::to_string(ring.field().characteristic());
  return s;
}

std::string format_ideal(const Ideal& ideal, const OrderPtr& order) {
  std::string s = format_ring_header(*ideal.ring()) + '\n';
  for (const auto& g : basis_for(ideal, order)) s += format_poly(g) + '\n';
  return s;
}

std::string format_ideal_inline(const Ideal& ideal, const OrderPtr& order) {
  const Basis& g = basis_for(ideal, order);
  if (g.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += format_poly(g[i]);
  }
  return s + ")";
}

}  // namespace diq
