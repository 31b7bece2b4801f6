#include "ltf/serialize.hpp"

#include <map>
#include <sstream>

#include "ltf/errors.hpp"

namespace ltf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

mpq_class parse_rational(const std::string& text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw ValidationError("malformed rational '" + s + "'");
  mpq_class q;
  q.get_num() = mpz_class(num[0] == '+' ? num.substr(1) : num);
  q.get_den() = mpz_class(den);
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string format_elem(const FieldElem& x) { return x.to_string(); }

FieldElem parse_elem(const Field& f, const std::string& s) {
  std::vector<mpq_class> c;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ';');) c.push_back(parse_rational(part));
  if (!s.empty() && s.back() == ';') throw ValidationError("trailing ';' in '" + s + "'");
  if (c.size() != static_cast<std::size_t>(f.degree()))
    throw ValidationError("field element '" + s + "' has " + std::to_string(c.size()) + " entries, expected " +
                          std::to_string(f.degree()));
  return f.from_coeffs(std::move(c));
}

std::string format_poly(const PolyL& g) {
  if (g.is_zero()) return format_elem(g.field().zero());
  return g.to_string();
}

std::string poly_csv(const PolyL& g) {
  std::ostringstream os;
  os << "degree,coeff\n";
  for (std::size_t k = 0; k < g.size(); ++k) os << k << ',' << format_elem(g.coeff(k)) << '\n';
  return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

PolyL read_poly_csv(const Field& f, std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line) && trim(line).empty()) ++lineno;
  ++lineno;
  if (split_csv_line(line) != std::vector<std::string>{"degree", "coeff"})
    throw ValidationError("polynomial CSV must start with header 'degree,coeff'");
  std::map<std::size_t, FieldElem> terms;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw ValidationError("line " + std::to_string(lineno) + ": expected 2 columns");
    const std::string& d = cells[0];
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("line " + std::to_string(lineno) + ": bad degree '" + d + "'");
    if (d.size() > 6) throw ValidationError("line " + std::to_string(lineno) + ": degree " + d + " too large");
    const std::size_t deg = std::stoul(d);
    if (terms.count(deg)) throw ValidationError("line " + std::to_string(lineno) + ": repeated degree " + d);
    terms.emplace(deg, parse_elem(f, cells[1]));
  }
  PolyL g(f);
  for (const auto& [deg, c] : terms) g.add_term(c, deg);
  return g;
}

}  // namespace ltf
