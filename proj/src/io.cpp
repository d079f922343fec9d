#include "r0/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "r0/errors.hpp"

namespace r0 {

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Line {
  int no;
  std::string text;
};

std::vector<Line> logical_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string s = strip(raw);
    if (!s.empty()) out.push_back({no, std::move(s)});
  }
  return out;
}

ElementId need_element(const std::map<std::string, ElementId>& index, const std::string& name,
                       int line) {
  auto it = index.find(name);
  if (it == index.end()) throw ParseError("unknown element name '" + name + "'", line);
  return it->second;
}

}  // namespace

Algebra load_algebra(std::istream& in) {
  const std::vector<Line> lines = logical_lines(in);
  if (lines.empty()) throw ParseError("empty algebra file", 1);

  auto head = tokens(lines[0].text);
  if (head.empty() || head[0] != "elements:")
    throw ParseError("first line must be 'elements: <names...>'", lines[0].no);
  std::vector<std::string> names(head.begin() + 1, head.end());
  if (names.size() < 2) throw ParseError("need at least two elements", lines[0].no);
  std::map<std::string, ElementId> index;
  for (size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<ElementId>(i)).second)
      throw ParseError("duplicate element name '" + names[i] + "'", lines[0].no);
  }
  const int n = static_cast<int>(names.size());

  if (lines.size() < 2) throw ParseError("missing 'neg:' line", lines[0].no);
  auto negtok = tokens(lines[1].text);
  if (negtok.empty() || negtok[0] != "neg:")
    throw ParseError("second line must be 'neg: <names...>'", lines[1].no);
  if (static_cast<int>(negtok.size()) - 1 != n)
    throw ParseError("neg row needs exactly " + std::to_string(n) + " entries", lines[1].no);
  std::vector<ElementId> neg;
  for (int i = 0; i < n; ++i) neg.push_back(need_element(index, negtok[i + 1], lines[1].no));

  std::vector<ElementId> arrow(static_cast<size_t>(n) * n, -1);
  std::vector<int> row_seen(n, 0);
  std::vector<std::pair<ElementId, std::vector<ElementId>>> order_rows;

  for (size_t li = 2; li < lines.size(); ++li) {
    auto tok = tokens(lines[li].text);
    const int line = lines[li].no;
    if (tok.size() >= 2 && tok[0] == "arrow" && !tok[1].empty() && tok[1].back() == ':') {
      const std::string row_name = tok[1].substr(0, tok[1].size() - 1);
      const ElementId row = need_element(index, row_name, line);
      if (row_seen[row]) throw ParseError("duplicate arrow row for '" + row_name + "'", line);
      row_seen[row] = 1;
      if (static_cast<int>(tok.size()) - 2 != n)
        throw ParseError("arrow row needs exactly " + std::to_string(n) + " entries", line);
      for (int j = 0; j < n; ++j)
        arrow[row * n + j] = need_element(index, tok[j + 2], line);
    } else if (tok.size() >= 2 && tok[0] == "order" && !tok[1].empty() && tok[1].back() == ':') {
      const std::string row_name = tok[1].substr(0, tok[1].size() - 1);
      const ElementId row = need_element(index, row_name, line);
      std::vector<ElementId> ups;
      for (size_t j = 2; j < tok.size(); ++j) ups.push_back(need_element(index, tok[j], line));
      order_rows.emplace_back(row, std::move(ups));
    } else {
      throw ParseError("expected 'arrow <name>:' or 'order <name>:' line", line);
    }
  }

  for (int i = 0; i < n; ++i)
    if (!row_seen[i])
      throw ParseError("missing arrow row for '" + names[i] + "'", lines.back().no);

  Algebra alg(std::move(names), std::move(neg), std::move(arrow));

  // Declared order rows are cross-checked against the order derived from the
  // arrow table; a mismatch means the file contradicts itself.
  if (!order_rows.empty()) {
    if (!alg.has_order())
      throw StructuralError("order section present but the arrow table yields no order");
    for (const auto& [x, ups] : order_rows) {
      Subset declared = Subset::of(ups, alg.size());
      Subset derived = Subset::empty(alg.size());
      for (int y = 0; y < alg.size(); ++y)
        if (alg.leq(x, y)) derived.add(y);
      if (!(declared == derived))
        throw StructuralError("declared order row for '" + alg.name(x) + "' is " +
                              declared.str(alg) + " but the arrow table derives " +
                              derived.str(alg));
    }
  }
  return alg;
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return load_algebra(in);
}

FuzzySubset load_fuzzy(std::istream& in, const Algebra& alg) {
  const int n = alg.size();
  std::vector<Rat> grade(n);
  std::vector<int> seen(n, 0);
  for (const Line& line : logical_lines(in)) {
    auto eq = line.text.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected '<element> = <grade>'", line.no);
    auto left = tokens(line.text.substr(0, eq));
    auto right = tokens(line.text.substr(eq + 1));
    if (left.size() != 1 || right.size() != 1)
      throw ParseError("expected '<element> = <grade>'", line.no);
    auto id = alg.find(left[0]);
    if (!id) throw ParseError("unknown element name '" + left[0] + "'", line.no);
    if (seen[*id]) throw ParseError("duplicate grade for '" + left[0] + "'", line.no);
    auto r = Rat::parse(right[0]);
    if (!r || !is_grade(*r))
      throw ParseError("grade must be a rational in [0,1], got '" + right[0] + "'", line.no);
    grade[*id] = *r;
    seen[*id] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw ParseError("missing grade for '" + alg.name(i) + "'", 0);
  return FuzzySubset(alg, std::move(grade));
}

FuzzySubset load_fuzzy_file(const std::string& path, const Algebra& alg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return load_fuzzy(in, alg);
}

std::string fuzzy_to_text(const FuzzySubset& mu) {
  std::string out;
  for (int x = 0; x < mu.size(); ++x)
    out += mu.alg->name(x) + " = " + mu(x).str() + "\n";
  return out;
}

void save_fuzzy_file(const std::string& path, const FuzzySubset& mu) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << fuzzy_to_text(mu);
}

Subset parse_subset(const Algebra& alg, const std::string& text) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("subset must be brace-delimited, e.g. {c, d, 1}", 0);
  s = s.substr(1, s.size() - 2);
  Subset out = Subset::empty(alg.size());
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = strip(item);
    if (item.empty()) continue;
    auto id = alg.find(item);
    if (!id) throw ParseError("unknown element name '" + item + "'", 0);
    out.add(*id);
  }
  return out;
}

FilterChain parse_chain(const Algebra& alg, const std::string& text) {
  std::vector<Subset> members;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, '<')) {
    item = strip(item);
    if (item.empty()) continue;
    members.push_back(parse_subset(alg, item));
  }
  return FilterChain::of(alg, std::move(members));
}

IndexedFamily parse_family(const Algebra& alg, const std::string& text, const KParam& k) {
  std::vector<std::pair<Rat, Subset>> entries;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    item = strip(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("family entry must look like '<grade>: {set}'", 0);
    auto r = Rat::parse(strip(item.substr(0, colon)));
    if (!r) throw ParseError("bad family index '" + item.substr(0, colon) + "'", 0);
    entries.emplace_back(*r, parse_subset(alg, item.substr(colon + 1)));
  }
  return IndexedFamily::of(alg, std::move(entries), k);
}

}  // namespace r0
