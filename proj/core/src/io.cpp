#include "quasichoice/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "quasichoice/core.hpp"

namespace qc::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string tok;
    while (words >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_count(const Line& line) {
  // expects: n = <int>
  if (line.tokens.size() != 3 || line.tokens[0] != "n" || line.tokens[1] != "=")
    throw ParseError(line.number, "expected 'n = <count>'");
  int value = 0;
  const std::string& s = line.tokens[2];
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line.number, "bad item count '" + s + "'");
  return value;
}

struct Header {
  GrandSet grand;
  std::size_t next;  // index of the first body line
};

bool reserved_name(const std::string& s) { return s == "->" || s == "end"; }

Header parse_header(const std::vector<Line>& lines, const char* tag,
                    int max_items) {
  std::size_t i = 0;
  if (lines.size() < 2 || lines[0].tokens.size() != 2 ||
      lines[0].tokens[0] != tag || lines[0].tokens[1] != "v1")
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     std::string("expected header '") + tag + " v1'");
  ++i;
  int n = parse_count(lines[i]);
  ++i;
  std::vector<std::string> labels;
  if (i < lines.size() && lines[i].tokens[0] == "items") {
    const Line& line = lines[i];
    if (line.tokens.size() < 2 || line.tokens[1] != "=")
      throw ParseError(line.number, "expected 'items = <name> ...'");
    labels.assign(line.tokens.begin() + 2, line.tokens.end());
    for (const auto& l : labels)
      if (reserved_name(l))
        throw ParseError(line.number, "'" + l + "' cannot be an item name");
    ++i;
  }
  try {
    return {GrandSet(n, std::move(labels), max_items), i};
  } catch (const GrandSetTooLarge&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(lines[1].number, e.what());
  }
}

int lookup_item(const GrandSet& grand, const std::string& name, int line) {
  auto item = grand.item_by_name(name);
  if (!item) throw ParseError(line, "unknown item '" + name + "'");
  return *item;
}

Menu parse_menu(const GrandSet& grand,
                std::vector<std::string>::const_iterator begin,
                std::vector<std::string>::const_iterator end, int line) {
  Menu m = 0;
  for (auto it = begin; it != end; ++it) {
    int item = lookup_item(grand, *it, line);
    if (menu_contains(m, item))
      throw ParseError(line, "item '" + *it + "' listed twice");
    m = menu_with(m, item);
  }
  return m;
}

}  // namespace

QuasiChoice parse_qc(std::istream& in, int max_items) {
  auto lines = tokenize(in);
  auto [grand, i] = parse_header(lines, "qc", max_items);

  enum class Default { none, identity, empty };
  Default fill = Default::none;
  if (i < lines.size() && lines[i].tokens[0] == "default") {
    const Line& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[1] != "=")
      throw ParseError(line.number, "expected 'default = none|identity|empty'");
    const std::string& v = line.tokens[2];
    if (v == "none") fill = Default::none;
    else if (v == "identity") fill = Default::identity;
    else if (v == "empty") fill = Default::empty;
    else throw ParseError(line.number, "unknown default '" + v + "'");
    ++i;
  }

  std::vector<Menu> table(grand.menu_count(), 0);
  std::vector<bool> seen(grand.menu_count(), false);
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto arrow = std::find(line.tokens.begin(), line.tokens.end(), "->");
    if (arrow == line.tokens.end())
      throw ParseError(line.number, "expected '<menu> -> <choice>'");
    if (std::find(arrow + 1, line.tokens.end(), "->") != line.tokens.end())
      throw ParseError(line.number, "more than one '->'");
    Menu menu = parse_menu(grand, line.tokens.begin(), arrow, line.number);
    if (menu == 0) throw ParseError(line.number, "empty menu");
    Menu choice = parse_menu(grand, arrow + 1, line.tokens.end(), line.number);
    if (!menu_subset(choice, menu))
      throw ParseError(line.number, "choice is not contained in the menu");
    if (seen[menu])
      throw ParseError(line.number,
                       "menu " + grand.menu_name(menu) + " listed twice");
    seen[menu] = true;
    table[menu] = choice;
  }

  for (Menu a = 1; a < table.size(); ++a) {
    if (seen[a]) continue;
    switch (fill) {
      case Default::none:
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "menu " + grand.menu_name(a) +
                             " is missing (default = none)");
      case Default::identity:
        table[a] = a;
        break;
      case Default::empty:
        break;
    }
  }
  return QuasiChoice(std::move(grand), std::move(table));
}

QuasiChoice parse_qc(std::string_view text, int max_items) {
  std::istringstream in{std::string(text)};
  return parse_qc(in, max_items);
}

std::string serialize_qc(const QuasiChoice& c) {
  std::ostringstream out;
  out << "qc v1\n";
  out << "n = " << c.grand.n << "\n";
  out << "items =";
  for (int i = 0; i < c.grand.n; ++i) out << " " << c.grand.item_name(i);
  out << "\n";
  for (Menu a = 1; a < c.grand.menu_count(); ++a) {
    for (int i = 0; i < c.grand.n; ++i)
      if (menu_contains(a, i)) out << c.grand.item_name(i) << " ";
    out << "->";
    for (int i = 0; i < c.grand.n; ++i)
      if (c.chooses(a, i)) out << " " << c.grand.item_name(i);
    out << "\n";
  }
  return out.str();
}

BallotFamily parse_ballots(std::istream& in, int max_items) {
  auto lines = tokenize(in);
  auto [grand, i] = parse_header(lines, "ballots", max_items);

  std::vector<Ballot> ballots;
  std::vector<Menu> rows(grand.n, 0);
  bool open = false;
  int last_line = lines.empty() ? 1 : lines.back().number;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() == 1 && line.tokens[0] == "end") {
      ballots.push_back(ballot_from_voter(Relation(grand, rows)));
      rows.assign(grand.n, 0);
      open = false;
      continue;
    }
    if (line.tokens.size() != 3 || line.tokens[1] != "->")
      throw ParseError(line.number, "expected '<item> -> <item>' or 'end'");
    int from = lookup_item(grand, line.tokens[0], line.number);
    int to = lookup_item(grand, line.tokens[2], line.number);
    rows[to] = menu_with(rows[to], from);
    open = true;
  }
  if (open) throw ParseError(last_line, "voter block not closed by 'end'");
  if (ballots.empty()) throw ParseError(last_line, "no voter blocks");
  return make_family(std::move(grand), std::move(ballots));
}

BallotFamily parse_ballots(std::string_view text, int max_items) {
  std::istringstream in{std::string(text)};
  return parse_ballots(in, max_items);
}

std::string serialize_ballots(const BallotFamily& family) {
  std::ostringstream out;
  const GrandSet& g = family.grand;
  out << "ballots v1\n";
  out << "n = " << g.n << "\n";
  out << "items =";
  for (int i = 0; i < g.n; ++i) out << " " << g.item_name(i);
  out << "\n";
  for (const auto& member : family.members) {
    for (auto [from, to] : revealed_relation(member->choice).edges())
      out << g.item_name(from) << " -> " << g.item_name(to) << "\n";
    out << "end\n";
  }
  return out.str();
}

std::optional<Share> parse_share(std::string_view text) {
  auto parse_u64 = [](std::string_view s) -> std::optional<std::uint64_t> {
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_u64(text);
    if (!v || *v != 0) return std::nullopt;  // only "0" has no denominator
    return Share(0, 1);
  }
  auto num = parse_u64(text.substr(0, slash));
  auto den = parse_u64(text.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  try {
    return Share(*num, *den);
  } catch (const ShareOutOfRange&) {
    return std::nullopt;
  }
}

}  // namespace qc::io
