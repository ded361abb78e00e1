#include "tdouble/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tdouble/error.hpp"

namespace tdouble {

namespace {

struct Token {
  std::string text;
  int col = 1;
};

struct Line {
  int number = 0;
  std::string raw;  // comment stripped
  std::vector<Token> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(pos, end - pos));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, raw, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(ErrorCode code, const std::string& path, int line, int col, const std::string& msg) {
  throw Error(code, path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

[[noreturn]] void fail_at(ErrorCode code, const std::string& path, const Line& l, const Token& t,
                          const std::string& msg) {
  fail(code, path, l.number, t.col, msg);
}

long parse_long(const std::string& path, const Line& l, const Token& t) {
  long v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) fail_at(ErrorCode::ParseError, path, l, t, "expected an integer, got '" + t.text + "'");
  return v;
}

int parse_index(const std::string& path, const Line& l, const Token& t, int bound, const char* what) {
  const long v = parse_long(path, l, t);
  if (v < 0 || v >= bound) {
    fail_at(ErrorCode::CrossrefError, path, l, t, std::string(what) + " " + t.text + " out of range [0, " +
                                                      std::to_string(bound) + ")");
  }
  return static_cast<int>(v);
}

/// `key=value`; returns value or fails.
std::string keyed(const std::string& path, const Line& l, const Token& t, const std::string& key) {
  if (t.text.rfind(key + "=", 0) != 0) fail_at(ErrorCode::ParseError, path, l, t, "expected " + key + "=...");
  return t.text.substr(key.size() + 1);
}

long keyed_long(const std::string& path, const Line& l, const Token& t, const std::string& key) {
  Token v{keyed(path, l, t, key), t.col + static_cast<int>(key.size()) + 1};
  return parse_long(path, l, v);
}

const Line& header(const std::vector<Line>& lines, const std::string& path, const std::string& what) {
  if (lines.empty()) fail(ErrorCode::ParseError, path, 1, 1, "empty file, expected " + what);
  return lines.front();
}

void expect_count(const std::string& path, const Line& l, std::size_t n) {
  if (l.tokens.size() != n) {
    const Token& t = l.tokens.size() > n ? l.tokens[n] : l.tokens.back();
    fail_at(ErrorCode::ParseError, path, l, t,
            "expected " + std::to_string(n) + " fields, got " + std::to_string(l.tokens.size()));
  }
}

std::vector<std::vector<int>> read_rows(const std::vector<Line>& lines, std::size_t first, int rows, int cols,
                                        int bound, const std::string& path, ErrorCode width_code) {
  if (lines.size() - first < static_cast<std::size_t>(rows)) {
    const Line& last = lines.back();
    fail(ErrorCode::ParseError, path, last.number + 1, 1,
         "expected " + std::to_string(rows) + " rows, got " + std::to_string(lines.size() - first));
  }
  if (lines.size() - first > static_cast<std::size_t>(rows)) {
    const Line& extra = lines[first + rows];
    fail_at(ErrorCode::ParseError, path, extra, extra.tokens[0], "unexpected extra row");
  }
  std::vector<std::vector<int>> out;
  for (int r = 0; r < rows; ++r) {
    const Line& l = lines[first + r];
    if (static_cast<int>(l.tokens.size()) != cols) {
      const Token& t = static_cast<int>(l.tokens.size()) > cols ? l.tokens[cols] : l.tokens.back();
      fail_at(width_code, path, l, t,
              "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols));
    }
    std::vector<int> row;
    for (const auto& t : l.tokens) row.push_back(parse_index(path, l, t, bound, "index"));
    out.push_back(std::move(row));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ":0:0: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_decimal(const std::string& s) {
  if (s.empty()) return false;
  if (s.front() == '(') return true;
  if (s.find('.') != std::string::npos) return true;
  return s.find('z') == std::string::npos && (s.find('e') != std::string::npos || s.find('E') != std::string::npos);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------------- group

FiniteGroup parse_group(std::string_view text, const std::string& path, std::string* format) {
  const auto lines = lex(text);
  const Line& h = header(lines, path, "`order N` or `perm`");
  const std::string& kind = h.tokens[0].text;
  if (kind == "order") {
    expect_count(path, h, 2);
    const long n = parse_long(path, h, h.tokens[1]);
    if (n < 1) fail_at(ErrorCode::ParseError, path, h, h.tokens[1], "order must be positive");
    const auto table = read_rows(lines, 1, static_cast<int>(n), static_cast<int>(n), static_cast<int>(n), path,
                                 ErrorCode::ParseError);
    if (format) *format = "group-table/1";
    return FiniteGroup::from_table(table, std::max<int>(kDefaultMaxOrder, static_cast<int>(n)));
  }
  if (kind != "perm") fail_at(ErrorCode::ParseError, path, h, h.tokens[0], "unknown group header '" + kind + "'");
  if (h.tokens.size() > 2) fail_at(ErrorCode::ParseError, path, h, h.tokens[2], "unexpected field");
  int degree = 1;
  if (h.tokens.size() == 2) {
    const long d = parse_long(path, h, h.tokens[1]);
    if (d < 1) fail_at(ErrorCode::ParseError, path, h, h.tokens[1], "degree must be positive");
    degree = static_cast<int>(d);
  }
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    try {
      gens.push_back(parse_cycles(l.raw, degree));
    } catch (const Error& e) {
      fail_at(ErrorCode::ParseError, path, l, l.tokens[0], e.what());
    }
  }
  std::size_t width = static_cast<std::size_t>(degree);
  for (const auto& g : gens) width = std::max(width, g.size());
  for (auto& g : gens) {
    for (std::size_t p = g.size(); p < width; ++p) g.push_back(static_cast<int>(p));
  }
  if (gens.empty()) {
    std::vector<int> id(width);
    for (std::size_t p = 0; p < width; ++p) id[p] = static_cast<int>(p);
    gens.push_back(id);
  }
  if (format) *format = "group-perm/1";
  return FiniteGroup::from_permutations(gens);
}

RightGSet parse_gset(std::string_view text, const FiniteGroup& g, const std::string& path) {
  const auto lines = lex(text);
  const Line& h = header(lines, path, "`size M`");
  if (h.tokens[0].text != "size") fail_at(ErrorCode::ParseError, path, h, h.tokens[0], "expected `size M`");
  expect_count(path, h, 2);
  const long m = parse_long(path, h, h.tokens[1]);
  if (m < 0) fail_at(ErrorCode::ParseError, path, h, h.tokens[1], "size must be non-negative");
  const auto rows =
      read_rows(lines, 1, static_cast<int>(m), g.order(), static_cast<int>(m), path, ErrorCode::CrossrefError);
  return RightGSet::from_table(g, rows);
}

// ------------------------------------------------------------------- cocycles

ParsedCocycle parse_cocycle(std::string_view text, const GroupPtr& g, const GSetPtr& gset, const std::string& path) {
  const auto lines = lex(text);
  const Line& h = header(lines, path, "`cocycle N=<n>` or `setcocycle N=<n>`");
  const std::string& kind = h.tokens[0].text;
  if (kind != "cocycle" && kind != "setcocycle") {
    fail_at(ErrorCode::ParseError, path, h, h.tokens[0], "unknown cocycle header '" + kind + "'");
  }
  expect_count(path, h, 2);
  const long conductor = keyed_long(path, h, h.tokens[1], "N");
  if (conductor < 1) fail_at(ErrorCode::ParseError, path, h, h.tokens[1], "conductor must be positive");
  const bool set = kind == "setcocycle";
  if (set && !gset) fail_at(ErrorCode::CrossrefError, path, h, h.tokens[0], "set cocycle needs a G-set file");
  const int n = g->order();
  const int points = set ? gset->size() : 1;
  std::vector<long> exps(static_cast<std::size_t>(points) * n * n, 0);
  std::vector<bool> seen(exps.size(), false);
  const std::size_t width = set ? 4 : 3;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_count(path, l, width);
    std::size_t c = 0;
    const int s = set ? parse_index(path, l, l.tokens[c++], points, "point") : 0;
    const int x = parse_index(path, l, l.tokens[c++], n, "element");
    const int y = parse_index(path, l, l.tokens[c++], n, "element");
    const long k = parse_long(path, l, l.tokens[c]);
    const std::size_t at = (static_cast<std::size_t>(s) * n + x) * n + y;
    if (seen[at]) fail_at(ErrorCode::ParseError, path, l, l.tokens[0], "duplicate entry");
    seen[at] = true;
    exps[at] = ((k % conductor) + conductor) % conductor;
  }
  ParsedCocycle out;
  if (!set) {
    out.plain = TwoCocycle(g, static_cast<int>(conductor), std::move(exps));
    return out;
  }
  SetCocycle alpha(g, gset, static_cast<int>(conductor));
  for (int s = 0; s < points; ++s) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) alpha.set_exponent(s, x, y, exps[(static_cast<std::size_t>(s) * n + x) * n + y]);
    }
  }
  out.set = std::move(alpha);
  return out;
}

// -------------------------------------------------------------------- family

StableFamily parse_family(std::string_view text, const GroupPtr& g, const GSetPtr& gset, const std::string& path) {
  const auto lines = lex(text);
  const Line& h = header(lines, path, "`family labels=K`");
  if (h.tokens[0].text != "family") fail_at(ErrorCode::ParseError, path, h, h.tokens[0], "expected `family labels=K`");
  expect_count(path, h, 2);
  const long k = keyed_long(path, h, h.tokens[1], "labels");
  StableFamily f;
  f.group = g;
  f.labels_action = gset ? gset : std::make_shared<const RightGSet>(RightGSet::trivial(*g, 1));
  const int points = f.labels_action->size();
  if (k != points) {
    fail_at(ErrorCode::CrossrefError, path, h, h.tokens[1],
            "family has " + std::to_string(k) + " labels but the G-set has " + std::to_string(points) + " points");
  }
  const int n = g->order();
  f.labels.assign(points, "");
  f.dims.assign(points, -1);
  f.levels.assign(points, {});
  std::vector<std::vector<CycMatrix>> exact(points, std::vector<CycMatrix>(n));
  std::vector<std::vector<Eigen::MatrixXcd>> numeric(points, std::vector<Eigen::MatrixXcd>(n));
  std::vector<std::vector<bool>> given(points, std::vector<bool>(n, false));
  bool all_exact = true;
  bool in_blocks = false;

  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& l = lines[i];
    const std::string& kind = l.tokens[0].text;
    if (kind == "label") {
      if (in_blocks) fail_at(ErrorCode::ParseError, path, l, l.tokens[0], "labels must precede phi blocks");
      if (l.tokens.size() < 3) fail_at(ErrorCode::ParseError, path, l, l.tokens.back(), "expected `label <s> dim=<d>`");
      const int s = parse_index(path, l, l.tokens[1], points, "label");
      if (f.dims[s] >= 0) fail_at(ErrorCode::ParseError, path, l, l.tokens[1], "label declared twice");
      const long d = keyed_long(path, l, l.tokens[2], "dim");
      if (d < 0) fail_at(ErrorCode::ParseError, path, l, l.tokens[2], "dimension must be non-negative");
      f.dims[s] = static_cast<int>(d);
      f.labels[s] = "M" + std::to_string(s);
      f.levels[s] = {static_cast<int>(d)};
      for (std::size_t t = 3; t < l.tokens.size(); ++t) {
        const Token& tok = l.tokens[t];
        if (tok.text.rfind("name=", 0) == 0) {
          f.labels[s] = tok.text.substr(5);
        } else if (tok.text.rfind("levels=", 0) == 0) {
          f.levels[s].clear();
          std::stringstream ss(tok.text.substr(7));
          std::string part;
          long total = 0;
          while (std::getline(ss, part, ',')) {
            const long v = parse_long(path, l, Token{part, tok.col + 7});
            if (v < 0) fail_at(ErrorCode::ParseError, path, l, tok, "negative level dimension");
            f.levels[s].push_back(static_cast<int>(v));
            total += v;
          }
          if (total != d) fail_at(ErrorCode::ParseError, path, l, tok, "levels do not sum to dim");
        } else {
          fail_at(ErrorCode::ParseError, path, l, tok, "unknown label attribute '" + tok.text + "'");
        }
      }
      ++i;
      continue;
    }
    if (kind != "phi") fail_at(ErrorCode::ParseError, path, l, l.tokens[0], "expected `label` or `phi`");
    if (!in_blocks) {
      for (int s = 0; s < points; ++s) {
        if (f.dims[s] < 0) fail_at(ErrorCode::CrossrefError, path, l, l.tokens[0], "label " + std::to_string(s) + " not declared");
      }
      in_blocks = true;
    }
    expect_count(path, l, 3);
    const int s = parse_index(path, l, l.tokens[1], points, "label");
    const Element x = parse_index(path, l, l.tokens[2], n, "element");
    if (given[s][x]) fail_at(ErrorCode::ParseError, path, l, l.tokens[0], "phi block given twice");
    given[s][x] = true;
    const int target = f.labels_action->act(s, g->inv(x));
    const int rows = f.dims[s] == 0 ? 0 : f.dims[target];
    const int cols = f.dims[s];
    if (lines.size() - i - 1 < static_cast<std::size_t>(rows)) {
      fail(ErrorCode::ParseError, path, lines.back().number + 1, 1, "phi block ends early");
    }
    CycMatrix e(f.dims[target], cols);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(f.dims[target], cols);
    for (int r = 0; r < rows; ++r) {
      const Line& row = lines[i + 1 + r];
      if (static_cast<int>(row.tokens.size()) != cols) {
        fail_at(ErrorCode::ParseError, path, row, row.tokens[0],
                "phi row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(cols));
      }
      for (int c = 0; c < cols; ++c) {
        const Token& t = row.tokens[c];
        if (looks_decimal(t.text)) {
          all_exact = false;
          double re = 0, im = 0;
          bool ok;
          if (t.text.front() == '(') {
            const auto comma = t.text.find(',');
            ok = t.text.back() == ')' && comma != std::string::npos &&
                 parse_double(t.text.substr(1, comma - 1), re) &&
                 parse_double(t.text.substr(comma + 1, t.text.size() - comma - 2), im);
          } else {
            ok = parse_double(t.text, re);
          }
          if (!ok) fail_at(ErrorCode::ParseError, path, row, t, "bad decimal entry '" + t.text + "'");
          z(r, c) = {re, im};
        } else {
          try {
            e(r, c) = parse_cyc(t.text);
          } catch (const Error& err) {
            fail_at(ErrorCode::ParseError, path, row, t, err.what());
          }
          z(r, c) = e(r, c).to_complex();
        }
      }
    }
    exact[s][x] = std::move(e);
    numeric[s][x] = std::move(z);
    i += 1 + rows;
  }
  for (int s = 0; s < points; ++s) {
    if (f.dims[s] < 0) fail(ErrorCode::CrossrefError, path, h.number, 1, "label " + std::to_string(s) + " not declared");
  }
  for (int s = 0; s < points; ++s) {
    for (Element x = 0; x < n; ++x) {
      if (given[s][x]) continue;
      if (x != g->identity()) {
        fail(ErrorCode::CrossrefError, path, lines.back().number, 1,
             "missing phi " + std::to_string(s) + " " + std::to_string(x));
      }
      exact[s][x] = CycMatrix::identity(f.dims[s]);
      numeric[s][x] = Eigen::MatrixXcd::Identity(f.dims[s], f.dims[s]);
    }
  }
  if (all_exact) {
    f.exact = std::move(exact);
    f.sync_numeric();
  } else {
    f.numeric = std::move(numeric);
  }
  f.check_shapes();
  return f;
}

// -------------------------------------------------------------------- writers

std::string write_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  return out.str();
}

std::string write_gset(const RightGSet& s) {
  std::ostringstream out;
  out << "size " << s.size() << "\n";
  for (int p = 0; p < s.size(); ++p) {
    for (Element x = 0; x < s.group_order(); ++x) out << (x ? " " : "") << s.act(p, x);
    out << "\n";
  }
  return out.str();
}

std::string write_cocycle(const TwoCocycle& alpha) {
  std::ostringstream out;
  out << "cocycle N=" << alpha.conductor() << "\n";
  const int n = alpha.group()->order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (alpha.exponent(x, y) != 0) out << x << " " << y << " " << alpha.exponent(x, y) << "\n";
    }
  }
  return out.str();
}

std::string write_cocycle(const SetCocycle& alpha) {
  std::ostringstream out;
  out << "setcocycle N=" << alpha.conductor() << "\n";
  const int n = alpha.group()->order();
  for (int s = 0; s < alpha.gset()->size(); ++s) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (alpha.exponent(s, x, y) != 0) out << s << " " << x << " " << y << " " << alpha.exponent(s, x, y) << "\n";
      }
    }
  }
  return out.str();
}

std::string write_family(const StableFamily& f) {
  if (!f.is_exact()) throw Error(ErrorCode::Unsupported, "only exact families can be written");
  std::ostringstream out;
  out << "family labels=" << f.size() << "\n";
  for (int s = 0; s < f.size(); ++s) {
    out << "label " << s << " dim=" << f.dims[s] << " name=" << f.labels[s] << " levels=";
    for (std::size_t i = 0; i < f.levels[s].size(); ++i) out << (i ? "," : "") << f.levels[s][i];
    out << "\n";
  }
  const FiniteGroup& g = *f.group;
  for (int s = 0; s < f.size(); ++s) {
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity() || f.dims[s] == 0) continue;
      out << "phi " << s << " " << x << "\n";
      const CycMatrix& m = f.exact[s][x];
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
          std::string v = m(r, c).str();
          v.erase(std::remove(v.begin(), v.end(), ' '), v.end());
          out << (c ? " " : "") << v;
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

// ------------------------------------------------------------------ workspace

Workspace load_workspace(const InputPaths& paths) {
  if (paths.group.empty()) throw Error(ErrorCode::CrossrefError, "a group file is required (--group)");
  Workspace w;
  auto record = [&](const std::string& kind, const std::string& path, const std::string& text, std::string format) {
    w.sources.push_back({kind, path, std::move(format), fnv1a(text)});
  };
  {
    const std::string text = read_file(paths.group);
    std::string format;
    w.group = std::make_shared<const FiniteGroup>(parse_group(text, paths.group, &format));
    record("group", paths.group, text, format);
  }
  if (!paths.gset.empty()) {
    const std::string text = read_file(paths.gset);
    w.gset = std::make_shared<const RightGSet>(parse_gset(text, *w.group, paths.gset));
    record("gset", paths.gset, text, "gset/1");
  }
  if (!paths.cocycle.empty()) {
    const std::string text = read_file(paths.cocycle);
    auto parsed = parse_cocycle(text, w.group, w.gset, paths.cocycle);
    w.cocycle = std::move(parsed.plain);
    w.set_cocycle = std::move(parsed.set);
    record("cocycle", paths.cocycle, text, w.set_cocycle ? "setcocycle/1" : "cocycle/1");
  }
  if (!paths.family.empty()) {
    const std::string text = read_file(paths.family);
    w.family = parse_family(text, w.group, w.gset, paths.family);
    record("family", paths.family, text, "family/1");
  }
  return w;
}

}  // namespace tdouble
