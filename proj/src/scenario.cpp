#include "orbicalc/scenario.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "orbicalc/dynkin.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/obstruction.hpp"
#include "orbicalc/orbifold.hpp"
#include "orbicalc/seifert.hpp"
#include "orbicalc/smale_barden.hpp"
#include "orbicalc/surface.hpp"

namespace orbicalc {

namespace {

using Vars = std::map<std::string, Rat>;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Rat rat_pow(Rat base, Int e) {
  bool neg = e < 0;
  if (neg) e = -e;
  Rat r = 1;
  for (Int i = 0; i < e; ++i) r *= base;
  if (neg) {
    if (r == 0) throw DivisionByZero("0 raised to a negative power");
    r = 1 / r;
  }
  return r;
}

/// Recursive-descent arithmetic over exact rationals: + - * / ^ ( ),
/// decimal integers and named variables.
class Expr {
 public:
  Expr(const std::string& s, const Vars& vars) : s_(s), vars_(vars) {}

  Rat parse() {
    Rat v = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input in expression: " + s_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Rat sum() {
    Rat v = prod();
    for (;;) {
      if (eat('+')) v += prod();
      else if (eat('-')) v -= prod();
      else return v;
    }
  }
  Rat prod() {
    Rat v = power();
    for (;;) {
      if (eat('*')) v *= power();
      else if (eat('/')) {
        Rat d = power();
        if (d == 0) throw DivisionByZero("division by zero in expression: " + s_);
        v /= d;
      } else {
        return v;
      }
    }
  }
  Rat power() {
    Rat v = unary();
    if (eat('^')) {
      Rat e = unary();  // right-associativity is irrelevant at these sizes
      if (denominator(e) != 1) throw ParseError("non-integer exponent in: " + s_);
      return rat_pow(v, numerator(e));
    }
    return v;
  }
  Rat unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  Rat primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression: " + s_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rat v = sum();
      if (!eat(')')) throw ParseError("missing ')' in expression: " + s_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rat(Int(s_.substr(start, pos_ - start)));
    }
    if (is_ident_char(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = vars_.find(name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "' in: " + s_);
      return it->second;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in expression: " + s_);
  }

  const std::string& s_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

Rat eval_rat(const std::string& s, const Vars& vars) { return Expr(s, vars).parse(); }

Int eval_int(const std::string& s, const Vars& vars) {
  Rat v = eval_rat(s, vars);
  if (denominator(v) != 1) throw ParseError("expected an integer, got " + rat_str(v));
  return numerator(v);
}

/// Splits on top-level commas (ignoring commas inside parentheses).
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Replaces {expr} spans with their integer value and expands {lo..hi}
/// ranges: the surrounding token is repeated for each value, comma-joined
/// (e.g. C{1..3} -> C1,C2,C3).
std::string substitute(const std::string& line, const Vars& vars, int lineno) {
  std::string out = line;
  for (;;) {
    std::size_t open = out.find('{');
    if (open == std::string::npos) return out;
    std::size_t close = out.find('}', open);
    if (close == std::string::npos) parse_fail(lineno, "unmatched '{'");
    std::string inner = out.substr(open + 1, close - open - 1);
    std::size_t dots = inner.find("..");
    if (dots != std::string::npos) {
      Int lo = eval_int(inner.substr(0, dots), vars);
      Int hi = eval_int(inner.substr(dots + 2), vars);
      // token boundaries: whitespace, comma or '='
      std::size_t tok_start = open;
      while (tok_start > 0 && !std::isspace(static_cast<unsigned char>(out[tok_start - 1])) &&
             out[tok_start - 1] != ',' && out[tok_start - 1] != '=')
        --tok_start;
      std::size_t tok_end = close + 1;
      while (tok_end < out.size() && !std::isspace(static_cast<unsigned char>(out[tok_end])) &&
             out[tok_end] != ',' && out[tok_end] != '=')
        ++tok_end;
      std::string prefix = out.substr(tok_start, open - tok_start);
      std::string suffix = out.substr(close + 1, tok_end - close - 1);
      std::string list;
      for (Int v = lo; v <= hi; ++v) {
        if (!list.empty()) list += ",";
        list += prefix + v.str() + suffix;
      }
      if (lo > hi) parse_fail(lineno, "empty range {" + inner + "}");
      out = out.substr(0, tok_start) + list + out.substr(tok_end);
    } else {
      Int v = eval_int(inner, vars);
      out = out.substr(0, open) + v.str() + out.substr(close + 1);
    }
  }
}

/// Whitespace tokenizer keeping "quoted strings" (quotes stripped) intact.
std::vector<std::string> tokenize(const std::string& line, int lineno) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) parse_fail(lineno, "unterminated string");
      toks.push_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back(line.substr(start, i - start));
    }
  }
  return toks;
}

/// Group literals: sums of Z, Z^k, Z_m, Z_m^c and
/// `prod i=lo..hi of Z_(expr)^expr`; `0` is the trivial group.
class GroupParser {
 public:
  GroupParser(const std::string& s, Vars vars) : s_(s), vars_(std::move(vars)) {}

  FgAbelianGroup parse() {
    FgAbelianGroup g;
    term(g);
    skip();
    while (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      term(g);
      skip();
    }
    if (pos_ != s_.size()) throw ParseError("trailing input in group literal: " + s_);
    g.normalize();
    return g;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string atom() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      int depth = 0;
      std::size_t start = pos_;
      do {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      } while (pos_ < s_.size() && depth > 0);
      if (depth > 0) throw ParseError("missing ')' in group literal: " + s_);
      return s_.substr(start, pos_ - start);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected a value in group literal: " + s_);
    return s_.substr(start, pos_ - start);
  }

  void term(FgAbelianGroup& g) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      ++pos_;
      return;
    }
    if (s_.compare(pos_, 5, "prod ") == 0) {
      pos_ += 5;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string var = s_.substr(start, pos_ - start);
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '=') throw ParseError("prod wants var=lo..hi: " + s_);
      ++pos_;
      start = pos_;
      std::size_t dots = s_.find("..", pos_);
      if (dots == std::string::npos) throw ParseError("prod wants lo..hi: " + s_);
      Int lo = eval_int(s_.substr(start, dots - start), vars_);
      pos_ = dots + 2;
      start = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int hi = eval_int(s_.substr(start, pos_ - start), vars_);
      skip();
      if (s_.compare(pos_, 3, "of ") != 0) throw ParseError("prod wants 'of <term>': " + s_);
      pos_ += 3;
      std::size_t body = pos_;
      for (Int v = lo; v <= hi; ++v) {
        pos_ = body;
        vars_[var] = Rat(v);
        term(g);
      }
      vars_.erase(var);
      return;
    }
    if (pos_ >= s_.size() || s_[pos_] != 'Z')
      throw ParseError("expected Z term in group literal: " + s_);
    ++pos_;
    Int order = 0;  // 0 means free part
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      order = eval_int(atom(), vars_);
    }
    Int copies = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      copies = eval_int(atom(), vars_);
    }
    if (copies < 0) throw ParseError("negative multiplicity in group literal: " + s_);
    if (order == 0)
      g.free_rank += copies;
    else
      g.add_cyclic(order, static_cast<unsigned>(copies));
  }

  std::string s_;
  Vars vars_;
  std::size_t pos_ = 0;
};

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Executes a scenario line by line.
struct Runner {
  const RunOptions& opts;
  Report report;

  Vars vars;
  std::vector<std::string> declared_params;

  std::map<std::string, SurfaceModel> surfaces;
  std::map<std::string, OrbifoldSurface> orbifolds;
  std::map<std::string, SeifertData> seiferts;
  std::map<std::string, H1Verdict> verdicts;
  std::map<std::string, FgAbelianGroup> groups;
  std::map<std::string, SmaleBardenInvariants> invariants;
  std::map<std::string, DynkinConfiguration> dynkins;
  std::map<std::string, std::vector<FiberData>> fiber_sets;
  std::map<std::string, std::vector<TorusPairCandidate>> searches;
  std::map<std::string, SumRelationCheck> derivations;

  explicit Runner(const RunOptions& o) : opts(o) {}

  void ensure_fresh(const std::string& name, int lineno) {
    if (surfaces.count(name) || orbifolds.count(name) || seiferts.count(name) ||
        verdicts.count(name) || groups.count(name) || invariants.count(name) ||
        dynkins.count(name) || fiber_sets.count(name) || searches.count(name) ||
        derivations.count(name))
      parse_fail(lineno, "name already in use: " + name);
  }

  void run(const std::string& source) {
    // join backslash-continued lines, strip comments outside quotes
    std::vector<std::pair<int, std::string>> lines;
    {
      std::istringstream in(source);
      std::string raw;
      int lineno = 0, start = 0;
      std::string acc;
      while (std::getline(in, raw)) {
        ++lineno;
        if (acc.empty()) start = lineno;
        bool quoted = false;
        std::string stripped;
        for (char c : raw) {
          if (c == '"') quoted = !quoted;
          if (c == '#' && !quoted) break;
          stripped += c;
        }
        stripped = trim(stripped);
        if (!stripped.empty() && stripped.back() == '\\') {
          acc += stripped.substr(0, stripped.size() - 1);
          continue;
        }
        acc += stripped;
        if (!trim(acc).empty()) lines.emplace_back(start, trim(acc));
        acc.clear();
      }
      if (!trim(acc).empty()) lines.emplace_back(start, trim(acc));
    }
    for (const auto& [lineno, line] : lines) process(line, lineno);
    for (const auto& [k, v] : opts.params)
      if (std::find(declared_params.begin(), declared_params.end(), k) == declared_params.end())
        throw ParseError("unknown parameter override: " + k + "=" + v);
  }

  void process(const std::string& line, int lineno) {
    if (line.rfind("repeat ", 0) == 0) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) parse_fail(lineno, "repeat needs ':'");
      std::string head = line.substr(7, colon - 7);
      std::string body = trim(line.substr(colon + 1));
      std::size_t eq = head.find('=');
      std::size_t dots = head.find("..");
      if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        parse_fail(lineno, "repeat wants var=lo..hi");
      std::string var = trim(head.substr(0, eq));
      Int lo = eval_int(substitute(head.substr(eq + 1, dots - eq - 1), vars, lineno), vars);
      Int hi = eval_int(substitute(head.substr(dots + 2), vars, lineno), vars);
      std::optional<Rat> saved;
      if (auto it = vars.find(var); it != vars.end()) saved = it->second;
      for (Int v = lo; v <= hi; ++v) {
        vars[var] = Rat(v);
        process(body, lineno);
      }
      if (saved)
        vars[var] = *saved;
      else
        vars.erase(var);
      return;
    }
    std::string concrete = substitute(line, vars, lineno);
    auto toks = tokenize(concrete, lineno);
    if (toks.empty()) return;
    try {
      exec(toks, concrete, lineno);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw StepError("line " + std::to_string(lineno) + " (" + concrete + "): " + e.what());
    }
  }

  const std::string& arg(const std::vector<std::string>& t, std::size_t i, int lineno) {
    if (i >= t.size()) parse_fail(lineno, "directive '" + t[0] + "' is missing arguments");
    return t[i];
  }

  std::string join(const std::vector<std::string>& t, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to && i < t.size(); ++i) {
      if (!s.empty()) s += " ";
      s += t[i];
    }
    return s;
  }

  /// Finds `key` and returns the following token.
  std::optional<std::string> keyed(const std::vector<std::string>& t, const std::string& key) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] == key) return t[i + 1];
    return std::nullopt;
  }

  IntVec parse_combo(const std::string& s, const SurfaceModel& surf, int lineno) {
    IntVec v(surf.rank());
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    bool first = true;
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      Int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
        skip_ws();
      } else if (!first) {
        parse_fail(lineno, "expected '+' or '-' in class: " + s);
      }
      first = false;
      Int coef = 1;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        coef = Int(s.substr(st, i - st));
        if (i < s.size() && s[i] == '*') ++i;
        skip_ws();
      }
      std::size_t st = i;
      while (i < s.size() && is_ident_char(s[i])) ++i;
      if (st == i) parse_fail(lineno, "expected basis label in class: " + s);
      std::string label = s.substr(st, i - st);
      const auto& labels = surf.basis_labels();
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) parse_fail(lineno, "unknown basis label: " + label);
      v[static_cast<std::size_t>(it - labels.begin())] += sign * coef;
    }
    return v;
  }

  SurfaceModel& surface_of(const std::string& name, int lineno) {
    auto it = surfaces.find(name);
    if (it == surfaces.end()) parse_fail(lineno, "unknown surface: " + name);
    return it->second;
  }
  OrbifoldSurface& orbifold_of(const std::string& name, int lineno) {
    auto it = orbifolds.find(name);
    if (it == orbifolds.end()) parse_fail(lineno, "unknown orbifold: " + name);
    return it->second;
  }
  SeifertData& seifert_of(const std::string& name, int lineno) {
    auto it = seiferts.find(name);
    if (it == seiferts.end()) parse_fail(lineno, "unknown Seifert bundle: " + name);
    return it->second;
  }

  void exec(const std::vector<std::string>& t, const std::string& text, int lineno) {
    const std::string& d = t[0];
    if (d == "scenario") {
      report.scenario_name = arg(t, 1, lineno);
      return;
    }
    if (d == "description") return;
    if (d == "param") {
      // param name = default
      std::string rest = join(t, 1, t.size());
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) parse_fail(lineno, "param wants name = value");
      std::string name = trim(rest.substr(0, eq));
      std::string value = trim(rest.substr(eq + 1));
      auto ov = opts.params.find(name);
      if (ov != opts.params.end()) value = ov->second;
      Int v = eval_int(value, vars);
      vars[name] = Rat(v);
      declared_params.push_back(name);
      report.params.emplace_back(name, v.str());
      return;
    }
    if (d == "fact") {
      if (t.size() < 4 || t[2] != "cite") parse_fail(lineno, "fact wants \"text\" cite \"ref\"");
      report.facts.push_back({t[1], t[3]});
      return;
    }
    if (d == "note") {
      report.notes.push_back(join(t, 1, t.size()));
      return;
    }

    report.steps.push_back(text);

    if (d == "surface") {
      // surface NAME = P2 | hirzebruch n=.. convention=.. | lattice basis=.. gram=.. K=..
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      const std::string& kind = arg(t, 3, lineno);
      if (kind == "P2") {
        surfaces.emplace(name, SurfaceModel::projective_plane());
      } else if (kind == "hirzebruch") {
        Int n = -1;
        std::string conv = "negative";
        for (std::size_t i = 4; i < t.size(); ++i) {
          std::size_t eq = t[i].find('=');
          if (eq == std::string::npos) parse_fail(lineno, "hirzebruch wants k=v args");
          std::string k = t[i].substr(0, eq), v = t[i].substr(eq + 1);
          if (k == "n") n = eval_int(v, vars);
          else if (k == "convention") conv = v;
          else parse_fail(lineno, "unknown hirzebruch argument: " + k);
        }
        if (n < 0) parse_fail(lineno, "hirzebruch wants n=<integer >= 0>");
        if (conv != "negative" && conv != "positive")
          parse_fail(lineno, "convention must be negative or positive");
        surfaces.emplace(name, SurfaceModel::hirzebruch(
                                   n, conv == "negative" ? HirzebruchConvention::NegativeSection
                                                         : HirzebruchConvention::PositiveSection));
      } else if (kind == "lattice") {
        std::optional<std::string> basis_kv, gram_kv, k_kv;
        for (std::size_t i = 4; i < t.size(); ++i) {
          std::size_t eq = t[i].find('=');
          if (eq == std::string::npos) parse_fail(lineno, "lattice wants basis=, gram=, K=");
          std::string k = t[i].substr(0, eq), v = t[i].substr(eq + 1);
          if (k == "basis") basis_kv = v;
          else if (k == "gram") gram_kv = v;
          else if (k == "K") k_kv = v;
          else parse_fail(lineno, "unknown lattice argument: " + k);
        }
        if (!basis_kv || !gram_kv || !k_kv) parse_fail(lineno, "lattice wants basis=, gram=, K=");
        std::vector<std::string> labels = split_commas(*basis_kv);
        std::vector<std::string> rows;
        {
          std::string cur;
          for (char c : *gram_kv)
            if (c == ';') {
              rows.push_back(cur);
              cur.clear();
            } else cur += c;
          rows.push_back(cur);
        }
        IntMatrix gram(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          auto cells = split_commas(rows[i]);
          if (cells.size() != rows.size()) parse_fail(lineno, "gram matrix is not square");
          for (std::size_t j = 0; j < cells.size(); ++j) gram.at(i, j) = eval_int(cells[j], vars);
        }
        IntVec canonical;
        for (const auto& c : split_commas(*k_kv)) canonical.push_back(eval_int(c, vars));
        surfaces.emplace(name, SurfaceModel::from_lattice(std::move(gram), std::move(canonical),
                                                          std::move(labels)));
      } else {
        parse_fail(lineno, "unknown surface kind: " + kind);
      }
      return;
    }
    if (d == "curve") {
      // curve SURF NAME = <combo> genus <expr>
      SurfaceModel& s = surface_of(arg(t, 1, lineno), lineno);
      const std::string& name = arg(t, 2, lineno);
      std::size_t g_at = t.size();
      for (std::size_t i = 4; i < t.size(); ++i)
        if (t[i] == "genus") g_at = i;
      if (g_at == t.size()) parse_fail(lineno, "curve wants 'genus <value>'");
      IntVec vec = parse_combo(join(t, 4, g_at), s, lineno);
      s.add_curve(name, std::move(vec), eval_int(join(t, g_at + 1, t.size()), vars));
      return;
    }
    if (d == "blowup") {
      // blowup SURF ENAME [through a,b,c]
      SurfaceModel& s = surface_of(arg(t, 1, lineno), lineno);
      BlowUpSpec spec;
      spec.exceptional_name = arg(t, 2, lineno);
      if (t.size() > 3) {
        if (t[3] != "through") parse_fail(lineno, "blowup wants 'through a,b,...'");
        spec.through = split_commas(arg(t, 4, lineno));
      }
      s = s.blow_up(spec);
      return;
    }
    if (d == "blowdown") {
      SurfaceModel& s = surface_of(arg(t, 1, lineno), lineno);
      s = s.blow_down(arg(t, 2, lineno));
      return;
    }
    if (d == "contract") {
      // contract NEW = OBJ chain a,b,c
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      const std::string& src = arg(t, 3, lineno);
      if (arg(t, 4, lineno) != "chain") parse_fail(lineno, "contract wants 'chain a,b,...'");
      auto chain = split_commas(arg(t, 5, lineno));
      if (surfaces.count(src))
        orbifolds.emplace(name, contract_chain(surfaces.at(src), chain));
      else
        orbifolds.emplace(name, contract_chain(orbifold_of(src, lineno), chain));
      return;
    }
    if (d == "declare_intersection") {
      orbifold_of(arg(t, 1, lineno), lineno)
          .declare_intersection(arg(t, 2, lineno), arg(t, 3, lineno));
      return;
    }
    if (d == "isotropy") {
      // isotropy ORB DIVISOR = <expr>
      OrbifoldSurface& x = orbifold_of(arg(t, 1, lineno), lineno);
      if (arg(t, 3, lineno) != "=") parse_fail(lineno, "isotropy wants 'isotropy X D = m'");
      x = assign_isotropy(x, {{t[2], eval_int(join(t, 4, t.size()), vars)}});
      return;
    }
    if (d == "seifert") {
      // seifert NAME = ORB [blocal D=1,D2=3]
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      OrbifoldSurface& x = orbifold_of(arg(t, 3, lineno), lineno);
      std::vector<std::pair<std::string, Int>> locals;
      if (auto bl = keyed(t, "blocal"))
        for (const auto& item : split_commas(*bl)) {
          std::size_t eq = item.find('=');
          if (eq == std::string::npos) parse_fail(lineno, "blocal wants D=value items");
          locals.emplace_back(item.substr(0, eq), eval_int(item.substr(eq + 1), vars));
        }
      seiferts.emplace(name, make_seifert(x, locals));
      return;
    }
    if (d == "testclasses") {
      // testclasses SEIF identity cite "ref"
      SeifertData& s = seifert_of(arg(t, 1, lineno), lineno);
      if (arg(t, 2, lineno) != "identity" || arg(t, 3, lineno) != "cite")
        parse_fail(lineno, "testclasses wants 'identity cite \"ref\"'");
      const std::string& cite = arg(t, 4, lineno);
      for (std::size_t i = 0; i < s.isotropy.size(); ++i) {
        IntVec row(s.isotropy.size());
        row[i] = 1;
        s.test_classes.push_back({"T" + std::to_string(i + 1), std::move(row), cite});
      }
      report.facts.push_back(
          {"declared: integral classes pair as the identity with the isotropy divisors", cite});
      return;
    }
    if (d == "testclass") {
      // testclass SEIF NAME pairs a,b,c cite "ref"
      SeifertData& s = seifert_of(arg(t, 1, lineno), lineno);
      if (arg(t, 3, lineno) != "pairs") parse_fail(lineno, "testclass wants 'pairs a,b,... cite'");
      IntVec row;
      for (const auto& c : split_commas(arg(t, 4, lineno))) row.push_back(eval_int(c, vars));
      if (arg(t, 5, lineno) != "cite") parse_fail(lineno, "testclass wants a citation");
      s.test_classes.push_back({t[2], std::move(row), t[6]});
      report.facts.push_back({"declared: pairings of the class " + t[2], t[6]});
      return;
    }
    if (d == "primitivity") {
      // primitivity SEIF cite "ref"
      SeifertData& s = seifert_of(arg(t, 1, lineno), lineno);
      if (arg(t, 2, lineno) != "cite") parse_fail(lineno, "primitivity wants cite \"ref\"");
      s.primitivity_citation = arg(t, 3, lineno);
      report.facts.push_back({"declared: the Chern class of the bundle is primitive", t[3]});
      return;
    }
    if (d == "h1check") {
      // h1check NAME = SEIF cite "ref"   (the citation declares H_1(X) = 0)
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      SeifertData& s = seifert_of(arg(t, 3, lineno), lineno);
      if (arg(t, 4, lineno) != "cite") parse_fail(lineno, "h1check wants cite \"ref\"");
      report.facts.push_back({"declared: H_1 of the base orbifold vanishes", t[5]});
      verdicts.emplace(name, check_h1_zero(s, true));
      return;
    }
    if (d == "h2group") {
      // h2group NAME = SEIF VERDICT
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      SeifertData& s = seifert_of(arg(t, 3, lineno), lineno);
      auto it = verdicts.find(arg(t, 4, lineno));
      if (it == verdicts.end()) parse_fail(lineno, "unknown h1 verdict: " + t[4]);
      groups.emplace(name, h2_total_space(s, it->second));
      return;
    }
    if (d == "group") {
      // group NAME = <literal>
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      groups.emplace(name, GroupParser(join(t, 3, t.size()), vars).parse());
      return;
    }
    if (d == "invariants") {
      // invariants NAME = GROUP spin true|false barden 0|infinity|<int>
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      auto git = groups.find(arg(t, 3, lineno));
      if (git == groups.end()) parse_fail(lineno, "unknown group: " + t[3]);
      auto spin_s = keyed(t, "spin");
      auto barden_s = keyed(t, "barden");
      if (!spin_s || !barden_s) parse_fail(lineno, "invariants wants spin and barden");
      bool spin = *spin_s == "true";
      if (!spin && *spin_s != "false") parse_fail(lineno, "spin must be true or false");
      BardenInvariant bi = *barden_s == "infinity" ? BardenInvariant::infinity()
                           : *barden_s == "0"      ? BardenInvariant::zero()
                                                   : BardenInvariant::other(eval_int(*barden_s, vars));
      invariants.emplace(name, invariants_from_group(git->second, spin, bi));
      return;
    }
    if (d == "dynkin") {
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      dynkins.emplace(name, parse_dynkin(join(t, 3, t.size())));
      return;
    }
    if (d == "fibers") {
      ensure_fresh(arg(t, 1, lineno), lineno);
      fiber_sets.emplace(t[1], std::vector<FiberData>{});
      return;
    }
    if (d == "fiber") {
      // fiber SET NAME = [count x]mult:in|out,...
      auto it = fiber_sets.find(arg(t, 1, lineno));
      if (it == fiber_sets.end()) parse_fail(lineno, "unknown fiber set: " + t[1]);
      FiberData f;
      f.name = arg(t, 2, lineno);
      for (const auto& item : split_commas(arg(t, 4, lineno))) {
        std::string spec = item;
        Int count = 1;
        std::size_t x = spec.find('x');
        if (x != std::string::npos && spec.find(':') > x) {
          count = eval_int(spec.substr(0, x), vars);
          spec = spec.substr(x + 1);
        }
        std::size_t colon = spec.find(':');
        if (colon == std::string::npos) parse_fail(lineno, "fiber component wants mult:in|out");
        Int mult = eval_int(spec.substr(0, colon), vars);
        std::string flag = spec.substr(colon + 1);
        if (flag != "in" && flag != "out") parse_fail(lineno, "fiber flag must be in or out");
        for (Int c = 0; c < count; ++c) f.components.push_back({mult, flag == "in"});
      }
      it->second.push_back(std::move(f));
      return;
    }
    if (d == "search54") {
      // search54 NAME bound <expr> nbound <expr> positivity on|off
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      SearchOptions so;
      auto b = keyed(t, "bound"), nb = keyed(t, "nbound"), pos = keyed(t, "positivity");
      if (!b || !nb || !pos) parse_fail(lineno, "search54 wants bound, nbound, positivity");
      so.coefficient_bound = static_cast<long long>(eval_int(*b, vars));
      so.n_bound = static_cast<long long>(eval_int(*nb, vars));
      if (*pos != "on" && *pos != "off") parse_fail(lineno, "positivity must be on or off");
      so.apply_positivity = *pos == "on";
      searches.emplace(name, exhaustive_search(so));
      return;
    }
    if (d == "derive54") {
      // derive54 NAME n <expr>
      const std::string& name = arg(t, 1, lineno);
      ensure_fresh(name, lineno);
      auto n = keyed(t, "n");
      if (!n) parse_fail(lineno, "derive54 wants n <value>");
      derivations.emplace(name, derive_sum_relation(static_cast<long long>(eval_int(*n, vars))));
      return;
    }
    if (d == "expect") {
      exec_expect(t, lineno);
      return;
    }
    parse_fail(lineno, "unknown directive: " + d);
  }

  void exec_expect(const std::vector<std::string>& t, int lineno) {
    std::size_t eq = 0, tag_at = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] == "==" && eq == 0) eq = i;
      if (t[i] == "tag" && eq != 0 && tag_at == 0) tag_at = i;
    }
    if (eq == 0 || tag_at == 0 || tag_at + 1 >= t.size())
      parse_fail(lineno, "expect wants '<kind> <args> == <value> tag <TAG> [cite \"ref\"]'");

    Report::Expectation e;
    e.kind = arg(t, 1, lineno);
    e.subject = join(t, 2, eq);
    e.expected = join(t, eq + 1, tag_at);
    e.tag = t[tag_at + 1];
    if (e.tag != "PAPER" && e.tag != "DERIVED" && e.tag != "TRIVIAL")
      parse_fail(lineno, "tag must be PAPER, DERIVED or TRIVIAL");
    if (tag_at + 2 < t.size()) {
      if (t[tag_at + 2] != "cite" || tag_at + 3 >= t.size())
        parse_fail(lineno, "trailing tokens after tag; expected cite \"ref\"");
      e.cite = t[tag_at + 3];
    }

    std::vector<std::string> args(t.begin() + 2, t.begin() + eq);
    auto num = [&](const Rat& actual) {
      Rat want = eval_rat(e.expected, vars);
      e.actual = rat_str(actual);
      e.expected = rat_str(want);
      e.pass = actual == want;
    };
    auto str = [&](const std::string& actual) {
      e.actual = actual;
      e.pass = actual == e.expected;
    };
    auto need = [&](std::size_t n) {
      if (args.size() != n) parse_fail(lineno, "expect " + e.kind + ": wrong argument count");
    };

    const std::string& kind = e.kind;
    if (kind == "b2") {
      need(1);
      num(Rat(Int(orbifold_of(args[0], lineno).b2())));
    } else if (kind == "pair") {
      need(3);
      if (surfaces.count(args[0])) {
        const SurfaceModel& s = surfaces.at(args[0]);
        num(Rat(s.pair(s.curve(args[1]).vec, s.curve(args[2]).vec)));
      } else {
        num(orbifold_of(args[0], lineno).pair(args[1], args[2]));
      }
    } else if (kind == "kpair") {
      need(2);
      if (surfaces.count(args[0])) {
        const SurfaceModel& s = surfaces.at(args[0]);
        num(Rat(s.k_dot(s.curve(args[1]).vec)));
      } else {
        num(orbifold_of(args[0], lineno).k_pair(args[1]));
      }
    } else if (kind == "genus") {
      need(2);
      if (surfaces.count(args[0]))
        num(Rat(surfaces.at(args[0]).curve(args[1]).genus));
      else
        num(Rat(orbifold_of(args[0], lineno).curve(args[1]).genus));
    } else if (kind == "points") {
      need(1);
      num(Rat(Int(orbifold_of(args[0], lineno).singular_points().size())));
    } else if (kind == "singularity") {
      need(2);
      const auto& pts = orbifold_of(args[0], lineno).singular_points();
      std::size_t i = static_cast<std::size_t>(eval_int(args[1], vars));
      if (i >= pts.size()) parse_fail(lineno, "singular point index out of range");
      auto parts = split_commas(e.expected);
      if (parts.size() != 2) parse_fail(lineno, "expect singularity wants 'm,r'");
      Int m = eval_int(parts[0], vars), r = eval_int(parts[1], vars);
      e.expected = m.str() + "," + r.str();
      e.actual = pts[i].singularity.m.str() + "," + pts[i].singularity.r.str();
      e.pass = pts[i].singularity == CyclicSingularity(m, r);
    } else if (kind == "chain") {
      need(2);
      const auto& pts = orbifold_of(args[0], lineno).singular_points();
      std::size_t i = static_cast<std::size_t>(eval_int(args[1], vars));
      if (i >= pts.size()) parse_fail(lineno, "singular point index out of range");
      std::vector<Int> want;
      for (const auto& item : split_commas(e.expected)) {
        std::string spec = item;
        Int count = 1;
        if (std::size_t x = spec.find('x'); x != std::string::npos) {
          count = eval_int(spec.substr(0, x), vars);
          spec = spec.substr(x + 1);
        }
        Int v = eval_int(spec, vars);
        for (Int c = 0; c < count; ++c) want.push_back(v);
      }
      auto fmt = [](const std::vector<Int>& xs) {
        std::string s;
        for (const auto& x : xs) {
          if (!s.empty()) s += ",";
          s += x.str();
        }
        return s;
      };
      e.expected = fmt(want);
      e.actual = fmt(pts[i].chain_b);
      e.pass = want == pts[i].chain_b;
    } else if (kind == "multiplicity") {
      need(2);
      const auto& pts = orbifold_of(args[0], lineno).singular_points();
      std::size_t i = static_cast<std::size_t>(eval_int(args[1], vars));
      if (i >= pts.size()) parse_fail(lineno, "singular point index out of range");
      num(Rat(pts[i].multiplicity));
    } else if (kind == "calabi_yau") {
      need(1);
      str(is_calabi_yau(orbifold_of(args[0], lineno)) ? "true" : "false");
    } else if (kind == "h1") {
      need(1);
      auto it = verdicts.find(args[0]);
      if (it == verdicts.end()) parse_fail(lineno, "unknown h1 verdict: " + args[0]);
      str(it->second.ok() ? "pass" : "fail");
    } else if (kind == "h2" || kind == "group") {
      need(1);
      auto it = groups.find(args[0]);
      if (it == groups.end()) parse_fail(lineno, "unknown group: " + args[0]);
      FgAbelianGroup want = GroupParser(e.expected, vars).parse();
      e.expected = want.to_string();
      e.actual = it->second.to_string();
      e.pass = want == it->second;
    } else if (kind == "k" || kind == "t" || kind == "c" || kind == "spin" || kind == "gk" ||
               kind == "null") {
      auto it = invariants.find(arg(t, 2, lineno));
      if (it == invariants.end()) parse_fail(lineno, "unknown invariants: " + t[2]);
      const SmaleBardenInvariants& inv = it->second;
      if (kind == "k") {
        need(1);
        num(Rat(inv.k));
      } else if (kind == "t") {
        need(2);
        num(Rat(Int(inv.t_of(eval_int(args[1], vars)))));
      } else if (kind == "c") {
        need(1);
        num(inv.c_invariant());
      } else if (kind == "spin") {
        need(1);
        str(inv.spin ? "true" : "false");
      } else if (kind == "gk") {
        need(1);
        str(gk_condition(inv).pass ? "pass" : "fail");
      } else {
        need(1);
        str(null_sasakian_constraints(inv).pass ? "pass" : "fail");
      }
    } else if (kind == "eu" || kind == "rank" || kind == "z2" || kind == "rankbound") {
      auto it = dynkins.find(arg(t, 2, lineno));
      if (it == dynkins.end()) parse_fail(lineno, "unknown Dynkin configuration: " + t[2]);
      if (kind == "eu") {
        need(1);
        num(Rat(eu(it->second)));
      } else if (kind == "rank") {
        need(1);
        num(Rat(Int(it->second.total_rank())));
      } else if (kind == "z2") {
        need(1);
        str(check_z2(it->second) ? "pass" : "fail");
      } else {
        need(2);
        unsigned ambient = static_cast<unsigned>(eval_int(args[1], vars));
        str(check_rank_bound(it->second, ambient) ? "pass" : "fail");
      }
    } else if (kind == "z1") {
      need(1);
      auto it = fiber_sets.find(args[0]);
      if (it == fiber_sets.end()) parse_fail(lineno, "unknown fiber set: " + args[0]);
      str(check_z1(it->second) ? "pass" : "fail");
    } else if (kind == "search_count") {
      need(1);
      auto it = searches.find(args[0]);
      if (it == searches.end()) parse_fail(lineno, "unknown search result: " + args[0]);
      num(Rat(Int(it->second.size())));
    } else if (kind == "search_shape") {
      need(1);
      auto it = searches.find(args[0]);
      if (it == searches.end()) parse_fail(lineno, "unknown search result: " + args[0]);
      bool all = !it->second.empty();
      for (const auto& c : it->second)
        if (c.a != -1 || c.n + 2 * c.b != 1) all = false;
      str(all ? "true" : "false");
    } else if (kind == "derived") {
      need(1);
      auto it = derivations.find(args[0]);
      if (it == derivations.end()) parse_fail(lineno, "unknown derivation: " + args[0]);
      str(it->second.concluded() ? "true" : "false");
    } else if (kind == "kodaira") {
      need(2);
      KodairaDim kd = kodaira_dimension(sign_of(eval_rat(args[0], vars)),
                                        sign_of(eval_rat(args[1], vars)));
      str(to_string(kd));
    } else if (kind == "mult_degree") {
      need(1);
      num(Rat(multiplication_degree(eval_int(args[0], vars))));
    } else {
      parse_fail(lineno, "unknown expectation kind: " + kind);
    }

    report.expectations.push_back(std::move(e));
  }
};

}  // namespace

bool Report::all_passed() const {
  return std::all_of(expectations.begin(), expectations.end(),
                     [](const Expectation& e) { return e.pass; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario: " << scenario_name << "\n";
  for (const auto& [k, v] : params) os << "param " << k << " = " << v << "\n";
  for (const auto& f : facts) os << "fact: \"" << f.text << "\" [cite: " << f.cite << "]\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& s : steps) os << "step: " << s << "\n";
  for (const auto& e : expectations) {
    os << "expect [" << e.tag << "] " << (e.pass ? "pass" : "FAIL") << ": " << e.kind;
    if (!e.subject.empty()) os << " " << e.subject;
    os << " == " << e.expected;
    if (!e.pass) os << " (got " << e.actual << ")";
    if (!e.cite.empty()) os << " [cite: " << e.cite << "]";
    os << "\n";
  }
  os << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string Report::to_record() const {
  std::ostringstream os;
  os << "scenario=" << scenario_name << "\n";
  for (const auto& [k, v] : params) os << "param." << k << "=" << v << "\n";
  for (std::size_t i = 0; i < facts.size(); ++i) {
    os << "fact." << i + 1 << ".text=" << facts[i].text << "\n";
    os << "fact." << i + 1 << ".cite=" << facts[i].cite << "\n";
  }
  for (std::size_t i = 0; i < notes.size(); ++i) os << "note." << i + 1 << "=" << notes[i] << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) os << "step." << i + 1 << "=" << steps[i] << "\n";
  for (std::size_t i = 0; i < expectations.size(); ++i) {
    const auto& e = expectations[i];
    os << "expect." << i + 1 << ".kind=" << e.kind << "\n";
    os << "expect." << i + 1 << ".subject=" << e.subject << "\n";
    os << "expect." << i + 1 << ".expected=" << e.expected << "\n";
    os << "expect." << i + 1 << ".actual=" << e.actual << "\n";
    os << "expect." << i + 1 << ".tag=" << e.tag << "\n";
    if (!e.cite.empty()) os << "expect." << i + 1 << ".cite=" << e.cite << "\n";
    os << "expect." << i + 1 << ".status=" << (e.pass ? "pass" : "fail") << "\n";
  }
  os << "result=" << (all_passed() ? "pass" : "fail") << "\n";
  return os.str();
}

Report run_scenario(const std::string& source, const RunOptions& opts) {
  Runner r(opts);
  r.run(source);
  return std::move(r.report);
}

std::string scenario_description(const std::string& source) {
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.rfind("description ", 0) == 0) return trim(line.substr(12));
  }
  return "";
}

}  // namespace orbicalc
