#include "pfol/problem.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "pfol/error.hpp"

namespace pfol {

std::vector<Derivation> Problem::derivations() const {
  std::vector<Derivation> out;
  out.reserve(derivs.size());
  for (const auto& nd : derivs) out.push_back(nd.d);
  return out;
}

namespace {

// A slice of a line together with its offset in that line.
struct Span {
  std::size_t pos = 0;
  std::string_view text;
};

[[noreturn]] void fail(ErrorCode code, int line, std::size_t col, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col + 1) + ": " + msg);
}

Span trim(Span s) {
  while (!s.text.empty() && std::isspace(static_cast<unsigned char>(s.text.front()))) {
    s.text.remove_prefix(1);
    ++s.pos;
  }
  while (!s.text.empty() && std::isspace(static_cast<unsigned char>(s.text.back()))) s.text.remove_suffix(1);
  return s;
}

// Splits on sep outside parentheses.
std::vector<Span> split(Span s, char sep) {
  std::vector<Span> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    const char c = i < s.text.size() ? s.text[i] : sep;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(Span{s.pos + start, s.text.substr(start, i - start)}));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Span> words(Span s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && std::isspace(static_cast<unsigned char>(s.text[i]))) ++i;
    const std::size_t start = i;
    while (i < s.text.size() && !std::isspace(static_cast<unsigned char>(s.text[i]))) ++i;
    if (i > start) out.push_back(Span{s.pos + start, s.text.substr(start, i - start)});
  }
  return out;
}

long long to_int(Span s, int line) {
  long long v = 0;
  const char* first = s.text.data();
  const char* last = first + s.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.text.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorCode::kParseError, line, s.pos, "expected an integer, got '" + std::string(s.text) + "'");
  }
  return v;
}

std::vector<int> to_int_list(Span s, int line) {
  std::vector<int> out;
  for (Span item : split(s, ',')) out.push_back(static_cast<int>(to_int(item, line)));
  return out;
}

// key=value
std::pair<Span, Span> key_value(Span s, int line) {
  const auto eq = s.text.find('=');
  if (eq == std::string_view::npos) fail(ErrorCode::kParseError, line, s.pos, "expected key=value");
  return {Span{s.pos, s.text.substr(0, eq)}, Span{s.pos + eq + 1, s.text.substr(eq + 1)}};
}

// Rewrites a relative "column N" from the polynomial parser into the line's coordinates.
Poly parse_at(const RingPtr& ring, Span s, int line) {
  if (s.text.empty()) fail(ErrorCode::kParseError, line, s.pos, "empty expression");
  try {
    return parse_poly(ring, s.text);
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto at = what.find("column ");
    if (at == std::string::npos) fail(e.code(), line, s.pos, what);
    std::size_t col = 0;
    std::size_t k = at + 7;
    while (k < what.size() && std::isdigit(static_cast<unsigned char>(what[k]))) col = col * 10 + (what[k++] - '0');
    const auto colon = what.find(": ", k);
    const std::string msg = colon == std::string::npos ? what : what.substr(colon + 2);
    fail(e.code(), line, s.pos + (col > 0 ? col - 1 : 0), msg);
  }
}

Span after_equals(Span s, int line) {
  s = trim(s);
  if (s.text.empty() || s.text.front() != '=') fail(ErrorCode::kParseError, line, s.pos, "expected '='");
  return trim(Span{s.pos + 1, s.text.substr(1)});
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem prob;
  std::set<std::string> names;
  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto nl = text.find('\n', begin);
    std::string_view raw = text.substr(begin, nl == std::string_view::npos ? std::string_view::npos : nl - begin);
    begin = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const Span line = trim(Span{0, raw});
    if (line.text.empty()) continue;

    std::size_t kw_end = 0;
    while (kw_end < line.text.size() && std::isalpha(static_cast<unsigned char>(line.text[kw_end]))) ++kw_end;
    const std::string keyword(line.text.substr(0, kw_end));
    const Span rest{line.pos + kw_end, line.text.substr(kw_end)};

    if (keyword == "field") {
      if (prob.field) fail(ErrorCode::kSemanticError, line_no, line.pos, "field declared twice");
      std::optional<long long> p, ext;
      std::optional<std::vector<int>> modulus;
      for (Span w : words(rest)) {
        auto [k, v] = key_value(w, line_no);
        if (k.text == "p") {
          p = to_int(v, line_no);
        } else if (k.text == "ext") {
          ext = to_int(v, line_no);
        } else if (k.text == "modulus") {
          modulus = to_int_list(v, line_no);
        } else {
          fail(ErrorCode::kParseError, line_no, k.pos, "unknown field attribute '" + std::string(k.text) + "'");
        }
      }
      if (!p || !ext) fail(ErrorCode::kParseError, line_no, line.pos, "field needs p= and ext=");
      try {
        prob.field = modulus ? Field::make(static_cast<int>(*p), static_cast<int>(*ext), *modulus)
                             : Field::make(static_cast<int>(*p), static_cast<int>(*ext));
      } catch (const Error& e) {
        fail(ErrorCode::kSemanticError, line_no, line.pos, e.what());
      }
    } else if (keyword == "ring") {
      if (!prob.field) fail(ErrorCode::kSemanticError, line_no, line.pos, "ring declared before field");
      if (prob.ring) fail(ErrorCode::kSemanticError, line_no, line.pos, "ring declared twice");
      Span vars_part = rest;
      std::vector<int> weights;
      if (const auto at = rest.text.find("weights="); at != std::string_view::npos) {
        vars_part = Span{rest.pos, rest.text.substr(0, at)};
        weights = to_int_list(trim(Span{rest.pos + at + 8, rest.text.substr(at + 8)}), line_no);
      }
      std::vector<std::string> vars;
      for (Span v : split(trim(vars_part), ',')) {
        if (v.text.empty()) fail(ErrorCode::kParseError, line_no, v.pos, "empty variable name");
        vars.emplace_back(v.text);
      }
      try {
        prob.ring = Ring::make(prob.field, std::move(vars), std::move(weights));
      } catch (const Error& e) {
        fail(ErrorCode::kSemanticError, line_no, line.pos, e.what());
      }
    } else if (keyword == "deriv") {
      if (!prob.ring) fail(ErrorCode::kSemanticError, line_no, line.pos, "deriv declared before ring");
      const auto eq = rest.text.find('=');
      if (eq == std::string_view::npos) fail(ErrorCode::kParseError, line_no, rest.pos, "expected '='");
      const Span name = trim(Span{rest.pos, rest.text.substr(0, eq)});
      if (name.text.empty()) fail(ErrorCode::kParseError, line_no, name.pos, "missing derivation name");
      if (!names.insert(std::string(name.text)).second) {
        fail(ErrorCode::kSemanticError, line_no, name.pos, "derivation '" + std::string(name.text) + "' redefined");
      }
      const auto parts = split(Span{rest.pos + eq + 1, rest.text.substr(eq + 1)}, ';');
      if (parts.size() != prob.ring->nvars()) {
        fail(ErrorCode::kSemanticError, line_no, rest.pos + eq + 1,
             "derivation has " + std::to_string(parts.size()) + " coefficients, ring has " +
                 std::to_string(prob.ring->nvars()) + " variables");
      }
      std::vector<Poly> coeffs;
      for (Span part : parts) coeffs.push_back(parse_at(prob.ring, part, line_no));
      prob.derivs.push_back({std::string(name.text), Derivation(std::move(coeffs))});
    } else if (keyword == "subalgebra" || keyword == "ideal") {
      if (!prob.ring) fail(ErrorCode::kSemanticError, line_no, line.pos, keyword + " declared before ring");
      auto& target = keyword == "ideal" ? prob.ideal : prob.subalgebra;
      if (target) fail(ErrorCode::kSemanticError, line_no, line.pos, keyword + " declared twice");
      std::vector<Poly> polys;
      for (Span part : split(after_equals(rest, line_no), ',')) polys.push_back(parse_at(prob.ring, part, line_no));
      target = std::move(polys);
    } else if (keyword == "option") {
      for (Span w : words(rest)) {
        auto [k, v] = key_value(w, line_no);
        const long long n = to_int(v, line_no);
        if (n < 0) fail(ErrorCode::kSemanticError, line_no, v.pos, "option values must be nonnegative");
        if (k.text == "max_deg") {
          prob.max_deg = static_cast<int>(n);
        } else if (k.text == "budget") {
          prob.budget = static_cast<std::uint64_t>(n);
        } else if (k.text == "max_rounds") {
          prob.max_rounds = static_cast<int>(n);
        } else {
          fail(ErrorCode::kParseError, line_no, k.pos, "unknown option '" + std::string(k.text) + "'");
        }
      }
    } else {
      fail(ErrorCode::kParseError, line_no, line.pos, "unknown directive '" + std::string(line.text.substr(0, kw_end)) + "'");
    }
  }
  if (!prob.field) fail(ErrorCode::kSemanticError, line_no, 0, "missing field declaration");
  if (!prob.ring) fail(ErrorCode::kSemanticError, line_no, 0, "missing ring declaration");
  return prob;
}

}  // namespace pfol
