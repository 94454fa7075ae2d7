#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pfol/assoc.hpp"
#include "pfol/error.hpp"
#include "pfol/picard.hpp"
#include "pfol/problem.hpp"

namespace {

using namespace pfol;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitBudget = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSemanticError: return kExitUsage;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    default: return kExitMath;
  }
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string render_class(const std::vector<int>& z) {
  std::vector<std::string> parts;
  for (int c : z) parts.push_back(std::to_string(c));
  return "(" + join(parts, ", ") + ")";
}

std::string render_lvector(const LVector& l) {
  std::vector<std::string> parts;
  for (const Poly& f : l) parts.push_back(f.to_string());
  return "(" + join(parts, " ; ") + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

Problem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

// Closure of the declared derivations, or F_B when only a subalgebra is given.
Foliation foliation_for(const Problem& prob) {
  ClosureOptions opts{prob.max_rounds};
  if (!prob.derivs.empty()) return foliation_closure(prob.ring, prob.derivations(), opts);
  if (prob.subalgebra) return foliation_of_subalgebra(prob.ring, *prob.subalgebra, opts);
  throw Error(ErrorCode::kSemanticError, "problem declares neither derivations nor a subalgebra");
}

EnumerateOptions enum_options(const Problem& prob) {
  EnumerateOptions e;
  e.budget = prob.budget;
  return e;
}

PiBasis basis_for(const Foliation& fol, const Problem& prob, std::size_t* count = nullptr) {
  const auto sols = enumerate_solutions(fol, prob.max_deg, enum_options(prob));
  if (count) *count = sols.size();
  return pi_basis(fol, sols);
}

int cmd_closure(const Problem& prob, std::ostream& out) {
  const Foliation fol = foliation_for(prob);
  out << "seed_gens = " << (prob.derivs.empty() ? prob.subalgebra->size() : prob.derivs.size()) << "\n";
  out << "closure_rank_gens = " << fol.gens().size() << "\n";
  out << "rounds = " << fol.rounds() << "\n";
  out << "added = " << fol.added() << "\n";
  out << "certificate = " << pass_fail(closure_certificate(fol)) << "\n";
  out << "generators:\n";
  for (const Derivation& d : fol.gens()) out << "  " << d.to_string() << "\n";
  out << "p_power_coeffs:\n";
  for (const auto& row : fol.p_coeffs()) out << "  " << render_lvector(row) << "\n";
  return kExitOk;
}

int cmd_pi(const Problem& prob, std::ostream& out) {
  const Foliation fol = foliation_for(prob);
  std::size_t count = 0;
  const PiBasis basis = basis_for(fol, prob, &count);
  const PiDimBounds b = pi_dim_bounds(fol, basis, prob.budget);
  out << "max_deg = " << prob.max_deg << "\n";
  out << "solutions_enumerated = " << count << "\n";
  out << "degree_bound = " << b.degree << "\n";
  out << "sieve_bound = " << (b.sieve ? std::to_string(*b.sieve) : std::string("unavailable")) << "\n";
  out << "dim_Pi_lower = " << b.lower << "\n";
  out << "dim_Pi_upper = " << b.upper << "\n";
  out << "exact = " << yes_no(b.exact()) << "\n";
  std::vector<std::string> reps;
  for (const Poly& f : basis.reps()) reps.push_back(f.to_string());
  out << "basis: " << join(reps, ", ") << "\n";
  out << "l_vectors:\n";
  for (std::size_t a = 0; a < basis.size(); ++a) {
    out << "  " << basis.reps()[a].to_string() << " -> " << render_lvector(basis.lvecs()[a]) << "\n";
  }
  return kExitOk;
}

int cmd_check(const Problem& prob, const std::string& expr, std::ostream& out) {
  const Foliation fol = foliation_for(prob);
  const Poly f = parse_poly(prob.ring, expr);
  out << "poly = " << f.to_string() << "\n";
  if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "the zero polynomial is neither");
  out << "first_integral = " << yes_no(is_first_integral(f, fol)) << "\n";
  const auto l = is_algebraic_solution(f, fol);
  out << "algebraic_solution = " << yes_no(l.has_value()) << "\n";
  if (!l) return kExitOk;
  out << "L = " << render_lvector(*l) << "\n";
  const PiBasis basis = basis_for(fol, prob);
  const PiClass cls = pi_class(f, basis);
  if (const auto* z = std::get_if<PrimeCoords>(&cls)) {
    out << "pi_class = " << render_class(z->z) << "\n";
  } else if (std::holds_alternative<NotInSpan>(cls)) {
    out << "pi_class = outside span at max_deg " << prob.max_deg << "\n";
  } else {
    out << "pi_class = non-prime coordinates\n";
    return kExitMath;
  }
  return kExitOk;
}

int cmd_assoc(const Problem& prob, std::ostream& out) {
  const Foliation fol = foliation_for(prob);
  const PiBasis basis = basis_for(fol, prob);
  const AssociatedSet set = associated_polynomials(fol, basis);
  out << "basis_size = " << basis.size() << "\n";
  for (std::size_t i = 0; i < set.polys.size(); ++i) {
    out << "P_" << i + 1 << " = " << set.polys[i].to_string() << "\n";
  }
  for (std::size_t i = 0; i < set.polys.size(); ++i) {
    const Decomposition dec = decompose_vanishing(set.polys[i]);
    if (const auto* a = std::get_if<std::vector<Poly>>(&dec)) {
      std::vector<std::string> parts;
      for (const Poly& c : *a) parts.push_back(c.to_string());
      out << "decomposition_" << i + 1 << " = [" << join(parts, ", ") << "]\n";
    } else {
      out << "decomposition_" << i + 1 << " = not vanishing\n";
    }
  }
  const StructureReport r = verify_structure(fol, basis);
  out << "closed_form = " << pass_fail(r.closed_form) << "\n";
  out << "vanishing = " << pass_fail(r.vanishing) << (r.vanishing_exhaustive ? " (exhaustive)" : " (decomposition)")
      << "\n";
  out << "l_relation = " << pass_fail(r.l_relation) << "\n";
  out << "power_identity = " << pass_fail(r.power_identity) << "\n";
  out << "structure = " << pass_fail(r.passed()) << "\n";
  for (const auto& msg : r.failures) out << "  " << msg << "\n";
  return r.passed() ? kExitOk : kExitMath;
}

int cmd_bound(const Problem& prob, std::ostream& out) {
  const Foliation fol = foliation_for(prob);
  for (std::size_t i = 0; i < fol.gens().size(); ++i) {
    out << "deg_D_" << i + 1 << " = " << degree_to_string(deriv_degree(fol.gens()[i])) << "\n";
  }
  const auto sieve = pi_dim_sieve_bound(fol, prob.budget);
  out << "degree_bound = " << pi_dim_bound(fol) << "\n";
  out << "sieve_bound = " << (sieve ? std::to_string(*sieve) : std::string("unavailable")) << "\n";
  return kExitOk;
}

int cmd_theta(const Problem& prob, std::ostream& out) {
  if (!prob.subalgebra) throw Error(ErrorCode::kSemanticError, "theta needs a subalgebra declaration");
  if (!prob.ideal) throw Error(ErrorCode::kSemanticError, "theta needs an ideal declaration");
  SandwichOptions opts;
  opts.max_deg = prob.max_deg;
  opts.enumerate = enum_options(prob);
  opts.closure.max_rounds = prob.max_rounds;
  const SandwichProblem sp = SandwichProblem::make(prob.ring, *prob.subalgebra, opts);
  const FractionalIdeal m{*prob.ideal};
  const PiDimBounds b = pi_dim_bounds(sp.foliation(), sp.pi(), prob.budget);
  std::vector<std::string> reps;
  for (const Poly& f : sp.pi().reps()) reps.push_back(f.to_string());
  out << "foliation_gens = " << sp.foliation().gens().size() << "\n";
  for (const Derivation& d : sp.foliation().gens()) out << "  " << d.to_string() << "\n";
  out << "basis: " << join(reps, ", ") << "\n";
  const auto g = extend_and_principalize(m, sp);
  if (!g) {
    out << "principal = no\n";
    return kExitMath;
  }
  const std::vector<int> cls = theta(m, sp);
  const bool nonzero = std::any_of(cls.begin(), cls.end(), [](int c) { return c != 0; });
  out << "principal = yes\n";
  out << "generator = " << g->to_string() << "\n";
  out << "theta_class = " << render_class(cls) << "\n";
  out << "theta_status = " << (nonzero ? "nonzero" : "zero") << "\n";
  out << "dim_Pi_upper = " << b.upper << "\n";
  out << "dim_ker_pi_upper = " << b.upper << "\n";
  return kExitOk;
}

struct SelfCase {
  const char* name;
  const char* text;
  std::size_t dim;
};

constexpr SelfCase kSelfCases[] = {
    {"diagonal p=2 t=1", "field p=2 ext=1\nring x,y\nderiv D = x ; y\n", 1},
    {"diagonal F_4 t=g", "field p=2 ext=2 modulus=1,1,1\nring x,y\nderiv D = x ; g*y\n", 2},
    {"nilpotent p=2", "field p=2 ext=1\nring x,y\nderiv D = x^2 ; 1\n", 1},
};

int cmd_selftest(std::ostream& out) {
  bool all = true;
  auto line = [&](const std::string& what, bool ok) {
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
  };
  for (const SelfCase& c : kSelfCases) {
    const Problem prob = parse_problem(c.text);
    const Foliation fol = foliation_for(prob);
    line(std::string(c.name) + ": closure certificate", closure_certificate(fol));
    const PiBasis basis = basis_for(fol, prob);
    const PiDimBounds b = pi_dim_bounds(fol, basis, prob.budget);
    line(std::string(c.name) + ": dim Pi = " + std::to_string(c.dim), b.exact() && b.lower == c.dim);
    line(std::string(c.name) + ": structure checks", verify_structure(fol, basis).passed());
  }
  const Problem sw = parse_problem(
      "field p=2 ext=1\nring x,y\nsubalgebra = x^2, y^2, x + x^2*y\nideal = x^2, x + x^2*y\n");
  const SandwichProblem sp = SandwichProblem::make(sw.ring, *sw.subalgebra);
  const auto cls = theta(FractionalIdeal{*sw.ideal}, sp);
  line("sandwich: theta class nonzero", cls == std::vector<int>{1});
  line("sandwich: theta of unit ideal is zero", theta(FractionalIdeal{{Poly::one(sw.ring)}}, sp) == std::vector<int>{0});
  out << (all ? "selftest = pass" : "selftest = FAIL") << "\n";
  return all ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic solutions of foliations in characteristic p"};
  app.require_subcommand(1);
  std::string file;
  std::string expr;
  int max_deg = -1;

  auto add = [&](const char* name, const char* help, bool with_deg) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", file, "problem file")->required();
    if (with_deg) sub->add_option("--max-deg", max_deg, "enumeration degree bound");
    return sub;
  };
  auto* closure = add("closure", "close the derivations under bracket and p-th power", false);
  auto* pi = add("pi", "enumerate algebraic solutions and bound dim Pi", true);
  auto* check = add("check", "test one polynomial", true);
  check->add_option("expr", expr, "polynomial")->required();
  auto* assoc = add("assoc", "associated polynomials and structural checks", true);
  auto* bound = add("bound", "upper bounds on dim Pi", false);
  auto* th = add("theta", "class of the extended ideal", true);
  auto* self = app.add_subcommand("selftest", "built-in checks on the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream out;
  int rc = kExitOk;
  try {
    if (self->parsed()) {
      rc = cmd_selftest(out);
    } else {
      Problem prob = load(file);
      if (max_deg >= 0) prob.max_deg = max_deg;
      if (closure->parsed()) rc = cmd_closure(prob, out);
      if (pi->parsed()) rc = cmd_pi(prob, out);
      if (check->parsed()) rc = cmd_check(prob, expr, out);
      if (assoc->parsed()) rc = cmd_assoc(prob, out);
      if (bound->parsed()) rc = cmd_bound(prob, out);
      if (th->parsed()) rc = cmd_theta(prob, out);
    }
  } catch (const Error& e) {
    std::cout << out.str();
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  std::cout << out.str();
  return rc;
}
