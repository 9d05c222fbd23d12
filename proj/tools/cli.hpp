#pragma once

// Command-line front end. run_cli takes argv without the program name and writes to
// the given streams, so tests can drive it in-process. Exit codes: 0 success,
// 1 computation error, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "period_lab/period_lab.hpp"
#include "period_lab/verify.hpp"

namespace plab::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "period-lab/1";

// Bad input detected before any computation starts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto validate(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct Globals {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::optional<u64> budget;
  unsigned jobs = 0;
  bool verbose = false;

  u64 effective_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("PERIOD_LAB_BUDGET")) {
      try {
        std::size_t used = 0;
        const u64 v = std::stoull(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("PERIOD_LAB_BUDGET must be a positive integer, got \"") + env + "\"");
    }
    return kDefaultBudget;
  }
  unsigned effective_jobs() const {
    if (jobs) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

inline json elem_json(const Field& f, Elem a) {
  if (f.is_prime_field()) return a.v;
  return f.coeffs(a);
}

inline json ring_elem_json(const ProductRing& r, const RingElem& a) {
  json out = json::array();
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(elem_json(r.component(i), a[i]));
  return out;
}

inline std::string set_text(const PeriodSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.elems()[i]);
  }
  return out + "}";
}

inline json envelope(const char* command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline PeriodMethod parse_method(const std::string& m) {
  if (m == "closed") return PeriodMethod::Closed;
  if (m == "bound") return PeriodMethod::Bound;
  if (m == "bruteforce") return PeriodMethod::Bruteforce;
  return PeriodMethod::Auto;
}

inline std::vector<std::string> split_csv_line(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

// ---- subcommands ----------------------------------------------------------

struct OrdArgs {
  std::string field, poly, method = "pipeline";
  bool explain = false;
};

inline void run_ord(const Globals& g, const OrdArgs& a, std::ostream& out, std::ostream& err) {
  const Field f = validate([&] { return parse_field(a.field); });
  const Poly p = validate([&] { return parse_poly(f, a.poly); });
  if (p.is_zero()) throw UsageError("the zero polynomial has no order");
  const Poly m = monic(p);

  std::optional<OrderResult> pipe;
  std::optional<u64> brute;
  if (a.method != "bruteforce") pipe = ord(m, g.seed);
  if (a.method != "pipeline") {
    if (g.verbose) err << "ord: stepping x^n mod g by brute force\n";
    const auto g_part = strip_x_power(m).second;
    const u64 cap = std::min(g.effective_budget(), checked_pow(f.q(), static_cast<unsigned>(std::max<std::int64_t>(
                                                                          g_part.degree(), 0))));
    brute = ord_bruteforce(m, std::max<u64>(cap, 1));
  }
  const u64 order = pipe ? pipe->order : *brute;

  if (g.format == "json") {
    json j = envelope("ord");
    j["field"] = format_field(f);
    j["poly"] = format_poly(m);
    j["method"] = a.method;
    j["order"] = order;
    if (pipe && brute) {
      j["bruteforce_order"] = *brute;
      j["agree"] = pipe->order == *brute;
    }
    if (a.explain && pipe) {
      json ledger;
      ledger["stripped_x_power"] = pipe->stripped;
      json factors = json::array();
      for (const auto& t : pipe->per_factor) {
        json fj;
        fj["factor"] = format_poly(t.factor);
        fj["multiplicity"] = t.multiplicity;
        fj["irreducible_order"] = t.irreducible_order;
        fj["p_exponent"] = t.p_exponent;
        fj["contribution"] = t.contribution;
        factors.push_back(fj);
      }
      ledger["factors"] = factors;
      ledger["lcm"] = pipe->order;
      j["explain"] = ledger;
    }
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "field,poly,method,order\n"
        << format_field(f) << ",\"" << format_poly(m) << "\"," << a.method << ',' << order << '\n';
  } else {
    out << "ord(" << format_poly(m) << ") over F_" << f.q() << " = " << order << '\n';
    if (pipe && brute) out << "bruteforce: " << *brute << (pipe->order == *brute ? " (agrees)" : " (DISAGREES)") << '\n';
    if (a.explain && pipe) {
      out << "stripped x^" << pipe->stripped << '\n';
      for (const auto& t : pipe->per_factor)
        out << "  (" << format_poly(t.factor) << ")^" << t.multiplicity << ": ord " << t.irreducible_order << " * "
            << f.p() << '^' << t.p_exponent << " = " << t.contribution << '\n';
      out << "lcm = " << pipe->order << '\n';
    }
  }
}

struct SimulateArgs {
  std::string field, rec, init;
  std::size_t terms = 20;
  bool period = false, trajectory = false;
};

inline void run_simulate(const Globals& g, const SimulateArgs& a, std::ostream& out, std::ostream&) {
  const Field f = validate([&] { return parse_field(a.field); });
  const auto c = validate([&] { return parse_element_list(f, a.rec); });
  const auto s0 = validate([&] { return parse_element_list(f, a.init); });
  const FieldRecurrence rec = validate([&] { return FieldRecurrence(f, c); });
  validate([&] {
    rec.check_state(s0);
    return 0;
  });
  const auto terms = generate(rec, s0, a.terms);
  std::optional<u64> period;
  if (a.period) period = period_bruteforce(rec, s0, std::min(g.effective_budget(), state_space_size(rec)));
  std::vector<std::vector<Elem>> traj;
  if (a.trajectory) {
    auto s = s0;
    for (std::size_t i = 0; i < a.terms; ++i) {
      traj.push_back(s);
      rec.step(s);
    }
  }

  if (g.format == "json") {
    json j = envelope("simulate");
    j["field"] = format_field(f);
    j["char_poly"] = format_poly(char_poly(rec));
    json tj = json::array();
    for (Elem e : terms) tj.push_back(elem_json(f, e));
    j["terms"] = tj;
    if (period) j["period"] = *period;
    if (a.trajectory) {
      json states = json::array();
      for (const auto& s : traj) {
        json sj = json::array();
        for (Elem e : s) sj.push_back(elem_json(f, e));
        states.push_back(sj);
      }
      j["trajectory"] = states;
    }
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,term\n";
    for (std::size_t i = 0; i < terms.size(); ++i) out << i << ",\"" << format_element(f, terms[i]) << "\"\n";
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << format_element(f, terms[i]);
    out << '\n';
    if (period) out << "period: " << *period << '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
      out << "s_" << i << " = (";
      for (std::size_t j = 0; j < traj[i].size(); ++j) out << (j ? "," : "") << format_element(f, traj[i][j]);
      out << ")\n";
    }
  }
}

struct MinpolyArgs {
  std::string field, terms;
  std::optional<std::size_t> bound;
};

inline void run_minpoly(const Globals& g, const MinpolyArgs& a, std::ostream& out, std::ostream&) {
  const Field f = validate([&] { return parse_field(a.field); });
  const auto terms = validate([&] { return parse_element_list(f, a.terms); });
  const std::size_t bound = a.bound ? *a.bound : terms.size() / 2;
  const Poly m = minimal_poly(f, terms, bound);
  const u64 order = ord(m, g.seed).order;
  if (g.format == "json") {
    json j = envelope("minpoly");
    j["field"] = format_field(f);
    j["minimal_polynomial"] = format_poly(m);
    j["degree"] = m.degree();
    j["order"] = order;
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "minimal_polynomial,degree,order\n\"" << format_poly(m) << "\"," << m.degree() << ',' << order << '\n';
  } else {
    out << "m(x) = " << format_poly(m) << "\nperiod = ord(m) = " << order << '\n';
  }
}

struct PeriodSetArgs {
  std::string field, method = "closed";
  unsigned degree = 1;
};

inline void run_period_set(const Globals& g, const PeriodSetArgs& a, std::ostream& out, std::ostream& err) {
  const Field f = validate([&] { return parse_field(a.field); });
  if (a.degree == 0) throw UsageError("--degree must be at least 1");
  std::vector<std::pair<std::string, PeriodSet>> sets;
  auto brute = [&] {
    if (g.verbose) err << "period-set: enumerating " << f.q() << "^" << a.degree << " monic polynomials\n";
    return order_set_bruteforce(a.degree, f, g.effective_budget(), g.effective_jobs());
  };
  if (a.method == "closed") sets.emplace_back("closed", period_set_closed_form(a.degree, f.q()));
  if (a.method == "bound") sets.emplace_back("bound", period_set_lower_bound(a.degree, f.q()));
  if (a.method == "bruteforce") sets.emplace_back("bruteforce", brute());
  if (a.method == "all") {
    if (a.degree <= 4) sets.emplace_back("closed", period_set_closed_form(a.degree, f.q()));
    sets.emplace_back("bound", period_set_lower_bound(a.degree, f.q()));
    sets.emplace_back("bruteforce", brute());
  }
  // The headline set: the exact one when available.
  const PeriodSet& best = a.method == "all" ? sets.back().second : sets.front().second;

  if (g.format == "json") {
    json j = envelope("period-set");
    j["q"] = f.q();
    j["p"] = f.p();
    j["e"] = f.e();
    j["k"] = a.degree;
    j["method"] = a.method;
    j["period_set"] = best.elems();
    if (a.method == "all") {
      json all;
      for (const auto& [name, s] : sets) all[name] = s.elems();
      j["by_method"] = all;
      if (a.degree <= 4) j["closed_equals_bruteforce"] = sets.front().second == sets.back().second;
      j["bound_subset_of_bruteforce"] = sets[sets.size() - 2].second.subset_of(sets.back().second);
    }
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    if (a.method == "all") {
      out << "method,period\n";
      for (const auto& [name, s] : sets)
        for (u64 v : s.elems()) out << name << ',' << v << '\n';
    } else {
      out << "period\n";
      for (u64 v : best.elems()) out << v << '\n';
    }
  } else {
    for (const auto& [name, s] : sets)
      out << "P(" << a.degree << ", F_" << f.q() << ") [" << name << "] = " << set_text(s) << '\n';
  }
}

struct RingPeriodSetArgs {
  std::string components, method = "auto";
  unsigned degree = 1;
};

inline void run_ring_period_set(const Globals& g, const RingPeriodSetArgs& a, std::ostream& out, std::ostream&) {
  const ProductRing r = validate([&] { return parse_components(a.components); });
  if (a.degree == 0) throw UsageError("--degree must be at least 1");
  const PeriodMethod m = parse_method(a.method);
  std::vector<PeriodSet> comp_sets;
  for (const auto& f : r.components())
    comp_sets.push_back(field_period_set(a.degree, f, m, g.effective_budget(), g.effective_jobs()));
  const PeriodSet total = period_set_over_ring(a.degree, r, m, g.effective_budget(), g.effective_jobs());

  if (g.format == "json") {
    json j = envelope("ring period-set");
    json comps = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
      json c;
      c["field"] = format_field(r.component(i));
      c["q"] = r.component(i).q();
      c["period_set"] = comp_sets[i].elems();
      comps.push_back(c);
    }
    j["components"] = comps;
    j["k"] = a.degree;
    j["cardinality"] = r.cardinality();
    j["period_set"] = total.elems();
    j["size"] = total.size();
    j["max"] = total.max();
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "period\n";
    for (u64 v : total.elems()) out << v << '\n';
  } else {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << "P(" << a.degree << ", F_" << r.component(i).q() << ") = " << set_text(comp_sets[i]) << '\n';
    out << "P(" << a.degree << ", R) = " << set_text(total) << "  (" << total.size() << " elements)\n";
  }
}

struct RingPeriodArgs {
  std::string components, rec, init;
};

inline void run_ring_period(const Globals& g, const RingPeriodArgs& a, std::ostream& out, std::ostream&) {
  const ProductRing r = validate([&] { return parse_components(a.components); });
  const auto c = validate([&] { return parse_ring_element_list(r, a.rec); });
  const auto s0 = validate([&] { return parse_ring_element_list(r, a.init); });
  const RingRecurrence rec = validate([&] { return RingRecurrence(r, c); });
  validate([&] {
    rec.check_state(s0);
    return 0;
  });
  std::vector<u64> parts;
  for (std::size_t i = 0; i < r.size(); ++i)
    parts.push_back(period_bruteforce(project(rec, i), project(r, s0, i)));
  const u64 period = period_over_ring(rec, s0);
  std::optional<u64> direct;
  if (state_space_size(rec) <= g.effective_budget()) direct = period_over_ring(rec, s0, RingPeriodMode::Direct);

  if (g.format == "json") {
    json j = envelope("ring period");
    json comps = json::array();
    for (const auto& f : r.components()) comps.push_back(format_field(f));
    j["components"] = comps;
    json cj = json::array(), sj = json::array();
    for (const auto& x : c) cj.push_back(ring_elem_json(r, x));
    for (const auto& x : s0) sj.push_back(ring_elem_json(r, x));
    j["rec"] = cj;
    j["init"] = sj;
    j["component_periods"] = parts;
    j["period"] = period;
    if (direct) j["direct_period"] = *direct;
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "component,period\n";
    for (std::size_t i = 0; i < parts.size(); ++i) out << i << ',' << parts[i] << '\n';
    out << "lcm," << period << '\n';
  } else {
    out << "component periods:";
    for (u64 v : parts) out << ' ' << v;
    out << "\nperiod = lcm = " << period << '\n';
    if (direct) out << "direct simulation: " << *direct << '\n';
  }
}

struct AlgebraArgs {
  u64 p = 2;
  unsigned n = 2;
  unsigned degree = 1;
  bool max_period = false;
};

inline void run_algebra(const Globals& g, const AlgebraArgs& a, std::ostream& out, std::ostream&) {
  if (!is_prime_trial(a.p) || a.p >= kMaxCharacteristic) throw UsageError("--p must be a prime below 2^20");
  if (a.n < 2) throw UsageError("--n must be at least 2");
  if (a.degree == 0) throw UsageError("--degree must be at least 1");
  const auto spec = make_group_algebra(a.p, a.n);
  std::vector<PeriodSet> comp_sets;
  if (spec.decomposition)
    for (const auto& f : spec.decomposition->components())
      comp_sets.push_back(field_period_set(a.degree, f, PeriodMethod::Auto, g.effective_budget(), g.effective_jobs()));
  std::optional<u64> maxp;
  if (a.max_period) maxp = group_algebra_max_period(spec, a.degree, g.effective_budget());

  if (g.format == "json") {
    json j = envelope("algebra");
    j["p"] = a.p;
    j["n"] = a.n;
    j["k"] = a.degree;
    j["modulus"] = format_poly(spec.algebra.modulus(), 't');
    json facs = json::array();
    for (const auto& t : spec.factorization.factors) {
      json fj;
      fj["factor"] = format_poly(t.factor, 't');
      fj["multiplicity"] = t.multiplicity;
      facs.push_back(fj);
    }
    j["factorization"] = facs;
    j["factor_count"] = spec.factorization.factors.size();
    j["semisimple"] = spec.semisimple;
    if (spec.decomposition) {
      json comps = json::array();
      for (std::size_t i = 0; i < spec.decomposition->size(); ++i) {
        json c;
        c["modulus"] = format_poly(spec.factorization.factors[i].factor, 't');
        c["q"] = spec.decomposition->component(i).q();
        c["period_set"] = comp_sets[i].elems();
        comps.push_back(c);
      }
      j["components"] = comps;
    } else {
      j["components"] = nullptr;
    }
    if (maxp) {
      j["max_period"] = *maxp;
      u64 lower = 1;
      if (spec.decomposition)
        for (const auto& f : spec.decomposition->components()) lower = std::max(lower, checked_pow(f.q(), a.degree) - 1);
      if (spec.decomposition) j["largest_component_bound"] = lower;
    }
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "factor,multiplicity,q\n";
    for (const auto& t : spec.factorization.factors)
      out << '"' << format_poly(t.factor, 't') << "\"," << t.multiplicity << ','
          << checked_pow(a.p, static_cast<unsigned>(t.factor.degree())) << '\n';
    if (maxp) out << "max_period," << *maxp << ",\n";
  } else {
    out << "A_" << a.n << " = F_" << a.p << "[t]/<" << format_poly(spec.algebra.modulus(), 't') << ">\n";
    out << "t^n - 1 = ";
    for (std::size_t i = 0; i < spec.factorization.factors.size(); ++i) {
      const auto& t = spec.factorization.factors[i];
      out << (i ? " * " : "") << '(' << format_poly(t.factor, 't') << ')';
      if (t.multiplicity > 1) out << '^' << t.multiplicity;
    }
    out << '\n' << (spec.semisimple ? "semisimple: " : "not semisimple\n");
    if (spec.decomposition) {
      for (std::size_t i = 0; i < spec.decomposition->size(); ++i)
        out << (i ? " + " : "") << "F_" << spec.decomposition->component(i).q();
      out << '\n';
      for (std::size_t i = 0; i < comp_sets.size(); ++i)
        out << "P(" << a.degree << ", F_" << spec.decomposition->component(i).q() << ") = " << set_text(comp_sets[i])
            << '\n';
    }
    if (maxp) out << "max period (k=" << a.degree << "): " << *maxp << '\n';
  }
}

struct VerifyArgs {
  std::string scope = "all";
  bool timings = false;
};

inline int run_verify_cmd(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream&) {
  const auto scope = parse_verify_scope(a.scope);
  if (!scope) throw UsageError("unknown scope \"" + a.scope + "\"");
  const VerifyReport rep = run_verify(*scope, g.effective_jobs());
  if (g.format == "json") {
    json j = envelope("verify");
    j["scope"] = scope_name(*scope);
    j["passed"] = rep.passed();
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json cj;
      cj["name"] = c.name;
      cj["reference"] = c.reference;
      cj["criterion"] = c.criterion;
      cj["expected"] = c.expected;
      cj["computed"] = c.computed;
      cj["pass"] = c.pass;
      if (a.timings) cj["elapsed_ms"] = c.elapsed_ms;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "criterion,name,pass" << (a.timings ? ",elapsed_ms" : "") << '\n';
    for (const auto& c : rep.checks) {
      out << c.criterion << ",\"" << c.name << "\"," << (c.pass ? "pass" : "fail");
      if (a.timings) out << ',' << c.elapsed_ms;
      out << '\n';
    }
  } else {
    for (const auto& c : rep.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.reference << "]";
      if (a.timings) out << "  " << static_cast<long long>(c.elapsed_ms) << " ms";
      out << '\n';
      if (!c.pass) out << "     expected: " << c.expected << "\n     computed: " << c.computed << '\n';
    }
    out << (rep.passed() ? "all checks passed" : "some checks FAILED") << " (" << rep.checks.size() << ")\n";
  }
  return rep.passed() ? 0 : 1;
}

// ---- entry point ----------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periods of linear recurrences over finite fields and rings", "period_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t budget = 0;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for randomized factorization");
  auto* budget_opt = app.add_option("--budget", budget, "Enumeration budget (env PERIOD_LAB_BUDGET, default 1e6)")
                         ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for bruteforce sweeps (default: hardware)");
  app.add_flag("--verbose", g.verbose, "Progress messages on standard error");

  OrdArgs ord_a;
  auto* ord_cmd = app.add_subcommand("ord", "Order of a polynomial");
  ord_cmd->add_option("--field", ord_a.field, "p, p^e or p^e/modulus")->required();
  ord_cmd->add_option("--poly", ord_a.poly, "Polynomial in x, e.g. x^5+x^4+1")->required();
  ord_cmd->add_option("--method", ord_a.method)->check(CLI::IsMember({"pipeline", "bruteforce", "both"}));
  ord_cmd->add_flag("--explain", ord_a.explain, "Show the per-factor order ledger");

  SimulateArgs sim_a;
  auto* sim_cmd = app.add_subcommand("simulate", "Generate a linear recurrence sequence");
  sim_cmd->add_option("--field", sim_a.field)->required();
  sim_cmd->add_option("--rec", sim_a.rec, "Coefficients c_0,...,c_{k-1} of a_{n+k} = sum c_i a_{n+i}")->required();
  sim_cmd->add_option("--init", sim_a.init, "Initial terms a_0,...,a_{k-1}")->required();
  sim_cmd->add_option("--terms", sim_a.terms, "Number of terms to print");
  sim_cmd->add_flag("--period", sim_a.period, "Also measure the period");
  sim_cmd->add_flag("--trajectory", sim_a.trajectory, "Print the state vectors");

  MinpolyArgs mp_a;
  std::size_t mp_bound = 0;
  auto* mp_cmd = app.add_subcommand("minpoly", "Minimal polynomial of a sequence prefix");
  mp_cmd->add_option("--field", mp_a.field)->required();
  mp_cmd->add_option("--terms", mp_a.terms, "Comma-separated sequence prefix")->required();
  auto* mp_bound_opt = mp_cmd->add_option("--bound", mp_bound, "Upper bound on the linear complexity");

  PeriodSetArgs ps_a;
  auto* ps_cmd = app.add_subcommand("period-set", "Period set P(k, F_q)");
  ps_cmd->add_option("--field", ps_a.field)->required();
  ps_cmd->add_option("--degree", ps_a.degree)->required();
  ps_cmd->add_option("--method", ps_a.method)->check(CLI::IsMember({"closed", "bound", "bruteforce", "all"}));

  auto* ring_cmd = app.add_subcommand("ring", "Product rings F_q1 + ... + F_qr");
  ring_cmd->require_subcommand(1);
  RingPeriodSetArgs rps_a;
  auto* rps_cmd = ring_cmd->add_subcommand("period-set", "Period set over the product ring");
  rps_cmd->add_option("--components", rps_a.components, "e.g. 2,3,5")->required();
  rps_cmd->add_option("--degree", rps_a.degree)->required();
  rps_cmd->add_option("--method", rps_a.method)->check(CLI::IsMember({"auto", "closed", "bound", "bruteforce"}));
  RingPeriodArgs rp_a;
  auto* rp_cmd = ring_cmd->add_subcommand("period", "Period of one sequence over the product ring");
  rp_cmd->add_option("--components", rp_a.components)->required();
  rp_cmd->add_option("--rec", rp_a.rec, "Coefficients, e.g. (1,1,1),(1,1,1)")->required();
  rp_cmd->add_option("--init", rp_a.init, "Initial terms, e.g. (0,0,0),(1,1,1)")->required();

  AlgebraArgs alg_a;
  auto* alg_cmd = app.add_subcommand("algebra", "Cyclic group algebra F_p[t]/<t^n - 1>");
  alg_cmd->add_option("--p", alg_a.p)->required();
  alg_cmd->add_option("--n", alg_a.n)->required();
  alg_cmd->add_option("--degree", alg_a.degree);
  alg_cmd->add_flag("--max-period", alg_a.max_period, "Compute the largest period of a degree-k recurrence");

  VerifyArgs ver_a;
  auto* ver_cmd = app.add_subcommand("verify", "Run the built-in check suite");
  ver_cmd->add_option("--scope", ver_a.scope, "all, orders, period-sets, rings, properties");
  ver_cmd->add_flag("--timings", ver_a.timings, "Report elapsed time per check");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (*budget_opt) g.budget = budget;
  if (*mp_bound_opt) mp_a.bound = mp_bound;

  try {
    g.effective_budget();
    if (*ord_cmd) run_ord(g, ord_a, out, err);
    else if (*sim_cmd) run_simulate(g, sim_a, out, err);
    else if (*mp_cmd) run_minpoly(g, mp_a, out, err);
    else if (*ps_cmd) run_period_set(g, ps_a, out, err);
    else if (*rps_cmd) run_ring_period_set(g, rps_a, out, err);
    else if (*rp_cmd) run_ring_period(g, rp_a, out, err);
    else if (*alg_cmd) run_algebra(g, alg_a, out, err);
    else if (*ver_cmd) return run_verify_cmd(g, ver_a, out, err);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace plab::cli
