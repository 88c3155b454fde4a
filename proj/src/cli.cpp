#include "cleanring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cleanring/clean.hpp"
#include "cleanring/dsl.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/laws.hpp"
#include "cleanring/localized.hpp"
#include "cleanring/serialize.hpp"

namespace cleanring {
namespace {

struct Usage {
  std::string message;
};

struct Options {
  bool json = false;
  std::string spec_file;
  std::size_t max_order = kDefaultMaxOrder;
  std::string spec;
  std::string element;
  std::vector<std::string> gens{"all"};
  std::string check = "weakly-clean";
  bool catalog = false;
  bool times = false;
};

// Bounded scans over Z_P ideals use elements d a / b with |a|, b <= this.
constexpr std::size_t kLocScanBound = 16;

BuiltRing load_ring(const Options& o) {
  SpecEnv env;
  std::optional<RingSpec> file_ring;
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    if (!in) throw Usage{"cannot read spec file '" + o.spec_file + "'"};
    std::stringstream text;
    text << in.rdbuf();
    SpecFile f = parse_spec_file(text.str(), o.max_order);
    env = std::move(f.env);
    file_ring = std::move(f.ring);
  }
  if (!o.spec.empty()) return build_ring(o.spec, env, o.max_order);
  if (file_ring) return build_ring(*file_ring, env, o.max_order);
  throw Usage{"no ring given: pass a ring spec or a --spec-file ending in a ring form"};
}

Elem parse_index(const FiniteRing& R, const std::string& s) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || v >= R.order()) {
    throw DomainError("element '" + s + "' is not an index below " + std::to_string(R.order()) + " in " + R.label());
  }
  return static_cast<Elem>(v);
}

std::string join(const auto& xs, const char* sep = ", ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s << sep;
    s << x;
    first = false;
  }
  return s.str();
}

std::string show(Elem x, const Decomposition& d) {
  std::ostringstream s;
  s << x << " = u " << (d.sign > 0 ? '+' : '-') << " e (u = " << d.unit << ", e = " << d.idempotent << ")";
  return s.str();
}

std::string show(const LocElem& x, const LocDecomposition& d) {
  return x.to_string() + " = u " + (d.sign > 0 ? "+" : "-") + " e (u = " + d.unit.to_string() +
         ", e = " + std::to_string(d.idempotent) + ")";
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

IdealPredicate predicate_of(const std::string& check) {
  if (check == "clean") return IdealPredicate::clean;
  if (check == "weakly-clean") return IdealPredicate::weakly_clean;
  if (check == "uniquely") return IdealPredicate::uniquely_weakly_clean;
  if (check == "exchange") return IdealPredicate::weakly_exchange;
  return IdealPredicate::weakly_exchange_relaxed;
}

// analyze

int analyze_finite(const Options& o, const FiniteRing& R, std::ostream& out) {
  const Elem x = parse_index(R, o.element);
  const CleanClass c = is_weakly_clean_element(R, x);
  const bool unique = is_uniquely_weakly_clean_element(R, x);
  const std::vector<Decomposition> ds = decompositions(R, x);
  if (o.json) {
    Json j;
    j["ring"] = R.label();
    j["element"] = x;
    j["class"] = clean_class_to_json(c);
    j["uniquely_weakly_clean"] = unique;
    j["weakly_clean_idempotents"] = weakly_clean_idempotents(R, x);
    Json all = Json::array();
    for (const Decomposition& d : ds) all.push_back(decomposition_to_json(d));
    j["decompositions"] = std::move(all);
    emit(out, j);
  } else {
    out << R.label() << ", element " << x << '\n';
    out << "clean: " << c.clean() << "  weakly clean: " << c.weakly_clean()
        << "  uniquely weakly clean: " << unique << '\n';
    out << "decompositions: " << ds.size() << '\n';
    for (const Decomposition& d : ds) out << "  " << show(x, d) << '\n';
  }
  return c.weakly_clean() ? kExitOk : kExitFalse;
}

int analyze_localized(const Options& o, const PrimeSet& P, std::ostream& out) {
  const LocElem x = LocElem::parse(P, o.element);
  const LocCleanClass c = clean_class(P, x);
  if (o.json) {
    Json j;
    j["ring"] = P.label();
    j["element"] = x.to_string();
    j["unit"] = is_unit(P, x);
    j["class"] = loc_clean_class_to_json(c);
    emit(out, j);
  } else {
    out << P.label() << ", element " << x.to_string() << (is_unit(P, x) ? " (unit)" : "") << '\n';
    out << "clean: " << c.clean() << "  weakly clean: " << c.weakly_clean() << '\n';
    out << "decompositions: " << c.witnesses.size() << '\n';
    for (const LocDecomposition& d : c.witnesses) out << "  " << show(x, d) << '\n';
  }
  return c.weakly_clean() ? kExitOk : kExitFalse;
}

// ideal

// The decomposition shown for x: the first with a sign the predicate allows.
Decomposition shown_decomposition(const FiniteRing& R, Elem x, IdealPredicate p) {
  for (const Decomposition& d : decompositions(R, x)) {
    if (p != IdealPredicate::clean || d.sign > 0) return d;
  }
  throw DomainError("element " + std::to_string(x) + " has no decomposition");
}

Json element_witnesses(const FiniteRing& R, const IdealSet& I, IdealPredicate p) {
  Json ws = Json::array();
  for (Elem x : I.members()) {
    Json w{{"element", x}};
    if (p == IdealPredicate::uniquely_weakly_clean) {
      w["idempotent"] = weakly_clean_idempotents(R, x).front();
    } else {
      w["decomposition"] = decomposition_to_json(shown_decomposition(R, x, p));
    }
    ws.push_back(std::move(w));
  }
  return ws;
}

bool has_element_witnesses(IdealPredicate p) {
  return p == IdealPredicate::clean || p == IdealPredicate::weakly_clean ||
         p == IdealPredicate::uniquely_weakly_clean;
}

int ideal_finite(const Options& o, const FiniteRing& R, std::ostream& out) {
  std::vector<IdealSet> ideals;
  if (o.gens == std::vector<std::string>{"all"}) {
    ideals = all_ideals(R);
  } else {
    IdealSpec spec;
    if (o.gens == std::vector<std::string>{"radical"}) {
      spec.kind = IdealSpec::Kind::radical;
    } else {
      spec.generators = o.gens;
    }
    ideals.push_back(ideal_closure(R, resolve_ideal_generators(R, spec)));
  }
  const IdealPredicate p = predicate_of(o.check);
  bool all = true;
  for (const IdealSet& I : ideals) {
    const IdealVerdict v = check_ideal(R, I, p);
    all = all && v.holds;
    const bool witnesses = v.holds && has_element_witnesses(p);
    if (o.json) {
      Json j = verdict_to_json(R, I, v);
      j["members"] = std::vector<Elem>(I.members().begin(), I.members().end());
      if (witnesses) j["elements"] = element_witnesses(R, I, p);
      emit(out, j);
      continue;
    }
    out << R.label() << ", ideal " << I.label() << " = {" << join(I.members()) << "}: " << o.check << ' '
        << (v.holds ? "true" : "false") << " (" << v.scanned << " scanned)\n";
    if (witnesses) {
      for (Elem x : I.members()) {
        if (p == IdealPredicate::uniquely_weakly_clean) {
          out << "  " << x << ": only e = " << weakly_clean_idempotents(R, x).front() << '\n';
        } else {
          out << "  " << show(x, shown_decomposition(R, x, p)) << '\n';
        }
      }
    }
    if (v.failing_element) {
      out << "  witness " << *v.failing_element << ": " << v.attempts.size() << " candidates tried, none a unit";
      if (p == IdealPredicate::uniquely_weakly_clean) {
        out << "; working idempotents {" << join(v.working_idempotents) << '}';
      }
      out << '\n';
    }
  }
  return all ? kExitOk : kExitFalse;
}

LocIdeal loc_ideal_from_gens(const PrimeSet& P, const std::vector<std::string>& gens) {
  LocIdeal I{true, {}};
  for (const std::string& g : gens) {
    const LocIdeal n = normalize_ideal(P, LocElem::parse(P, g));
    if (n.zero) continue;
    if (I.zero) {
      I = n;
      continue;
    }
    for (std::size_t i = 0; i < I.exponents.size(); ++i) I.exponents[i] = std::min(I.exponents[i], n.exponents[i]);
  }
  return I;
}

struct LocCheck {
  bool holds = false;
  std::string basis;
  std::optional<LocElem> witness;
  std::optional<LocElem> non_clean;  // weakly-clean checks only
};

// First element of I (bounded) failing `ok`.
template <class Pred>
std::optional<LocElem> loc_scan(const PrimeSet& P, const LocIdeal& I, Pred ok) {
  const LocElem d(P, I.generator(P));
  for (std::size_t b = 1; b <= kLocScanBound; ++b) {
    if (gcd(BigInt(b), P.modulus()) != 1) continue;
    for (long long a = -static_cast<long long>(kLocScanBound); a <= static_cast<long long>(kLocScanBound); ++a) {
      const LocElem x = d * LocElem(P, a, b);
      if (!ok(x)) return x;
    }
    if (I.zero) break;
  }
  return std::nullopt;
}

LocCheck check_loc(const PrimeSet& P, const LocIdeal& I, IdealPredicate p) {
  LocCheck c;
  if (p == IdealPredicate::clean || p == IdealPredicate::weakly_clean) {
    const LocIdealVerdict v = ideal_verdict_loc(P, I);
    c.basis = v.basis;
    if (p == IdealPredicate::clean) {
      c.holds = v.clean;
      if (!c.holds) c.witness = witness_search(P, I, kDefaultSearchBound, LocTarget::clean);
    } else {
      c.holds = v.weakly_clean;
      if (!c.holds) c.witness = witness_search(P, I, kDefaultSearchBound, LocTarget::weakly_clean);
      if (!v.clean) c.non_clean = witness_search(P, I, kDefaultSearchBound, LocTarget::clean);
    }
    return c;
  }
  c.basis = "bounded scan (bound " + std::to_string(kLocScanBound) + ")";
  if (p == IdealPredicate::uniquely_weakly_clean) {
    c.witness = loc_scan(P, I, [&](const LocElem& x) {
      std::set<int> es;
      for (const LocDecomposition& d : clean_class(P, x).witnesses) es.insert(d.idempotent);
      return es.size() == 1;
    });
  } else {
    const bool strict = p == IdealPredicate::weakly_exchange;
    c.witness = loc_scan(P, I, [&](const LocElem& x) { return is_weakly_exchange_element_loc(P, I, x, strict); });
  }
  c.holds = !c.witness;
  return c;
}

int ideal_localized(const Options& o, const PrimeSet& P, std::ostream& out) {
  std::vector<LocIdeal> ideals;
  if (o.gens == std::vector<std::string>{"all"}) {
    ideals = loc_ideal_family(P);
  } else if (o.gens == std::vector<std::string>{"radical"}) {
    ideals.push_back(principal_loc_ideal(P, std::vector<unsigned>(P.primes().size(), 1)));
  } else {
    ideals.push_back(loc_ideal_from_gens(P, o.gens));
  }
  const IdealPredicate p = predicate_of(o.check);
  bool all = true;
  for (const LocIdeal& I : ideals) {
    const LocCheck c = check_loc(P, I, p);
    all = all && c.holds;
    if (o.json) {
      Json j;
      j["predicate"] = to_string(p);
      j["ring"] = P.label();
      j["ideal"] = loc_ideal_to_json(P, I);
      j["verdict"] = c.holds;
      j["basis"] = c.basis;
      if (c.witness) {
        j["witness"] = c.witness->to_string();
        j["witness_class"] = loc_clean_class_to_json(clean_class(P, *c.witness));
      }
      if (c.non_clean) j["non_clean_witness"] = c.non_clean->to_string();
      emit(out, j);
      continue;
    }
    out << P.label() << ", ideal " << I.label(P) << (I.is_whole() ? " = R" : "") << ": " << o.check << ' '
        << (c.holds ? "true" : "false") << " (" << c.basis << ")\n";
    if (c.witness) {
      const LocCleanClass k = clean_class(P, *c.witness);
      out << "  witness " << c.witness->to_string() << ": clean_plus " << k.clean_plus << ", clean_minus "
          << k.clean_minus << '\n';
    }
    if (c.non_clean) out << "  not clean: " << c.non_clean->to_string() << '\n';
  }
  return all ? kExitOk : kExitFalse;
}

// radical, idempotents, units, ring

int radical(const Options& o, const BuiltRing& B, std::ostream& out) {
  if (B.localized) {
    const PrimeSet& P = *B.localized;
    const LocIdeal J = principal_loc_ideal(P, std::vector<unsigned>(P.primes().size(), 1));
    if (o.json) {
      emit(out, Json{{"ring", P.label()}, {"radical", loc_ideal_to_json(P, J)}});
    } else {
      out << "J(" << P.label() << ") = " << J.label(P) << '\n';
    }
    return kExitOk;
  }
  const FiniteRing& R = *B.finite;
  const std::vector<Elem> J = jacobson_radical(R);
  const RadicalChecks k = check_radical(R, J);
  const QuotientRing Q = quotient(R, J, "J");
  const bool trivial = jacobson_radical(Q.ring).size() == 1;
  if (o.json) {
    Json j;
    j["ring"] = R.label();
    j["radical"] = J;
    j["checks"] = Json{{"quasi_regular", k.quasi_regular},
                       {"two_sided", k.two_sided},
                       {"is_ideal", k.is_ideal},
                       {"one_plus_in_units", k.one_plus_in_units},
                       {"no_nonzero_idempotent", k.no_nonzero_idempotent}};
    j["quotient_order"] = Q.ring.order();
    j["quotient_radical_trivial"] = trivial;
    emit(out, j);
  } else {
    out << "J(" << R.label() << ") = {" << join(J) << "}\n";
    out << "quasi-regular " << k.quasi_regular << ", two-sided " << k.two_sided << ", ideal " << k.is_ideal
        << ", 1 + J in units " << k.one_plus_in_units << ", no idempotent in J " << k.no_nonzero_idempotent << '\n';
    out << "R/J has order " << Q.ring.order() << (trivial ? " and zero radical" : " and a NONZERO radical") << '\n';
  }
  return k.all() && trivial ? kExitOk : kExitFalse;
}

int listing(const Options& o, const BuiltRing& B, bool units_wanted, std::ostream& out) {
  const char* key = units_wanted ? "units" : "idempotents";
  if (B.localized) {
    const PrimeSet& P = *B.localized;
    Json j{{"ring", P.label()}};
    if (units_wanted) {
      j[key] = "a/b with a coprime to " + P.modulus().str();
    } else {
      j[key] = {"0", "1"};
    }
    if (o.json) {
      emit(out, j);
    } else {
      out << key << " of " << P.label() << ": " << (units_wanted ? j[key].get<std::string>() : "0, 1") << '\n';
    }
    return kExitOk;
  }
  const FiniteRing& R = *B.finite;
  const std::vector<Elem> xs = units_wanted ? units(R) : idempotents(R);
  if (o.json) {
    emit(out, Json{{"ring", R.label()}, {key, xs}});
  } else {
    out << key << " of " << R.label() << " (" << xs.size() << "): " << join(xs) << '\n';
  }
  return kExitOk;
}

int ring(const Options& o, const BuiltRing& B, std::ostream& out) {
  if (B.localized) {
    const PrimeSet& P = *B.localized;
    const std::vector<unsigned> ps(P.primes().begin(), P.primes().end());
    if (o.json) {
      emit(out, Json{{"label", P.label()}, {"primes", ps}, {"modulus", P.modulus().str()}});
    } else {
      out << P.label() << ": fractions a/b with b coprime to " << P.modulus().str() << '\n';
    }
    return kExitOk;
  }
  const FiniteRing& R = *B.finite;
  if (o.json) {
    emit(out, ring_to_json(R));
  } else {
    out << R.label() << ": order " << R.order() << ", one = " << R.one() << ", " << units(R).size() << " units, "
        << idempotents(R).size() << " idempotents\n";
  }
  return kExitOk;
}

// laws, examples

int laws(const Options& o, std::ostream& out) {
  std::vector<LawReport> reports;
  if (o.catalog) {
    reports = run_catalog();
  } else {
    const BuiltRing B = load_ring(o);
    reports = B.localized ? laws_for_localized(*B.localized) : laws_for_ring(*B.finite);
  }
  if (o.json) {
    out << reports_to_json_lines(reports);
  } else {
    out << summary_table(reports, o.times);
  }
  return all_passed(reports) ? kExitOk : kExitFalse;
}

std::string show(const SignFlags& f) {
  return std::string("clean_plus ") + (f.clean_plus ? "true" : "false") + ", clean_minus " +
         (f.clean_minus ? "true" : "false");
}

std::string show(const std::vector<ProductComponent>& w) {
  std::vector<std::string> xs;
  for (const ProductComponent& c : w) xs.push_back(to_string(c));
  return "(" + join(xs) + ")";
}

int examples(const Options& o, std::ostream& out) {
  const ExamplesReport rep = reproduce_examples();
  if (o.json) {
    emit(out, examples_to_json(rep));
    return rep.ok ? kExitOk : kExitFalse;
  }
  const auto& a = rep.ideal_example;
  const PrimeSet& P = a.primes;
  out << "weakly clean ideal that is not clean: " << P.label() << ", ideal <" << a.generator.to_string() << ">\n";
  if (a.generator_is_unit) out << "  " << a.generator.to_string() << " is a unit, so the ideal is R\n";
  out << "  weakly clean " << a.verdict.weakly_clean << ", clean " << a.verdict.clean << " (" << a.verdict.basis
      << ")\n";
  out << "  oracle (bound " << kDefaultSearchBound << "): non-clean "
      << (a.oracle_non_clean ? a.oracle_non_clean->to_string() : "none") << ", non-weakly-clean "
      << (a.oracle_non_weakly_clean ? a.oracle_non_weakly_clean->to_string() : "none") << '\n';
  out << "  witness " << a.reference_witness.to_string() << ": clean_plus " << a.reference_class.clean_plus
      << ", clean_minus " << a.reference_class.clean_minus << '\n';

  const auto& b = rep.product_example;
  out << "sum of weakly clean ideals in R x R: <" << b.first_generator.to_string() << "> x 0 + 0 x <"
      << b.second_generator.to_string() << ">, R = " << b.primes.label() << '\n';
  if (b.generators_are_units) out << "  both generators are units, so the sum is R x R\n";
  out << "  I1 x 0 weakly clean " << b.first_summand.weakly_clean << ", 0 x I2 weakly clean "
      << b.second_summand.weakly_clean << '\n';
  out << "  I1 + I2 weakly clean " << b.product.weakly_clean;
  if (!b.product.weakly_clean) out << ", witness " << show(b.product.witness);
  out << '\n';
  out << "  witness " << show(b.reference_witness) << ": " << show(b.reference_first) << " | "
      << show(b.reference_second) << " | tuple " << show(b.reference_tuple) << '\n';
  out << (rep.ok ? "ok" : "MISMATCH") << '\n';
  return rep.ok ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  struct FlagsGuard {
    std::ostream& s;
    std::ios::fmtflags f = s.flags();
    ~FlagsGuard() { s.flags(f); }
  } guard{out};
  out << std::boolalpha;
  Options o;
  o.max_order = max_order_from_env();
  CLI::App app{"Clean, weakly clean and weakly exchange ideals of finite rings and of Z localized at primes"};
  app.name("cleanring");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--spec-file", o.spec_file, "DSL file with define-ring / define-bimodule / define-pairing blocks");
  app.add_option("--max-order", o.max_order, "Largest ring order to build (default: CLEANRING_MAX_ORDER or 256)")
      ->check(CLI::PositiveNumber);

  const auto spec_arg = [&](CLI::App* c) { c->add_option("spec", o.spec, "Ring spec, e.g. \"(zn 6)\""); };

  CLI::App* analyze = app.add_subcommand("analyze", "Clean class and decompositions of one element");
  spec_arg(analyze);
  analyze->add_option("--element,-e", o.element, "Element index, or a/b in a localized ring")->required();

  CLI::App* ideal = app.add_subcommand("ideal", "Check an ideal given by generators, or every ideal");
  spec_arg(ideal);
  ideal->add_option("--gens,-g", o.gens, "Generators (comma separated), `radical`, or `all`")->delimiter(',');
  ideal->add_option("--check,-c", o.check, "Predicate")
      ->check(CLI::IsMember({"clean", "weakly-clean", "uniquely", "exchange", "exchange-relaxed"}));

  CLI::App* rad = app.add_subcommand("radical", "Jacobson radical with its independent checks");
  spec_arg(rad);
  CLI::App* idem = app.add_subcommand("idempotents", "List idempotents");
  spec_arg(idem);
  CLI::App* unit = app.add_subcommand("units", "List units");
  spec_arg(unit);
  CLI::App* ring_cmd = app.add_subcommand("ring", "Ring summary; with --json, the serialized tables");
  spec_arg(ring_cmd);

  CLI::App* law_cmd = app.add_subcommand("laws", "Run the law suite on the catalog or on one ring");
  law_cmd->add_flag("--catalog", o.catalog, "Run the built-in catalog");
  law_cmd->add_option("--spec", o.spec, "Run every law applicable to this ring");
  law_cmd->add_flag("--times", o.times, "Show per-law timings in the text table");

  CLI::App* ex = app.add_subcommand("examples", "Reproduce the two localized examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*law_cmd) {
      if (!o.catalog && o.spec.empty() && o.spec_file.empty()) throw Usage{"laws needs --catalog or --spec"};
      if (o.catalog && !o.spec.empty()) throw Usage{"--catalog and --spec are exclusive"};
      return laws(o, out);
    }
    if (*ex) return examples(o, out);

    const BuiltRing B = load_ring(o);
    if (*analyze) return B.localized ? analyze_localized(o, *B.localized, out) : analyze_finite(o, *B.finite, out);
    if (*ideal) return B.localized ? ideal_localized(o, *B.localized, out) : ideal_finite(o, *B.finite, out);
    if (*rad) return radical(o, B, out);
    if (*idem) return listing(o, B, false, out);
    if (*unit) return listing(o, B, true, out);
    return ring(o, B, out);
  } catch (const Usage& u) {
    err << "usage error: " << u.message << '\n';
  } catch (const ParseError& e) {
    err << e.diagnostic() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cleanring
