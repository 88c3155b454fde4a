#include "cleanring/serialize.hpp"

#include "cleanring/error.hpp"

namespace cleanring {

namespace {

Json table_rows(const std::vector<Elem>& flat, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                                     flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
  }
  return rows;
}

std::vector<Elem> flatten(const Json& rows, std::size_t n, const char* name) {
  if (!rows.is_array() || rows.size() != n) {
    throw StructuralError(std::string(name) + " must have " + std::to_string(n) + " rows");
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw StructuralError(std::string(name) + " rows must have " + std::to_string(n) + " entries");
    }
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw StructuralError(std::string(name) + " entries must be indices");
      flat.push_back(v.get<Elem>());
    }
  }
  return flat;
}

}  // namespace

Json ring_to_json(const FiniteRing& R) {
  const RingTables& t = R.tables();
  Json j;
  j["label"] = t.label;
  j["order"] = t.order;
  j["one"] = t.one;
  j["add_table"] = table_rows(t.add, t.order);
  j["mul_table"] = table_rows(t.mul, t.order);
  j["construction"] = t.construction;
  return j;
}

FiniteRing ring_from_json(const Json& j, std::size_t max_order) {
  if (!j.is_object()) throw StructuralError("ring record must be a JSON object");
  for (const char* key : {"order", "one", "add_table", "mul_table"}) {
    if (!j.contains(key)) throw StructuralError(std::string("ring record lacks '") + key + "'");
  }
  RingTables t;
  t.order = j.at("order").get<std::size_t>();
  if (t.order > max_order) throw SizeError("ring order " + std::to_string(t.order) + " exceeds cap");
  t.one = j.at("one").get<Elem>();
  t.label = j.value("label", std::string("R"));
  t.construction = j.value("construction", std::string());
  t.add = flatten(j.at("add_table"), t.order, "add_table");
  t.mul = flatten(j.at("mul_table"), t.order, "mul_table");
  if (j.contains("neg_table")) t.neg = j.at("neg_table").get<std::vector<Elem>>();
  return FiniteRing::checked(std::move(t), max_order);
}

Json ideal_to_json(const IdealSet& I) {
  Json j;
  j["ring_label"] = I.ring().label();
  j["members"] = std::vector<Elem>(I.members().begin(), I.members().end());
  j["generators"] = std::vector<Elem>(I.generators().begin(), I.generators().end());
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  return Json{{"sign", d.sign > 0 ? "+" : "-"}, {"idempotent", d.idempotent}, {"unit", d.unit}};
}

Json clean_class_to_json(const CleanClass& c) {
  Json j;
  j["clean_plus"] = c.clean_plus;
  j["clean_minus"] = c.clean_minus;
  j["clean"] = c.clean();
  j["weakly_clean"] = c.weakly_clean();
  Json ds = Json::array();
  for (const auto& d : c.plus_witnesses) ds.push_back(decomposition_to_json(d));
  for (const auto& d : c.minus_witnesses) ds.push_back(decomposition_to_json(d));
  j["decompositions"] = std::move(ds);
  return j;
}

Json verdict_to_json(const FiniteRing& R, const IdealSet& I, const IdealVerdict& v) {
  Json j;
  j["predicate"] = to_string(v.predicate);
  j["ring"] = R.label();
  j["ideal"] = I.label();
  j["verdict"] = v.holds;
  j["scanned"] = v.scanned;
  if (v.failing_element) {
    Json w;
    w["element"] = *v.failing_element;
    Json attempts = Json::array();
    for (const Attempt& a : v.attempts) {
      attempts.push_back(Json{{"sign", a.sign > 0 ? "+" : "-"}, {"idempotent", a.idempotent}, {"candidate", a.candidate}});
    }
    w["attempts"] = std::move(attempts);
    if (v.predicate == IdealPredicate::uniquely_weakly_clean) w["working_idempotents"] = v.working_idempotents;
    j["witness"] = std::move(w);
  }
  return j;
}

Json loc_clean_class_to_json(const LocCleanClass& c) {
  Json j;
  j["clean_plus"] = c.clean_plus;
  j["clean_minus"] = c.clean_minus;
  j["clean"] = c.clean();
  j["weakly_clean"] = c.weakly_clean();
  Json ds = Json::array();
  for (const auto& d : c.witnesses) {
    ds.push_back(Json{{"sign", d.sign > 0 ? "+" : "-"}, {"idempotent", d.idempotent}, {"unit", d.unit.to_string()}});
  }
  j["decompositions"] = std::move(ds);
  return j;
}

Json loc_ideal_to_json(const PrimeSet& P, const LocIdeal& I) {
  Json j;
  j["ring"] = P.label();
  j["ideal"] = I.label(P);
  j["zero"] = I.zero;
  j["exponents"] = I.exponents;
  j["whole"] = I.is_whole();
  return j;
}

Json product_component_to_json(const ProductComponent& c) {
  if (const auto* loc = std::get_if<LocComponent>(&c)) {
    return Json{{"ring", loc->primes.label()}, {"element", loc->element.to_string()}};
  }
  const auto& fin = std::get<FiniteComponent>(c);
  return Json{{"ring", fin.ring.label()}, {"element", fin.element}};
}

namespace {

Json optional_elem(const std::optional<LocElem>& x) { return x ? Json(x->to_string()) : Json(nullptr); }

Json sign_flags(const SignFlags& f) {
  return Json{{"clean_plus", f.clean_plus}, {"clean_minus", f.clean_minus}, {"weakly_clean", f.weakly_clean()}};
}

Json tuple(const std::vector<ProductComponent>& w) {
  Json a = Json::array();
  for (const auto& c : w) a.push_back(product_component_to_json(c));
  return a;
}

Json product_verdict(const ProductIdealVerdict& v) {
  Json j{{"weakly_clean", v.weakly_clean}};
  if (!v.weakly_clean) {
    j["witness"] = tuple(v.witness);
    j["reason"] = v.reason;
  }
  return j;
}

}  // namespace

Json examples_to_json(const ExamplesReport& rep) {
  const auto& a = rep.ideal_example;
  Json first;
  first["example"] = "weakly_clean_not_clean";
  first["ring"] = a.primes.label();
  first["generator"] = a.generator.to_string();
  first["generator_is_unit"] = a.generator_is_unit;
  first["ideal"] = loc_ideal_to_json(a.primes, a.ideal);
  if (a.generator_is_unit) {
    first["finding"] = "the generator " + a.generator.to_string() + " is a unit, so the ideal is the whole ring";
  }
  first["weakly_clean"] = a.verdict.weakly_clean;
  first["clean"] = a.verdict.clean;
  first["basis"] = a.verdict.basis;
  first["oracle_non_clean_witness"] = optional_elem(a.oracle_non_clean);
  first["oracle_non_weakly_clean_witness"] = optional_elem(a.oracle_non_weakly_clean);
  first["search_bound"] = kDefaultSearchBound;
  first["witness"] = a.reference_witness.to_string();
  first["witness_class"] = loc_clean_class_to_json(a.reference_class);

  const auto& b = rep.product_example;
  Json second;
  second["example"] = "sum_of_weakly_clean_ideals_not_weakly_clean";
  second["ring"] = b.primes.label() + " x " + b.primes.label();
  second["generators"] = {b.first_generator.to_string(), b.second_generator.to_string()};
  second["generators_are_units"] = b.generators_are_units;
  if (b.generators_are_units) second["finding"] = "both generators are units, so the sum of the two ideals is R x R";
  second["first_factor"] = Json{{"ideal", b.first_ideal.label(b.primes)},
                                {"weakly_clean", b.first_weakly_clean},
                                {"clean", b.first_clean}};
  second["second_factor"] = Json{{"ideal", b.second_ideal.label(b.primes)},
                                 {"weakly_clean", b.second_weakly_clean},
                                 {"clean", b.second_clean}};
  second["first_summand"] = product_verdict(b.first_summand);
  second["second_summand"] = product_verdict(b.second_summand);
  second["sum"] = product_verdict(b.product);
  second["witness"] = tuple(b.reference_witness);
  second["witness_components"] = {sign_flags(b.reference_first), sign_flags(b.reference_second)};
  second["witness_tuple"] = sign_flags(b.reference_tuple);

  return Json{{"examples", {std::move(first), std::move(second)}}, {"ok", rep.ok}};
}

}  // namespace cleanring
