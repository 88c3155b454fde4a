#pragma once

// JSON records shared by the CLI, the laws report and golden tests. Key order
// is fixed (ordered_json), so equal values always print to equal bytes.

#include <cstddef>

#include "json.hpp"

#include "cleanring/clean.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/localized.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

using Json = nlohmann::ordered_json;

/// {label, order, one, add_table, mul_table, construction}
Json ring_to_json(const FiniteRing& R);
/// Accepts the record above; neg_table and construction are optional. The
/// axioms are validated, so this throws AxiomError / StructuralError / SizeError.
FiniteRing ring_from_json(const Json& j, std::size_t max_order = kDefaultMaxOrder);

/// {ring_label, members, generators}
Json ideal_to_json(const IdealSet& I);

/// {predicate, ring, ideal, verdict, scanned, witness?}
Json verdict_to_json(const FiniteRing& R, const IdealSet& I, const IdealVerdict& v);

Json decomposition_to_json(const Decomposition& d);
Json clean_class_to_json(const CleanClass& c);

Json loc_clean_class_to_json(const LocCleanClass& c);
Json loc_ideal_to_json(const PrimeSet& P, const LocIdeal& I);
Json product_component_to_json(const ProductComponent& c);
Json examples_to_json(const ExamplesReport& rep);

}  // namespace cleanring
