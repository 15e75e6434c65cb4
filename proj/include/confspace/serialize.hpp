#pragma once

#include <json.hpp>

#include "confspace/arrangement.hpp"
#include "confspace/complex.hpp"
#include "confspace/group_cohomology.hpp"
#include "confspace/homology.hpp"
#include "confspace/module_theory.hpp"
#include "confspace/obstruction.hpp"
#include "confspace/partition.hpp"
#include "confspace/whitney.hpp"

namespace confspace {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const PartitionLattice& lattice);
Json to_json(const SimplicialComplex& sc);
Json to_json(const ChainComplex& cc);

/// {rows, cols, entries: [[i, j, "v"]]}
Json to_json(const SparseIntMatrix& A);
SparseIntMatrix matrix_from_json(const Json& j);
/// Decimal strings.
Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

Json to_json(const HomologySummary& h);
Json to_json(const JordanType& jt);
Json to_json(const ZpModuleDescriptor& d);
Json to_json(const GMReport& r);
Json to_json(const EquivariantGMReport& r);
Json to_json(const WhitneyE2& w);

Json to_json(const FpPolynomial& f);
/// {p, k, terms: [{e_monomial, poly: [{exps, coeff}]}]}
Json to_json(const GroupCohomologyElement& x);
GroupCohomologyElement element_from_json(const Json& j);
Json to_json(const IdealDescriptor& ideal);
Json to_json(const PrimeIndexReport& r);
Json to_json(const IndexBounds& b);
/// {m, degree, survivors}
Json to_json(const SWExpansion& s);

/// {labels, rows: [[coeff by label]], rhs}
Json to_json(const IntegerSystem& sys);
IntegerSystem system_from_json(const Json& j);
Json to_json(const SolvabilityVerdict& v);
Json to_json(const ExistenceVerdict& v);

} // namespace confspace
