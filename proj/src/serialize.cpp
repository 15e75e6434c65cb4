#include "confspace/serialize.hpp"

#include "confspace/errors.hpp"

namespace confspace {

namespace {

Json bidegree_table(const std::map<Bidegree, std::size_t>& table) {
    Json out = Json::array();
    for (const auto& [bd, r] : table)
        out.push_back({{"r", bd.first}, {"s", bd.second}, {"rank", r}});
    return out;
}

} // namespace

Json to_json(const PartitionLattice& lattice) {
    Json elements = Json::array();
    for (const auto& pi : lattice.elements())
        elements.push_back(pi.to_string());
    Json pairs = Json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = i; j < lattice.size(); ++j)
            if (lattice.leq(i, j))
                pairs.push_back({i, j});
    return {{"schema_version", kSchemaVersion}, {"n", lattice.n()}, {"elements", elements},
            {"leq_pairs", pairs}};
}

Json to_json(const SimplicialComplex& sc) {
    return {{"vertices", sc.vertices()}, {"facets", sc.facets()}};
}

Json to_json(const ChainComplex& cc) {
    Json dims = Json::array(), boundaries = Json::array();
    for (int r = -1; r <= cc.top_degree(); ++r)
        dims.push_back(cc.rank(r));
    for (int r = 0; r <= cc.top_degree(); ++r)
        boundaries.push_back(to_json(cc.boundary(r)));
    return {{"coeff", cc.coefficients().name()}, {"dims", dims}, {"boundaries", boundaries}};
}

Json to_json(const SparseIntMatrix& A) {
    Json entries = Json::array();
    for (const auto& t : A.entries())
        entries.push_back({t.row(), t.col(), to_string(t.value())});
    return {{"rows", A.rows()}, {"cols", A.cols()}, {"entries", entries}};
}

namespace {

BigInt big_from_json(const Json& v) {
    if (v.is_string())
        return BigInt(v.get<std::string>());
    if (v.is_number_integer())
        return BigInt(v.get<long long>());
    throw DomainError("expected an integer or decimal string");
}

} // namespace

SparseIntMatrix matrix_from_json(const Json& j) {
    std::vector<IntTriplet> trips;
    for (const auto& e : j.at("entries"))
        trips.emplace_back(e.at(0).get<std::ptrdiff_t>(), e.at(1).get<std::ptrdiff_t>(), big_from_json(e.at(2)));
    return SparseIntMatrix::from_triplets(j.at("rows").get<Eigen::Index>(), j.at("cols").get<Eigen::Index>(),
                                          std::move(trips));
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_string(v(i)));
    return out;
}

IntVector vector_from_json(const Json& j) {
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = big_from_json(j[i]);
    return v;
}

Json to_json(const HomologySummary& h) {
    Json degrees = Json::array();
    for (const auto& d : h.degrees) {
        Json torsion = Json::array();
        for (const auto& t : d.torsion)
            torsion.push_back(to_string(t));
        degrees.push_back({{"degree", d.degree}, {"rank", d.betti}, {"torsion", torsion}});
    }
    return {{"coeff", h.coeff.name()}, {"degrees", degrees}};
}

Json to_json(const JordanType& jt) { return {{"p", jt.p}, {"sizes", jt.sizes}}; }

Json to_json(const ZpModuleDescriptor& d) {
    return {{"p", d.p},
            {"free_rank", d.free_rank},
            {"k_multiplicity", d.k_multiplicity},
            {"trivial_rank", d.trivial_rank},
            {"other", d.other}};
}

Json to_json(const GMReport& r) {
    Json out = Json::array();
    for (const auto& [degree, rank] : r.ranks) {
        Json contributions = Json::array();
        auto it = r.contributions.find(degree);
        if (it != r.contributions.end())
            for (const auto& c : it->second)
                contributions.push_back({{"rep", c.id},
                                         {"codim", c.codim},
                                         {"interval_degree", c.interval_degree},
                                         {"interval_rank", c.interval_rank}});
        out.push_back({{"degree", degree}, {"rank", rank}, {"contributions", contributions}});
    }
    return out;
}

Json to_json(const EquivariantGMReport& r) {
    Json degrees = Json::array();
    for (const auto& [degree, entries] : r.degrees) {
        Json contributions = Json::array();
        for (const auto& e : entries)
            contributions.push_back({{"rep", e.representative.to_string()},
                                     {"orbit_size", e.orbit_size},
                                     {"stab_order", e.stabilizer_order},
                                     {"interval_rank", e.interval_rank},
                                     {"induced_dimension", e.induced_dimension},
                                     {"full_stabilizer", e.full_stabilizer},
                                     {"ambient_orientation_preserved", e.ambient_orientation_preserved},
                                     {"subspace_orientation_preserved", e.subspace_orientation_preserved}});
        degrees.push_back({{"degree", degree}, {"rank", r.rank(degree)}, {"contributions", contributions}});
    }
    return {{"n", r.n}, {"d", r.d}, {"p", r.p}, {"group_order", r.group_order}, {"degrees", degrees}};
}

Json to_json(const WhitneyE2& w) {
    return {{"n", w.n},
            {"d", w.d},
            {"p", w.p},
            {"faces", w.options.faces == WhitneyFaces::AllButTop ? "all-but-top" : "interior"},
            {"sphere", w.options.sphere == SphereConvention::Codimension ? "codimension" : "dimension"},
            {"squares_to_zero", w.squares_to_zero},
            {"ranks", bidegree_table(w.ranks)},
            {"expected", bidegree_table(w.expected)},
            {"matches", w.matches()}};
}

Json to_json(const FpPolynomial& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms())
        out.push_back({{"exps", e}, {"coeff", c}});
    return out;
}

Json to_json(const GroupCohomologyElement& x) {
    Json terms = Json::array();
    for (const auto& [mask, poly] : x.terms())
        terms.push_back({{"e_monomial", mask}, {"poly", to_json(poly)}});
    return {{"p", x.prime()}, {"k", x.rank()}, {"terms", terms}, {"text", x.to_string()}};
}

GroupCohomologyElement element_from_json(const Json& j) {
    const auto p = j.at("p").get<std::int64_t>();
    const auto k = j.at("k").get<int>();
    GroupCohomologyElement out(p, k);
    for (const auto& term : j.at("terms")) {
        const auto mask = term.at("e_monomial").get<std::uint32_t>();
        FpPolynomial poly(p, k);
        for (const auto& mono : term.at("poly"))
            poly.add_term(mono.at("exps").get<Exponents>(), mono.at("coeff").get<std::int64_t>());
        auto part = GroupCohomologyElement::from_polynomial(poly);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u)
                part = part * GroupCohomologyElement::e(p, k, i);
        out = out + part;
    }
    return out;
}

Json to_json(const IdealDescriptor& ideal) {
    if (ideal.kind == IdealDescriptor::Kind::Truncation)
        return {{"kind", "truncation"}, {"p", ideal.p}, {"k", ideal.k}, {"degree", ideal.truncation_degree}};
    Json gens = Json::array();
    for (const auto& g : ideal.generators)
        gens.push_back(to_json(g));
    return {{"kind", "generated"}, {"p", ideal.p}, {"k", ideal.k}, {"generators", gens}};
}

Json to_json(const PrimeIndexReport& r) {
    return {{"p", r.p},
            {"d", r.d},
            {"truncation", to_json(r.truncation)},
            {"generated", to_json(r.generated)},
            {"certificate",
             {{"witness", to_json(r.witness)},
              {"degree", r.witness_degree},
              {"in_index", r.witness_in_index},
              {"in_sphere_index", r.witness_in_sphere_index}}},
            {"no_equivariant_map", r.no_equivariant_map}};
}

Json to_json(const IndexBounds& b) {
    Json out = {{"p", b.p},
                {"k", b.k},
                {"d", b.d},
                {"N", b.N},
                {"upper_containment_degree", b.upper_containment_degree},
                {"nonvanishing_degree", b.nonvanishing_degree},
                {"consistent", b.consistent},
                {"note", b.note}};
    out["scanned_N"] = b.scanned_N ? Json(*b.scanned_N) : Json(nullptr);
    return out;
}

Json to_json(const SWExpansion& s) {
    return {{"m", s.m},
            {"l", s.l},
            {"degree", s.degree},
            {"weights", s.weights},
            {"candidates", s.candidates},
            {"survivors", s.survivors},
            {"nonzero", s.nonzero_verdict}};
}

Json to_json(const IntegerSystem& sys) {
    Json rows = Json::array();
    const auto dense = sys.A.to_dense();
    for (Eigen::Index r = 0; r < dense.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < dense.cols(); ++c)
            row.push_back(to_string(dense(r, c)));
        rows.push_back(row);
    }
    return {{"labels", sys.labels}, {"rows", rows}, {"rhs", to_json(sys.b)}};
}

IntegerSystem system_from_json(const Json& j) {
    IntegerSystem sys;
    sys.labels = j.at("labels").get<std::vector<std::string>>();
    const auto& rows = j.at("rows");
    std::vector<IntTriplet> trips;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != sys.labels.size())
            throw DomainError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " coefficients for " + std::to_string(sys.labels.size()) + " labels");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            trips.emplace_back(static_cast<std::ptrdiff_t>(r), static_cast<std::ptrdiff_t>(c),
                               big_from_json(rows[r][c]));
    }
    sys.A = SparseIntMatrix::from_triplets(static_cast<Eigen::Index>(rows.size()),
                                           static_cast<Eigen::Index>(sys.labels.size()), std::move(trips));
    sys.b = vector_from_json(j.at("rhs"));
    if (sys.b.size() != sys.A.rows())
        throw DomainError("rhs length does not match the number of rows");
    return sys;
}

Json to_json(const SolvabilityVerdict& v) {
    Json out = {{"solvable", v.solvable}, {"verified", v.verified}};
    if (v.witness)
        out["witness"] = to_json(*v.witness);
    if (v.certificate)
        out["certificate"] = {{"u", to_json(v.certificate->u)},
                              {"modulus", to_string(v.certificate->modulus)},
                              {"index", v.certificate->index}};
    return out;
}

Json to_json(const ExistenceVerdict& v) {
    return {{"n", v.n}, {"group", to_string(v.group)}, {"exists", v.exists}, {"rationale", to_string(v.rationale)}};
}

} // namespace confspace
