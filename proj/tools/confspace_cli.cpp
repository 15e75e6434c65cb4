#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "confspace/errors.hpp"
#include "confspace/serialize.hpp"

using namespace confspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = 0, p = 0, k = 0, d = 0, l = 0, m = 0;
    std::string coeff = "Z";
    bool json = false;
    std::string cache_dir;
    std::uint64_t max_bell = bell_number(kDefaultMaxLatticeN);
    bool strict_labels = false;
    std::string builtin, file, group = "none", method = "computed", sphere = "codim", subgroup;
    bool interior_faces = false;
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& message) {
    if (!ok)
        throw UsageError(message);
}

Coefficients parse_coeff(const Options& o) {
    if (o.coeff == "Z")
        return Coefficients::integers();
    if (o.coeff == "Fp") {
        require(o.p > 0, "--coeff Fp needs --p");
        return Coefficients::field(o.p);
    }
    if (o.coeff.size() > 1 && o.coeff[0] == 'F')
        return Coefficients::field(std::stoll(o.coeff.substr(1)));
    throw UsageError("--coeff must be Z or Fp");
}

void check_bell(int n, const Options& o) {
    if (bell_number(n) > o.max_bell)
        throw SizeLimitError("Bell number B(" + std::to_string(n) + ") = " + std::to_string(bell_number(n)) +
                             " exceeds --max-bell " + std::to_string(o.max_bell));
}

std::vector<std::vector<std::int64_t>> parse_vectors(const std::string& text) {
    std::vector<std::vector<std::int64_t>> out;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<std::int64_t> v;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ','))
            v.push_back(std::stoll(cell));
        out.push_back(std::move(v));
    }
    return out;
}

int log2_exact(int x, const char* flag) {
    require(x > 0 && (x & (x - 1)) == 0, std::string(flag) + " must be a power of 2");
    int e = 0;
    while ((1 << e) < x)
        ++e;
    return e;
}

// Each command fills a payload; "negative": true marks a verified negative decision.
using Command = std::function<Json(const Options&)>;

Json cmd_partitions(const Options& o) {
    require(o.n >= 1, "partitions needs --n >= 1");
    check_bell(o.n, o);
    const auto lattice = PartitionLattice::build(o.n);
    Json out = to_json(lattice);
    out.erase("schema_version");
    out["size"] = lattice.size();
    out["rank_counts"] = lattice.rank_counts();
    out["mobius_bottom_top"] = mobius(lattice, lattice[lattice.bottom()], lattice[lattice.top()]);
    return out;
}

Json cmd_homology(const Options& o) {
    require(o.n >= 1, "homology needs --pi N");
    check_bell(o.n, o);
    const auto coeff = parse_coeff(o);
    const auto lattice = PartitionLattice::build(o.n);
    const auto sc = proper_part_complex(lattice);
    Json out = to_json(homology(chain_complex(sc, coeff)));
    out["pi"] = o.n;
    Json counts = Json::array();
    for (int r = 0; r <= sc.dimension(); ++r)
        counts.push_back(sc.count(r));
    out["simplex_counts"] = counts;
    return out;
}

Json cmd_pi_module(const Options& o) {
    require(o.p >= 3, "pi-module needs an odd prime --p");
    const auto r = partition_lattice_module(o.p);
    Json out = to_json(r.descriptor);
    out["degree"] = r.action.degree;
    out["dimension"] = r.action.matrix.rows();
    out["order"] = r.action.order;
    out["jordan_type"] = r.jordan.sizes;
    out["free"] = is_in_FI_family_zp(r.jordan, o.p);
    return out;
}

Json cmd_gm(const Options& o) {
    require(o.n >= 1 && o.d >= 1, "gm needs --n and --d");
    if (o.group != "none") {
        FiniteGroup g;
        if (o.group == "trivial")
            g = FiniteGroup::trivial(o.n);
        else if (o.group == "cyclic")
            g = cyclic_group(o.n);
        else if (o.group == "regular") {
            require(o.p > 0 && o.k > 0, "--group regular needs --p and --k");
            g = regular_embedding(o.p, o.k);
            require(g.degree() == o.n, "--n must equal p^k for --group regular");
        } else {
            throw UsageError("--group must be none, trivial, cyclic or regular");
        }
        check_bell(o.n, o);
        return {{"equivariant", to_json(equivariant_gm(o.n, o.d, g, o.p))}};
    }
    const auto formula = config_rank_formula(o.n, o.d);
    Json out;
    if (o.method == "formula") {
        out["degrees"] = to_json(formula);
    } else {
        require(o.method == "computed", "--method must be computed or formula");
        const auto computed = gm_cohomology(configuration_arrangement(o.n, o.d), parse_coeff(o));
        out["degrees"] = to_json(computed);
        out["formula_agrees"] = computed.ranks == formula.ranks;
    }
    out["total_rank"] = formula.total();
    return out;
}

Json cmd_whitney(const Options& o) {
    require(o.n >= 1 && o.d >= 1 && o.p > 0, "whitney needs --n, --d and --p");
    WhitneyOptions w;
    w.faces = o.interior_faces ? WhitneyFaces::Interior : WhitneyFaces::AllButTop;
    require(o.sphere == "codim" || o.sphere == "dim", "--sphere must be codim or dim");
    w.sphere = o.sphere == "codim" ? SphereConvention::Codimension : SphereConvention::Dimension;
    return to_json(whitney_e2(o.n, o.d, o.p, w));
}

Json cmd_index(const Options& o) {
    require(o.p > 0 && o.d > 0, "index needs --p and --d");
    if (o.k <= 1) {
        Json out = to_json(fh_index_prime(o.p, o.d));
        out["bounds"] = to_json(fh_index_bounds(o.p, 1, o.d));
        return out;
    }
    return {{"bounds", to_json(fh_index_bounds(o.p, o.k, o.d))}};
}

Json cmd_zeta(const Options& o) {
    require(o.p > 0 && o.k > 0, "zeta needs --p and --k");
    const auto zeta = euler_class_zeta(o.p, o.k);
    Json out = {{"zeta", to_json(GroupCohomologyElement::from_polynomial(zeta))},
                {"degree", cohomological_degree(zeta)}};
    if (!o.subgroup.empty()) {
        const auto span = parse_vectors(o.subgroup);
        const auto zh = euler_class_zeta_H(o.p, o.k, span);
        out["zeta_H"] = to_json(GroupCohomologyElement::from_polynomial(zh));
        out["zeta_H_degree"] = cohomological_degree(zh);
        if (o.p == 2)
            out["zeta_H_divides_zeta"] = poly_divides(zh, zeta).divides;
        else
            out["zeta_H_squared_divides_zeta_squared"] = poly_divides(zh.pow(2), zeta.pow(2)).divides;
    }
    return out;
}

Json cmd_dual_sw(const Options& o) {
    int l = o.l, m = o.m;
    if (o.d > 0)
        l = log2_exact(o.d, "--d");
    if (o.k > 0)
        m = log2_exact(o.k, "--k");
    require(l >= 1 && m >= 1, "dual-sw needs --l and --m (or --d and --k, powers of 2)");
    const auto s = dual_sw_expansion(l, m);
    Json out = to_json(s);
    out["chisholm_bound"] = chisholm_bound(1LL << l, 1LL << m);
    out["negative"] = !s.nonzero_verdict;
    return out;
}

Json cmd_obstruction(const Options& o) {
    if (o.n > 0) {
        const auto z = zn_map_exists(o.n);
        const auto s = symn_map_exists(o.n);
        return {{"cyclic", to_json(z)}, {"symmetric", to_json(s)}, {"negative", !z.exists}};
    }
    require(o.builtin.empty() != o.file.empty(), "obstruction needs exactly one of --builtin, --file, --n");
    std::string text;
    if (!o.builtin.empty()) {
        text = builtin_system_text(o.builtin);
    } else {
        std::ifstream in(o.file);
        require(static_cast<bool>(in), "cannot read " + o.file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const bool strict = o.strict_labels || !o.builtin.empty();
    auto load = [&](LabelMode mode) {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return system_from_json(Json::parse(text));
        return parse_bracket_system(text, mode);
    };
    const auto primary = load(strict ? LabelMode::Strict : LabelMode::Canonical);
    const auto other = load(strict ? LabelMode::Canonical : LabelMode::Strict);
    const auto verdict = integer_solvable(primary);
    const auto other_verdict = integer_solvable(other);
    Json out = {{"labels", strict ? "strict" : "canonical"},
                {"equations", primary.equations()},
                {"variables", primary.variables()},
                {"system", to_json(primary)},
                {"verdict", to_json(verdict)},
                {"alternate_reading",
                 {{"labels", strict ? "canonical" : "strict"},
                  {"variables", other.variables()},
                  {"verdict", to_json(other_verdict)}}},
                {"negative", !verdict.solvable}};
    return out;
}

Json cmd_stab_degree(const Options& o) {
    require(o.p > 0 && o.k > 0 && o.d > 0, "stab-degree needs --p, --k and --d");
    const int N = full_stabilizer_degree(o.p, o.k, o.d);
    int pk = 1;
    for (int i = 0; i < o.k; ++i)
        pk *= o.p;
    const int expected = (o.d - 1) * (pk - pk / o.p);
    return {{"N", N}, {"expected", expected}, {"matches", N == expected}};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_human(const Json& v, std::ostream& os, const std::string& indent = "") {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_primitive() || (value.is_array() && !value.empty() && value.front().is_primitive()) ||
                (value.is_array() && value.empty())) {
                os << indent << key << ": " << (value.is_primitive() ? scalar_text(value) : value.dump()) << "\n";
            } else {
                os << indent << key << ":\n";
                render_human(value, os, indent + "  ");
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_primitive() || (item.is_array() && (item.empty() || item.front().is_primitive()))) {
                os << indent << "- " << (item.is_primitive() ? scalar_text(item) : item.dump()) << "\n";
            } else {
                os << indent << "-\n";
                render_human(item, os, indent + "  ");
            }
        }
    } else {
        os << indent << scalar_text(v) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition lattices, configuration-space cohomology and equivariant obstructions"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("CONFSPACE_CACHE_DIR"))
        o.cache_dir = env;
    app.add_flag("--json", o.json, "Emit one structured document");
    app.add_option("--cache-dir", o.cache_dir, "Result cache directory (default $CONFSPACE_CACHE_DIR)");
    app.add_option("--max-bell", o.max_bell, "Largest Bell number a lattice may have");

    std::map<std::string, Command> commands;
    std::map<std::string, CLI::App*> subs;
    auto sub = [&](const std::string& name, const std::string& help, Command cmd) {
        auto* s = app.add_subcommand(name, help);
        s->add_flag("--json", o.json, "Emit one structured document");
        s->add_option("--cache-dir", o.cache_dir, "Result cache directory");
        s->add_option("--max-bell", o.max_bell, "Largest Bell number a lattice may have");
        commands[name] = std::move(cmd);
        subs[name] = s;
        return s;
    };

    auto* partitions = sub("partitions", "Partition lattice Π_n", cmd_partitions);
    partitions->add_option("--n", o.n, "Ground set size")->required();

    auto* hom = sub("homology", "Reduced homology of Δ(Π̄_n)", cmd_homology);
    hom->add_option("--pi,--n", o.n, "n for Π_n")->required();
    hom->add_option("--coeff", o.coeff, "Z, Fp (with --p) or F<prime>");
    hom->add_option("--p", o.p, "Field characteristic");

    auto* pim = sub("pi-module", "Z/p-module structure of H̃_{p-3}(Δ(Π̄_p); F_p)", cmd_pi_module);
    pim->add_option("--p", o.p, "Odd prime")->required();

    auto* gm = sub("gm", "Cohomology ranks of F(R^d, n)", cmd_gm);
    gm->add_option("--n", o.n)->required();
    gm->add_option("--d", o.d)->required();
    gm->add_option("--coeff", o.coeff);
    gm->add_option("--p", o.p);
    gm->add_option("--k", o.k);
    gm->add_option("--group", o.group, "none, trivial, cyclic or regular (equivariant report)");
    gm->add_option("--method", o.method, "computed or formula");

    auto* wh = sub("whitney", "Whitney homology E² ranks", cmd_whitney);
    wh->add_option("--n", o.n)->required();
    wh->add_option("--d", o.d)->required();
    wh->add_option("--p", o.p)->required();
    wh->add_flag("--interior-faces", o.interior_faces, "Drop faces 1..r-1 only");
    wh->add_option("--sphere", o.sphere, "codim or dim");

    auto* idx = sub("index", "Fadell-Husseini index data", cmd_index);
    idx->add_option("--p", o.p)->required();
    idx->add_option("--d", o.d)->required();
    idx->add_option("--k", o.k, "Rank of (Z/p)^k (default 1)");

    auto* zeta = sub("zeta", "Euler classes ζ and ζ_H", cmd_zeta);
    zeta->add_option("--p", o.p)->required();
    zeta->add_option("--k", o.k)->required();
    zeta->add_option("--subgroup", o.subgroup, "Spanning vectors of H, e.g. \"1,0;0,1\"");

    auto* sw = sub("dual-sw", "Dual Stiefel-Whitney expansion", cmd_dual_sw);
    sw->add_option("--l", o.l, "d = 2^l");
    sw->add_option("--m", o.m, "k = 2^m");
    sw->add_option("--d", o.d, "Power of 2");
    sw->add_option("--k", o.k, "Power of 2");

    auto* obs = sub("obstruction", "Integer obstruction systems and existence verdicts", cmd_obstruction);
    obs->add_option("--builtin", o.builtin, "Builtin system name (n4)");
    obs->add_option("--file", o.file, "System file, bracket grammar or JSON");
    obs->add_option("--n", o.n, "Report existence verdicts for n");
    obs->add_flag("--strict-labels", o.strict_labels, "Treat raw labels as distinct variables");

    auto* stab = sub("stab-degree", "Full-stabilizer degree under the regular embedding", cmd_stab_degree);
    stab->add_option("--p", o.p)->required();
    stab->add_option("--k", o.k)->required();
    stab->add_option("--d", o.d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kExitUsage;
    }

    std::string name;
    for (const auto& [n, s] : subs)
        if (s->parsed())
            name = n;

    Json params = {{"n", o.n}, {"p", o.p}, {"k", o.k}, {"d", o.d}, {"l", o.l}, {"m", o.m},
                   {"coeff", o.coeff}, {"max_bell", o.max_bell}, {"strict_labels", o.strict_labels},
                   {"builtin", o.builtin}, {"group", o.group}, {"method", o.method},
                   {"sphere", o.sphere}, {"subgroup", o.subgroup}, {"interior_faces", o.interior_faces}};
    Json payload;
    try {
        std::optional<cli::ResultCache> cache;
        std::string key = name + "|" + params.dump() + "|" + CONFSPACE_VERSION;
        if (!o.cache_dir.empty() && o.file.empty())
            cache.emplace(o.cache_dir);
        if (cache)
            if (auto hit = cache->load(key))
                payload = std::move(*hit);
        if (payload.is_null()) {
            payload = commands.at(name)(o);
            if (cache)
                cache->store(key, payload);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << subs.at(name)->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const bool negative = payload.contains("negative") && payload["negative"].get<bool>();
    if (o.json) {
        Json doc = {{"schema_version", kSchemaVersion}, {"command", name}, {"result", payload}};
        std::cout << doc.dump(2) << "\n";
    } else if (name == "homology") {
        std::cout << "reduced homology of the proper part of Pi_" << payload["pi"] << " over "
                  << scalar_text(payload["coeff"]) << "\n";
        for (const auto& deg : payload["degrees"]) {
            std::string torsion = "none";
            if (!deg["torsion"].empty()) {
                torsion.clear();
                for (const auto& t : deg["torsion"])
                    torsion += (torsion.empty() ? "Z/" : " + Z/") + t.get<std::string>();
            }
            std::cout << "degree " << deg["degree"] << ": rank " << deg["rank"] << ", torsion " << torsion << "\n";
        }
    } else {
        render_human(payload, std::cout);
    }
    return negative ? kExitNegative : kExitOk;
}
