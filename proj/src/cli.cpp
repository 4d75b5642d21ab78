#include "lagsub/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lagsub/error.hpp"
#include "lagsub/json_io.hpp"

namespace lagsub::cli {

namespace {

constexpr const char* kDefaultTypes = "A1,A2,A3,A4,B2,B3,B4,C3,C4,D4,G2,F4";

int rank_cap_from_env() {
    const char* env = std::getenv("LAGSUB_MAX_RANK");
    if (!env) return kDefaultMaxRank;
    try {
        return std::stoi(env);
    } catch (...) {
        throw ParseError("LAGSUB_MAX_RANK must be an integer");
    }
}

std::vector<std::string> split_types(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

std::string lambda_string(const IdealDescriptor& d) {
    if (d.roots.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (i) s += " ";
        s += d.roots[i].str();
    }
    return s + "}";
}

std::string levi_string(const std::set<int>& j) {
    if (j.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (int i : j) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

/// Deterministic splitmix64 stream for the seeded sampled checks.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31U);
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// peterson-table

int cmd_peterson_table(const std::vector<std::string>& types, int cap,
                       const std::string& format, std::ostream& out) {
    Json rows = Json::array();
    bool all_match = true;
    for (const std::string& t : types) {
        RootSystem rs = RootSystem::build(CartanMatrix::parse(t, cap));
        auto ideals = enumerate_ad_nilpotent_ideals(rs);
        std::size_t abelian = 0;
        for (const auto& d : ideals)
            if (is_abelian(rs, d)) ++abelian;
        std::size_t expected = 1ULL << static_cast<unsigned>(rs.rank());
        bool match = abelian == expected;
        all_match = all_match && match;
        rows.push_back(Json{{"type", t},
                            {"rank", rs.rank()},
                            {"ad_nilpotent", ideals.size()},
                            {"abelian", abelian},
                            {"two_pow_rank", expected},
                            {"match", match}});
    }
    if (format == "json") {
        out << rows.dump(2) << "\n";
    } else if (format == "csv") {
        out << "type,rank,ad_nilpotent,abelian,two_pow_rank,match\n";
        for (const auto& r : rows)
            out << r["type"].get<std::string>() << "," << r["rank"] << "," << r["ad_nilpotent"]
                << "," << r["abelian"] << "," << r["two_pow_rank"] << ","
                << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
    } else {
        out << std::left << std::setw(6) << "type" << std::setw(6) << "rank" << std::setw(14)
            << "ad-nilpotent" << std::setw(9) << "abelian" << std::setw(9) << "2^rank"
            << "match\n";
        for (const auto& r : rows)
            out << std::left << std::setw(6) << r["type"].get<std::string>() << std::setw(6)
                << r["rank"].get<int>() << std::setw(14) << r["ad_nilpotent"].get<std::size_t>()
                << std::setw(9) << r["abelian"].get<std::size_t>() << std::setw(9)
                << r["two_pow_rank"].get<std::size_t>()
                << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
    return all_match ? 0 : 2;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const std::string& type, bool abelian_only, int cap,
                  const std::string& format, std::ostream& out) {
    RootSystem rs = RootSystem::build(CartanMatrix::parse(type, cap));
    std::vector<IdealDescriptor> ideals =
        abelian_only ? enumerate_abelian_ideals(rs) : enumerate_ad_nilpotent_ideals(rs);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& d : ideals) {
            Json j = ideal_to_json(rs, d);
            j["abelian"] = is_abelian(rs, d);
            arr.push_back(j);
        }
        out << Json{{"type", type}, {"count", ideals.size()}, {"ideals", arr}}.dump(2) << "\n";
    } else if (format == "csv") {
        out << "type,lambda,dim,abelian\n";
        for (const auto& d : ideals)
            out << type << ",\"" << lambda_string(d) << "\"," << d.size() << ","
                << (is_abelian(rs, d) ? "yes" : "no") << "\n";
    } else {
        out << type << ": " << ideals.size() << (abelian_only ? " abelian" : " ad-nilpotent")
            << " ideals\n";
        for (const auto& d : ideals)
            out << "  dim " << d.size() << "  " << lambda_string(d)
                << (is_abelian(rs, d) ? "  (abelian)" : "") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const std::string& type, const std::string& ideal_file,
                const std::string& basis_file, const std::string& cocycle_file, int cap,
                const std::string& format, std::ostream& out) {
    RootSystem rs = RootSystem::build(CartanMatrix::parse(type, cap));
    LieAlgebra algebra = LieAlgebra::build(rs);

    Json cocycle_json;
    if (!cocycle_file.empty()) cocycle_json = load_json_file(cocycle_file);

    Subalgebra a = Subalgebra::zero(algebra);
    if (!ideal_file.empty()) {
        IdealDescriptor d = ideal_from_json(load_json_file(ideal_file), rs);
        a = subalgebra_of_ideal(algebra, d);
    } else if (!basis_file.empty()) {
        Json j = load_json_file(basis_file);
        if (j.contains("basis")) j = j.at("basis");
        std::vector<GElement> basis;
        for (const auto& row : j) basis.emplace_back(vec_from_json(row, algebra.dim()));
        a = Subalgebra(algebra, std::move(basis));
    } else if (cocycle_json.is_object() && cocycle_json.contains("subalgebra")) {
        std::vector<GElement> basis;
        for (const auto& row : cocycle_json.at("subalgebra").at("basis"))
            basis.emplace_back(vec_from_json(row, algebra.dim()));
        a = Subalgebra(algebra, std::move(basis));
    } else {
        throw ParseError("certify: provide --ideal or --basis (or a cocycle file with a "
                         "subalgebra section)");
    }

    Matrix fm(a.dim(), a.dim());
    if (!cocycle_json.is_null()) {
        const Json& fj = cocycle_json.is_object() && cocycle_json.contains("F")
                             ? cocycle_json.at("F")
                             : cocycle_json;
        fm = matrix_from_json(fj);
        if (fm.rows() == 0) fm = Matrix(a.dim(), a.dim());
    }
    Cocycle f(a, fm); // InvalidCocycle on bad input
    ClosureCertificate cert = certify_closed_orbit(algebra, a, f);

    if (format == "json") {
        out << certificate_to_json(cert, rs).dump(2) << "\n";
    } else {
        out << (cert.closed() ? "Closed" : "NotClosed") << "\n";
        Json j = certificate_to_json(cert, rs);
        if (j.contains("reason")) out << "reason: " << j["reason"].get<std::string>() << "\n";
        if (j.contains("alpha_witness"))
            out << "witness alpha: " << j["alpha_witness"].dump() << "\n";
        if (j.contains("f_witness")) out << "witness F: " << j["f_witness"].dump() << "\n";
        if (j.contains("borel_witness"))
            out << "Borel position (simple root images): " << j["borel_witness"].dump() << "\n";
        if (j.contains("detail")) out << j["detail"].get<std::string>() << "\n";
    }
    return cert.closed() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// orbit-table

int cmd_orbit_table(const std::string& type, int cap, const std::string& format,
                    std::ostream& out) {
    RootSystem rs = RootSystem::build(CartanMatrix::parse(type, cap));
    LieAlgebra algebra = LieAlgebra::build(rs);
    auto rows = orbit_table(algebra);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(orbit_row_to_json(rs, r));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "type,lambda,dim_a,parabolic_J,orbit_dim,certified_closed\n";
        for (const auto& r : rows)
            out << type << ",\"" << lambda_string(r.ideal) << "\"," << r.dim_a << ",\""
                << levi_string(r.parabolic_j) << "\"," << r.orbit_dim << ","
                << (r.certified_closed ? "yes" : "NO") << "\n";
    } else {
        out << std::left << std::setw(7) << "dim_a" << std::setw(14) << "parabolic_J"
            << std::setw(11) << "orbit_dim" << std::setw(8) << "closed"
            << "lambda\n";
        for (const auto& r : rows)
            out << std::left << std::setw(7) << r.dim_a << std::setw(14)
                << levi_string(r.parabolic_j) << std::setw(11) << r.orbit_dim << std::setw(8)
                << (r.certified_closed ? "yes" : "NO") << lambda_string(r.ideal) << "\n";
    }
    bool all = true;
    for (const auto& r : rows) all = all && r.certified_closed;
    return all ? 0 : 2;
}

// ---------------------------------------------------------------------------
// selftest

struct Suite {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;

    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

GStarElement seeded_gstar(const LieAlgebra& algebra, Rng& rng) {
    GStarElement a(algebra.dim());
    for (auto& c : a.coeffs) c = Rational(rng.range(-3, 3));
    return a;
}

/// One seeded valid skew cocycle on an abelian ideal subalgebra (every skew
/// matrix is a cocycle there); zero matrix when dim < 2.
Matrix seeded_skew(std::size_t k, Rng& rng) {
    Matrix f(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            f.at(i, j) = Rational(rng.range(-2, 2), rng.range(1, 2));
            f.at(j, i) = -f.at(i, j);
        }
    return f;
}

std::vector<GroupElement> contract_generators(const LieAlgebra& algebra) {
    std::vector<GroupElement> gens;
    const std::vector<Rational> ts{Rational(1), Rational(-2), Rational(1, 3)};
    for (int i = 0; i < algebra.rank(); ++i)
        for (const Rational& t : ts) {
            gens.push_back(algebra.unipotent(Root::simple(i, algebra.rank()), t));
            gens.push_back(algebra.unipotent(-Root::simple(i, algebra.rank()), t));
        }
    std::vector<Rational> c1, c2;
    for (int i = 0; i < algebra.rank(); ++i) {
        c1.emplace_back(2);
        c2.emplace_back(i == 0 ? Rational(1, 2) : Rational(3));
    }
    gens.push_back(algebra.torus(c1));
    gens.push_back(algebra.torus(c2));
    return gens;
}

int cmd_selftest(const std::vector<std::string>& types, int cap, std::uint64_t seed,
                 bool debug_verify, const std::string& format, std::ostream& out) {
    set_debug_verify(debug_verify);
    std::vector<Suite> suites;

    for (const std::string& t : types) {
        RootSystem rs = RootSystem::build(CartanMatrix::parse(t, cap));
        LieAlgebra algebra = LieAlgebra::build(rs); // Jacobi + antisymmetry verified here
        SemidirectDouble dbl(algebra);
        Rng rng(seed ^ std::hash<std::string>{}(t));

        Suite structure{t + " chevalley-structure"};
        structure.expect(true); // construction self-check reached this point
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (std::size_t j = 0; j < rs.num_roots(); ++j) {
                Root a = rs.root_at(i), b = rs.root_at(j);
                if (!rs.is_root(a + b) || (a + b).is_zero()) continue;
                Rational n = algebra.structure_constant(a, b);
                long p = rs.root_string_p(a, b);
                structure.expect(n == Rational(p + 1) || n == Rational(-(p + 1)));
            }
        suites.push_back(structure);

        Suite form{t + " bilinear-form"};
        {
            const std::size_t m = dbl.ambient_dim();
            Matrix gram(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    gram.at(i, j) = dbl.bilinear_form(dbl.basis_vector(i), dbl.basis_vector(j));
            form.expect(gram == gram.transpose());
            form.expect(rank(gram) == m);
            // Manin triple: both factors isotropic and bracket-closed
            for (int iter = 0; iter < 5; ++iter) {
                GElement x(algebra.dim()), y(algebra.dim());
                for (auto& c : x.coeffs) c = Rational(rng.range(-2, 2));
                for (auto& c : y.coeffs) c = Rational(rng.range(-2, 2));
                DoubleElement gx{x, GStarElement(algebra.dim())};
                DoubleElement gy{y, GStarElement(algebra.dim())};
                form.expect(dbl.bilinear_form(gx, gy).is_zero());
                form.expect(dbl.d_bracket(gx, gy).alpha.is_zero());
                DoubleElement sx{GElement(algebra.dim()), seeded_gstar(algebra, rng)};
                DoubleElement sy{GElement(algebra.dim()), seeded_gstar(algebra, rng)};
                form.expect(dbl.bilinear_form(sx, sy).is_zero());
                form.expect(dbl.d_bracket(sx, sy).is_zero());
            }
        }
        suites.push_back(form);

        Suite inv{t + " form-invariance"};
        for (int el = 0; el < 20; ++el) {
            std::size_t k =
                static_cast<std::size_t>(rng.range(0, static_cast<long>(rs.num_roots() - 1)));
            GroupElement g = algebra.unipotent(rs.root_at(k), Rational(rng.range(-2, 2)));
            std::vector<Rational> c;
            for (int i = 0; i < algebra.rank(); ++i)
                c.emplace_back(rng.range(1, 3), rng.range(1, 2));
            DGroupElement d{g.times(algebra.torus(c)), seeded_gstar(algebra, rng)};
            std::vector<DoubleElement> moved;
            moved.reserve(dbl.ambient_dim());
            for (std::size_t i = 0; i < dbl.ambient_dim(); ++i)
                moved.push_back(dbl.big_ad(d, dbl.basis_vector(i)));
            bool ok = true;
            for (std::size_t i = 0; i < dbl.ambient_dim() && ok; ++i)
                for (std::size_t j = i; j < dbl.ambient_dim(); ++j)
                    if (dbl.bilinear_form(moved[i], moved[j]) !=
                        dbl.bilinear_form(dbl.basis_vector(i), dbl.basis_vector(j))) {
                        ok = false;
                        break;
                    }
            inv.expect(ok);
        }
        suites.push_back(inv);

        Suite peterson{t + " peterson-count"};
        auto abelian = enumerate_abelian_ideals(rs); // throws on mismatch
        peterson.expect(abelian.size() == (1ULL << static_cast<unsigned>(rs.rank())));
        suites.push_back(peterson);

        Suite ks{t + " lagrangian-construction"};
        Suite fixed{t + " translation-fixed-points"};
        GroupElement id = algebra.identity_group_element();
        for (const auto& d : abelian) {
            Subalgebra a = subalgebra_of_ideal(algebra, d);
            Cocycle z = Cocycle::zero(a);
            LagrangianPoint p = build_lagrangian(a, z);
            ks.expect(verify_lagrangian(dbl, p).all_true());
            std::vector<DoubleElement> rows;
            rows.reserve(p.dim());
            for (std::size_t r = 0; r < p.dim(); ++r)
                rows.push_back(dbl.from_ambient(p.basis().row(r)));
            for (std::size_t m = 0; m < algebra.dim(); ++m) {
                DGroupElement trans{id, algebra.dual_basis_vector(m)};
                fixed.expect(f_alpha(a, trans.alpha).is_zero());
                bool fixed_ok = true;
                for (const DoubleElement& v : rows) {
                    if (!p.contains(dbl.to_ambient(dbl.big_ad(trans, v)))) {
                        fixed_ok = false;
                        break;
                    }
                }
                fixed.expect(fixed_ok);
            }
        }
        suites.push_back(ks);
        suites.push_back(fixed);

        Suite witness{t + " nonabelian-witnesses"};
        for (const auto& d : enumerate_ad_nilpotent_ideals(rs)) {
            if (is_abelian(rs, d)) continue;
            Subalgebra a = subalgebra_of_ideal(algebra, d);
            ClosureCertificate cert = certify_closed_orbit(algebra, a, Cocycle::zero(a));
            witness.expect(!cert.closed() &&
                           cert.reason == ClosureCertificate::Reason::NonAbelian);
            if (cert.alpha_witness) {
                Matrix fa = f_alpha(a, *cert.alpha_witness);
                witness.expect(!fa.is_zero());
                witness.expect(!subspace_equal(build_lagrangian(a, Cocycle(a, fa)),
                                               build_lagrangian(a, Cocycle::zero(a))));
            } else {
                witness.expect(false);
            }
        }
        suites.push_back(witness);

        if (rs.rank() <= 3) {
            Suite contracts{t + " action-contracts"};
            auto gens = contract_generators(algebra);
            for (const auto& d : abelian) {
                Subalgebra a = subalgebra_of_ideal(algebra, d);
                std::vector<Matrix> fs{Matrix(a.dim(), a.dim())};
                if (a.dim() >= 2) fs.push_back(seeded_skew(a.dim(), rng));
                for (const Matrix& fm : fs) {
                    Cocycle f(a, fm);
                    for (const GroupElement& g : gens)
                        contracts.expect(group_action_contract_holds(g, a, f));
                    for (int s = 0; s < 20; ++s)
                        contracts.expect(
                            translation_contract_holds(seeded_gstar(algebra, rng), a, f));
                }
            }
            suites.push_back(contracts);
        }

        if (rs.rank() <= 4) {
            Suite torus{t + " torus-scaling"};
            std::vector<Rational> c;
            for (int i = 0; i < algebra.rank(); ++i) c.emplace_back(2 + i);
            for (const auto& d : abelian) {
                if (d.size() < 2) continue;
                Subalgebra a = subalgebra_of_ideal(algebra, d);
                Matrix fm = seeded_skew(a.dim(), rng);
                Matrix scaled = torus_twist_f(c, a, fm);
                // entrywise character law
                bool entry_ok = true, changed_needed = false, changed = false;
                for (std::size_t i = 0; i < a.dim(); ++i)
                    for (std::size_t j = 0; j < a.dim(); ++j) {
                        Rational chi = algebra.character(c, d.roots[i]) *
                                       algebra.character(c, d.roots[j]);
                        if (scaled.at(i, j) * chi != fm.at(i, j)) entry_ok = false;
                        if (!fm.at(i, j).is_zero() && !chi.is_one()) changed_needed = true;
                        if (scaled.at(i, j) != fm.at(i, j)) changed = true;
                    }
                torus.expect(entry_ok);
                torus.expect(changed == changed_needed || !changed_needed);
                // coherence with the subspace action of the torus element
                Cocycle f(a, fm);
                torus.expect(group_action_contract_holds(algebra.torus(c), a, f));
                bool sub_ok = subspace_equal(
                    [&] {
                        SemidirectDouble dd(algebra);
                        DGroupElement tc = dd.embed_group(algebra.torus(c));
                        LagrangianPoint p = build_lagrangian(a, f);
                        Matrix moved(p.dim(), dd.ambient_dim());
                        for (std::size_t r = 0; r < p.dim(); ++r)
                            moved.set_row(
                                r, dd.to_ambient(dd.big_ad(tc, dd.from_ambient(p.basis().row(r)))));
                        return Subspace::span(moved);
                    }(),
                    build_lagrangian(a, Cocycle(a, scaled)));
                torus.expect(sub_ok);
            }
            suites.push_back(torus);
        }

        Suite orbits{t + " orbit-table"};
        for (const auto& row : orbit_table(algebra)) orbits.expect(row.certified_closed);
        suites.push_back(orbits);
    }

    set_debug_verify(false);

    std::size_t total = 0, failed = 0;
    for (const auto& s : suites) {
        total += s.checks;
        failed += s.failures;
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& s : suites)
            arr.push_back(Json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}});
        out << Json{{"seed", seed},
                    {"debug_verify", debug_verify},
                    {"suites", arr},
                    {"total_checks", total},
                    {"total_failures", failed},
                    {"ok", failed == 0}}
                   .dump(2)
            << "\n";
    } else {
        out << "selftest seed=" << seed << (debug_verify ? " debug-verify" : "") << "\n";
        for (const auto& s : suites)
            out << "  " << (s.failures ? "FAIL " : "pass ") << std::left << std::setw(34)
                << s.name << s.checks - s.failures << "/" << s.checks << "\n";
        out << (failed == 0 ? "all checks passed" : "FAILURES PRESENT") << " (" << total - failed
            << "/" << total << ")\n";
    }
    return failed == 0 ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lagrangian subalgebras of the semidirect double g x| g*"};
    app.require_subcommand(1);
    app.fallthrough(); // parent options (--format) may follow the subcommand

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    int cap = 0; // resolved after parsing so the env var is read once

    auto* peterson = app.add_subcommand("peterson-table", "abelian-ideal counts vs 2^rank");
    std::string types_csv = kDefaultTypes;
    peterson->add_option("--types", types_csv, "comma-separated Cartan types");
    int max_rank_flag = 0;
    peterson->add_option("--max-rank", max_rank_flag, "rank cap override");

    auto* enumerate = app.add_subcommand("enumerate", "list ad-nilpotent or abelian ideals");
    std::string en_type;
    enumerate->add_option("--type", en_type, "Cartan type, e.g. B3")->required();
    bool abelian_only = false;
    enumerate->add_flag("--abelian-only", abelian_only, "restrict to abelian ideals");

    auto* certify = app.add_subcommand("certify", "closed-orbit certificate for l(a, f)");
    std::string ct_type, ideal_file, basis_file, cocycle_file;
    certify->add_option("--type", ct_type, "Cartan type")->required();
    certify->add_option("--ideal", ideal_file, "ideal JSON file ({type, roots})");
    certify->add_option("--basis", basis_file, "subalgebra basis JSON file");
    certify->add_option("--cocycle", cocycle_file, "cocycle JSON file (F matrix)");

    auto* orbits = app.add_subcommand("orbit-table", "closed D-orbit table for a type");
    std::string ot_type;
    orbits->add_option("--type", ot_type, "Cartan type")->required();

    auto* selftest = app.add_subcommand("selftest", "run every invariant suite");
    std::string st_types_csv = kDefaultTypes;
    selftest->add_option("--types", st_types_csv, "comma-separated Cartan types");
    std::uint64_t seed = 12345;
    selftest->add_option("--seed", seed, "seed for sampled checks");
    bool debug_verify = false;
    selftest->add_flag("--debug-verify", debug_verify,
                       "re-verify action postconditions inside every call");

    std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 takes a reversed vector
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        cap = peterson->parsed() && max_rank_flag > 0 ? max_rank_flag : rank_cap_from_env();
        if (peterson->parsed())
            return cmd_peterson_table(split_types(types_csv), cap, format, out);
        if (enumerate->parsed()) return cmd_enumerate(en_type, abelian_only, cap, format, out);
        if (certify->parsed())
            return cmd_certify(ct_type, ideal_file, basis_file, cocycle_file, cap, format, out);
        if (orbits->parsed()) return cmd_orbit_table(ot_type, cap, format, out);
        if (selftest->parsed())
            return cmd_selftest(split_types(st_types_csv), cap, seed, debug_verify, format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace lagsub::cli
