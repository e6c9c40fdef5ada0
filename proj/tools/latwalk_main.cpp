#include "latwalk/aut_rank.hpp"
#include "latwalk/cone.hpp"
#include "latwalk/enumerate.hpp"
#include "latwalk/errors.hpp"
#include "latwalk/isometry.hpp"
#include "latwalk/lattice_file.hpp"
#include "latwalk/sublattice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace latwalk;
using nlohmann::json;

// "1,0,-3" -> integer vector; names from the file's vectors table are
// accepted wherever a vector is expected.
Vec parse_vector_literal(const std::string& text, const std::string& where)
{
    Vec out;
    std::string token;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        token = text.substr(start, comma - start);
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ParseError(where + ": empty coordinate in \"" + text + "\"");
        out.push_back(int_from_string(token.substr(a, b - a + 1), where));
        start = comma + 1;
    }
    return out;
}

Vec resolve_vector(const LatticeFile& file, const std::string& spec, const std::string& where)
{
    auto hit = file.vectors.find(spec);
    if (hit != file.vectors.end())
        return hit->second;
    if (spec.find(',') == std::string::npos && spec.find_first_not_of("+-0123456789") != std::string::npos)
        throw PreconditionError(where + ": no vector named \"" + spec + "\" in the input file");
    Vec v = parse_vector_literal(spec, where);
    if (v.size() != file.lattice.rank())
        throw PreconditionError(where + ": expected " + std::to_string(file.lattice.rank())
                                + " coordinates, got " + std::to_string(v.size()));
    return v;
}

IntMat resolve_vectors(const LatticeFile& file, const std::vector<std::string>& specs,
                       const std::string& where)
{
    IntMat rows;
    rows.reserve(specs.size());
    for (const std::string& s : specs)
        rows.push_back(resolve_vector(file, s, where));
    return rows;
}

Vec named_or_throw(const LatticeFile& file, const std::string& name, const std::string& purpose)
{
    auto hit = file.vectors.find(name);
    if (hit == file.vectors.end())
        throw PreconditionError("the input file must name a \"" + name + "\" vector to supply " + purpose);
    return hit->second;
}

WallSystem wall_system_of(const LatticeFile& file)
{
    return WallSystem(file.lattice, named_or_throw(file, "kappa", "the positive cone orientation"),
                      file.walls);
}

void emit(const json& doc)
{
    std::cout << doc.dump() << "\n";
}

json json_isometry(const Isometry& g)
{
    return json{{"matrix", json_mat(g.matrix)}};
}

json json_adapted(const AdaptedBasis& ab)
{
    return json{{"ell", json_vec(ab.ell)},
                {"us", json_mat(ab.us)},
                {"ell_prime", json_vec(ab.ell_prime)},
                {"a", json_int(ab.a)},
                {"A", json_mat(ab.gram_a)},
                {"b", json_vec(ab.b)},
                {"c", json_int(ab.c)},
                {"d", json_int(ab.d)},
                {"rank_w", json_int(Int(ab.rank_w))}};
}

struct Options {
    std::string file;
    std::string ell = "ell";
    std::vector<std::string> w;
    std::vector<std::string> sub;
    std::string gamma;
    std::string x;
    std::string y;
    std::string e;
    std::size_t m_max = 0;
    std::string square;
    std::string range;
    std::size_t limit = 0;
    bool has_limit = false;
    std::string bound;
    std::string box;
    std::string picard;
    std::string fibers;
};

int run(const std::string& command, const Options& opt)
{
    if (command == "shioda-tate") {
        Int picard = int_from_string(opt.picard, "--picard");
        std::vector<Int> counts;
        if (!opt.fibers.empty())
            for (const Int& v : parse_vector_literal(opt.fibers, "--fibers"))
                counts.push_back(v);
        emit(json{{"rank", json_int(shioda_tate_rank(picard, counts))}});
        return 0;
    }

    LatticeFile file = load_lattice_file(opt.file);
    const Lattice& lat = file.lattice;

    if (command == "info") {
        emit(json{{"rank", json_int(Int(lat.rank()))},
                  {"det", json_int(lat.discriminant())},
                  {"signature", json_signature(lat.signature())},
                  {"hyperbolic", lat.is_hyperbolic()},
                  {"vectors", [&] {
                       json names = json::array();
                       for (const auto& [name, v] : file.vectors)
                           names.push_back(name);
                       return names;
                   }()},
                  {"walls", json_int(Int(file.walls.size()))},
                  {"mbm", json_int(Int(file.mbm.size()))}});
    } else if (command == "complement") {
        emit(json{{"basis", json_mat(orthogonal_complement(lat, resolve_vectors(file, opt.sub, "--sub")))}});
    } else if (command == "saturate") {
        emit(json{{"basis", json_mat(saturate(lat, resolve_vectors(file, opt.sub, "--sub")))}});
    } else if (command == "quotient") {
        QuotientLattice q = quotient_mod_isotropic(lat, resolve_vector(file, opt.ell, "--ell"));
        emit(json{{"rank", json_int(Int(q.quotient.rank()))},
                  {"gram", json_mat(q.quotient.gram())},
                  {"lift", json_mat(q.lift)},
                  {"signature", json_signature(q.quotient.signature())}});
    } else if (command == "adapt") {
        emit(json_adapted(adapted_basis(lat, resolve_vector(file, opt.ell, "--ell"),
                                        resolve_vectors(file, opt.w, "--w"))));
    } else if (command == "isometry") {
        AdaptedBasis ab = adapted_basis(lat, resolve_vector(file, opt.ell, "--ell"),
                                        resolve_vectors(file, opt.w, "--w"));
        GammaVector gamma = make_gamma(ab, parse_vector_literal(opt.gamma, "--gamma"));
        json doc = json_isometry(build_isometry(ab, gamma));
        doc["generators"] = [&] {
            json gens = json::array();
            for (const GammaVector& g : gamma_generators(ab))
                gens.push_back(json_vec(g.entries));
            return gens;
        }();
        emit(doc);
    } else if (command == "orbit") {
        AdaptedBasis ab = adapted_basis(lat, resolve_vector(file, opt.ell, "--ell"),
                                        resolve_vectors(file, opt.w, "--w"));
        Isometry g = build_isometry(ab, make_gamma(ab, parse_vector_literal(opt.gamma, "--gamma")));
        ConvergenceReport rep = orbit_projective_limit(g, resolve_vector(file, opt.x, "--x"),
                                                       ab.ell, opt.m_max);
        json devs = json::array();
        for (const auto& d : rep.deviations)
            devs.push_back(d ? json_rat(*d) : json(nullptr));
        json lams = json::array();
        for (const Int& l : rep.ell_coefficients)
            lams.push_back(json_int(l));
        emit(json{{"iterates", json_mat(rep.iterates)},
                  {"deviations", devs},
                  {"ell_coefficients", lams},
                  {"eventually_decreasing", rep.eventually_decreasing},
                  {"decreasing_from", json_int(Int(rep.decreasing_from))},
                  {"ell_coefficient_quadratic", rep.ell_coefficient_quadratic},
                  {"transverse_growth_linear", rep.transverse_growth_linear}});
    } else if (command == "enumerate") {
        EnumerationQuery query;
        if (!opt.square.empty() && opt.range.empty()) {
            Int s = int_from_string(opt.square, "--square");
            query.qmin = s - 1;
            query.qmax = s + 1;
        } else if (opt.square.empty() && !opt.range.empty()) {
            Vec ends = parse_vector_literal(opt.range, "--range");
            require(ends.size() == 2, "--range takes two integers \"qmin,qmax\"");
            query.qmin = ends[0];
            query.qmax = ends[1];
        } else {
            throw PreconditionError("exactly one of --square or --range is required");
        }
        if (opt.has_limit)
            query.limit = opt.limit;
        IntMat found = enumerate_negative(lat, query);
        emit(json{{"count", json_int(Int(found.size()))}, {"vectors", json_mat(found)}});
    } else if (command == "lambda-n") {
        IntMat reps = lambda_n_mod_ell(lat, resolve_vector(file, opt.ell, "--ell"),
                                       int_from_string(opt.bound, "--n"));
        emit(json{{"count", json_int(Int(reps.size()))}, {"representatives", json_mat(reps)}});
    } else if (command == "isotropic") {
        IntMat found = find_isotropic(lat, int_from_string(opt.box, "--box"));
        emit(json{{"count", json_int(Int(found.size()))}, {"vectors", json_mat(found)}});
    } else if (command == "nef") {
        emit(json{{"nef", is_nef(wall_system_of(file), resolve_vector(file, opt.x, "--x"))}});
    } else if (command == "separates") {
        emit(json{{"separates", separates(wall_system_of(file), resolve_vector(file, opt.e, "--e"),
                                          resolve_vector(file, opt.x, "--x"),
                                          resolve_vector(file, opt.y, "--y"))}});
    } else if (command == "mbm-face") {
        emit(json{{"face", mbm_face_test(wall_system_of(file), resolve_vector(file, opt.e, "--e"))}});
    } else if (command == "aut-rank") {
        RankReport rep = aut_rank(lat, resolve_vector(file, opt.ell, "--ell"),
                                  wall_system_of(file), file.mbm);
        emit(json{{"picard", json_int(Int(rep.picard))},
                  {"dimW", json_int(Int(rep.dim_w))},
                  {"rank", json_int(Int(rep.rank))},
                  {"spanning_set", json_mat(rep.spanning_set)},
                  {"mbm_circ_used", json_mat(rep.mbm_circ_used)},
                  {"within_hypothesis", rep.within_hypothesis},
                  {"rank_upper_bound", json_int(Int(rank_upper_bound(lat)))}});
    } else {
        ensure(false, "unhandled command " + command);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact arithmetic for hyperbolic lattices: quotients, unipotent "
                 "isometries, wall systems and rank bookkeeping"};
    app.require_subcommand(1);
    Options opt;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "lattice description (JSON)")->required();
    };
    auto add_ell = [&](CLI::App* cmd) {
        cmd->add_option("--ell", opt.ell, "isotropic class: a vector name or comma literal (default \"ell\")");
    };
    auto add_w = [&](CLI::App* cmd) {
        cmd->add_option("--w", opt.w, "classes spanning W, repeatable");
    };

    add_file(app.add_subcommand("info", "rank, determinant and signature"));

    CLI::App* complement = app.add_subcommand("complement", "orthogonal complement of a set of vectors");
    add_file(complement);
    complement->add_option("--sub", opt.sub, "generating vectors, repeatable")->required();

    CLI::App* saturate_cmd = app.add_subcommand("saturate", "saturation of the span of a set of vectors");
    add_file(saturate_cmd);
    saturate_cmd->add_option("--sub", opt.sub, "generating vectors, repeatable")->required();

    CLI::App* quotient = app.add_subcommand("quotient", "form on (ell-perp)/Z ell with canonical lifts");
    add_file(quotient);
    add_ell(quotient);

    CLI::App* adapt = app.add_subcommand("adapt", "adapted basis {ell, u_i, ell'} and its block data");
    add_file(adapt);
    add_ell(adapt);
    add_w(adapt);

    CLI::App* isometry = app.add_subcommand("isometry", "unipotent isometry attached to a gamma vector");
    add_file(isometry);
    add_ell(isometry);
    add_w(isometry);
    isometry->add_option("--gamma", opt.gamma, "gamma coordinates, comma literal")->required();

    CLI::App* orbit = app.add_subcommand("orbit", "projective convergence data of g^m x toward ell");
    add_file(orbit);
    add_ell(orbit);
    add_w(orbit);
    orbit->add_option("--gamma", opt.gamma, "gamma coordinates, comma literal")->required();
    orbit->add_option("--x", opt.x, "starting class of positive square")->required();
    orbit->add_option("--m-max", opt.m_max, "largest power to evaluate")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "vectors of bounded negative square");
    add_file(enumerate);
    enumerate->add_option("--square", opt.square, "exact square to hit");
    enumerate->add_option("--range", opt.range, "open interval \"qmin,qmax\"");
    CLI::Option* limit = enumerate->add_option("--limit", opt.limit, "cap on the number of results");

    CLI::App* lambda = app.add_subcommand("lambda-n", "classes of square in (-N, 0) modulo ell");
    add_file(lambda);
    add_ell(lambda);
    lambda->add_option("--n", opt.bound, "strict bound N > 0 on -<x,x>")->required();

    CLI::App* isotropic = app.add_subcommand("isotropic", "primitive isotropic vectors in a coordinate box");
    add_file(isotropic);
    isotropic->add_option("--box", opt.box, "coordinate bound")->required();

    CLI::App* nef = app.add_subcommand("nef", "membership in the nef cone cut out by the walls");
    add_file(nef);
    nef->add_option("--x", opt.x, "class to test")->required();

    CLI::App* separates_cmd = app.add_subcommand("separates", "does a wall separate two classes");
    add_file(separates_cmd);
    separates_cmd->add_option("--e", opt.e, "wall class")->required();
    separates_cmd->add_option("--x", opt.x, "first class")->required();
    separates_cmd->add_option("--y", opt.y, "second class")->required();

    CLI::App* face = app.add_subcommand("mbm-face", "does a negative class support a face of the nef cone");
    add_file(face);
    face->add_option("--e", opt.e, "class to test")->required();

    CLI::App* rank = app.add_subcommand("aut-rank", "rank of the free part acting on the face of ell");
    add_file(rank);
    add_ell(rank);

    CLI::App* shioda = app.add_subcommand("shioda-tate", "Mordell-Weil rank from a fiber configuration");
    shioda->add_option("--picard", opt.picard, "Picard number")->required();
    shioda->add_option("--fibers", opt.fibers, "component counts, e.g. \"2,3,4\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n\n" << app.help() << std::flush;
        return 64;
    }

    opt.has_limit = limit->count() > 0;

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const PreconditionError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const InvariantError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
}
