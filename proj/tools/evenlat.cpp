// evenlat: command-line front end. Output is JSON on stdout (Markdown for
// verify-paper --format md); errors go to stderr with exit codes
//   1 verification failure, 2 parse error, 3 precondition, 4 guard exceeded.

#include "evenlat/discform.hpp"
#include "evenlat/error.hpp"
#include "evenlat/io.hpp"
#include "evenlat/refdata.hpp"
#include "evenlat/reconstruct.hpp"
#include "evenlat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace evenlat;
using io::Json;
using io::to_json;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json with_schema(Json j)
{
    Json out{{"schema", io::kSchema}};
    for (auto& [k, v] : j.items())
        out[k] = v;
    return out;
}

Json elements_json(const std::vector<GroupElement>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs)
        a.push_back(x);
    return a;
}

Json module_json(const FiniteQuadraticModule& m)
{
    Json q = Json::array();
    for (std::size_t i = 0; i < m.num_generators(); ++i)
        q.push_back(to_json(m.q_gen(i)));
    RatMat b(m.num_generators(), m.num_generators());
    for (std::size_t i = 0; i < m.num_generators(); ++i)
        for (std::size_t j = 0; j < m.num_generators(); ++j)
            b(i, j) = m.b_gen(i, j);
    Json gens = Json::array();
    for (const auto& l : m.lifts())
        gens.push_back(to_json(l));
    return Json{{"invariant_factors", m.orders()}, {"order", m.order()}, {"generators", gens},
                {"q_table", q}, {"b_table", to_json(b)}};
}

Lattice gram_lattice(const std::string& path)
{
    io::GramFile g = io::parse_gram_file(io::read_file(path));
    return Lattice(g.gram, g.name);
}

struct Opts {
    std::string input, input2, ambient, gens, mode, format = "json", tier = "auto";
    bool rational = false, inverse = false, subgroups = false;
    std::vector<std::string> results;
};

int cmd_snf(const Opts& o)
{
    io::GramFile g = io::parse_gram_file(io::read_file(o.input));
    if (!o.rational && !o.inverse) {
        SmithForm s = snf(g.gram);
        emit(with_schema(Json{{"D", to_json(s.D)}, {"S", to_json(s.S)}, {"T", to_json(s.T)},
                              {"invariant_factors", to_json(s.invariant_factors())}}));
        return 0;
    }
    RatMat a = o.inverse ? inverse(g.gram) : to_rational(g.gram);
    RationalSmithForm s = snf_rational(a);
    emit(with_schema(Json{{"D", to_json(s.D)}, {"S", to_json(s.S)}, {"T", to_json(s.T)},
                          {"invariant_factors", to_json(s.diagonal())}}));
    return 0;
}

int cmd_disc(const Opts& o)
{
    Lattice l = gram_lattice(o.input);
    emit(with_schema(module_json(from_lattice(l))));
    return 0;
}

int cmd_isotropic(const Opts& o)
{
    FiniteQuadraticModule m = from_lattice(gram_lattice(o.input));
    auto iso = isotropic_elements(m);
    Json out{{"invariant_factors", m.orders()}, {"count", iso.size()}, {"elements", elements_json(iso)}};
    if (o.subgroups) {
        Json subs = Json::array();
        for (const auto& h : isotropic_subgroups(m))
            subs.push_back(Json{{"order", h.order()}, {"generators", elements_json(h.generators)}});
        out["subgroups"] = subs;
    }
    emit(with_schema(out));
    return 0;
}

int cmd_overlattices(const Opts& o)
{
    FiniteQuadraticModule m = from_lattice(gram_lattice(o.input));
    Json list = Json::array();
    for (const auto& h : isotropic_subgroups(m)) {
        OverlatticeData d = overlattice(m, h);
        list.push_back(Json{{"index", h.order()}, {"generators", elements_json(h.generators)},
                            {"basis", to_json(d.basis)}, {"gram", to_json(d.lattice.gram())},
                            {"det", to_json(d.lattice.det())}});
    }
    emit(with_schema(Json{{"count", list.size()}, {"overlattices", list}}));
    return 0;
}

int cmd_complement(const Opts& o)
{
    Lattice amb = io::lattice_from_spec(o.ambient);
    IntMat gens = io::matrix_from_spec(o.gens);
    SublatticeData c = orthogonal_complement(amb, gens);
    Json out{{"basis", to_json(c.basis_coords)}, {"gram", to_json(c.induced_gram)}, {"degenerate", c.degenerate}};
    if (!c.degenerate && c.basis_coords.rows() > 0) {
        Lattice l = c.lattice();
        out["det"] = to_json(l.det());
        out["signature"] = Json::array({l.signature().n_plus, l.signature().n_minus});
    }
    emit(with_schema(out));
    return 0;
}

int cmd_embed_check(const Opts& o)
{
    Lattice amb = io::lattice_from_spec(o.ambient);
    IntMat gens = io::matrix_from_spec(o.gens);
    SublatticeData s = sublattice(amb, gens);
    emit(with_schema(Json{{"primitive", is_primitive(amb, gens)}, {"gram", to_json(s.induced_gram)},
                          {"snf", to_json(snf(gens).invariant_factors())}}));
    return 0;
}

int cmd_config(const Opts& o)
{
    if (o.mode == "quotient") {
        CurveConfig c = io::parse_config(io::read_file(o.input));
        InvolutionAction a = io::parse_involution(io::read_file(o.input2));
        QuotientData q = quotient_by_involution(c, a, FixedPointData{});
        Json orbits = Json::array();
        for (const auto& orb : q.orbits) {
            Json labels = Json::array();
            for (auto i : orb)
                labels.push_back(c.labels()[i]);
            orbits.push_back(labels);
        }
        Json out = io::config_json(q.config);
        out["orbits"] = orbits;
        emit(out);
        return 0;
    }
    if (o.mode == "pullback") {
        CurveConfig c = io::parse_config(io::read_file(o.input));
        CoverStep st = io::parse_cover_step(io::read_file(o.input2));
        auto res = double_cover_pullback(c, st);
        Json list = Json::array();
        for (const auto& r : res) {
            Json j = io::config_json(r.config);
            j.erase("schema");
            j["preimages"] = r.preimages;
            list.push_back(j);
        }
        emit(with_schema(Json{{"count", res.size()}, {"configurations", list}}));
        return 0;
    }
    if (o.mode == "reconstruct") {
        ReconstructOptions opt;
        if (o.tier == "1")
            opt.max_tier = 1;
        Reconstruction24 r = reconstruct_24(opt);
        Json sols = Json::array();
        for (std::size_t k = 0; k < r.solutions.size(); ++k) {
            Json j = io::config_json(r.solutions[k]);
            j.erase("schema");
            j["hexagon"] = r.hexagons[k];
            j["q_orthogonal_to_s"] = q_orthogonal_to_s(r.solutions[k]);
            Json ids = Json::object();
            for (const auto& rel : ref::ns_relations())
                ids[rel.name] = is_curve_identity(r.solutions[k], rel.lhs, rel.rhs);
            j["identities"] = ids;
            sols.push_back(j);
        }
        emit(with_schema(Json{{"tier", r.tier},
                              {"tier1_count", r.tier1_count},
                              {"tier1_classes", r.tier1_classes},
                              {"tier2_count", r.tier2_count},
                              {"anomalies", r.anomalies},
                              {"solutions", sols}}));
        return 0;
    }
    throw ParseError("config mode must be quotient, pullback or reconstruct");
}

int cmd_verify(const Opts& o)
{
    VerifyInputs in;
    if (o.tier == "1")
        in.tier_policy = 1;
    else if (o.tier == "2")
        in.tier_policy = 2;
    for (const auto& id : o.results)
        if (std::find(result_ids().begin(), result_ids().end(), id) == result_ids().end())
            throw ParseError("unknown result id " + id);
    VerificationReport r = run_all(in, o.results);
    if (o.format == "md")
        std::cout << report_markdown(r);
    else
        emit(report_json(r));
    if (r.ok())
        return 0;
    return r.guard_exceeded ? 4 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice and discriminant form computations"};
    app.require_subcommand(1);
    Opts o;

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a Gram matrix");
    snf_cmd->add_option("input", o.input, "Gram file")->required();
    snf_cmd->add_flag("--rational", o.rational, "rational Smith form");
    snf_cmd->add_flag("--inverse", o.inverse, "use the inverse matrix (implies --rational)");

    auto* disc = app.add_subcommand("disc", "discriminant group and form");
    disc->add_option("input", o.input, "Gram file")->required();

    auto* iso = app.add_subcommand("isotropic", "isotropic elements of the discriminant form");
    iso->add_option("input", o.input, "Gram file")->required();
    iso->add_flag("--subgroups", o.subgroups, "also list isotropic subgroups");

    auto* over = app.add_subcommand("overlattices", "even overlattices");
    over->add_option("input", o.input, "Gram file")->required();

    auto* comp = app.add_subcommand("complement", "orthogonal complement of a sublattice");
    comp->add_option("ambient", o.ambient, "Gram file or names, e.g. U(2)+<-8>")->required();
    comp->add_option("gens", o.gens, "generator rows: file or inline JSON")->required();

    auto* emb = app.add_subcommand("embed-check", "induced Gram and primitivity");
    emb->add_option("ambient", o.ambient, "Gram file or names, e.g. U(2)+<-8>")->required();
    emb->add_option("gens", o.gens, "generator rows: file or inline JSON")->required();

    auto* cfg = app.add_subcommand("config", "curve configurations");
    cfg->add_option("mode", o.mode, "quotient | pullback | reconstruct")
        ->required()
        ->check(CLI::IsMember({"quotient", "pullback", "reconstruct"}));
    cfg->add_option("config", o.input, "configuration file (quotient, pullback)");
    cfg->add_option("action", o.input2, "involution file (quotient) or cover step file (pullback)");
    cfg->add_option("--tier", o.tier, "reconstruction tier: auto | 1")->check(CLI::IsMember({"auto", "1", "2"}));

    auto* ver = app.add_subcommand("verify-paper", "run the verification checkers");
    ver->add_option("--result", o.results, "restrict to result ids");
    ver->add_option("--tier", o.tier, "auto | 1 | 2")->check(CLI::IsMember({"auto", "1", "2"}));
    ver->add_option("--format", o.format, "json | md")->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*snf_cmd)
            return cmd_snf(o);
        if (*disc)
            return cmd_disc(o);
        if (*iso)
            return cmd_isotropic(o);
        if (*over)
            return cmd_overlattices(o);
        if (*comp)
            return cmd_complement(o);
        if (*emb)
            return cmd_embed_check(o);
        if (*cfg) {
            if (o.mode != "reconstruct" && (o.input.empty() || o.input2.empty()))
                throw ParseError("config " + o.mode + " needs a configuration and an action file");
            return cmd_config(o);
        }
        if (*ver)
            return cmd_verify(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 3;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
