#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidforge/coset.hpp"
#include "braidforge/dataset.hpp"
#include "braidforge/dsl.hpp"
#include "braidforge/normal_form.hpp"
#include "braidforge/regeneration.hpp"
#include "braidforge/vankampen.hpp"

using namespace braidforge;

namespace {

struct Out {
    std::ostream* os = &std::cout;
    std::ofstream file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw braid_error("cannot open report file " + path);
        os = &file;
    }
    template <typename T>
    Out& operator<<(const T& v) {
        (*os) << v;
        return *this;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw braid_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Factorization load_input(const std::string& dataset, const std::string& file) {
    if (!file.empty()) return parse_dsl(slurp(file));
    if (!dataset.empty()) return load_phi(dataset);
    throw braid_error("need --dataset or --file");
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "unavailable";
    }
}

int cmd_verify(const std::string& dataset, const std::string& file, size_t nf_budget,
               Out& out) {
    Factorization f = load_input(dataset, file);
    BmfReport rep = verify_bmf(f, nf_budget);
    out << "factors: " << f.factors.size() << "\n";
    out << "total_degree: " << rep.total_degree << "\n";
    out << "expected_degree: " << rep.expected_degree << "\n";
    out << "degree_ok: " << (rep.degree_ok ? "yes" : "no") << "\n";
    out << "permutation_ok: " << (rep.permutation_ok ? "yes" : "no") << "\n";
    out << "delta_squared: " << status_str(rep.delta_squared) << "\n";
    if (!rep.degree_ok || !rep.permutation_ok) return 1;
    if (rep.delta_squared == CheckStatus::fail) return 1;
    if (rep.delta_squared == CheckStatus::unavailable) return 2;
    return 0;
}

int cmd_audit(const std::string& dataset, const std::string& file, Out& out) {
    Factorization f = load_input(dataset, file);
    AuditReport rep = degree_audit(f);
    for (const auto& row : rep.rows)
        out << row.group << ": factors " << row.factor_count << " degree " << row.degree
            << "\n";
    long long parasitic = 0, blocks = 0, branch = 0;
    for (const auto& row : rep.rows) {
        if (row.group.rfind("C", 0) == 0) parasitic += row.degree;
        else if (row.group.rfind("phi", 0) == 0) blocks += row.degree;
        else if (row.group.rfind("b", 0) == 0) branch += row.degree;
    }
    out << "parasitic_total: " << parasitic << "\n";
    out << "local_total: " << blocks << "\n";
    out << "branch_total: " << branch << "\n";
    out << "prebranch_total: " << (parasitic + blocks) << "\n";
    out << "total " << rep.total << "\n";
    return 0;
}

int cmd_forgetting(const std::string& dataset, Out& out) {
    Factorization f = load_phi_prebranch(dataset);
    auto degs = forgetting_degrees(f);
    for (size_t i = 1; i < degs.size(); ++i)
        out << "f" << i << ": degree " << degs[i] << " deficit " << (2 - degs[i]) << "\n";
    return 0;
}

int cmd_regenerate(const std::string& file, const std::string& expr, Out& out) {
    if (!expr.empty()) {
        // expand a single expression over the doubled 24-line model
        Factorization f = parse_dsl("ambient doubled 24\n" + expr + "\n");
        out << print_dsl(f);
        return 0;
    }
    Factorization f = parse_dsl(slurp(file));
    if (f.ambient.is_doubled()) throw braid_error("input is already doubled");
    // apply the rules to every factor over the doubled set
    PunctureSet K2 = double_set(f.ambient);
    SymFactors out_factors;
    for (const auto& fac : f.factors) {
        SymFactor s;
        s.path = fac.path;
        s.exponent = fac.exponent;
        s.group = fac.group;
        s.provenance = fac.provenance;
        switch (fac.exponent) {
            case 1:
                for (auto& r : regenerate_branch(s)) out_factors.push_back(r);
                break;
            case 2:
                for (auto& r : regenerate_node(s, NodeMode::both)) out_factors.push_back(r);
                break;
            case 4:
                for (auto& r : regenerate_tangent(s, TangentSide::upper))
                    out_factors.push_back(r);
                break;
            default:
                throw braid_error("cannot regenerate a factor of exponent 3");
        }
    }
    out << print_dsl(compile_factors(out_factors, K2));
    return 0;
}

int cmd_orbit(const std::string& file, size_t budget, Out& out) {
    Factorization f = parse_dsl(slurp(file));
    auto r = orbit_search(f, budget);
    out << "states_visited: " << r.states_visited << "\n";
    out << "budget_exhausted: " << (r.budget_exhausted ? "yes" : "no") << "\n";
    return 0;
}

int cmd_invariance(const std::string& file, const std::string& braid, size_t budget,
                   Out& out) {
    Factorization f = parse_dsl(slurp(file));
    BraidWord h = parse_braid_expr(braid, f.ambient);
    auto r = invariance_check(f, h, budget);
    out << "states_visited: " << r.states_visited << "\n";
    if (r.status == InvarianceResult::Status::invariant) {
        out << "invariant: yes\ncertificate:";
        for (int mv : r.certificate) out << " " << mv;
        out << "\n";
        return 0;
    }
    out << "invariant: unknown\n";
    return 1;
}

int cmd_vankampen(const std::string& dataset, const std::string& file, bool projective,
                  bool fallback, Out& out) {
    Factorization f = load_input(dataset, file);
    FPGroup g = vk_relations(f, projective,
                             fallback ? RelationStyle::fallback : RelationStyle::classified);
    out << print_presentation(g);
    return 0;
}

int cmd_abelianize(const std::string& dataset, const std::string& file, bool projective,
                   Out& out) {
    Factorization f = load_input(dataset, file);
    FPGroup g = vk_relations(f, projective);
    auto inv = abelianize(g);
    out << "generators: " << g.generators.size() << "\n";
    out << "relators: " << g.relators.size() << "\n";
    out << "abelianization: " << inv.str() << "\n";
    out << "free_rank: " << inv.free_rank << "\n";
    return 0;
}

int cmd_monodromy(const std::string& dataset, Out& out) {
    Factorization f = load_phi(dataset);
    IncidenceModel m = load_incidence(dataset);
    FPGroup g = vk_relations(f, false);
    auto rep = geometric_monodromy(g, m, f.ambient);
    out << "sheets: " << rep.rep.sheet_count << "\n";
    out << "relators_vanish: " << (rep.all_relators_vanish ? "yes" : "no") << "\n";
    out << "image generates S" << rep.rep.sheet_count << ": "
        << (rep.generates_symmetric_group ? "yes" : "no") << "\n";
    if (!rep.all_relators_vanish) {
        out << "failing_relators:";
        for (size_t i : rep.failing_relators) out << " " << i;
        out << "\n";
        return 1;
    }
    return rep.generates_symmetric_group ? 0 : 1;
}

int cmd_enumerate(const std::string& presentation_file, const std::string& subgroup,
                  size_t limit, Out& out) {
    FPGroup g = parse_presentation(slurp(presentation_file));
    std::vector<FreeWord> subgens;
    if (!subgroup.empty()) {
        // subgroup generators given as relator-style words over g's generators
        std::string names = "generators";
        for (const auto& n : g.generators) names += " " + n;
        FPGroup parsed = parse_presentation(names + "\n" + subgroup + "\n");
        subgens = parsed.relators;
    }
    auto r = todd_coxeter(g, subgens, limit);
    if (r.status == CosetResult::Status::exceeded) {
        out << "result: exceeded\ncosets_defined: " << r.cosets_defined << "\n";
        return 2;
    }
    out << "result: index " << r.index << "\n";
    out << "certified: " << (r.certified ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidforge: braid monodromy factorizations of degenerated surfaces"};
    app.require_subcommand(1);

    std::string dataset, file, report, braid, expr, subgroup;
    size_t budget = 100000;
    size_t nf_budget = 0;
    bool projective = false, fallback = false;

    auto add_common = [&](CLI::App* cmd, bool with_file = true) {
        cmd->add_option("--dataset", dataset, "pillow or magician");
        if (with_file) cmd->add_option("--file", file, "factorization DSL file");
        cmd->add_option("--report", report, "write the report to a file");
    };

    auto* verify = app.add_subcommand("verify", "degree / permutation / Delta^2 checks");
    add_common(verify);
    verify->add_option("--nf-letter-budget", nf_budget,
                       "skip the normal-form check above this word length (0 = always run)");

    auto* audit = app.add_subcommand("audit", "itemized degree ledger");
    add_common(audit);

    auto* forgetting = app.add_subcommand("forgetting", "forgetting-homomorphism audit");
    add_common(forgetting, false);

    auto* regen = app.add_subcommand("regenerate", "apply the regeneration rules");
    add_common(regen);
    regen->add_option("--expr", expr, "expand one DSL expression over the doubled model");

    auto* orbit = app.add_subcommand("orbit", "bounded Hurwitz orbit search");
    add_common(orbit);
    orbit->add_option("--budget", budget, "state budget");

    auto* invariance = app.add_subcommand("invariance", "bounded invariance certificate");
    add_common(invariance);
    invariance->add_option("--braid", braid, "conjugating braid (DSL expression)")->required();
    invariance->add_option("--budget", budget, "state budget");

    auto* vk = app.add_subcommand("vankampen", "Zariski-van Kampen presentation");
    add_common(vk);
    vk->add_flag("--projective", projective, "append the projective relation");
    vk->add_flag("--fallback", fallback, "emit the fallback relator set");

    auto* ab = app.add_subcommand("abelianize", "Smith normal form of the presentation");
    add_common(ab);
    ab->add_flag("--projective", projective, "append the projective relation");

    auto* mono = app.add_subcommand("monodromy", "geometric monodromy diagnostic");
    add_common(mono, false);

    auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    enumerate->add_option("--presentation", file, "presentation file")->required();
    enumerate->add_option("--subgroup", subgroup, "subgroup generator words");
    enumerate->add_option("--limit", budget, "coset limit");
    enumerate->add_option("--report", report, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        Out out;
        out.open(report);
        if (app.got_subcommand(verify)) return cmd_verify(dataset, file, nf_budget, out);
        if (app.got_subcommand(audit)) return cmd_audit(dataset, file, out);
        if (app.got_subcommand(forgetting)) return cmd_forgetting(dataset, out);
        if (app.got_subcommand(regen)) return cmd_regenerate(file, expr, out);
        if (app.got_subcommand(orbit)) return cmd_orbit(file, budget, out);
        if (app.got_subcommand(invariance)) return cmd_invariance(file, braid, budget, out);
        if (app.got_subcommand(vk)) return cmd_vankampen(dataset, file, projective, fallback, out);
        if (app.got_subcommand(ab)) return cmd_abelianize(dataset, file, projective, out);
        if (app.got_subcommand(mono)) return cmd_monodromy(dataset, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(file, subgroup, budget, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
