#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylpi/catalog.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/freealg.hpp"
#include "weylpi/idsolve.hpp"
#include "weylpi/linearize.hpp"
#include "weylpi/repro.hpp"
#include "weylpi/weyl.hpp"
#include "weylpi/witt.hpp"

using namespace weylpi;

namespace {

struct Options {
    std::uint64_t characteristic = 0;
    std::string expr;
    std::string name;
    std::vector<std::uint32_t> mdeg;
    std::vector<std::uint64_t> point;
    std::uint32_t var = 1;
    std::vector<std::uint32_t> parts;
    std::string word;
    std::string matrix;
    std::string output;
    bool sweep = false;
};

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_char(CLI::App* cmd, Options& o)
{
    cmd->add_option("--char", o.characteristic, "characteristic: 0 or a prime")->default_val(0);
}

// Options are shared between subcommands, so the per-command default is
// applied after parsing.
void add_output(CLI::App* cmd, Options& o, const std::string& dflt)
{
    cmd->add_option("--output", o.output, "output format (default " + dflt + ")")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_input(CLI::App* cmd, Options& o)
{
    auto* e = cmd->add_option("--expr", o.expr, "free-algebra expression, e.g. \"[x1,x2]*x3\"");
    auto* n = cmd->add_option("--named", o.name, "catalog element, e.g. Phi22");
    e->excludes(n);
}

FreePoly input(const Options& o, Char c)
{
    if (!o.expr.empty())
        return parse(o.expr, c);
    if (!o.name.empty())
        return named(o.name, c);
    throw UsageError("one of --expr or --named is required");
}

void print(const Options& o, const nlohmann::json& j, const std::string& text)
{
    if (o.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_verify(const Options& o)
{
    const Char c = Char::from_value(o.characteristic);
    EvalReport r = is_identity(input(o, c));
    print(o, r.to_json(), r.to_text());
    return r.identity ? 0 : 1;
}

std::string solve_text(const SolveReport& r)
{
    std::string out = "multidegree " + r.mdeg.to_string() + ", char " +
                      r.characteristic.to_string() + ": dimension " +
                      std::to_string(r.dimension());
    for (std::size_t i = 0; i < r.dimension(); ++i)
        out += "\n  " + render(r.basis_polynomial(i));
    return out;
}

int cmd_solve(const Options& o)
{
    if (o.mdeg.empty())
        throw UsageError("--mdeg is required");
    const MultiDegree d(o.mdeg);
    if (o.sweep) {
        const std::vector<Char> chars{Char::zero(), Char::prime(2), Char::prime(3), Char::prime(5)};
        SweepResult s = sweep(d, chars);
        nlohmann::json j{{"mdeg", d.entries()}, {"dimensions_differ", s.dimensions_differ}};
        auto reports = nlohmann::json::array();
        std::string text;
        for (const auto& r : s.reports) {
            reports.push_back(r.to_json());
            text += "char " + r.characteristic.to_string() + ": dimension " +
                    std::to_string(r.dimension()) + "\n";
        }
        j["reports"] = reports;
        text += s.dimensions_differ ? "dimensions differ" : "dimensions agree";
        print(o, j, text);
        return 0;
    }
    SolveReport r = solve(d, Char::from_value(o.characteristic));
    print(o, r.to_json(), solve_text(r));
    return 0;
}

int cmd_eval(const Options& o)
{
    const Char c = Char::from_value(o.characteristic);
    const FreePoly f = input(o, c);
    if (o.point.empty() && f.num_vars() > 0)
        throw UsageError("--at is required");
    WeylElement v = eval_concrete(f, o.point);
    print(o, {{"polynomial", render(f)}, {"point", o.point}, {"value", v.to_string()}},
          v.to_string());
    return 0;
}

int cmd_linearize(const Options& o)
{
    const Char c = Char::from_value(o.characteristic);
    const FreePoly f = input(o, c);
    FreePoly g = o.parts.empty() ? lin_complete(f) : lin(f, o.var, Composition(o.parts));
    print(o, {{"input", render(f)}, {"result", render(g)}}, render(g));
    return 0;
}

int cmd_normal_form(const Options& o)
{
    if (o.word.find_first_not_of("xy") != std::string::npos)
        throw UsageError("--word may contain only the letters x and y");
    WeylElement v = normal_form(o.word, Char::from_value(o.characteristic));
    print(o, {{"word", o.word}, {"normal_form", v.to_string()}}, v.to_string());
    return 0;
}

int cmd_matrix(const Options& o)
{
    const MatrixLabel l = matrix_label_from_string(o.matrix);
    IntegerMatrix m = assemble_matrix(l);
    std::string text;
    for (const auto& row : m.entries) {
        for (std::size_t k = 0; k < row.size(); ++k)
            text += (k ? " " : "") + std::to_string(row[k]);
        text += "\n";
    }
    const Scalar det = determinant(m.to_matrix());
    text += "det = " + det.to_string();
    nlohmann::json j = m.to_json();
    j["det"] = det.value_string();
    j["matches_published"] = m == published_matrix(l);
    print(o, j, text);
    return 0;
}

int cmd_repro(const Options& o)
{
    std::vector<CriterionResult> results;
    bool ok = true;
    for (const auto& c : criteria()) {
        results.push_back(run_criterion(c));
        ok = ok && results.back().passed;
        if (o.output == "text")
            std::cout << to_text(results.back()) << std::endl;
    }
    if (o.output == "json")
        std::cout << to_json(results).dump(2) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Polynomial identities of the span of x^i*y in the Weyl algebra"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "decide whether a polynomial is an identity");
    add_input(verify, o);
    add_char(verify, o);
    add_output(verify, o, "text");

    auto* solve_cmd = app.add_subcommand("solve", "compute the space of identities of a multidegree");
    solve_cmd->add_option("--mdeg", o.mdeg, "multidegree, e.g. 2,1,1")->delimiter(',')->required();
    add_char(solve_cmd, o);
    solve_cmd->add_flag("--sweep", o.sweep, "solve over characteristics 0, 2, 3, 5");
    add_output(solve_cmd, o, "json");

    auto* eval = app.add_subcommand("eval", "evaluate at basis elements c_i = x^i*y");
    add_input(eval, o);
    eval->add_option("--at", o.point, "basis indices, e.g. 1,2")->delimiter(',');
    add_char(eval, o);
    add_output(eval, o, "text");

    auto* linearize = app.add_subcommand("linearize", "partial or complete linearization");
    add_input(linearize, o);
    linearize->add_option("--var", o.var, "variable index")->default_val(1);
    linearize->add_option("--parts", o.parts, "composition, e.g. 1,1 (omit for complete)")
        ->delimiter(',');
    add_char(linearize, o);
    add_output(linearize, o, "text");

    auto* nf = app.add_subcommand("normal-form", "normal form of a word in x and y");
    nf->add_option("--word", o.word, "word such as yyxx")->required();
    add_char(nf, o);
    add_output(nf, o, "text");

    auto* matrix = app.add_subcommand("matrix", "assemble a coefficient matrix");
    matrix->add_option("--label", o.matrix, "multilinear15, multilinear12 or pivot5")->required();
    add_output(matrix, o, "text");

    auto* repro = app.add_subcommand("repro", "run the reproduction table");
    add_output(repro, o, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }
    if (o.output.empty())
        o.output = *solve_cmd ? "json" : "text";

    try {
        if (*verify)
            return cmd_verify(o);
        if (*solve_cmd)
            return cmd_solve(o);
        if (*eval)
            return cmd_eval(o);
        if (*linearize)
            return cmd_linearize(o);
        if (*nf)
            return cmd_normal_form(o);
        if (*matrix)
            return cmd_matrix(o);
        if (*repro)
            return cmd_repro(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
