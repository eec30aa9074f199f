#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "ainf/commands.hpp"

namespace {

int exit_code(const ainf::Error& e)
{
    switch (e.kind) {
        case ainf::Error::Kind::usage:
            return 1;
        case ainf::Error::Kind::validation:
        case ainf::Error::Kind::cap:
            return 2;
        case ainf::Error::Kind::consistency:
            return 3;
    }
    return 3;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact homotopy-transfer toolkit: strongly homotopy associative structures "
                 "on homology, bar constructions, Massey products, twisted tensor products"};
    app.require_subcommand(1);

    struct SubState {
        std::string model_path;
        int degree_cap = 0;
        int arity_cap = -1;
        std::string field;
        std::string grading;
        std::string output = "table";
        std::string verify = "strict";
        std::vector<std::string> triple;
    };
    std::map<std::string, std::shared_ptr<SubState>> states;

    auto add_common = [&](CLI::App* sub, bool needs_caps) {
        auto st = std::make_shared<SubState>();
        states[sub->get_name()] = st;
        sub->add_option("model", st->model_path, "model file (json)")->required();
        if (needs_caps) {
            sub->add_option("--degree-cap", st->degree_cap, "degree cap (required)")
                ->required();
            sub->add_option("--arity-cap", st->arity_cap,
                            "arity cap (default: derived or from the model)");
            sub->add_option("--field", st->field, "coefficients: Q or Zp:<p>");
            sub->add_option("--grading", st->grading, "homological or cohomological")
                ->check(CLI::IsMember({"homological", "cohomological"}));
            sub->add_option("--output", st->output, "json or table")
                ->check(CLI::IsMember({"json", "table"}));
            sub->add_option("--verify", st->verify, "strict re-runs all defect checkers")
                ->check(CLI::IsMember({"strict", "fast"}));
        }
        return st;
    };

    for (const std::string& name : ainf::command_names()) {
        CLI::App* sub = app.add_subcommand(name, "");
        add_common(sub, true);
        if (name == "massey")
            sub->add_option("--triple", states[name]->triple,
                            "three class expressions, e.g. [e1] [e2] [e2]")
                ->expected(3);
    }
    CLI::App* echo = app.add_subcommand("echo-model", "parse, validate and re-emit a model");
    add_common(echo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
    }

    CLI::App* sub = app.get_subcommands().front();
    const SubState& st = *states.at(sub->get_name());

    try {
        auto t0 = std::chrono::steady_clock::now();
        std::optional<ainf::Field> field_override;
        if (!st.field.empty())
            field_override = st.field == "Q" ? ainf::Field::Q()
                                             : ainf::Field::Zp(std::stoul(st.field.substr(3)));
        std::optional<bool> grading_override;
        if (!st.grading.empty())
            grading_override = st.grading == "cohomological";
        std::stringstream ss;
        if (st.model_path == "-") {
            ss << std::cin.rdbuf();
        } else {
            std::ifstream in(st.model_path);
            if (!in)
                throw ainf::usage_error("cannot open model file '" + st.model_path + "'");
            ss << in.rdbuf();
        }
        ainf::Model m =
            ainf::load_model_text(ss.str(), st.model_path, field_override, grading_override);
        if (sub->get_name() == "echo-model") {
            std::cout << ainf::emit_model(m);
            return 0;
        }
        ainf::CmdOptions opt;
        opt.degree_cap = st.degree_cap;
        if (st.arity_cap >= 0)
            opt.arity_cap = st.arity_cap;
        opt.strict = st.verify == "strict";
        opt.triple = st.triple;
        ainf::Report r = ainf::run_command(sub->get_name(), m, opt);
        std::cout << (st.output == "json" ? ainf::render_json(r) : ainf::render_table(r));
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "timing: " << ms << " ms\n";
        return r.defect_count > 0 ? 2 : 0;
    } catch (const ainf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
