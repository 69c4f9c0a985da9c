#include "l2b/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const l2b::CommandResult &r, const std::string &out_path) {
    std::cerr << r.err;
    if (r.exit_code == 2 || out_path.empty()) {
        std::cout << r.out;
        return r.exit_code;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: io: cannot write '" << out_path << "'\n";
        return 2;
    }
    f << r.out;
    return r.exit_code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"l2b: exact verification of two-term Lie structures"};
    app.require_subcommand(1);

    std::string file, method = "auto", out_path, which, family, action, name;
    std::uint64_t seed = 0;
    bool perturbed = false;

    auto *verify = app.add_subcommand("verify", "verify a structure document");
    verify->add_option("file", file, "document path")->required();
    verify->add_option("--method", method, "auto|def|matched|weil|all");
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    auto *dualize = app.add_subcommand("dualize", "emit a dual document");
    dualize->add_option("file", file, "document path")->required();
    dualize->add_option("--which", which, "two_vs|dvb_vertical|dvb_horizontal|flip")->required();
    dualize->add_option("--out", out_path, "output path");

    auto *gen = app.add_subcommand("gen", "generate an instance of a family");
    gen->add_option("--family", family, "family, e.g. scaling(1,1) or adjoint(sl2)")->required();
    gen->add_option("--seed", seed, "seed");
    gen->add_flag("--perturbed", perturbed, "apply a seeded invalidating single-entry change");
    gen->add_option("--out", out_path, "output path");

    auto *cat = app.add_subcommand("catalog", "list or show built-in instances");
    cat->add_option("action", action, "list|show")->required();
    cat->add_option("name", name, "instance name for show");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify)
            return emit(l2b::cmd_verify(file, method), out_path);
        if (*dualize)
            return emit(l2b::cmd_dualize(file, which), out_path);
        if (*gen)
            return emit(l2b::cmd_gen(family, seed, perturbed), out_path);
        return emit(l2b::cmd_catalog(action, name), "");
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
