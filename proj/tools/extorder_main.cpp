#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "extorder/io.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw extorder::ValidationError("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int ground_size_of(const extorder::ParsedInput& input) {
    if (input.is_matroid()) return std::get<extorder::Matroid>(input.value).n();
    if (input.is_antimatroid()) return std::get<extorder::Antimatroid>(input.value).n();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"external orders of matroids, antimatroids, and join-distributive lattices"};
    app.require_subcommand(1);

    std::string input_path;
    std::string remove_list, contract_list;
    extorder::RunFlags flags;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", input_path, "JSON spec file (default: stdin)");
        return cmd;
    };

    CLI::App* ext = add_common(app.add_subcommand("ext-order", "generalized external order"));
    ext->add_flag("--dot", flags.dot, "emit a DOT Hasse diagram instead of JSON");
    ext->add_flag("--feasible-labels", flags.feasible_labels,
                  "label DOT nodes with passive sets instead of independents");
    ext->add_flag("--lv", flags.las_vergnas,
                  "include the basis-restricted order in Las Vergnas orientation");
    add_common(app.add_subcommand("classify", "EO / MJD / JD classification"));
    add_common(app.add_subcommand("tutte", "Tutte polynomial by both methods"));
    add_common(app.add_subcommand("partition", "boolean-lattice interval partition"));
    CLI::App* minor = add_common(app.add_subcommand("minor", "deletion/contraction minor"));
    minor->add_option("--delete", remove_list, "comma-separated elements to delete");
    minor->add_option("--contract", contract_list, "comma-separated elements to contract");
    add_common(app.add_subcommand("circuits", "rooted circuits (and cocircuits)"));
    add_common(app.add_subcommand("check", "run the full invariant suite on the input"));

    CLI11_PARSE(app, argc, argv);

    try {
        extorder::ParsedInput input = extorder::parse_spec(read_input(input_path));
        int n = ground_size_of(input);
        if (!remove_list.empty()) flags.remove = extorder::parse_element_list(remove_list, n);
        if (!contract_list.empty()) flags.contract = extorder::parse_element_list(contract_list, n);
        extorder::RunResult res =
            extorder::run(app.get_subcommands().front()->get_name(), input, flags);
        std::cout << res.output;
        return res.exit_code;
    } catch (const extorder::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const extorder::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
