#include "leibxmod/commands.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

using namespace leibxmod::io;

namespace {

bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Leibniz crossed modules: exterior products, Schur multipliers and stem covers"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;
    std::vector<std::string> paths;
    std::size_t degree = 2;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"check", "validate an algebra, action, xmod, hom or extension"},
        {"multiplier", "Schur multiplier of a crossed module"},
        {"exterior", "exterior crossed module (q^n, q^q, id^delta)"},
        {"classify-extension", "central / stem / stem cover flags"},
        {"verify-sequence", "six-term exact sequence of a central extension"},
        {"stemcover", "stem cover of a perfect crossed module"},
        {"liezation", "largest Lie quotient of a crossed module"},
        {"hl", "dimension of Leibniz homology HL_n"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("paths", paths, "fixture files")->required();
        if (name == "hl")
            sub->add_option("--degree,-n", degree, "homology degree (1-3)")->check(CLI::Range(1, 3));
        sub->add_flag("--json", json, "print a JSON report");
        sub->add_option("--out", out_path, "write the emitted fixture (or the report) here");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(Status::unreadable);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    // `hl <file> <degree>` is accepted as well as `hl <file> --degree n`.
    if (command == "hl" && paths.size() == 2) {
        try {
            degree = std::stoul(paths[1]);
        } catch (const std::exception&) {
            std::cerr << "degree must be a number\n";
            return static_cast<int>(Status::unreadable);
        }
        paths.pop_back();
    }

    int worst = 0;
    Json reports = Json::array();
    std::string text;
    for (const auto& p : paths) {
        auto r = run_command(command, p, degree);
        worst = std::max(worst, static_cast<int>(r.status));
        reports.push_back(r.json);
        text += r.text;
        if (r.fixture) {
            if (!out_path.empty() && paths.size() == 1) {
                if (!write_file(out_path, dump(*r.fixture))) {
                    std::cerr << "cannot write " << out_path << "\n";
                    return static_cast<int>(Status::unreadable);
                }
            } else if (!json) {
                text += dump(*r.fixture);
            } else {
                reports.back()["fixture"] = *r.fixture;
            }
        }
    }

    std::string report = json ? dump(reports.size() == 1 ? reports.front() : reports) : text;
    bool emitted = !out_path.empty() && paths.size() == 1 && (command == "stemcover" || command == "liezation" ||
                                                              command == "exterior");
    if (!out_path.empty() && !emitted) {
        if (!write_file(out_path, report)) {
            std::cerr << "cannot write " << out_path << "\n";
            return static_cast<int>(Status::unreadable);
        }
    } else {
        std::cout << report;
    }
    return worst;
}
