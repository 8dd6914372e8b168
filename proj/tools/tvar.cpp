// Command line driver.  Jobs come in as JSON (file, stdin, or flags) and
// reports leave as JSON on stdout with a human rendering on stderr.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "tvar/jobs.hpp"

namespace {

const char* family_name(tvar::ErrorFamily f) {
    switch (f) {
        case tvar::ErrorFamily::schema: return "schema";
        case tvar::ErrorFamily::precondition: return "precondition";
        case tvar::ErrorFamily::undecided: return "undecided";
        default: return "internal";
    }
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

tvar::Json parse_text(const std::string& raw) {
    tvar::Json j = tvar::Json::parse(raw, nullptr, false);
    if (j.is_discarded()) throw tvar::schema_error("input is not valid JSON", "/");
    return j;
}

// payload precedence: --input file (or "-"), then piped stdin, then flags only
tvar::Json base_payload(const std::string& kind, const std::string& input_path) {
    std::string raw;
    if (!input_path.empty()) {
        if (input_path == "-") {
            raw = slurp(std::cin);
        } else {
            std::ifstream f(input_path);
            if (!f) throw tvar::schema_error("cannot open input file '" + input_path + "'", "/");
            raw = slurp(f);
        }
        if (raw.empty()) throw tvar::schema_error("empty input", "/");
    } else if (!isatty(STDIN_FILENO)) {
        raw = slurp(std::cin);
    }
    if (raw.empty()) return tvar::Json::object();
    tvar::Json j = parse_text(raw);
    if (!j.is_object()) throw tvar::schema_error("expected an object", "/");
    if (j.contains("kind")) {
        tvar::JobSpec job = tvar::parse_job(j);
        if (job.kind != kind)
            throw tvar::schema_error("job kind '" + job.kind + "' does not match subcommand '" + kind + "'", "/kind");
        return job.payload;
    }
    return j;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for torus actions of complexity two on affine space"};
    app.require_subcommand(1);

    bool quiet = false;
    std::string input;
    std::string u_text;
    int height = 0;
    int bound = 0;
    std::string example_name;
    bool list_examples = false;

    CLI::App* present = app.add_subcommand("present", "divisorial presentation from a weight matrix");
    CLI::App* eval = app.add_subcommand("evaluate", "evaluate the presentation at a lattice point");
    CLI::Option* u_opt = eval->add_option("--u", u_text, "lattice point, comma separated");
    CLI::App* fixed = app.add_subcommand("fixed-points", "survey fixed components over primitive directions");
    CLI::Option* height_opt = fixed->add_option("--height", height, "direction height bound");
    CLI::App* invariants = app.add_subcommand("invariants", "invariant monomials up to a degree bound");
    CLI::Option* bound_opt = invariants->add_option("--bound", bound, "total degree bound");
    CLI::App* classify = app.add_subcommand("classify", "classification checks on weights, curves, and a cyclic action");
    CLI::App* example = app.add_subcommand("example", "run a built-in example by name");
    CLI::Option* name_opt = example->add_option("--name", example_name, "example name");
    example->add_flag("--list", list_examples, "list the built-in example names");

    for (CLI::App* sub : {present, eval, fixed, invariants, classify, example}) {
        sub->add_option("--input", input, "JSON payload or full job; '-' reads stdin");
        sub->add_flag("--quiet,-q", quiet, "suppress the human-readable report");
    }

    CLI11_PARSE(app, argc, argv);

    std::string kind;
    if (app.got_subcommand(present)) kind = "present";
    else if (app.got_subcommand(eval)) kind = "evaluate";
    else if (app.got_subcommand(fixed)) kind = "fixed-points";
    else if (app.got_subcommand(invariants)) kind = "invariants";
    else if (app.got_subcommand(classify)) kind = "classify";
    else kind = "example";

    try {
        if (list_examples) {
            tvar::Json names = tvar::Json::array();
            for (const std::string& n : tvar::builtin_example_names()) names.push_back(n);
            std::cout << names.dump(2) << "\n";
            return 0;
        }
        tvar::Json payload = base_payload(kind, input);
        if (u_opt->count() > 0) {
            tvar::Json u = tvar::Json::array();
            for (const std::string& tok : split_commas(u_text)) u.push_back(tok);
            payload["u"] = std::move(u);
        }
        if (height_opt->count() > 0) payload["height"] = height;
        if (bound_opt->count() > 0) payload["bound"] = bound;
        if (name_opt->count() > 0) payload["name"] = example_name;

        tvar::Report report = tvar::run_job({kind, std::move(payload)});
        std::cout << report.data.dump(2) << "\n";
        if (!quiet && !report.text.empty()) std::cerr << report.text << "\n";
        return report.exit_code;
    } catch (const tvar::Error& e) {
        tvar::Json err{{"error", tvar::Json{{"name", e.name()},
                                            {"family", family_name(e.family())},
                                            {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        if (!quiet) std::cerr << "error: " << e.what() << "\n";
        return tvar::exit_code_for(e.family());
    } catch (const std::exception& e) {
        tvar::Json err{{"error", tvar::Json{{"name", "InternalError"},
                                            {"family", "internal"},
                                            {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        if (!quiet) std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
