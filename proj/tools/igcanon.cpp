// Command-line surface over the interval graph library: canonization,
// isomorphism, recognition with certificates, generator, graph transforms
// and Weisfeiler-Lehman comparison. Machine-readable output on stdout,
// diagnostics on stderr.
//
// Exit codes: 0 success, 1 input error, 2 not-in-class, 3 negative verdict.

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igc/igc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotInClass = 2;
constexpr int kExitNegative = 3;

struct LineOutcome {
    std::string out;
    std::string err;        // diagnostic, empty if none
    bool not_in_class = false;
    bool parse_failed = false;
};

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_stream(f);
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

/// Line-by-line access to a file or stdin; keeps memory flat on large batches.
class LineSource {
public:
    explicit LineSource(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
            in_ = &file_;
        } else {
            in_ = &std::cin;
        }
    }

    bool next(std::string& line) {
        if (!std::getline(*in_, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

private:
    std::ifstream file_;
    std::istream* in_ = nullptr;
};

/// One graph per input for edge-list files, one per line for graph6.
std::vector<igc::Graph> load_graphs(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    std::vector<igc::Graph> graphs;
    if (format == "edges") {
        graphs.push_back(igc::parse_edge_list(text));
        return graphs;
    }
    auto lines = nonempty_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            graphs.push_back(igc::parse_graph6(lines[i]));
        } catch (const igc::ParseError& e) {
            throw igc::ParseError("line " + std::to_string(i + 1) + ": " + e.what(), i + 1);
        }
    }
    return graphs;
}

/// Applies fn to each input line, jobs at a time, emitting results in input
/// order. Only one batch of lines is in memory at any moment.
int run_lines(LineSource& source, int jobs,
              const std::function<LineOutcome(const std::string&, std::size_t)>& fn) {
    bool any_not_in_class = false;
    std::size_t lineno = 0;
    bool done = false;
    while (!done) {
        std::vector<std::pair<std::string, std::size_t>> batch;
        for (int i = 0; i < std::max(jobs, 1); ++i) {
            std::string line;
            if (!source.next(line)) {
                done = true;
                break;
            }
            batch.emplace_back(std::move(line), lineno++);
        }
        std::vector<std::future<LineOutcome>> futs;
        futs.reserve(batch.size());
        for (auto& [line, idx] : batch)
            futs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, fn,
                                      line, idx));
        for (auto& f : futs) {
            LineOutcome r = f.get();
            if (r.parse_failed) {
                std::cerr << r.err << "\n";
                return kExitInput;
            }
            if (!r.err.empty()) std::cerr << r.err << "\n";
            if (!r.out.empty()) std::cout << r.out << "\n";
            if (r.not_in_class) any_not_in_class = true;
        }
    }
    return any_not_in_class ? kExitNotInClass : kExitOk;
}

std::string bijection_json(const igc::CanonicalForm& form) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v = 0; v < form.n; ++v) arr.push_back(form.label_of(v) + 1);
    return arr.dump();
}

int cmd_canon(const std::string& input, const std::string& format,
              const std::vector<std::string>& emit, int jobs) {
    std::vector<std::string> wanted = emit.empty() ? std::vector<std::string>{"graph6"} : emit;
    auto render = [&wanted](const igc::CanonicalForm& form) {
        std::string out;
        auto append = [&out](const std::string& piece) {
            if (!out.empty()) out.push_back('\t');
            out += piece;
        };
        for (const char* field : {"graph6", "digest", "bijection"}) {
            if (std::find(wanted.begin(), wanted.end(), field) == wanted.end()) continue;
            if (std::string(field) == "graph6") append(igc::write_graph6(form.decode()));
            else if (std::string(field) == "digest") append(form.digest_hex());
            else append(bijection_json(form));
        }
        return out;
    };

    if (format == "edges") {
        igc::Graph g;
        try {
            g = igc::parse_edge_list(read_input(input));
        } catch (const igc::ParseError& e) {
            std::cerr << "line " << e.position() << ": " << e.what() << "\n";
            return kExitInput;
        }
        auto res = igc::canonical_form(g);
        if (!res.ok()) {
            std::cout << "!\n";
            std::cerr << "not-interval: " << res.failure->to_string() << "\n";
            return kExitNotInClass;
        }
        std::cout << render(*res.form) << "\n";
        return kExitOk;
    }

    LineSource source(input);
    return run_lines(source, jobs, [&render](const std::string& line, std::size_t idx) {
        LineOutcome o;
        if (line.empty()) return o;
        igc::Graph g;
        try {
            g = igc::parse_graph6(line);
        } catch (const igc::ParseError& e) {
            o.parse_failed = true;
            o.err = "line " + std::to_string(idx + 1) + ": " + e.what();
            return o;
        }
        auto res = igc::canonical_form(g);
        if (!res.ok()) {
            o.out = "!";
            o.not_in_class = true;
            o.err = "line " + std::to_string(idx + 1) + ": not-interval: " + res.failure->to_string();
            return o;
        }
        o.out = render(*res.form);
        return o;
    });
}

int cmd_iso(const std::string& file_a, const std::string& file_b, const std::string& format) {
    igc::Graph a, b;
    try {
        auto ga = load_graphs(file_a, format);
        auto gb = load_graphs(file_b, format);
        if (ga.empty() || gb.empty()) {
            std::cerr << "iso: each input must contain a graph\n";
            return kExitInput;
        }
        a = ga.front();
        b = gb.front();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    auto res = igc::isomorphic(a, b);
    if (!res.ok()) {
        std::cerr << "not-interval: " << res.failure->to_string() << "\n";
        return kExitNotInClass;
    }
    if (*res.verdict) {
        std::cout << "isomorphic\n";
        return kExitOk;
    }
    std::cout << "non-isomorphic\n";
    return kExitNegative;
}

int cmd_recognize(const std::string& input, const std::string& format,
                  const std::string& cert_out, const std::string& verify_path) {
    igc::Graph g;
    try {
        auto gs = load_graphs(input, format);
        if (gs.empty()) {
            std::cerr << "recognize: input contains no graph\n";
            return kExitInput;
        }
        g = gs.front();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    if (!verify_path.empty()) {
        try {
            auto rep = igc::parse_representation(read_input(verify_path));
            if (igc::verify_representation(g, rep)) {
                std::cout << "certificate-ok\n";
                return kExitOk;
            }
            std::cout << "certificate-invalid\n";
            return kExitNegative;
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitInput;
        }
    }

    auto res = igc::recognize(g);
    if (!res.accepted) {
        std::cout << "not-interval: " << res.rejection->to_string() << "\n";
        return kExitNegative;
    }
    std::cout << "interval\n";
    if (!cert_out.empty()) {
        std::ofstream f(cert_out);
        if (!f) {
            std::cerr << "cannot write " << cert_out << "\n";
            return kExitInput;
        }
        f << igc::write_representation(*res.certificate);
    }
    return kExitOk;
}

int cmd_gen(int n, std::uint64_t seed, int count, int max_coordinate) {
    if (max_coordinate <= 0) max_coordinate = std::max(1, 2 * n);
    for (int i = 0; i < count; ++i) {
        auto gen = igc::random_interval_graph(n, seed + static_cast<std::uint64_t>(i), max_coordinate);
        std::cout << igc::write_graph6(gen.graph) << "\n";
    }
    return kExitOk;
}

int cmd_transform(const std::string& input, const std::string& kind, int jobs) {
    LineSource source(input);
    return run_lines(source, jobs, [&kind](const std::string& line, std::size_t idx) {
        LineOutcome o;
        if (line.empty()) return o;
        igc::Graph g;
        try {
            g = igc::parse_graph6(line);
        } catch (const igc::ParseError& e) {
            o.parse_failed = true;
            o.err = "line " + std::to_string(idx + 1) + ": " + e.what();
            return o;
        }
        if (kind == "incidence") {
            o.out = igc::write_graph6(igc::incidence_graph(g).graph);
        } else if (kind == "split") {
            o.out = igc::write_graph6(igc::split_incidence_graph(g));
        } else {
            auto res = (kind == "un-incidence") ? igc::reconstruct_from_incidence(g)
                                                : igc::reconstruct_from_split(g);
            if (!res.ok()) {
                o.out = "!";
                o.not_in_class = true;
                o.err = "line " + std::to_string(idx + 1) + ": " + res.reason;
            } else {
                o.out = igc::write_graph6(*res.graph);
            }
        }
        return o;
    });
}

int cmd_wl_compare(const std::vector<std::string>& files, int k) {
    std::vector<std::pair<igc::Graph, igc::Graph>> pairs;
    try {
        if (files.size() == 2) {
            auto a = load_graphs(files[0], "graph6");
            auto b = load_graphs(files[1], "graph6");
            if (a.size() != b.size())
                throw std::runtime_error("wl-compare: inputs must have the same number of graphs");
            for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
        } else {
            auto lines = nonempty_lines(read_input(files[0]));
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (lines[i].empty()) continue;
                std::istringstream ls(lines[i]);
                std::string ta, tb;
                if (!(ls >> ta >> tb))
                    throw std::runtime_error("line " + std::to_string(i + 1) +
                                             ": expected two graph6 strings");
                pairs.emplace_back(igc::parse_graph6(ta), igc::parse_graph6(tb));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    int distinguished = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool d;
        try {
            d = igc::wl_distinguishes(pairs[i].first, pairs[i].second, k);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitInput;
        }
        if (d) ++distinguished;
        std::cout << "pair " << i << ": " << (d ? "distinguished" : "indistinguishable") << "\n";
    }
    std::cout << "summary: total=" << pairs.size() << " distinguished=" << distinguished
              << " indistinguishable=" << (pairs.size() - static_cast<std::size_t>(distinguished))
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval graph canonization toolkit"};
    app.require_subcommand(1);

    std::string input = "-", format = "graph6";
    int jobs = 1;

    auto* canon = app.add_subcommand("canon", "canonical form per input graph");
    std::vector<std::string> emit;
    canon->add_option("input", input, "graph file or - for stdin");
    canon->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));
    canon->add_option("--emit", emit, "fields: graph6, digest, bijection")
        ->check(CLI::IsMember({"graph6", "digest", "bijection"}))
        ->delimiter(',')
        ->allow_extra_args(false);
    canon->add_option("--jobs", jobs, "parallel line processing")->check(CLI::PositiveNumber);

    auto* iso = app.add_subcommand("iso", "isomorphism of two interval graphs");
    std::string file_a, file_b;
    iso->add_option("a", file_a)->required();
    iso->add_option("b", file_b)->required();
    iso->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));

    auto* rec = app.add_subcommand("recognize", "interval graph recognition with certificate");
    std::string cert_out, verify_path;
    rec->add_option("input", input);
    rec->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));
    rec->add_option("--certificate", cert_out, "write certificate here on accept");
    rec->add_option("--verify", verify_path, "verify this certificate instead of recognizing");

    auto* gen = app.add_subcommand("gen", "seeded random interval graphs");
    int gen_n = 0, gen_count = 1, gen_maxc = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--count", gen_count)->check(CLI::PositiveNumber);
    gen->add_option("--max-coordinate", gen_maxc, "default 2n");

    auto* tra = app.add_subcommand("transform", "incidence/split constructions and inverses");
    std::string kind;
    tra->add_option("input", input);
    tra->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"incidence", "split", "un-incidence", "un-split"}));
    tra->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* wlc = app.add_subcommand("wl-compare", "Weisfeiler-Lehman pair comparison");
    std::vector<std::string> wl_files;
    int wl_k = 1;
    wlc->add_option("files", wl_files, "two graph files, or one file of pairs")
        ->expected(1, 2)
        ->required();
    wlc->add_option("--k", wl_k)->check(CLI::IsMember({1, 2}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (canon->parsed()) return cmd_canon(input, format, emit, jobs);
        if (iso->parsed()) return cmd_iso(file_a, file_b, format);
        if (rec->parsed()) return cmd_recognize(input, format, cert_out, verify_path);
        if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_count, gen_maxc);
        if (tra->parsed()) return cmd_transform(input, kind, jobs);
        if (wlc->parsed()) return cmd_wl_compare(wl_files, wl_k);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
