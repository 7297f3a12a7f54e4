#include "cli.hpp"

#include "dunamis/construction.hpp"
#include "dunamis/errors.hpp"
#include "dunamis/propositions.hpp"
#include "dunamis/svg.hpp"
#include "dunamis/trace.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dunamis::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kGrammar =
    "Surd expressions:\n"
    "  sqrt N           square root of a whole number, e.g. \"sqrt 18\"\n"
    "  sqrt P/Q         square root of a ratio, e.g. \"sqrt 18/8\"\n"
    "  (P/Q)*sqrt(K)    coefficient times a square root, e.g. \"(3/2)*sqrt(2)\"\n"
    "  (p/q)·√k         the canonical form printed by this tool\n"
    "Exit codes: 0 affirmative, 1 negative verdict, 2 input error, 3 I/O error.\n";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

std::string show_ratio(const Ratio& r) { return r.is_whole() ? r.num().to_string() : r.to_string(); }

// Rational values print in their short form, powers in the full text form.
std::string show_value(const Surd& s) {
    if (auto q = is_rational(s)) return show_ratio(*q);
    return s.to_string();
}

struct Options {
    std::string format = "text";
    bool trace = false;

    OutputFormat output() const { return format == "structured" ? OutputFormat::Structured : OutputFormat::Text; }
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_classify(const Options& opt, const std::string& arg, std::ostream& out) {
    const Natural n = Natural::parse(trim(arg));
    const IntegerClass cls = classify(n);
    const auto reps = rectangle_representations(n);
    const bool square = std::holds_alternative<Square>(cls);

    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "classify";
        doc["n"] = n.to_string();
        json c;
        if (square) {
            c["kind"] = "square";
            c["side"] = std::get<Square>(cls).side.to_string();
        } else {
            const auto& ob = std::get<Oblong>(cls);
            c["kind"] = "oblong";
            c["small"] = ob.small.to_string();
            c["large"] = ob.large.to_string();
        }
        doc["class"] = c;
        json rs = json::array();
        for (const auto& r : reps) rs.push_back(json::array({r.a.to_string(), r.b.to_string()}));
        doc["rectangles"] = rs;
        doc["set"] = square ? "P" : "R";
        emit(out, doc);
        return kAffirmative;
    }

    out << "n: " << n << '\n';
    if (square) {
        out << "class: square side " << std::get<Square>(cls).side << '\n';
    } else {
        const auto& ob = std::get<Oblong>(cls);
        out << "class: oblong " << ob.small << "×" << ob.large << '\n';
    }
    out << "rectangles:";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        out << (i == 0 ? " " : ", ") << reps[i].a << "×" << reps[i].b;
    }
    out << '\n';
    out << "set: " << (square ? "P (squares)" : "R (oblongs)") << '\n';
    return kAffirmative;
}

int cmd_decide(const Options& opt, const std::vector<std::string>& words, std::ostream& out) {
    const std::string expr = join(words);
    const Radicand radicand = parse_sqrt_expression(expr);
    const bool integer_form = std::holds_alternative<Natural>(radicand);
    const Decision d = integer_form ? prop_a_decide(std::get<Natural>(radicand))
                                    : prop_b_decide(std::get<Ratio>(radicand));

    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "decide";
        doc["expression"] = expr;
        doc["proposition"] = integer_form ? "PROP-A" : "X.9";
        doc["verdict"] = d.is_rational() ? "rational" : "irrational";
        if (d.is_rational()) doc["root"] = to_json(ExactValue{d.root()});
        if (opt.trace) doc["trace"] = to_json(d.trace);
        emit(out, doc);
    } else {
        out << "expression: " << expr << '\n';
        out << "proposition: " << (integer_form ? "PROP-A" : "X.9") << '\n';
        if (d.is_rational()) {
            out << "verdict: rational " << show_ratio(d.root()) << '\n';
        } else {
            out << "verdict: irrational\n";
        }
        if (opt.trace) out << "trace:\n" << to_text(d.trace);
    }
    return d.is_rational() ? kAffirmative : kNegative;
}

int cmd_commensurable(const Options& opt, const std::string& a_expr, const std::string& b_expr, std::ostream& out) {
    const Surd a = parse_surd_expression(a_expr);
    const Surd b = parse_surd_expression(b_expr);
    const CommensurabilityResult r = commensurable(a, b);
    const auto* com = std::get_if<Commensurable>(&r);

    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "commensurable";
        doc["a"] = to_json(ExactValue{a});
        doc["b"] = to_json(ExactValue{b});
        if (com) {
            doc["verdict"] = "commensurable";
            doc["ratio"] = to_json(ExactValue{com->ratio});
        } else {
            doc["verdict"] = "incommensurable";
            doc["square_ratio"] = to_json(ExactValue{std::get<Incommensurable>(r).square_ratio});
        }
        emit(out, doc);
    } else {
        out << "a: " << a << '\n' << "b: " << b << '\n';
        if (com) {
            out << "verdict: commensurable " << com->ratio << '\n';
        } else {
            out << "verdict: incommensurable, square ratio " << std::get<Incommensurable>(r).square_ratio << '\n';
        }
    }
    return com ? kAffirmative : kNegative;
}

int cmd_lesson(const Options& opt, std::ostream& out) {
    const LessonReport report = theodorus_lesson();
    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "lesson";
        doc["range"] = {{"first", kLessonFirst}, {"end", kLessonEnd}, {"step", kLessonStep}};
        json entries = json::array();
        for (const auto& e : report.entries) {
            json row;
            row["n"] = e.n.to_string();
            if (const auto* w = std::get_if<WholeRoot>(&e.verdict)) {
                row["verdict"] = "rational";
                row["value"] = to_json(ExactValue{w->root});
            } else {
                row["verdict"] = "power";
                row["value"] = to_json(ExactValue{std::get<Power>(e.verdict).surd});
            }
            entries.push_back(std::move(row));
        }
        doc["entries"] = entries;
        emit(out, doc);
        return kAffirmative;
    }
    out << "odd numbers from " << kLessonFirst << " up to " << kLessonEnd << " (excluded)\n";
    for (const auto& e : report.entries) {
        out << std::setw(4) << std::left << e.n.to_string();
        if (const auto* w = std::get_if<WholeRoot>(&e.verdict)) {
            out << "rational " << w->root << '\n';
        } else {
            out << "power √" << e.n << "  " << std::get<Power>(e.verdict).surd << '\n';
        }
    }
    return kAffirmative;
}

int cmd_construct(const Options& opt, const std::string& arg, std::string path, double scale, std::ostream& out,
                  std::ostream& err) {
    const Natural n = Natural::parse(trim(arg));
    if (path.empty()) path = "square-" + n.to_string() + ".svg";
    const Figure fig = square_the_rectangle(n);
    if (!verify_figure(fig)) {
        err << "error: construction for " << n << " failed verification\n";
        return kNegative;
    }
    const std::string svg = figure_to_svg(fig, scale);
    {
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << svg) || !file.flush()) {
            err << "error: cannot write '" << path << "'\n";
            return kIoError;
        }
    }
    const Surd side = *claimed_value(fig, kSquareSide);
    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "construct";
        doc["n"] = n.to_string();
        doc["side"] = to_json(ExactValue{side});
        doc["verified"] = true;
        doc["path"] = path;
        emit(out, doc);
    } else {
        out << show_value(side) << '\n';
        out << "verified: true\n";
        out << "written: " << path << '\n';
    }
    return kAffirmative;
}

int cmd_oracle_check(const Options& opt, const std::string& arg, std::ostream& out) {
    const Natural limit = Natural::parse(trim(arg));
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::optional<Natural> first_mismatch;
    for (Natural n; n <= limit; n += Natural{}) {
        const bool by_kernel = is_rational(sqrt_of_integer(n)).has_value();
        const bool by_isqrt = isqrt(n).exact;
        const auto factors = factorize(n);
        const bool by_parity =
            std::all_of(factors.begin(), factors.end(), [](const PrimePower& p) { return p.exponent % 2 == 0; });
        if (by_kernel != by_isqrt || by_isqrt != by_parity) {
            ++mismatches;
            if (!first_mismatch) first_mismatch = n;
        }
        ++checked;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    if (opt.output() == OutputFormat::Structured) {
        json doc;
        doc["command"] = "oracle-check";
        doc["limit"] = limit.to_string();
        doc["checked"] = checked;
        doc["mismatches"] = mismatches;
        if (first_mismatch) doc["first_mismatch"] = first_mismatch->to_string();
        emit(out, doc);
    } else {
        out << "checked: " << checked << '\n';
        out << mismatches << " mismatches\n";
        if (first_mismatch) out << "first mismatch: " << *first_mismatch << '\n';
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << elapsed.count();
        out << "elapsed: " << t.str() << " s\n";
    }
    return mismatches == 0 ? kAffirmative : kNegative;
}

}  // namespace

Radicand parse_sqrt_expression(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    if (text.substr(0, 4) != "sqrt" || text.size() < 5 || !std::isspace(static_cast<unsigned char>(text[4]))) {
        throw ParseError("expected 'sqrt N' or 'sqrt P/Q', got '" + std::string(original) + "'");
    }
    text = trim(text.substr(4));
    if (text.find('/') == std::string_view::npos) {
        return Natural::parse(text);
    }
    return Ratio::parse(text);
}

Surd parse_surd_expression(std::string_view text) {
    text = trim(text);
    constexpr std::string_view kRoot = "√";
    if (text.substr(0, kRoot.size()) == kRoot) {
        return sqrt_of_integer(Natural::parse(trim(text.substr(kRoot.size()))));
    }
    if (!text.empty() && text.front() == '(') {
        return Surd::parse(text);
    }
    const Radicand r = parse_sqrt_expression(text);
    if (const auto* n = std::get_if<Natural>(&r)) return sqrt_of_integer(*n);
    return sqrt_of_ratio(std::get<Ratio>(r));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decisions on square roots, ratios and their geometric constructions", "dunamis"};
    app.footer(std::string(kGrammar));
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_flag("--trace", opt.trace, "Print the proof trace of a decision");

    std::string classify_n;
    auto* classify = app.add_subcommand("classify", "Square or oblong, with every rectangle of that area");
    classify->add_option("n", classify_n, "A positive integer")->required();

    std::vector<std::string> decide_words;
    auto* decide = app.add_subcommand("decide", "Decide whether sqrt N or sqrt P/Q is rational (exit 0) or not (1)");
    decide->add_option("expression", decide_words, "sqrt N | sqrt P/Q")->required();

    std::string surd_a, surd_b;
    auto* comm = app.add_subcommand("commensurable", "Commensurable in length (exit 0) or only in square (1)");
    comm->add_option("a", surd_a, "First surd expression")->required();
    comm->add_option("b", surd_b, "Second surd expression")->required();

    auto* lesson = app.add_subcommand("lesson", "Square roots of the odd numbers 3 to 15");

    std::string construct_n, construct_out;
    double scale = 100.0;
    auto* construct = app.add_subcommand("construct", "Square an n x 1 rectangle and write the figure as SVG");
    construct->add_option("n", construct_n, "A positive integer")->required();
    construct->add_option("-o,--output", construct_out, "SVG path (default square-N.svg)");
    construct->add_option("--scale", scale, "Pixels per unit length")->check(CLI::PositiveNumber)->capture_default_str();

    std::string oracle_limit;
    auto* oracle = app.add_subcommand("oracle-check", "Cross-check three perfect-square tests over 1..limit");
    oracle->add_option("limit", oracle_limit, "Upper bound (inclusive)")->required();

    // CLI11 wants argv order reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAffirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    try {
        if (*classify) return cmd_classify(opt, classify_n, out);
        if (*decide) return cmd_decide(opt, decide_words, out);
        if (*comm) return cmd_commensurable(opt, surd_a, surd_b, out);
        if (*lesson) return cmd_lesson(opt, out);
        if (*construct) return cmd_construct(opt, construct_n, construct_out, scale, out, err);
        if (*oracle) return cmd_oracle_check(opt, oracle_limit, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n\n" << kGrammar;
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n\n" << kGrammar;
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace dunamis::cli
