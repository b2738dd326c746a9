// Command-line front end: sequence generation, quotient-ring expansion,
// binomial transforms, and the Groebner / regular-chain checkers.

#include "recring/chains.hpp"
#include "recring/groebner.hpp"
#include "recring/json_io.hpp"
#include "recring/parse.hpp"
#include "recring/ring.hpp"
#include "recring/sequences.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace recring;

enum class Format { text, json_fmt, csv };

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json_fmt;
    if (name == "csv")
        return Format::csv;
    throw std::invalid_argument("unknown format: " + name);
}

SequenceId parse_sequence(const std::string& name) {
    if (name == "cbc")
        return SequenceId::central_binomial;
    if (name == "gould")
        return SequenceId::gould;
    throw std::invalid_argument("unknown sequence: " + name + " (expected cbc or gould)");
}

RingFamilyTag parse_family(const std::string& name) {
    if (name == "K")
        return RingFamilyTag::K;
    if (name == "Kmod")
        return RingFamilyTag::KMod;
    if (name == "Kprime")
        return RingFamilyTag::KPrime;
    throw std::invalid_argument("unknown family: " + name + " (expected K, Kmod or Kprime)");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open spec file: " + path);
    json j;
    in >> j;
    return j;
}

// A --spec file is either a full ring spec or a bare generator list
// ({"generators": [...], "coeff": {...}?}) for the checkers.
std::vector<Polynomial> generators_from_spec(const json& j) {
    if (j.is_object() && j.contains("generators")) {
        CoefficientRing ring = j.contains("coeff") ? coeff_ring_from_json(j.at("coeff"))
                                                   : CoefficientRing::integers();
        std::vector<Polynomial> gens;
        for (const auto& entry : j.at("generators"))
            gens.push_back(poly_from_json(entry, ring));
        return gens;
    }
    return ideal_generators(ring_spec_from_json(j));
}

void print_terms(const std::vector<Int>& terms, long long from, Format format,
                 json header) {
    switch (format) {
    case Format::text: {
        bool first = true;
        for (const auto& v : terms) {
            if (!first)
                std::cout << ' ';
            first = false;
            std::cout << v;
        }
        std::cout << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t k = 0; k < terms.size(); ++k)
            std::cout << from + static_cast<long long>(k) << ',' << terms[k] << '\n';
        break;
    case Format::json_fmt: {
        json out = std::move(header);
        json arr = json::array();
        for (std::size_t k = 0; k < terms.size(); ++k)
            arr.push_back(json{{"n", from + static_cast<long long>(k)},
                               {"value", terms[k].str()}});
        out["terms"] = std::move(arr);
        std::cout << out.dump() << '\n';
        break;
    }
    }
}

struct SeqArgs {
    std::string sequence;
    long long from = 0;
    long long to = 0;
    std::string method = "ring";
    std::string format = "text";
};

int run_seq(const SeqArgs& args) {
    if (args.from < 0 || args.to < args.from)
        throw std::invalid_argument("sequence range must satisfy 0 <= from <= to");
    SequenceId seq = parse_sequence(args.sequence);
    SeqMethod method;
    if (args.method == "ring")
        method = SeqMethod::ring;
    else if (args.method == "oracle")
        method = SeqMethod::oracle;
    else if (args.method == "mod2")
        method = SeqMethod::mod2;
    else if (args.method == "signed")
        method = SeqMethod::signed_;
    else
        throw std::invalid_argument("unknown method: " + args.method);
    Format format = parse_format(args.format);

    json header{{"sequence", args.sequence},
                {"method", args.method},
                {"from", args.from},
                {"to", args.to}};
    if (format == Format::json_fmt) {
        print_terms(sequence_range(seq, method, args.from, args.to), args.from, format,
                    std::move(header));
        return 0;
    }
    // text/csv stream block by block so large ranges do not buffer
    constexpr long long kBlock = 256;
    bool first = true;
    for (long long start = args.from; start <= args.to; start += kBlock) {
        long long stop = std::min(args.to, start + kBlock - 1);
        auto terms = sequence_range(seq, method, start, stop);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (format == Format::text) {
                if (!first)
                    std::cout << ' ';
                std::cout << terms[k];
            } else {
                std::cout << start + static_cast<long long>(k) << ',' << terms[k] << '\n';
            }
            first = false;
        }
        std::cout.flush();
    }
    if (format == Format::text)
        std::cout << '\n';
    return 0;
}

struct TransformArgs {
    std::string sequence;
    long long t = 0;
    long long from = 0;
    long long to = 0;
    std::string method = "ring";
    std::string format = "text";
};

int run_transform(const TransformArgs& args) {
    SequenceId seq = parse_sequence(args.sequence);
    TransformMethod method;
    if (args.method == "ring")
        method = TransformMethod::ring;
    else if (args.method == "direct")
        method = TransformMethod::direct;
    else
        throw std::invalid_argument("unknown method: " + args.method);
    Format format = parse_format(args.format);
    auto terms = transform_range(seq, args.t, method, args.from, args.to);
    print_terms(terms, args.from, format,
                json{{"sequence", args.sequence},
                     {"t", args.t},
                     {"method", args.method},
                     {"from", args.from},
                     {"to", args.to}});
    return 0;
}

struct ExpandArgs {
    std::string family;
    std::optional<long long> modulus;
    long long n = 0;
    std::string base;
    std::string spec_path;
    std::string format = "text";
};

int run_expand(const ExpandArgs& args) {
    Format format = parse_format(args.format);
    if (format == Format::csv)
        throw std::invalid_argument("expand supports text and json output only");
    if (args.n < 0)
        throw std::invalid_argument("the exponent must be >= 0");

    std::optional<RingSpec> ring;
    json header;
    if (!args.spec_path.empty()) {
        if (!args.family.empty())
            throw std::invalid_argument("give either --family or --spec, not both");
        ring = ring_spec_from_json(load_json_file(args.spec_path));
        header["spec"] = args.spec_path;
        GroebnerReport gb = is_groebner(ideal_generators(*ring));
        if (!gb.is_groebner)
            std::cerr << "warning: the spec's generators are not a Groebner basis; "
                         "normal forms may depend on rewrite strategy\n";
    } else {
        if (args.family.empty())
            throw std::invalid_argument("expand needs --family or --spec");
        RingFamilyTag tag = parse_family(args.family);
        std::optional<Int> modulus;
        if (args.modulus)
            modulus = Int(*args.modulus);
        if (tag == RingFamilyTag::KMod && !modulus)
            throw std::invalid_argument("family Kmod requires --m");
        ring = make_ring(RingFamily{tag, required_vars(std::max(args.n, 1ll)), modulus});
        header["family"] = args.family;
        if (args.modulus)
            header["m"] = *args.modulus;
    }

    Polynomial base = parse_polynomial(args.base, ring->coeff_ring());
    Polynomial expanded = ring_pow(base, args.n, *ring);
    Int sum = evaluate_all_ones(expanded);

    if (format == Format::text) {
        std::cout << to_text(expanded) << " | sum=" << sum << '\n';
    } else {
        header["n"] = args.n;
        header["base"] = args.base;
        header["polynomial"] = poly_to_json(expanded);
        header["sum"] = sum.str();
        std::cout << header.dump() << '\n';
    }
    return 0;
}

struct CheckArgs {
    std::string family;
    std::optional<long long> modulus;
    int vars = 0;
    std::string spec_path;
    std::string format = "text";
};

std::vector<Polynomial> check_generators(const CheckArgs& args) {
    if (!args.spec_path.empty()) {
        if (!args.family.empty())
            throw std::invalid_argument("give either --family or --spec, not both");
        return generators_from_spec(load_json_file(args.spec_path));
    }
    if (args.family.empty())
        throw std::invalid_argument("check needs --family with --vars, or --spec");
    if (args.vars < 1)
        throw std::invalid_argument("--vars must be >= 1");
    RingFamilyTag tag = parse_family(args.family);
    std::optional<Int> modulus;
    if (args.modulus)
        modulus = Int(*args.modulus);
    if (tag == RingFamilyTag::KMod && !modulus)
        throw std::invalid_argument("family Kmod requires --m");
    return ideal_generators(make_ring(RingFamily{tag, args.vars, modulus}));
}

int run_check_groebner(const CheckArgs& args) {
    Format format = parse_format(args.format);
    if (format == Format::csv)
        throw std::invalid_argument("check supports text and json output only");
    GroebnerReport report = is_groebner(check_generators(args));
    if (format == Format::json_fmt) {
        std::cout << report_to_json(report).dump() << '\n';
    } else if (report.is_groebner) {
        std::cout << "groebner: pass (pairs_checked=" << report.pairs_checked << ")\n";
    } else {
        std::cout << "groebner: fail at pair (" << report.failing_pair->i << ","
                  << report.failing_pair->j
                  << "), remainder: " << to_text(report.failing_pair->remainder)
                  << " (pairs_checked=" << report.pairs_checked << ")\n";
    }
    return report.is_groebner ? 0 : 1;
}

int run_check_chain(const CheckArgs& args) {
    Format format = parse_format(args.format);
    if (format == Format::csv)
        throw std::invalid_argument("check supports text and json output only");
    ChainReport report = is_regular_chain(check_generators(args));
    if (format == Format::json_fmt) {
        std::cout << report_to_json(report).dump() << '\n';
    } else {
        std::cout << "triangular: " << (report.triangular ? "true" : "false");
        if (report.variable_order) {
            std::cout << " (order:";
            for (int v : *report.variable_order)
                std::cout << " x" << v;
            std::cout << ")";
        }
        std::cout << '\n';
        std::cout << "leading_regular: ";
        switch (report.leading_regular) {
        case Regularity::regular:
            std::cout << "true\n";
            break;
        case Regularity::zero_divisor:
            std::cout << "false\n";
            break;
        case Regularity::undetermined:
            std::cout << "undetermined\n";
            break;
        }
        std::cout << "zero_dimensional: " << (report.zero_dimensional ? "true" : "false")
                  << " (groebner_certified: "
                  << (report.groebner_certified ? "true" : "false") << ")\n";
        std::cout << "is_regular_chain: " << (report.is_regular_chain ? "true" : "false")
                  << '\n';
    }
    return report.is_regular_chain ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recring: recursive polynomial quotient rings, the integer sequences "
                 "they generate, and their verification checks"};
    app.require_subcommand(1);

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "generate sequence terms");
    seq->add_option("sequence", seq_args.sequence, "cbc or gould")->required();
    seq->add_option("--from", seq_args.from, "first index (inclusive)")->required();
    seq->add_option("--to", seq_args.to, "last index (inclusive)")->required();
    seq->add_option("--method", seq_args.method, "ring, oracle, mod2 or signed");
    seq->add_option("--format", seq_args.format, "text, json or csv");

    TransformArgs tr_args;
    auto* tr = app.add_subcommand("transform", "binomial transforms of a sequence");
    tr->add_option("--seq", tr_args.sequence, "cbc or gould")->required();
    tr->add_option("--t", tr_args.t, "transform order (any integer)")->required();
    tr->add_option("--from", tr_args.from, "first index (inclusive)")->required();
    tr->add_option("--to", tr_args.to, "last index (inclusive)")->required();
    tr->add_option("--method", tr_args.method, "ring or direct");
    tr->add_option("--format", tr_args.format, "text, json or csv");

    ExpandArgs ex_args;
    auto* ex = app.add_subcommand("expand", "normal form of base^n in a quotient ring");
    ex->add_option("--family", ex_args.family, "K, Kmod or Kprime");
    ex->add_option("--m", ex_args.modulus, "modulus for family Kmod");
    ex->add_option("--n", ex_args.n, "exponent")->required();
    ex->add_option("--base", ex_args.base, "base polynomial, e.g. \"1+x1\"")->required();
    ex->add_option("--spec", ex_args.spec_path, "ring spec JSON file");
    ex->add_option("--format", ex_args.format, "text or json");

    CheckArgs gb_args;
    CheckArgs ch_args;
    auto* check = app.add_subcommand("check", "verify generator properties");
    check->require_subcommand(1);
    auto* gb = check->add_subcommand("groebner", "Buchberger criterion on the generators");
    gb->add_option("--family", gb_args.family, "K, Kmod or Kprime");
    gb->add_option("--m", gb_args.modulus, "modulus for family Kmod");
    gb->add_option("--vars", gb_args.vars, "number of variables");
    gb->add_option("--spec", gb_args.spec_path, "ring spec or generator list JSON file");
    gb->add_option("--format", gb_args.format, "text or json");
    auto* ch = check->add_subcommand("chain", "regular-chain conditions on the generators");
    ch->add_option("--family", ch_args.family, "K, Kmod or Kprime");
    ch->add_option("--m", ch_args.modulus, "modulus for family Kmod");
    ch->add_option("--vars", ch_args.vars, "number of variables");
    ch->add_option("--spec", ch_args.spec_path, "ring spec or generator list JSON file");
    ch->add_option("--format", ch_args.format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed())
            return run_seq(seq_args);
        if (tr->parsed())
            return run_transform(tr_args);
        if (ex->parsed())
            return run_expand(ex_args);
        if (gb->parsed())
            return run_check_groebner(gb_args);
        if (ch->parsed())
            return run_check_chain(ch_args);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }
    return 2;
}
