#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffword/analysis.hpp"
#include "ffword/criteria.hpp"
#include "ffword/dynasty.hpp"
#include "ffword/generators.hpp"
#include "ffword/serialize.hpp"

namespace {

using namespace ffword;
using nlohmann::json;

// ---- argument parsing helpers ----------------------------------------------

Nat parse_nat(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a decimal natural: \"" + s + "\"");
    return Nat(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Words arrive either as space/comma-separated digits ("9 10 6") or, for
// bases up to 10, as a compact digit string ("1122").
DigitWord parse_word(const std::string& s, Base base) {
    std::string normalized = s;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::vector<int> digits;
    if (normalized.find(' ') == std::string::npos && base.value() <= 10) {
        for (char c : normalized) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit character in word");
            digits.push_back(c - '0');
        }
    } else {
        for (const std::string& tok : split(normalized, ' ')) digits.push_back(std::stoi(tok));
    }
    return DigitWord(std::move(digits), base);
}

PrimeSet parse_primes(const std::string& s) {
    std::vector<std::uint64_t> primes;
    for (const std::string& tok : split(s, ',')) primes.push_back(std::stoull(tok));
    return PrimeSet(std::move(primes));
}

std::vector<std::size_t> parse_cuts(const std::string& s) {
    std::vector<std::size_t> cuts;
    for (const std::string& tok : split(s, ',')) cuts.push_back(std::stoull(tok));
    return cuts;
}

RatioBound parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return RatioBound(parse_nat(s), Nat{1});
    return RatioBound(parse_nat(s.substr(0, slash)), parse_nat(s.substr(slash + 1)));
}

NodeFamily make_family(const std::string& name, const PrimeSet& S, std::uint64_t start,
                       const std::string& exponents_file) {
    if (!exponents_file.empty()) {
        std::ifstream in(exponents_file);
        if (!in) throw std::invalid_argument("cannot open exponents file " + exponents_file);
        std::vector<std::vector<std::uint64_t>> rows;
        std::string line;
        while (std::getline(in, line)) {
            std::vector<std::uint64_t> row;
            std::stringstream ss(line);
            std::uint64_t e;
            while (ss >> e) row.push_back(e);
            if (!row.empty()) rows.push_back(std::move(row));
        }
        return NodeFamily::explicit_list(S, std::move(rows));
    }
    if (name == "factorial-gap" || name == "liouville-nodes") return NodeFamily::factorial_gap(S);
    if (name == "power-tower") return NodeFamily::power_tower(S, start);
    if (name == "perturbed-tower") return NodeFamily::perturbed_tower(S);
    throw std::invalid_argument("unknown node family \"" + name + "\"");
}

// ---- rendering --------------------------------------------------------------

void print_records(const std::vector<TruncationRecord>& records, const std::string& format) {
    if (format == "json") {
        std::cout << json(records).dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "cut,numerator,s_component,ff,pff,valid,first_nonzero_digit_position\n";
        for (const auto& r : records)
            std::cout << r.cut << "," << r.numerator << "," << (r.valid ? r.s_component : Nat{0})
                      << "," << r.ff << "," << r.pff << "," << r.valid << ","
                      << r.first_nonzero_digit_position << "\n";
        return;
    }
    for (const auto& r : records) {
        std::cout << "cut " << r.cut << ": u=" << r.numerator;
        if (!r.valid) {
            std::cout << " (zero prefix, not judged)\n";
            continue;
        }
        std::cout << " c=" << r.s_component << " ff=" << (r.ff ? "yes" : "no")
                  << " pff=" << (r.pff ? "yes" : "no") << "\n";
    }
}

void print_stream(const GeneratedStream& s, const std::string& format) {
    if (format == "json") {
        std::cout << json(s).dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "i,value,d,t,cut,filler_length\n";
        for (std::size_t i = 0; i < s.blocks.size(); ++i)
            std::cout << i + 1 << "," << s.blocks[i].block_value << "," << s.blocks[i].node.weight
                      << "," << s.blocks[i].length << "," << s.cuts[i] << ","
                      << s.blocks[i].filler_length << "\n";
        return;
    }
    std::cout << s.digits.render() << "\n";
}

void print_nodes(const std::vector<Node>& nodes, const PrimeSet& S, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const Node& n : nodes) arr.push_back(node_json(n, S));
        std::cout << arr.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "value,weight,exponents\n";
        for (const Node& n : nodes) {
            std::cout << n.value << "," << n.weight << ",";
            for (std::size_t j = 0; j < n.exponents.size(); ++j)
                std::cout << (j ? " " : "") << n.exponents[j];
            std::cout << "\n";
        }
        return;
    }
    for (const Node& n : nodes) {
        std::cout << n.value << " (";
        for (std::size_t j = 0; j < n.exponents.size(); ++j)
            std::cout << (j ? "," : "") << n.exponents[j];
        std::cout << ")\n";
    }
}

// ---- command wiring ----------------------------------------------------------

struct Options {
    int base = 10;
    std::string primes;
    std::string word;
    std::string value;
    std::string format = "plain";
};

int run(CLI::App& app, int argc, char** argv) {
    Options opt;
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_primes) {
        cmd->add_option("--base", opt.base, "radix b >= 2");
        cmd->add_option("--format", opt.format, "plain|json|csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        if (needs_primes) cmd->add_option("--primes", opt.primes, "comma-separated primes");
        return cmd;
    };

    // expand
    auto* c_expand = add_common(app.add_subcommand("expand", "base-b expansion of an integer"), false);
    c_expand->add_option("--value", opt.value)->required();
    c_expand->callback([&] {
        const DigitWord w = expand(parse_nat(opt.value), Base(opt.base));
        if (opt.format == "json")
            std::cout << json(w).dump() << "\n";
        else
            std::cout << w.render() << "\n";
    });

    // numerator
    std::size_t cut = 0;
    auto* c_num = add_common(app.add_subcommand("numerator", "truncation numerator u_k"), false);
    c_num->add_option("--word", opt.word)->required();
    c_num->add_option("--cut", cut)->required();
    c_num->callback([&] {
        const DigitWord w = parse_word(opt.word, Base(opt.base));
        const auto u = numerator(w, cut);
        if (opt.format == "json")
            std::cout << json{{"cut", u.cut}, {"value", u.value.str()}}.dump() << "\n";
        else
            std::cout << u.value << "\n";
    });

    // smooth
    std::string lo = "1", hi = "100";
    bool count_only = false;
    auto* c_smooth = add_common(app.add_subcommand("smooth", "enumerate S-smooth numbers"), true);
    c_smooth->add_option("--lo", lo);
    c_smooth->add_option("--hi", hi);
    c_smooth->add_flag("--count-only", count_only);
    c_smooth->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        if (count_only) {
            std::cout << count_nodes(S, parse_nat(lo), parse_nat(hi)) << "\n";
            return;
        }
        print_nodes(enumerate_nodes(S, parse_nat(lo), parse_nat(hi)), S, opt.format);
    });

    // ffcheck / pffcheck
    std::string cuts_arg, eps_arg = "1/2";
    auto* c_ff = add_common(app.add_subcommand("ffcheck", "smooth-numerator test at cuts"), true);
    c_ff->add_option("--word", opt.word)->required();
    c_ff->add_option("--cuts", cuts_arg)->required();
    c_ff->callback([&] {
        print_records(ff_check(parse_word(opt.word, Base(opt.base)), parse_primes(opt.primes),
                               parse_cuts(cuts_arg)),
                      opt.format);
    });
    auto* c_pff = add_common(app.add_subcommand("pffcheck", "relaxed criterion at cuts"), true);
    c_pff->add_option("--word", opt.word)->required();
    c_pff->add_option("--cuts", cuts_arg)->required();
    c_pff->add_option("--eps", eps_arg, "threshold p/q in (0,1]");
    c_pff->callback([&] {
        print_records(pff_check(parse_word(opt.word, Base(opt.base)), parse_primes(opt.primes),
                                parse_ratio(eps_arg), parse_cuts(cuts_arg)),
                      opt.format);
    });

    // generators
    std::string family = "factorial-gap", exponents_file, filler_arg, weights_arg = "index";
    std::size_t digits_budget = 40;
    std::uint64_t start = 1;
    auto add_gen = [&](CLI::App* cmd, bool with_filler, bool with_weights) {
        add_common(cmd, true);
        cmd->add_option("--family", family, "factorial-gap|power-tower|perturbed-tower|liouville-nodes");
        cmd->add_option("--digits", digits_budget, "digit budget");
        cmd->add_option("--start", start, "family start index offset");
        cmd->add_option("--exponents-file", exponents_file, "one exponent vector per line");
        if (with_filler) cmd->add_option("--filler", filler_arg, "filler word after each block")->required();
        if (with_weights) cmd->add_option("--weights", weights_arg, "unit|index");
        return cmd;
    };
    auto* c_gen5 = add_gen(app.add_subcommand("gen5", "node-concatenation stream"), false, false);
    c_gen5->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        print_stream(node_concat_stream(Base(opt.base), make_family(family, S, start, exponents_file),
                                        digits_budget),
                     opt.format);
    });
    auto* c_gen6 = add_gen(app.add_subcommand("gen6", "stream with interleaved fillers"), true, false);
    c_gen6->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        print_stream(interleaved_stream(Base(opt.base), make_family(family, S, start, exponents_file),
                                        FillerSpec::constant(parse_word(filler_arg, Base(opt.base))),
                                        digits_budget),
                     opt.format);
    });
    auto* c_gen7 = add_gen(app.add_subcommand("gen7", "weighted-block stream"), false, true);
    c_gen7->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        const WeightSpec w = weights_arg == "unit" ? WeightSpec::unit() : WeightSpec::index();
        print_stream(weighted_stream(Base(opt.base), make_family(family, S, start, exponents_file), w,
                                     digits_budget),
                     opt.format);
    });

    // dynasty
    auto* c_anc = add_common(app.add_subcommand("ancestors", "prefix-nodes of a value"), true);
    c_anc->add_option("--value", opt.value)->required();
    c_anc->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        print_nodes(ancestors(parse_nat(opt.value), S, Base(opt.base)), S, opt.format);
    });
    auto* c_par = add_common(app.add_subcommand("parent", "longest prefix-node"), true);
    c_par->add_option("--value", opt.value)->required();
    c_par->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        auto p = parent(parse_nat(opt.value), S, Base(opt.base));
        if (opt.format == "json")
            std::cout << (p ? json(node_json(*p, S)) : json(nullptr)).dump() << "\n";
        else if (p)
            std::cout << p->value << "\n";
        else
            std::cout << "(none)\n";
    });
    std::size_t max_extra = 6, k_count = 0;
    auto* c_child = add_common(app.add_subcommand("children", "children of a value or word"), true);
    c_child->add_option("--value", opt.value);
    c_child->add_option("--word", opt.word);
    c_child->add_option("--max-extra", max_extra, "extension digit budget");
    c_child->add_option("--k", k_count, "return only the k least children");
    c_child->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        const Base base(opt.base);
        if (opt.value.empty() == opt.word.empty())
            throw std::invalid_argument("children needs exactly one of --value / --word");
        const DigitWord origin =
            opt.word.empty() ? expand(parse_nat(opt.value), base) : parse_word(opt.word, base);
        const auto result = k_count > 0 ? k_least_children(origin, S, base, k_count, max_extra)
                                        : children(origin, S, base, max_extra);
        print_nodes(result, S, opt.format);
    });
    std::string targets_arg;
    auto* c_chains = add_common(app.add_subcommand("chains", "maximal chains ending at targets"), true);
    c_chains->add_option("--targets", targets_arg, "comma-separated values")->required();
    c_chains->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        std::vector<Nat> targets;
        for (const std::string& t : split(targets_arg, ',')) targets.push_back(parse_nat(t));
        const auto records = chains(S, Base(opt.base), targets);
        if (opt.format == "json") {
            std::cout << json(records).dump() << "\n";
            return;
        }
        if (opt.format == "csv") {
            std::cout << "target,length,members,word\n";
            for (const auto& r : records) {
                std::cout << r.members.back().value << "," << r.length << ",";
                for (std::size_t j = 0; j < r.members.size(); ++j)
                    std::cout << (j ? " " : "") << r.members[j].value;
                std::cout << "," << r.word.render() << "\n";
            }
            return;
        }
        for (const auto& r : records) {
            std::cout << "word " << r.word.render() << ": ";
            for (std::size_t j = 0; j < r.members.size(); ++j)
                std::cout << (j ? " ~ " : "") << r.members[j].value;
            std::cout << " (length " << r.length << ")\n";
        }
    });
    std::string prefix_arg = "1";
    std::size_t steps = 5, step_cap = 64;
    auto* c_lff = add_common(app.add_subcommand("leastff", "least smooth-extension iteration"), true);
    c_lff->add_option("--prefix", prefix_arg, "seed word");
    c_lff->add_option("--steps", steps);
    c_lff->add_option("--cap", step_cap, "per-step extension digit cap");
    c_lff->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        const Base base(opt.base);
        const LeastFFResult r = least_ff(parse_word(prefix_arg, base), S, base, steps, step_cap);
        if (opt.format == "json") {
            std::cout << json(r).dump() << "\n";
            return;
        }
        std::cout << "digits " << r.digits.render() << "\nnodes ";
        for (std::size_t j = 0; j < r.nodes.size(); ++j)
            std::cout << (j ? "," : "") << r.nodes[j].value;
        std::cout << "\n";
    });

    // analysis
    std::uint64_t s_prime = 2, k_index = 1;
    auto* c_q = add_common(app.add_subcommand("qfactors", "generalized repunit factors q_k"), false);
    c_q->add_option("--s", s_prime, "prime s")->required();
    c_q->add_option("--k", k_index, "max index")->required();
    c_q->callback([&] {
        const Base base(opt.base);
        json arr = json::array();
        for (std::uint64_t j = 1; j <= k_index; ++j) {
            const FermatFactor f = q_factor(base, s_prime, j);
            if (opt.format == "json")
                arr.push_back({{"k", j},
                               {"value", f.value.str()},
                               {"gcd_with_previous",
                                j >= 2 ? q_coprimality(base, s_prime, j).str() : "1"}});
            else
                std::cout << "q_" << j << " = " << f.value
                          << (j >= 2 ? " gcd=" + q_coprimality(base, s_prime, j).str() : "")
                          << "\n";
        }
        const bool ok = verify_q_product(base, s_prime, k_index);
        if (opt.format == "json")
            std::cout << json{{"factors", arr}, {"product_identity", ok}}.dump() << "\n";
        else
            std::cout << "product identity: " << (ok ? "holds" : "fails") << "\n";
    });
    std::uint64_t kmax = 8;
    auto* c_count = add_common(app.add_subcommand("count", "smooth-word counting report"), true);
    c_count->add_option("--kmax", kmax, "word lengths 1..kmax");
    c_count->callback([&] {
        const PrimeSet S = parse_primes(opt.primes);
        std::ostringstream sset;
        for (std::size_t j = 0; j < S.size(); ++j) sset << (j ? " " : "") << S.primes()[j];
        if (opt.format == "json") {
            json arr = json::array();
            for (std::uint64_t k = 1; k <= kmax; ++k) {
                json row = count_smooth_words(S, Base(opt.base), k);
                row["k"] = k;
                arr.push_back(row);
            }
            std::cout << arr.dump() << "\n";
            return;
        }
        std::cout << "S,b,k,exact,paper_bound,corrected_bound\n";
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            const SmoothWordCount c = count_smooth_words(S, Base(opt.base), k);
            std::cout << sset.str() << "," << opt.base << "," << k << "," << c.exact << ","
                      << c.paper_bound << "," << c.corrected_bound << "\n";
        }
    });
    std::uint64_t disc_prime = 2;
    std::size_t disc_count = 100;
    auto* c_disc = add_common(app.add_subcommand("discrepancy", "log-fractional-part spread"), false);
    c_disc->add_option("--prime", disc_prime, "generator p of the value stream p^r");
    c_disc->add_option("--count", disc_count, "number of stream values");
    c_disc->callback([&] {
        std::vector<Nat> values;
        Nat v{1};
        for (std::size_t r = 1; r <= disc_count; ++r) {
            v *= disc_prime;
            values.push_back(v);
        }
        const auto parts = fractional_log_parts(values, Base(opt.base));
        if (opt.format == "json") {
            json arr = json::array();
            for (std::size_t n = 1; n <= parts.size(); ++n)
                arr.push_back({{"N", n},
                               {"D_star", star_discrepancy(std::vector<double>(
                                              parts.begin(), parts.begin() + n))}});
            std::cout << arr.dump() << "\n";
            return;
        }
        std::cout << "N,D_star\n";
        for (std::size_t n = 1; n <= parts.size(); ++n)
            std::cout << n << ","
                      << star_discrepancy(std::vector<double>(parts.begin(), parts.begin() + n))
                      << "\n";
    });
    std::size_t length = 24;
    std::uint64_t witness_imax = 0;
    auto* c_liou = add_common(app.add_subcommand("liouville", "factorial-position word"), false);
    c_liou->add_option("--length", length);
    c_liou->add_option("--witness", witness_imax, "also run the relaxed-criterion witness to i_max");
    c_liou->callback([&] {
        const Base base(opt.base);
        if (witness_imax > 0) {
            const auto steps = liouville_pff_witness(base, witness_imax);
            if (opt.format == "json") {
                json arr = json::array();
                for (const auto& st : steps)
                    arr.push_back({{"i", st.i},
                                   {"cut", st.cut},
                                   {"record", st.record},
                                   {"component_identity", st.component_identity}});
                std::cout << arr.dump() << "\n";
                return;
            }
            for (const auto& st : steps)
                std::cout << "i=" << st.i << " cut=" << st.cut
                          << " verdict=" << (st.record.pff ? "yes" : "no")
                          << " component_identity=" << (st.component_identity ? "yes" : "no")
                          << "\n";
            return;
        }
        const DigitWord w = liouville_word(base, length);
        if (opt.format == "json")
            std::cout << json(w).dump() << "\n";
        else
            std::cout << w.render() << "\n";
    });

    app.parse(argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for smooth-numerator digit words"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "{\"error\":\"parse\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const ffword::stall_error& e) {
        std::cerr << "{\"error\":\"stall\",\"message\":\"" << e.what() << "\"}\n";
        return 4;
    } catch (const ffword::resource_error& e) {
        std::cerr << "{\"error\":\"resource\",\"message\":\"" << e.what() << "\"}\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\":\"domain\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "{\"error\":\"domain\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    }
}
