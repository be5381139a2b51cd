#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "perron/coverings.hpp"
#include "perron/dimension.hpp"
#include "perron/errors.hpp"
#include "perron/expansion.hpp"
#include "perron/json_io.hpp"
#include "perron/kernels.hpp"
#include "perron/predicate.hpp"
#include "perron/transforms.hpp"

namespace perron::cli {

namespace {

struct Options {
    std::string system = "luroth";
    std::string sign = "P";
    std::string x;
    std::string word;
    std::string lo, hi;
    std::string prefix;
    std::string from;
    std::string sets;
    std::string kind;
    std::string predicate = "all";
    std::string ratios;
    std::string cap = "64";
    std::size_t n = 10;
    std::size_t rank = 1;
    std::size_t count = 10;
    double alpha = 1.0;
    double eps = 0.5;
    double tol = 1e-9;
    bool inverse = false;
    bool serial = false;
};

Json cylinder_json(const CylinderInterval& c) {
    Json j;
    j["lo"] = rational_to_json(c.lo);
    j["hi"] = rational_to_json(c.hi);
    j["diam"] = rational_to_json(c.diameter());
    return j;
}

// Bounds of U. Positive covers use (lo, hi]; alternating covers use (lo, hi).
QInterval interval_from(const Options& o, Sign sign) {
    QInterval u{parse_rational(o.lo), parse_rational(o.hi)};
    u.hi_included = sign == Sign::Positive;
    return u;
}

Transform transform_from(const Options& o) {
    if (o.kind == "fp") return Transform::fp(parse_rule(o.system));
    if (o.kind == "t") return Transform::t_engel();
    if (o.kind == "g") return Transform::g_pierce();
    throw DomainError("unknown transform kind '" + o.kind + "' (expected fp, t or g)");
}

std::vector<Rational> parse_ratio_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw DomainError("moran needs at least one ratio");
    return out;
}

void apply_thread_cap(std::ostream& err) {
    const char* env = std::getenv("PERRON_THREADS");
    if (!env || !*env) return;
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) {
        err << "warning: ignoring PERRON_THREADS='" << env << "'\n";
        return;
    }
    parallel::set_max_threads(static_cast<int>(n));
}

int dispatch(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    auto emit = [&](const Json& j) { out << j.dump() << '\n'; };

    if (cmd == "expand") {
        emit(Json{{"digits", word_to_json(positive_digits(parse_rule(o.system), parse_rational(o.x), o.n))}});
    } else if (cmd == "alt-expand") {
        AlternatingExpansion e = alternating_digits(parse_rule(o.system), parse_rational(o.x), o.n);
        Json j{{"digits", word_to_json(e.digits)}};
        if (e.is_point()) {
            j["is_point"] = true;
            j["rank"] = *e.is_point_rank;
        }
        emit(j);
    } else if (cmd == "eval") {
        emit(Json{{"value", rational_to_json(partial_sum(parse_rule(o.system), parse_word(o.word), parse_sign(o.sign)))}});
    } else if (cmd == "cylinder") {
        emit(cylinder_json(cylinder(parse_rule(o.system), parse_word(o.word), parse_sign(o.sign))));
    } else if (cmd == "cover") {
        Sign sign = parse_sign(o.sign);
        Json sets = Json::array();
        for (const auto& fs : cover_interval(parse_rule(o.system), sign, interval_from(o, sign)))
            sets.push_back(family_set_to_json(fs));
        emit(Json{{"sets", sets}});
    } else if (cmd == "split") {
        DigitRule rule = parse_rule(o.system);
        FamilySet fs{parse_sign(o.sign), parse_word(o.prefix), {}, std::nullopt};
        fs.start = o.from.empty() ? Natural(rule(fs.prefix) + 1) : parse_natural(o.from);
        FiniteSplit split(rule, fs, o.alpha, o.eps);
        Json blocks = Json::array();
        for (std::size_t i = 0; i < o.count; ++i) {
            Json b = family_set_to_json(split.next());
            b["diam"] = rational_to_json(split.last_diameter());
            blocks.push_back(b);
        }
        emit(Json{{"s", digit_to_json(split.s())}, {"blocks", blocks}, {"residue_bound", split.residue_bound()}});
    } else if (cmd == "verify") {
        std::string text = o.sets;
        if (text == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        Json parsed = Json::parse(text);
        if (parsed.is_object() && parsed.contains("sets")) parsed = parsed.at("sets");
        std::vector<FamilySet> sets = family_sets_from_json(parsed);
        Sign sign = sets.empty() ? parse_sign(o.sign) : sets.front().sign;
        CoverReport r = verify_cover(parse_rule(o.system), interval_from(o, sign), sets, o.alpha);
        emit(Json{{"covers", r.covers}, {"max_diameter", rational_to_json(r.max_diameter)}, {"cost", r.cost}});
    } else if (cmd == "transform") {
        Direction dir = o.inverse ? Direction::Inverse : Direction::Forward;
        emit(Json{{"digits", word_to_json(transform_digits(transform_from(o), parse_word(o.word), dir))}});
    } else if (cmd == "transform-point") {
        Direction dir = o.inverse ? Direction::Inverse : Direction::Forward;
        try {
            CylinderInterval c = transform_point(transform_from(o), parse_rational(o.x), o.rank, dir);
            Json j = cylinder_json(c);
            j["word"] = word_to_json(c.word);
            emit(j);
        } catch (const ISPointError& e) {
            emit(Json{{"digits", word_to_json(e.digits())}, {"is_point", true}, {"rank", e.rank()}});
        }
    } else if (cmd == "dim") {
        DimensionEstimate est =
            pressure_root(parse_rule(o.system), parse_sign(o.sign), parse_predicate(o.predicate), o.rank,
                          parse_natural(o.cap), o.tol, o.serial ? Kernel::Serial : Kernel::Parallel);
        Json j{{"s", est.s_value},
               {"rank", est.rank},
               {"cap", digit_to_json(est.digit_cap)},
               {"residual", est.residual},
               {"bases", est.bases_count}};
        if (est.cap_too_small) {
            j["cap_too_small"] = true;
            err << "warning: digit cap " << o.cap << " excludes every digit at some position\n";
        }
        emit(j);
    } else if (cmd == "moran") {
        std::vector<Rational> ratios = parse_ratio_list(o.ratios);
        emit(Json{{"s", moran_dimension(ratios, o.tol)}});
    } else if (cmd == "measure") {
        Rational m = measure_at_rank(parse_rule(o.system), parse_sign(o.sign), parse_predicate(o.predicate), o.rank,
                                     parse_natural(o.cap), o.serial ? Kernel::Serial : Kernel::Parallel);
        emit(Json{{"measure", rational_to_json(m)}});
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Perron expansions, coverings and dimension estimates", "perron"};
    app.require_subcommand(1, 1);
    Options o;

    auto system = [&](CLI::App* sub) {
        sub->add_option("--system", o.system, "luroth | engel | engel-mod | pierce | oppenheim:a,b");
    };
    auto sign = [&](CLI::App* sub) { sub->add_option("--sign", o.sign, "P (positive) or P- (alternating)"); };

    auto* expand = app.add_subcommand("expand", "positive digits of x");
    system(expand);
    expand->add_option("--x", o.x, "rational p/q in (0,1]")->required();
    expand->add_option("--n", o.n, "number of digits");

    auto* alt = app.add_subcommand("alt-expand", "alternating digits of x");
    system(alt);
    alt->add_option("--x", o.x, "rational p/q in (0,1)")->required();
    alt->add_option("--n", o.n, "number of digits");

    auto* eval = app.add_subcommand("eval", "partial sum of a digit word");
    system(eval);
    sign(eval);
    eval->add_option("--word", o.word, "comma-separated digits")->required();

    auto* cyl = app.add_subcommand("cylinder", "cylinder of a digit word");
    system(cyl);
    sign(cyl);
    cyl->add_option("--word", o.word, "comma-separated digits")->required();

    auto* cover = app.add_subcommand("cover", "cover (lo,hi] by at most three family sets");
    system(cover);
    sign(cover);
    cover->add_option("--lo", o.lo)->required();
    cover->add_option("--hi", o.hi)->required();

    auto* split = app.add_subcommand("split", "split an unbounded family set into finite blocks");
    system(split);
    sign(split);
    split->add_option("--prefix", o.prefix, "comma-separated prefix digits (default empty)");
    split->add_option("--from", o.from, "first digit (default r_k + 1)");
    split->add_option("--alpha", o.alpha);
    split->add_option("--eps", o.eps);
    split->add_option("--count", o.count, "number of blocks to emit");

    auto* verify = app.add_subcommand("verify", "check a cover of (lo,hi]");
    system(verify);
    sign(verify);
    verify->add_option("--lo", o.lo)->required();
    verify->add_option("--hi", o.hi)->required();
    verify->add_option("--sets", o.sets, "JSON array of family sets, or - for stdin")->required();
    verify->add_option("--alpha", o.alpha);

    auto* tr = app.add_subcommand("transform", "map a digit word");
    tr->add_option("--kind", o.kind, "fp | t | g")->required();
    system(tr);
    tr->add_option("--word", o.word)->required();
    tr->add_flag("--inverse", o.inverse);

    auto* tp = app.add_subcommand("transform-point", "cylinder bracket of the image of x");
    tp->add_option("--kind", o.kind, "fp | t | g")->required();
    system(tp);
    tp->add_option("--x", o.x)->required();
    tp->add_option("--rank", o.rank);
    tp->add_flag("--inverse", o.inverse);

    auto* dim = app.add_subcommand("dim", "rank-k pressure root");
    system(dim);
    sign(dim);
    dim->add_option("--predicate", o.predicate);
    dim->add_option("--rank", o.rank);
    dim->add_option("--cap", o.cap);
    dim->add_option("--tol", o.tol);
    dim->add_flag("--serial", o.serial, "use the serial reference kernel");

    auto* moran = app.add_subcommand("moran", "root of sum r_i^s = 1");
    moran->add_option("--ratios", o.ratios, "comma-separated rationals")->required();
    moran->add_option("--tol", o.tol);

    auto* measure = app.add_subcommand("measure", "exact total length of compatible cylinders");
    system(measure);
    sign(measure);
    measure->add_option("--predicate", o.predicate);
    measure->add_option("--rank", o.rank);
    measure->add_option("--cap", o.cap);
    measure->add_flag("--serial", o.serial, "use the serial reference kernel");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    apply_thread_cap(err);
    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, in, out, err);
    } catch (const ValidityError& e) {
        err << "validity error: " << e.what() << '\n';
        return kExitValidity;
    } catch (const Json::exception& e) {
        err << "validity error: " << e.what() << '\n';
        return kExitValidity;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "validity error: " << e.what() << '\n';
        return kExitValidity;
    }
}

}  // namespace perron::cli
