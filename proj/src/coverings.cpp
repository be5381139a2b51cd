#include "perron/coverings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perron/errors.hpp"
#include "perron/kernels.hpp"

namespace perron {

namespace {

Rational ratio(const Natural& num, const Natural& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// A cylinder seen through its own local coordinate y in (0,1]. Child c
// occupies (r/c, r/(c-1)] there for both signs; only the map from the
// parent's local coordinate into a child's reflects in the alternating case.
struct Frame {
    DigitWord prefix;
    Natural r;
};

Rational child_high(const Frame& f, const Natural& c) { return ratio(f.r, Natural(c - 1)); }

// Child containing y under the (a,b] convention.
Natural digit_at(const Frame& f, const Rational& y) { return floor(Rational(f.r) / y) + 1; }

Frame child_frame(const DigitRule& rule, const Frame& f, const Natural& c) {
    Frame out{f.prefix, 0};
    out.prefix.push_back(c);
    out.r = rule(out.prefix);
    return out;
}

Rational to_child_local(const Frame& f, const Natural& c, const Rational& y, Sign sign) {
    Rational inv_step = ratio(Natural((c - 1) * c), f.r);
    if (sign == Sign::Positive) return (y - ratio(f.r, c)) * inv_step;
    return (ratio(f.r, Natural(c - 1)) - y) * inv_step;
}

FamilySet make_set(Sign sign, const Frame& f, const Natural& start, std::optional<Natural> end) {
    return FamilySet{sign, f.prefix, start, std::move(end)};
}

enum class LocalSide { FromZero, ToOne };

// Boundary cover of (0, y] or (y, 1] in the frame's local coordinate.
BoundaryCover local_boundary(const DigitRule& rule, Sign sign, Frame f, Rational y, LocalSide side) {
    while (true) {
        BoundaryCover out;
        if (side == LocalSide::FromZero) {
            Natural b = digit_at(f, y);
            out.single = make_set(sign, f, b, std::nullopt);
            if (y == child_high(f, b)) {
                out.exact = true;
                out.tight = {out.single};
            } else {
                out.tight = {make_set(sign, f, b + 1, std::nullopt), make_set(sign, f, b, b)};
            }
            return out;
        }
        const Natural first = f.r + 1;
        if (sgn(y) == 0) {
            out.single = make_set(sign, f, first, std::nullopt);
            out.exact = true;
            out.tight = {out.single};
            return out;
        }
        Natural d = digit_at(f, y);
        if (d == first) {
            // The cut lies in the first child, which shares the parent's far
            // end: continue one rank down. The alternating chart reflects.
            y = to_child_local(f, first, y, sign);
            if (sign == Sign::Alternating) side = LocalSide::FromZero;
            f = child_frame(rule, f, first);
            continue;
        }
        if (y == child_high(f, d)) {
            out.single = make_set(sign, f, first, Natural(d - 1));
            out.exact = true;
            out.tight = {out.single};
        } else {
            out.single = make_set(sign, f, first, d);
            out.tight = {make_set(sign, f, first, Natural(d - 1)), make_set(sign, f, d, d)};
        }
        return out;
    }
}

enum class ChildEnd { Low, High };

// Cover of the part of child c between its local end `end` and the parent
// local point y.
BoundaryCover piece_cover(const DigitRule& rule, Sign sign, const Frame& f, const Natural& c, const Rational& y,
                          ChildEnd end) {
    Rational yc = to_child_local(f, c, y, sign);
    bool low = end == ChildEnd::Low;
    if (sign == Sign::Alternating) low = !low;
    return local_boundary(rule, sign, child_frame(rule, f, c), yc, low ? LocalSide::FromZero : LocalSide::ToOne);
}

using Option = std::vector<FamilySet>;

std::vector<Option> variants(const BoundaryCover& bc) {
    if (bc.exact) return {{bc.single}};
    return {{bc.single}, bc.tight};
}

// Layout: [piece 0 option] fixed... [piece 1 option]. Picks the combination
// whose sets all fit in `width`, with the fewest sets, then the smallest
// total diameter.
std::vector<FamilySet> choose(const DigitRule& rule, const std::vector<Option>& before, const Option& fixed,
                              const std::vector<Option>& after, const Rational& width) {
    const std::vector<Option> none{Option{}};
    const auto& lhs = before.empty() ? none : before;
    const auto& rhs = after.empty() ? none : after;
    std::optional<std::vector<FamilySet>> best;
    std::size_t best_count = 0;
    Rational best_total;
    for (const auto& l : lhs) {
        for (const auto& r : rhs) {
            std::vector<FamilySet> sets = l;
            sets.insert(sets.end(), fixed.begin(), fixed.end());
            sets.insert(sets.end(), r.begin(), r.end());
            Rational total = 0;
            bool fits = true;
            for (const auto& s : sets) {
                Rational d = family_set_diameter(rule, s);
                if (d > width) {
                    fits = false;
                    break;
                }
                total += d;
            }
            if (!fits) continue;
            if (!best || sets.size() < best_count || (sets.size() == best_count && total < best_total)) {
                best = sets;
                best_count = sets.size();
                best_total = total;
            }
        }
    }
    if (!best || best->size() > 3) throw std::logic_error("cover_interval: no admissible cover found");
    return *best;
}

}  // namespace

void validate_family_set(const DigitRule& rule, const FamilySet& fs) {
    validate_word(rule, fs.prefix);
    Natural r = rule(fs.prefix);
    if (fs.start < r + 1)
        throw ValidityError(fs.prefix.size() + 1, "family set starts at digit " + fs.start.get_str() +
                                                      " below r + 1 = " + Natural(r + 1).get_str());
    if (fs.end && *fs.end < fs.start)
        throw ValidityError(fs.prefix.size() + 1, "family set range ends before it starts");
}

Rational prefix_factor(const DigitRule& rule, const DigitWord& prefix) {
    return cylinder_diameter(rule, prefix) * rule(prefix);
}

Rational family_set_diameter(const DigitRule& rule, const FamilySet& fs) {
    validate_family_set(rule, fs);
    Rational factor = prefix_factor(rule, fs.prefix);
    Rational d = factor / Rational(Natural(fs.start - 1));
    if (fs.end) d -= factor / Rational(*fs.end);
    d.canonicalize();
    return d;
}

QInterval family_set_hull(const DigitRule& rule, const FamilySet& fs) {
    validate_family_set(rule, fs);
    CylinderChart ch = chart(rule, fs.prefix, fs.sign);
    Rational near = fs.end ? ratio(ch.r, *fs.end) : Rational(0);
    Rational far = ratio(ch.r, Natural(fs.start - 1));
    Rational a = ch.to_global(near), b = ch.to_global(far);
    QInterval out;
    out.lo = a < b ? a : b;
    out.hi = a < b ? b : a;
    out.lo_included = false;
    out.hi_included = fs.sign == Sign::Positive;
    return out;
}

BoundaryCover cover_boundary(const DigitRule& rule, Sign sign, const DigitWord& prefix, const Rational& cut,
                             BoundarySide side) {
    CylinderChart ch = chart(rule, prefix, sign);
    Rational y = ch.to_local(cut);
    bool in_range = side == BoundarySide::FromInf ? (y > 0 && y <= 1) : (y >= 0 && y < 1);
    if (!ch.increasing()) in_range = side == BoundarySide::FromInf ? (y >= 0 && y < 1) : (y > 0 && y <= 1);
    if (!in_range) throw DomainError("cut " + to_string(cut) + " lies outside the cylinder");
    bool from_zero = (side == BoundarySide::FromInf) == ch.increasing();
    return local_boundary(rule, sign, Frame{prefix, ch.r}, y, from_zero ? LocalSide::FromZero : LocalSide::ToOne);
}

std::vector<FamilySet> cover_interval(const DigitRule& rule, Sign sign, const QInterval& u) {
    if (u.lo < 0 || u.hi > 1 || u.lo >= u.hi)
        throw DomainError("interval (" + to_string(u.lo) + ", " + to_string(u.hi) + ") is empty or leaves [0,1]");
    const Rational width = u.width();
    Frame f{{}, rule.phi0()};
    Rational a = u.lo, b = u.hi;

    while (true) {
        Natural hi_digit = digit_at(f, b);
        const bool n2_full = b == child_high(f, hi_digit);

        if (sgn(a) == 0) {
            // (0, b]: the tail past b's child plus a cover of the rest of it.
            if (n2_full) return {make_set(sign, f, hi_digit, std::nullopt)};
            auto piece = piece_cover(rule, sign, f, hi_digit, b, ChildEnd::Low);
            auto opts = variants(piece);
            opts.push_back({make_set(sign, f, hi_digit, hi_digit)});
            return choose(rule, {}, {make_set(sign, f, hi_digit + 1, std::nullopt)}, opts, width);
        }

        Natural lo_digit = digit_at(f, a);
        if (lo_digit == hi_digit) {
            // Same child: rescale into it.
            Rational ya = to_child_local(f, lo_digit, a, sign);
            Rational yb = to_child_local(f, lo_digit, b, sign);
            a = std::min(ya, yb);
            b = std::max(ya, yb);
            f = child_frame(rule, f, lo_digit);
            continue;
        }

        // lo_digit > hi_digit. Pieces: N1 = (a, sup child lo_digit] (empty when a
        // is that sup), full children in between, N2 = (inf child hi_digit, b].
        const bool n1 = a != child_high(f, lo_digit);
        const Natural full_from = n2_full ? hi_digit : Natural(hi_digit + 1);
        const Natural full_to = lo_digit - 1;
        const bool has_full = full_from <= full_to;

        std::vector<Option> n1_opts, n2_opts;
        if (n1) n1_opts = variants(piece_cover(rule, sign, f, lo_digit, a, ChildEnd::High));
        if (!n2_full) n2_opts = variants(piece_cover(rule, sign, f, hi_digit, b, ChildEnd::Low));

        if (!has_full) return choose(rule, n1_opts, {}, n2_opts, width);

        FamilySet block = make_set(sign, f, full_from, full_to);
        if (!n1 && n2_full) return {block};
        if (2 * family_set_diameter(rule, block) >= width) return choose(rule, n1_opts, {block}, n2_opts, width);
        // A short middle block can absorb all of child lo_digit.
        if (n1) block.end = lo_digit;
        return choose(rule, {}, {block}, n2_opts, width);
    }
}

Natural split_ratio(double alpha, double eps) {
    if (!(alpha > 0) || !(eps > 0)) throw DomainError("split needs alpha > 0 and eps > 0");
    // The margin keeps decimal inputs honest: eps = 0.1 arrives as a double
    // slightly above 1/10, which would otherwise admit sqrt(s) - 1 == 10.
    const long double a = alpha, target = (1.0L / static_cast<long double>(eps)) * (1.0L + 1e-12L);
    auto admissible = [&](long double s) { return std::pow(s, a) - 1.0L > target; };
    long double guess = std::pow(1.0L + target, 1.0L / a);
    if (!(guess < 1e18L)) throw DomainError("split ratio too large for alpha/eps");
    long double s = std::max(2.0L, std::floor(guess));
    while (!admissible(s)) s += 1;
    while (s > 2 && admissible(s - 1)) s -= 1;
    return Natural(std::to_string(static_cast<unsigned long long>(s)));
}

FiniteSplit::FiniteSplit(const DigitRule& rule, FamilySet fs, double alpha, double eps)
    : fs_(std::move(fs)), alpha_(alpha), eps_(eps) {
    validate_family_set(rule, fs_);
    if (fs_.bounded()) throw DomainError("split_to_finite needs an unbounded family set");
    s_ = split_ratio(alpha, eps);
    factor_ = prefix_factor(rule, fs_.prefix);
    t_ = fs_.start;
}

FamilySet FiniteSplit::next() {
    // Tail from t has diameter factor/(t-1); the next start is the least t'
    // with (t'-1) > (t-1)(s+1).
    Natural t_next = (t_ - 1) * (s_ + 1) + 2;
    FamilySet block{fs_.sign, fs_.prefix, t_, Natural(t_next - 1)};
    last_diameter_ = factor_ / Rational(Natural(t_ - 1)) - factor_ / Rational(Natural(t_next - 1));
    last_diameter_.canonicalize();
    t_ = t_next;
    ++emitted_;
    return block;
}

Rational FiniteSplit::remaining_diameter() const {
    Rational d = factor_ / Rational(Natural(t_ - 1));
    d.canonicalize();
    return d;
}

double FiniteSplit::residue_bound() const {
    const double geometric = 1.0 / (std::pow(s_.get_d(), alpha_) - 1.0);
    if (emitted_ == 0) return perron::pow(remaining_diameter(), alpha_) * (1.0 + geometric);
    return perron::pow(last_diameter_, alpha_) * geometric;
}

std::vector<FamilySet> split_to_finite(const DigitRule& rule, const FamilySet& fs, double alpha, double eps,
                                       std::size_t count) {
    FiniteSplit split(rule, fs, alpha, eps);
    std::vector<FamilySet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(split.next());
    return out;
}

CoverReport verify_cover(const DigitRule& rule, const QInterval& u, const std::vector<FamilySet>& sets, double alpha) {
    CoverReport report;
    if (sets.empty()) return report;

    std::vector<QInterval> hulls;
    hulls.reserve(sets.size());
    CompensatedSum cost;
    bool same_sign = true;
    for (const auto& s : sets) {
        same_sign = same_sign && s.sign == sets.front().sign;
        hulls.push_back(family_set_hull(rule, s));
        Rational d = hulls.back().width();
        if (d > report.max_diameter) report.max_diameter = d;
        cost += perron::pow(d, alpha);
    }
    report.cost = cost.value();
    if (!same_sign) return report;

    const bool positive = sets.front().sign == Sign::Positive;
    std::sort(hulls.begin(), hulls.end(), [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });

    // A closed left end of U must itself be inside a positive hull (lo, hi].
    if (positive && u.lo_included) {
        bool hit = std::any_of(hulls.begin(), hulls.end(), [&](const QInterval& h) { return h.lo < u.lo && u.lo <= h.hi; });
        if (!hit) return report;
    }
    // Sweep: everything just right of `cur` is covered by a hull with
    // lo <= cur < hi. Positive hulls include hi, so no gaps arise at joins;
    // alternating joins are cylinder endpoints, which are exempt.
    Rational cur = u.lo;
    while (cur < u.hi) {
        std::optional<Rational> reach;
        for (const auto& h : hulls) {
            if (h.lo > cur) break;
            if (h.hi > cur && (!reach || h.hi > *reach)) reach = h.hi;
        }
        if (!reach) return report;
        cur = *reach;
    }
    report.covers = true;
    return report;
}

}  // namespace perron
