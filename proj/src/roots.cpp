#include "hypercert/roots.hpp"

#include "hypercert/errors.hpp"

#include <algorithm>
#include <deque>

namespace hypercert {

std::vector<UvPoly> sturm_chain(const UvPoly& a) {
    std::vector<UvPoly> chain;
    UvPoly f = a.square_free_part().primitive();
    if (f.is_zero()) return chain;
    chain.push_back(f);
    if (f.deg() == 0) return chain;
    chain.push_back(f.derivative().primitive());
    while (chain.back().deg() > 0) {
        UvPoly r;
        UvPoly::divrem(chain[chain.size() - 2], chain.back(), nullptr, &r);
        if (r.is_zero()) break; // square-free input: cannot happen before deg 0
        chain.push_back((-r).primitive());
    }
    return chain;
}

namespace {

int sign_at(const UvPoly& p, const Bound& b) {
    switch (b.kind) {
        case Bound::Finite: return sign_of(p.eval(b.value));
        case Bound::PosInf: return p.is_zero() ? 0 : sign_of(p.lead());
        case Bound::NegInf: {
            if (p.is_zero()) return 0;
            int s = sign_of(p.lead());
            return (p.deg() % 2 == 0) ? s : -s;
        }
    }
    return 0;
}

long variations(const std::vector<UvPoly>& chain, const Bound& b) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

bool bound_less(const Bound& a, const Bound& b) {
    if (a.kind == Bound::NegInf) return b.kind != Bound::NegInf;
    if (a.kind == Bound::PosInf) return false;
    if (b.kind == Bound::PosInf) return true;
    if (b.kind == Bound::NegInf) return false;
    return a.value < b.value;
}

} // namespace

long sturm_count(const UvPoly& a, const Bound& lo, const Bound& hi) {
    if (a.is_zero()) throw contract_error("sturm_count: zero polynomial");
    if (!bound_less(lo, hi)) return 0;
    auto chain = sturm_chain(a);
    return variations(chain, lo) - variations(chain, hi);
}

long sturm_count(const UvPoly& a) { return sturm_count(a, Bound::neg_inf(), Bound::pos_inf()); }

bool all_roots_real(const UvPoly& a) {
    if (a.is_zero()) throw contract_error("all_roots_real: zero polynomial");
    if (a.deg() == 0) return true;
    for (const auto& [factor, mult] : a.square_free_decomposition()) {
        (void)mult;
        if (sturm_count(factor) != factor.deg()) return false;
    }
    return true;
}

Q cauchy_bound(const UvPoly& a) {
    if (a.is_zero()) throw contract_error("cauchy_bound: zero polynomial");
    Q m(0);
    const Q& lead = a.coeffs().back();
    for (int i = 0; i < a.deg(); ++i) {
        Q r = abs_q(a.coeff(i) / lead);
        if (r > m) m = r;
    }
    return m + 1;
}

long RootIsolation::total_multiplicity() const {
    long t = 0;
    for (const auto& iv : intervals) t += iv.multiplicity;
    return t;
}

namespace {

// Isolates the roots of a square-free factor to intervals of width <= width.
// Each returned interval is (lo, hi] from the bisection, reported closed.
std::vector<RootInterval> isolate_square_free(const UvPoly& f, int multiplicity, const Q& width,
                                              const std::vector<UvPoly>& chain) {
    std::vector<RootInterval> out;
    long total = variations(chain, Bound::neg_inf()) - variations(chain, Bound::pos_inf());
    if (total == 0) return out;
    Q bound = cauchy_bound(f);

    struct Segment {
        Q lo, hi;
        long count;
    };
    std::deque<Segment> work;
    work.push_back({-bound, bound,
                    variations(chain, Bound::at(-bound)) - variations(chain, Bound::at(bound))});
    while (!work.empty()) {
        Segment s = work.front();
        work.pop_front();
        if (s.count == 0) continue;
        if (s.count == 1 && s.hi - s.lo <= width) {
            // Exact rational root at an endpoint gets a degenerate interval.
            if (f.eval(s.hi) == 0) {
                out.push_back({s.hi, s.hi, multiplicity});
                continue;
            }
            if (f.eval(s.lo) != 0) {
                out.push_back({s.lo, s.hi, multiplicity});
                continue;
            }
            // f(lo) == 0: the counted root is strictly interior (lo belongs to
            // the neighboring segment); keep bisecting to move off lo.
        }
        Q mid = (s.lo + s.hi) / 2;
        long left = variations(chain, Bound::at(s.lo)) - variations(chain, Bound::at(mid));
        work.push_back({s.lo, mid, left});
        work.push_back({mid, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

bool overlaps(const RootInterval& a, const RootInterval& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

} // namespace

RootIsolation isolate_roots(const UvPoly& a, const Q& width) {
    if (a.is_zero()) throw contract_error("isolate_roots: zero polynomial");
    if (width <= 0) throw contract_error("isolate_roots: width must be positive");
    RootIsolation iso;
    if (a.deg() == 0) return iso;

    auto factors = a.square_free_decomposition();
    std::vector<std::vector<UvPoly>> chains;
    chains.reserve(factors.size());
    for (const auto& f : factors) chains.push_back(sturm_chain(f.factor));

    Q w = width;
    for (int attempt = 0;; ++attempt) {
        iso.intervals.clear();
        for (size_t i = 0; i < factors.size(); ++i) {
            auto part = isolate_square_free(factors[i].factor, factors[i].multiplicity, w, chains[i]);
            iso.intervals.insert(iso.intervals.end(), part.begin(), part.end());
        }
        std::sort(iso.intervals.begin(), iso.intervals.end(),
                  [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
        bool disjoint = true;
        for (size_t i = 0; i + 1 < iso.intervals.size(); ++i) {
            if (overlaps(iso.intervals[i], iso.intervals[i + 1])) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) return iso;
        if (attempt > 64) throw precision_error("isolate_roots: could not separate roots");
        w /= 16; // roots from different factors are distinct; shrink and retry
    }
}

QInterval QInterval::operator*(const QInterval& o) const {
    Q a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

QInterval QInterval::operator/(const QInterval& o) const {
    if (o.contains_zero()) throw contract_error("QInterval division by interval containing zero");
    QInterval inv{Q(1) / o.hi, Q(1) / o.lo};
    return *this * inv;
}

QInterval eval_interval(const UvPoly& p, const QInterval& t) {
    QInterval acc = QInterval::point(Q(0));
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * t + QInterval::point(p.coeffs()[i]);
    return acc;
}

} // namespace hypercert
