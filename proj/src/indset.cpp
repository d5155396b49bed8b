#include "wp/indset.hpp"

#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "masks.hpp"

namespace wp {

namespace {

using detail::mand;
using detail::mandnot;
using detail::mclear;
using detail::mempty;
using detail::mfirst;
using detail::mfor;
using detail::mhash;
using detail::MaskHash;
using detail::mor;
using detail::mpop;
using detail::mset;
using detail::mtest;
using detail::WideMask;

template <class M>
struct WpKey {
    M mask;
    int p;
    bool operator==(const WpKey&) const = default;
};

template <class M>
struct WpKeyHash {
    size_t operator()(const WpKey<M>& k) const { return mhash(k.mask) * 31 + size_t(k.p); }
};

template <class M>
class Engine {
public:
    Engine(const Graph& g, const Budget* budget) : n_(g.n()), budget_(budget) {
        adj_.resize(n_);
        cadj_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            adj_[v] = detail::mask_of<M>(g.neighbors(v));
            mset(full_, v);
        }
        for (int v = 0; v < n_; ++v) {
            cadj_[v] = mandnot(full_, adj_[v]);
            mclear(cadj_[v], v);
        }
    }

    int n() const { return n_; }
    M full() const { return full_; }
    const M& adj(int v) const { return adj_[v]; }

    template <class F>
    void for_each_component(M mask, F f) const {
        M rest = mask;
        while (!mempty(rest)) {
            int v = mfirst(rest);
            M comp{};
            mset(comp, v);
            M frontier = comp;
            while (!mempty(frontier)) {
                M next{};
                mfor(frontier, [&](int u) { next = mor(next, adj_[u]); });
                next = mandnot(mand(next, mask), comp);
                comp = mor(comp, next);
                frontier = next;
            }
            f(comp);
            rest = mandnot(rest, comp);
        }
    }

    Polynomial poly(M mask) {
        Polynomial out = Polynomial::one();
        for_each_component(mask, [&](M comp) { out = out * poly_component(comp); });
        return out;
    }

    int alpha(M mask) {
        int total = 0;
        for_each_component(mask, [&](M comp) { total += alpha_component(comp); });
        return total;
    }

    // Visits every maximal independent set of the induced subgraph on mask;
    // stops early when the visitor returns false.
    bool enumerate_maximal(M mask, const std::function<bool(M)>& visit) {
        return bron_kerbosch(M{}, mask, M{}, visit);
    }

    bool well_covered(M mask) {
        if (mempty(mask)) return true;
        auto it = wc_memo_.find(mask);
        if (it != wc_memo_.end()) return it->second;
        int first_size = -1;
        bool ok = true;
        enumerate_maximal(mask, [&](M s) {
            int sz = mpop(s);
            if (first_size < 0) {
                first_size = sz;
                return true;
            }
            if (sz != first_size) {
                ok = false;
                return false;
            }
            return true;
        });
        wc_memo_.emplace(mask, ok);
        return ok;
    }

    bool wp(M mask, int p) {
        budget_check(budget_);
        if (mpop(mask) < p) return false;
        if (p == 1) return well_covered(mask);
        WpKey<M> key{mask, p};
        auto it = wp_memo_.find(key);
        if (it != wp_memo_.end()) return it->second;
        const int a = alpha(mask);
        bool ok = true;
        mfor(mask, [&](int v) {
            if (!ok) return;
            M sub = mask;
            mclear(sub, v);
            if (alpha(sub) != a) ok = false;
        });
        if (ok) {
            mfor(mask, [&](int v) {
                if (!ok) return;
                M sub = mask;
                mclear(sub, v);
                if (!wp(sub, p - 1)) ok = false;
            });
        }
        wp_memo_.emplace(key, ok);
        return ok;
    }

    int max_wp_full() {
        int bound = INT_MAX;
        for_each_component(full_, [&](M comp) {
            bound = std::min(bound, mpop(comp) / alpha_component(comp));
        });
        int best = 0;
        for (int p = 1; p <= bound; ++p) {
            if (!wp(full_, p)) break;
            best = p;
        }
        return best;
    }

    // Visits every nonempty independent set together with its neighborhood
    // union; stops when the visitor returns false.
    bool for_each_independent_set(const std::function<bool(M, M)>& f) {
        return independent_rec(M{}, M{}, full_, f);
    }

    Rational qr_threshold_full() {
        Rational best(0);
        bool any = false;
        for_each_independent_set([&](M s, M nbrs) {
            Rational r(mpop(nbrs), mpop(s));
            if (!any || r < best) {
                best = r;
                any = true;
            }
            return best.num != 0;  // 0 is the global floor
        });
        return best;
    }

    bool quasi_regularizable_full(const Rational& lambda) {
        if (lambda.num <= 0) return true;
        bool ok = true;
        for_each_independent_set([&](M s, M nbrs) {
            if (lambda.num * (long long)mpop(s) > lambda.den * (long long)mpop(nbrs)) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

private:
    Polynomial poly_component(M comp) {
        budget_check(budget_);
        if (mpop(comp) == 1) return Polynomial({1, 1});
        auto it = poly_memo_.find(comp);
        if (it != poly_memo_.end()) return it->second;
        const int v = pivot_max_degree(comp);
        M without = comp;
        mclear(without, v);
        Polynomial res = poly(without);
        res += poly(mandnot(without, adj_[v])).shifted(1);
        poly_memo_.emplace(comp, res);
        return res;
    }

    int alpha_component(M comp) {
        budget_check(budget_);
        if (mpop(comp) == 1) return 1;
        auto it = alpha_memo_.find(comp);
        if (it != alpha_memo_.end()) return it->second;
        const int v = pivot_max_degree(comp);
        M without = comp;
        mclear(without, v);
        int res = std::max(alpha(without), 1 + alpha(mandnot(without, adj_[v])));
        alpha_memo_.emplace(comp, res);
        return res;
    }

    int pivot_max_degree(M mask) const {
        int best = -1, best_deg = -1;
        mfor(mask, [&](int v) {
            int d = mpop(mand(adj_[v], mask));
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        });
        return best;
    }

    bool bron_kerbosch(M r, M p, M x, const std::function<bool(M)>& visit) {
        budget_check(budget_);
        if (mempty(p) && mempty(x)) return visit(r);
        int pivot = -1, best = -1;
        mfor(mor(p, x), [&](int u) {
            int c = mpop(mand(p, cadj_[u]));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        bool keep_going = true;
        mfor(mandnot(p, cadj_[pivot]), [&](int v) {
            if (!keep_going) return;
            M rv = r;
            mset(rv, v);
            if (!bron_kerbosch(rv, mand(p, cadj_[v]), mand(x, cadj_[v]), visit)) {
                keep_going = false;
                return;
            }
            mclear(p, v);
            mset(x, v);
        });
        return keep_going;
    }

    bool independent_rec(M chosen, M nbrs, M cands, const std::function<bool(M, M)>& f) {
        budget_check(budget_);
        if (mempty(cands)) return mempty(chosen) ? true : f(chosen, nbrs);
        const int v = mfirst(cands);
        M without = cands;
        mclear(without, v);
        if (!independent_rec(chosen, nbrs, without, f)) return false;
        M cv = chosen;
        mset(cv, v);
        return independent_rec(cv, mor(nbrs, adj_[v]), mandnot(without, adj_[v]), f);
    }

    int n_;
    const Budget* budget_;
    std::vector<M> adj_, cadj_;
    M full_{};
    std::unordered_map<M, Polynomial, MaskHash<M>> poly_memo_;
    std::unordered_map<M, int, MaskHash<M>> alpha_memo_;
    std::unordered_map<M, bool, MaskHash<M>> wc_memo_;
    std::unordered_map<WpKey<M>, bool, WpKeyHash<M>> wp_memo_;
};

template <class F>
auto with_engine(const Graph& g, const Budget* budget, F f) {
    if (g.n() <= 64) {
        Engine<uint64_t> e(g, budget);
        return f(e);
    }
    Engine<WideMask> e(g, budget);
    return f(e);
}

}  // namespace

Polynomial independence_polynomial(const Graph& g, const Budget* budget) {
    return with_engine(g, budget, [&](auto& e) { return e.poly(e.full()); });
}

int independence_number(const Graph& g, const Budget* budget) {
    if (g.n() == 0) return 0;
    return with_engine(g, budget, [&](auto& e) { return e.alpha(e.full()); });
}

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit,
                                      const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("maximal independent sets require n >= 1");
    with_engine(g, budget, [&](auto& e) {
        using M = decltype(e.full());
        e.enumerate_maximal(e.full(),
                            [&](M s) { return visit(detail::vertex_set_of(s, g.n())); });
        return 0;
    });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool is_well_covered(const Graph& g, const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("is_well_covered requires n >= 1");
    return with_engine(g, budget, [&](auto& e) { return e.well_covered(e.full()); });
}

bool is_one_well_covered(const Graph& g, const Budget* budget) {
    if (g.n() < 2) throw std::invalid_argument("is_one_well_covered requires n >= 2");
    return with_engine(g, budget, [&](auto& e) {
        using M = decltype(e.full());
        if (!e.well_covered(e.full())) return false;
        for (int v = 0; v < g.n(); ++v) {
            M sub = e.full();
            mclear(sub, v);
            if (!e.well_covered(sub)) return false;
        }
        return true;
    });
}

bool is_wp(const Graph& g, int p, const Budget* budget) {
    if (p < 1) throw std::invalid_argument("is_wp requires p >= 1");
    if (g.n() < 1) throw std::invalid_argument("is_wp requires n >= 1");
    return with_engine(g, budget, [&](auto& e) { return e.wp(e.full(), p); });
}

int max_wp(const Graph& g, const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("max_wp requires n >= 1");
    return with_engine(g, budget, [&](auto& e) { return e.max_wp_full(); });
}

Rational qr_threshold(const Graph& g, const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("qr_threshold requires n >= 1");
    return with_engine(g, budget, [&](auto& e) { return e.qr_threshold_full(); });
}

bool is_quasi_regularizable(const Graph& g, const Rational& lambda, const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("is_quasi_regularizable requires n >= 1");
    return with_engine(g, budget,
                       [&](auto& e) { return e.quasi_regularizable_full(lambda); });
}

bool is_wp_definitional(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("is_wp_definitional requires p >= 1");
    const int n = g.n();
    if (n < 1 || n > 8 || p > 3)
        throw std::invalid_argument("is_wp_definitional oracle scale is n <= 8, p <= 3");
    if (n < p) return false;

    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int u) { adj[v] |= uint32_t{1} << u; });

    // all independent subsets in increasing mask order, empty set included
    std::vector<uint32_t> ind;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (uint32_t rest = mask; rest && ok; rest &= rest - 1)
            if (adj[std::countr_zero(rest)] & mask) ok = false;
        if (ok) ind.push_back(mask);
    }
    int alpha = 0;
    for (uint32_t s : ind) alpha = std::max(alpha, std::popcount(s));
    std::vector<uint32_t> max_sets;
    for (uint32_t s : ind)
        if (std::popcount(s) == alpha) max_sets.push_back(s);

    std::vector<uint32_t> tuple(size_t(p), 0);

    // disjoint maximum sets S_i containing A_i, assigned slot by slot
    auto extendable = [&](auto&& self, size_t slot, uint32_t used) -> bool {
        if (slot == size_t(p)) return true;
        for (uint32_t s : max_sets) {
            if ((s & used) == 0 && (s & tuple[slot]) == tuple[slot]) {
                if (self(self, slot + 1, used | s)) return true;
            }
        }
        return false;
    };

    // tuples are enumerated in non-decreasing mask order; revisiting the same
    // index only matters for the empty set (non-empty sets self-intersect)
    auto tuples_ok = [&](auto&& self, size_t slot, size_t index_min, uint32_t used) -> bool {
        if (slot == size_t(p)) return extendable(extendable, 0, 0);
        for (size_t i = index_min; i < ind.size(); ++i) {
            if (ind[i] & used) continue;
            tuple[slot] = ind[i];
            if (!self(self, slot + 1, i, used | ind[i])) return false;
        }
        return true;
    };

    return tuples_ok(tuples_ok, 0, 0, 0);
}

ClassReport classify(const Graph& g, const Budget* budget) {
    if (g.n() < 1) throw std::invalid_argument("classify requires n >= 1");
    return with_engine(g, budget, [&](auto& e) {
        using M = decltype(e.full());
        ClassReport r;
        r.poly = e.poly(e.full());
        r.alpha = r.poly.degree();
        r.well_covered = e.well_covered(e.full());
        if (g.n() >= 2) {
            r.one_well_covered = r.well_covered;
            for (int v = 0; v < g.n() && r.one_well_covered; ++v) {
                M sub = e.full();
                mclear(sub, v);
                if (!e.well_covered(sub)) r.one_well_covered = false;
            }
        }
        r.max_wp = e.max_wp_full();
        r.qr_threshold = e.qr_threshold_full();
        auto lc = is_log_concave(r.poly);
        r.log_concave = lc.log_concave;
        r.unimodal = is_unimodal(r.poly).unimodal;
        return r;
    });
}

std::string class_report_json(const ClassReport& report, const std::string& graph6) {
    nlohmann::json j;
    j["graph6"] = graph6;
    j["alpha"] = report.alpha;
    j["poly"] = report.poly.text();
    j["well_covered"] = report.well_covered;
    j["one_well_covered"] = report.one_well_covered;
    j["max_wp"] = report.max_wp;
    j["qr_threshold"] = report.qr_threshold.str();
    j["log_concave"] = report.log_concave;
    j["unimodal"] = report.unimodal;
    return j.dump();
}

}  // namespace wp
