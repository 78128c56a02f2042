#pragma once

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/invariants.hpp>
#include <bridgemap/knot_class.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace bridgemap {

/// Data of a type-(2n+1) expansion
///   [e1 a, 2c1, e2 a^-1, 2c2, ..., e2n a^-1, 2c2n, e2n+1 a]
/// over the even expansion a of the target. Odd-numbered blocks are a,
/// even-numbered blocks are a reversed.
struct TypeExpansion {
    ContinuedFraction base;
    int n = 1;
    std::vector<int> eps;
    std::vector<std::int64_t> c;
};

namespace detail {

inline void validate_expansion(std::span<const Integer> base, int n, std::span<const int> eps,
                               std::span<const std::int64_t> c) {
    if (n < 1) throw InvalidInput("type expansion needs n >= 1");
    if (base.empty() || base.size() % 2 != 0) throw InvalidInput("type expansion base must be an even expansion");
    for (const auto& a : base)
        if (a == 0 || a % 2 != 0) throw InvalidInput("type expansion base must be an even expansion");
    if (eps.size() != static_cast<std::size_t>(2 * n + 1)) throw InvalidInput("eps must have length 2n+1");
    if (c.size() != static_cast<std::size_t>(2 * n)) throw InvalidInput("c must have length 2n");
    if (eps[0] != 1) throw InvalidInput("eps_1 must be +1");
    for (int e : eps)
        if (e != 1 && e != -1) throw InvalidInput("eps entries must be +-1");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == 0 && eps[i] * eps[i + 1] == -1)
            throw InvalidInput("violated normalization: c_" + std::to_string(i + 1) +
                               " = 0 with eps_i * eps_i+1 = -1");
}

inline void expand_into(std::span<const Integer> base, std::span<const int> eps, std::span<const std::int64_t> c,
                        std::vector<Integer>& out) {
    out.clear();
    const std::size_t blocks = eps.size();
    for (std::size_t b = 0; b < blocks; ++b) {
        const bool reversed = b % 2 == 1;
        for (std::size_t j = 0; j < base.size(); ++j) {
            const Integer& a = reversed ? base[base.size() - 1 - j] : base[j];
            out.push_back(eps[b] < 0 ? Integer(-a) : a);
        }
        if (b < c.size()) out.emplace_back(2 * c[b]);
    }
}

/// Per-gap contribution 2|c_i| - psi(i) - psibar(i). At gap i the adjacent
/// entries are e_i x and e_i+1 x, where x is the last base entry for odd i
/// (block a meets a^-1) and the first base entry for even i.
inline std::vector<std::int64_t> gap_contributions(std::span<const Integer> base, std::span<const int> eps,
                                                   std::span<const std::int64_t> c) {
    std::vector<std::int64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const bool odd_gap = i % 2 == 0;  // 0-based index i is gap i+1
        const int x = (odd_gap ? base.back() : base.front()).sign();
        const std::int64_t ci = c[i];
        const int sc = ci > 0 ? 1 : (ci < 0 ? -1 : 0);
        const int psi = eps[i] * x * sc < 0 ? 1 : 0;
        const int psibar = eps[i + 1] * x * sc < 0 ? 1 : 0;
        out[i] = 2 * (ci < 0 ? -ci : ci) - psi - psibar;
    }
    return out;
}

inline std::int64_t genus_formula(std::size_t base_len, int n, std::span<const std::int64_t> c) {
    const auto m = static_cast<std::int64_t>(base_len / 2);
    const auto zeros = std::count(c.begin(), c.end(), 0);
    return (2 * n + 1) * m + n - zeros;
}

inline int eps_sum(std::span<const int> eps) {
    int s = 0;
    for (int e : eps) s += e;
    return s;
}

}  // namespace detail

inline void validate(const TypeExpansion& e) { detail::validate_expansion(e.base.entries(), e.n, e.eps, e.c); }

/// The general-flavor expansion of length 2(2n+1)g + 2n; zero entries are
/// kept where c_i = 0.
inline ContinuedFraction expand(const TypeExpansion& e) {
    validate(e);
    std::vector<Integer> out;
    detail::expand_into(e.base.entries(), e.eps, e.c, out);
    return ContinuedFraction(std::move(out));
}

/// (2n+1)m + n - #{i : c_i = 0} for a base of length 2m.
inline std::int64_t expansion_genus(const TypeExpansion& e) {
    validate(e);
    return detail::genus_formula(e.base.size(), e.n, e.c);
}

struct CrossingReport {
    std::int64_t crossing = 0;  // crossing number of the evaluated knot (authoritative)
    std::int64_t formula = 0;   // (2n+1) c_r + k
    std::int64_t k = 0;         // sum of the gap contributions
    std::vector<std::int64_t> cbar;
};

/// Crossing number of the source knot, together with the closed-form value
/// from the gap contributions. Throws ConsistencyError if they disagree.
inline CrossingReport expansion_crossing(const TypeExpansion& e) {
    const ContinuedFraction cf = expand(e);
    CrossingReport report;
    report.crossing = knot_from_cf(cf).crossing();
    report.cbar = detail::gap_contributions(e.base.entries(), e.eps, e.c);
    for (auto v : report.cbar) report.k += v;
    const std::int64_t c_r = knot_from_cf(e.base).crossing();
    report.formula = (2 * e.n + 1) * c_r + report.k;
    if (report.formula != report.crossing)
        throw ConsistencyError("crossing formula " + std::to_string(report.formula) + " disagrees with " +
                               std::to_string(report.crossing) + " for " + cf.str());
    return report;
}

/// |e1 + ... + e2n+1| = 1.
inline bool is_degree_one(const TypeExpansion& e) {
    const int s = detail::eps_sum(e.eps);
    return s == 1 || s == -1;
}

/// Source knot found by enumerate_images, with attributes aggregated over all
/// of its generating expansions.
struct ImageRecord {
    KnotClass knot;
    bool fibered = false;
    bool degree_one = false;      // some witnessing expansion has |sum eps| = 1
    bool unknotting_one = false;
    bool unit_c_witness = false;  // some witnessing expansion has every |c_i| = 1

    std::int64_t genus() const { return knot.genus(); }
    std::int64_t crossing() const { return knot.crossing(); }
};

/// Canonical output order: crossing, genus, then numerator and denominator.
inline bool image_order(const ImageRecord& a, const ImageRecord& b) {
    const auto& ra = a.knot.canonical();
    const auto& rb = b.knot.canonical();
    if (a.crossing() != b.crossing()) return a.crossing() < b.crossing();
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    if (ra.q() != rb.q()) return ra.q() < rb.q();
    return ra.p() < rb.p();
}

/// Counters filled during enumeration; every visited expansion has its genus
/// and crossing formulas checked against the evaluated knot.
struct EnumerationStats {
    std::uint64_t expansions = 0;
    std::uint64_t formula_checks = 0;
    std::int64_t min_cbar = std::numeric_limits<std::int64_t>::max();  // over all gap contributions seen
    std::uint64_t classes = 0;

    void merge(const EnumerationStats& o) {
        min_cbar = std::min(min_cbar, o.min_cbar);
        expansions += o.expansions;
        formula_checks += o.formula_checks;
    }
};

/// Worker count from BRIDGEMAP_THREADS; unset or empty means 1.
inline unsigned threads_from_env() {
    const char* raw = std::getenv("BRIDGEMAP_THREADS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
        throw InvalidInput(std::string("BRIDGEMAP_THREADS must be a positive integer, got '") + raw + "'");
    return static_cast<unsigned>(v);
}

struct EnumerationOptions {
    unsigned threads = threads_from_env();
    std::uint64_t max_expansions = 0;  // 0 = unlimited
};

/// Thrown when max_expansions is hit; carries what was found so far.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t budget, std::vector<ImageRecord> partial)
        : Error("enumeration budget of " + std::to_string(budget) + " expansions exceeded"),
          partial_(std::move(partial)) {}

    const std::vector<ImageRecord>& partial() const noexcept { return partial_; }

private:
    std::vector<ImageRecord> partial_;
};

/// One expansion as seen by a search visitor.
struct ExpansionView {
    const ContinuedFraction& base;
    int n;
    std::span<const int> eps;
    std::span<const std::int64_t> c;
    std::span<const Integer> entries;

    TypeExpansion materialize() const {
        return {base, n, std::vector<int>(eps.begin(), eps.end()), std::vector<std::int64_t>(c.begin(), c.end())};
    }
};

namespace detail {

struct SearchPlan {
    ContinuedFraction base;
    std::int64_t target_crossing = 0;
    std::int64_t max_crossing = 0;
    std::optional<std::int64_t> genus_slice;  // only expansions whose genus formula gives this value
};

struct Branch {
    int n;
    std::uint64_t mask;  // bit j set => eps_{j+2} = -1
};

inline std::vector<Branch> branches(const SearchPlan& plan) {
    std::vector<Branch> out;
    for (int n = 1; (2 * n + 1) * plan.target_crossing <= plan.max_crossing; ++n) {
        if (plan.genus_slice) {
            const std::int64_t zeros =
                (2 * n + 1) * static_cast<std::int64_t>(plan.base.size() / 2) + n - *plan.genus_slice;
            if (zeros < 0 || zeros > 2 * n) continue;
        }
        if (2 * n > 62) throw InvalidInput("expansion type too large to enumerate");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) out.push_back({n, mask});
    }
    return out;
}

/// Depth-first walk over c_1..c_2n for one (n, eps) branch. |c_i| is bounded
/// by floor(k_max/2) + 1 and partial sums of max(0, 2|c_i| - 2), a lower
/// bound for the gap contributions, are pruned against k_max.
template <class Visit>
bool walk_branch(const SearchPlan& plan, Branch branch, Visit& visit, const std::atomic<bool>& stop) {
    const int n = branch.n;
    std::vector<int> eps(2 * n + 1, 1);
    for (int j = 0; j < 2 * n; ++j)
        if (branch.mask >> j & 1) eps[j + 1] = -1;
    const std::int64_t k_max = plan.max_crossing - (2 * n + 1) * plan.target_crossing;
    const std::int64_t c_max = k_max / 2 + 1;
    std::optional<std::int64_t> zeros_needed;
    if (plan.genus_slice)
        zeros_needed = (2 * n + 1) * static_cast<std::int64_t>(plan.base.size() / 2) + n - *plan.genus_slice;

    std::vector<std::int64_t> c(2 * n, 0);
    std::vector<Integer> entries;
    const auto base = plan.base.entries();
    bool stopped = false;

    auto rec = [&](auto&& self, std::size_t i, std::int64_t slack_used, std::int64_t zeros) -> void {
        if (stopped) return;
        if (i == c.size()) {
            if (zeros_needed && zeros != *zeros_needed) return;
            if (stop.load(std::memory_order_relaxed)) {
                stopped = true;
                return;
            }
            expand_into(base, eps, c, entries);
            if (visit(ExpansionView{plan.base, n, eps, c, entries})) stopped = true;
            return;
        }
        const std::int64_t remaining = static_cast<std::int64_t>(c.size() - i);
        for (std::int64_t v = -c_max; v <= c_max; ++v) {
            const std::int64_t mag = v < 0 ? -v : v;
            const std::int64_t used = slack_used + std::max<std::int64_t>(0, 2 * mag - 2);
            if (used > k_max) continue;
            const std::int64_t z = zeros + (v == 0 ? 1 : 0);
            if (v == 0 && eps[i] * eps[i + 1] == -1) continue;
            if (zeros_needed && (z > *zeros_needed || z + remaining - 1 < *zeros_needed)) continue;
            c[i] = v;
            self(self, i + 1, used, z);
            if (stopped) return;
        }
        c[i] = 0;
    };
    rec(rec, 0, 0, 0);
    return stopped;
}

/// Runs `make_worker()` visitors over all branches on `threads` threads and
/// hands each finished worker to `merge` in creation order. A visitor
/// returning true stops the whole search.
template <class MakeWorker, class Merge>
void parallel_search(const SearchPlan& plan, unsigned threads, MakeWorker make_worker, Merge merge) {
    const std::vector<Branch> all = branches(plan);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, all.size()))));

    using Worker = decltype(make_worker());
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.push_back(make_worker());

    std::vector<std::exception_ptr> errors(threads);
    auto run = [&](unsigned t) {
        try {
            while (!stop.load()) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= all.size()) break;
                if (walk_branch(plan, all[idx], workers[t], stop)) stop.store(true);
            }
        } catch (...) {
            errors[t] = std::current_exception();
            stop.store(true);
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& w : workers) merge(w);
}

struct ClassInfo {
    KnotClass knot;
    bool fibered;
    bool unknotting_one;
};

/// Evaluates expansions, memoizes class data and checks the genus and
/// crossing formulas of every expansion against the evaluated knot.
class CheckedEvaluator {
public:
    /// With `attributes` false the fibered and unknotting-one flags are not
    /// computed (they stay false).
    CheckedEvaluator(std::int64_t target_crossing, bool attributes)
        : target_crossing_(target_crossing), attributes_(attributes) {}

    const ClassInfo& evaluate(const ExpansionView& v, EnumerationStats& stats) {
        const Rational r = eval_cf(v.entries);
        const Rational canon = canonical_representative(r);
        auto it = cache_.find(canon);
        if (it == cache_.end()) {
            KnotClass k(canon);
            const bool fib = attributes_ && is_fibered(k);
            const bool u1 = attributes_ && has_unknotting_number_one(k);
            it = cache_.emplace(canon, ClassInfo{std::move(k), fib, u1}).first;
        }
        const ClassInfo& info = it->second;

        const std::int64_t g = genus_formula(v.base.size(), v.n, v.c);
        const auto cbar = gap_contributions(v.base.entries(), v.eps, v.c);
        std::int64_t k = 0;
        for (auto x : cbar) {
            k += x;
            stats.min_cbar = std::min(stats.min_cbar, x);
        }
        const std::int64_t formula = (2 * v.n + 1) * target_crossing_ + k;
        ++stats.formula_checks;
        if (g != info.knot.genus() || formula != info.knot.crossing()) {
            throw ConsistencyError("expansion " + ContinuedFraction(std::vector<Integer>(v.entries.begin(), v.entries.end())).str() +
                                   ": formula genus/crossing " + std::to_string(g) + "/" + std::to_string(formula) +
                                   " but knot " + info.knot.str() + " has " + std::to_string(info.knot.genus()) + "/" +
                                   std::to_string(info.knot.crossing()));
        }
        return info;
    }

private:
    std::int64_t target_crossing_;
    bool attributes_;
    std::map<Rational, ClassInfo> cache_;
};

}  // namespace detail

/// Every 2-bridge knot class with crossing <= max_crossing that admits a
/// type-(2n+1) expansion over the target's even expansion, exactly once,
/// sorted by image_order. Output is independent of options.threads.
inline std::vector<ImageRecord> enumerate_images(const KnotClass& target, std::int64_t max_crossing,
                                                 const EnumerationOptions& options = {},
                                                 EnumerationStats* stats_out = nullptr) {
    detail::SearchPlan plan{even_cf(target.canonical()), target.crossing(), max_crossing, std::nullopt};
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> over_budget{false};

    struct Worker {
        detail::CheckedEvaluator eval;
        std::map<Rational, ImageRecord> images;
        EnumerationStats stats;
        std::int64_t max_crossing;
        std::uint64_t budget;
        std::atomic<std::uint64_t>* visited;
        std::atomic<bool>* over_budget;

        bool operator()(const ExpansionView& v) {
            if (budget && visited->fetch_add(1) >= budget) {
                over_budget->store(true);
                return true;
            }
            ++stats.expansions;
            const detail::ClassInfo& info = eval.evaluate(v, stats);
            if (info.knot.crossing() > max_crossing) return false;
            auto [it, fresh] = images.try_emplace(info.knot.canonical(), ImageRecord{info.knot, info.fibered, false,
                                                                                     info.unknotting_one, false});
            const int s = detail::eps_sum(v.eps);
            if (s == 1 || s == -1) it->second.degree_one = true;
            if (std::all_of(v.c.begin(), v.c.end(), [](std::int64_t x) { return x == 1 || x == -1; }))
                it->second.unit_c_witness = true;
            return false;
        }
    };

    std::map<Rational, ImageRecord> merged;
    EnumerationStats total;
    detail::parallel_search(
        plan, options.threads,
        [&] {
            return Worker{detail::CheckedEvaluator(target.crossing(), true), {}, {}, max_crossing, options.max_expansions,
                          &visited, &over_budget};
        },
        [&](Worker& w) {
            total.merge(w.stats);
            for (auto& [key, rec] : w.images) {
                auto [it, fresh] = merged.try_emplace(key, rec);
                if (!fresh) {
                    it->second.degree_one = it->second.degree_one || rec.degree_one;
                    it->second.unit_c_witness = it->second.unit_c_witness || rec.unit_c_witness;
                }
            }
        });

    std::vector<ImageRecord> out;
    out.reserve(merged.size());
    for (auto& [key, rec] : merged) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), image_order);
    total.classes = out.size();
    if (stats_out) *stats_out = total;
    if (over_budget.load()) throw BudgetExceeded(options.max_expansions, std::move(out));
    return out;
}

/// Result of searching for expansions of a specific source over a target.
struct Witness {
    bool exists = false;
    bool degree_one = false;
};

/// Searches the target's expansions restricted to the source's genus and
/// crossing. With `need_degree_one` the search continues past the first hit
/// until a degree-one witness turns up.
inline Witness find_witness(const KnotClass& source, const KnotClass& target, bool need_degree_one,
                            const EnumerationOptions& options = {}) {
    if (source == target) throw InvalidInput("self-epimorphisms are excluded: " + source.str());
    Witness result;
    if (source.crossing() < 3 * target.crossing()) return result;
    detail::SearchPlan plan{even_cf(target.canonical()), target.crossing(), source.crossing(), source.genus()};

    struct Worker {
        detail::CheckedEvaluator eval;
        EnumerationStats stats;
        const Rational* wanted;
        bool need_degree_one;
        Witness found;

        bool operator()(const ExpansionView& v) {
            const detail::ClassInfo& info = eval.evaluate(v, stats);
            if (info.knot.canonical() != *wanted) return false;
            found.exists = true;
            const int s = detail::eps_sum(v.eps);
            if (s == 1 || s == -1) found.degree_one = true;
            return !need_degree_one || found.degree_one;
        }
    };
    detail::parallel_search(
        plan, options.threads,
        [&] { return Worker{detail::CheckedEvaluator(target.crossing(), false), {}, &source.canonical(), need_degree_one, {}}; },
        [&](Worker& w) {
            result.exists = result.exists || w.found.exists;
            result.degree_one = result.degree_one || w.found.degree_one;
        });
    return result;
}

/// Decides whether G(source) surjects onto G(target): membership of the
/// source among the target's images bounded by the source's crossing number.
inline bool epimorphism_exists(const KnotClass& source, const KnotClass& target,
                               const EnumerationOptions& options = {}) {
    return find_witness(source, target, false, options).exists;
}

}  // namespace bridgemap
