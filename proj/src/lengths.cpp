#include "cyclecover/lengths.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclecover {

namespace {

int min_legal_length(bool directed) { return directed ? 2 : 3; }

// Concrete members of L up to and including `cap`.
std::vector<int> members_up_to(const LengthSet& L, long long cap) {
    std::vector<int> out;
    for (int f : L.finite_part)
        if (f <= cap) out.push_back(f);
    if (L.tail)
        for (long long v = *L.tail; v <= cap; ++v) out.push_back(static_cast<int>(v));
    return out;
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Minimum number of odd lengths over all plans for each total 0..n using
// only the finite part; kInf where unreachable.
std::vector<int> min_odd_finite(const LengthSet& L, long long n) {
    std::vector<int> dp(n + 1, kInf);
    dp[0] = 0;
    for (long long x = 1; x <= n; ++x)
        for (int f : L.finite_part) {
            if (f > x) break;
            if (dp[x - f] < kInf) dp[x] = std::min(dp[x], dp[x - f] + (f & 1));
        }
    return dp;
}

}  // namespace

bool LengthSet::contains(int lambda) const {
    if (tail && lambda >= *tail) return true;
    return std::binary_search(finite_part.begin(), finite_part.end(), lambda);
}

int LengthSet::min_length() const {
    int best = tail ? *tail : std::numeric_limits<int>::max();
    if (!finite_part.empty()) best = std::min(best, finite_part.front());
    return best;
}

std::optional<int> LengthSet::max_length() const {
    if (tail) return std::nullopt;
    return finite_part.back();
}

bool LengthSet::is_all_lengths() const {
    if (!tail) return false;
    for (int v = min_legal_length(directed); v < *tail; ++v)
        if (!std::binary_search(finite_part.begin(), finite_part.end(), v))
            return false;
    return true;
}

LengthSet make_length_set(std::vector<int> finite_part, std::optional<int> tail,
                          bool directed) {
    const int lo = min_legal_length(directed);
    if (tail && *tail < lo)
        throw std::invalid_argument("length set: tail below minimum length " +
                                    std::to_string(lo));
    std::set<int> uniq;
    for (int f : finite_part) {
        if (f < lo)
            throw std::invalid_argument("length set: member " + std::to_string(f) +
                                        " below minimum length " + std::to_string(lo));
        if (!tail || f < *tail) uniq.insert(f);
    }
    if (uniq.empty() && !tail)
        throw std::invalid_argument("length set: empty");
    LengthSet L;
    L.finite_part.assign(uniq.begin(), uniq.end());
    L.tail = tail;
    L.directed = directed;
    return L;
}

LengthSet parse_length_set(const std::string& text, bool directed) {
    std::vector<int> finite;
    std::optional<int> tail;
    std::stringstream ss(text);
    std::string part;
    bool any = false;
    while (std::getline(ss, part, ';')) {
        any = true;
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("length set syntax: missing ':' in \"" +
                                        part + "\"");
        const std::string key = part.substr(0, colon);
        const std::string val = part.substr(colon + 1);
        try {
            if (key == "finite") {
                std::stringstream vs(val);
                std::string item;
                while (std::getline(vs, item, ','))
                    finite.push_back(std::stoi(item));
            } else if (key == "tail") {
                if (tail) throw std::invalid_argument("length set syntax: two tails");
                tail = std::stoi(val);
            } else {
                throw std::invalid_argument("length set syntax: unknown key \"" +
                                            key + "\"");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("length set syntax: bad number in \"" +
                                        part + "\"");
        }
    }
    if (!any) throw std::invalid_argument("length set syntax: empty string");
    return make_length_set(std::move(finite), tail, directed);
}

std::string format_length_set(const LengthSet& L) {
    std::string out;
    if (!L.finite_part.empty()) {
        out += "finite:";
        for (size_t i = 0; i < L.finite_part.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(L.finite_part[i]);
        }
    }
    if (L.tail) {
        if (!out.empty()) out += ';';
        out += "tail:" + std::to_string(*L.tail);
    }
    return out;
}

long long LengthPlan::total() const {
    long long s = 0;
    for (int v : lengths) s += v;
    return s;
}

bool contains(const LengthSet& L, int lambda) { return L.contains(lambda); }

bool is_admissible(long long n, const LengthSet& L) {
    if (n < 0) return false;
    if (n == 0) return true;
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (long long x = 1; x <= n; ++x)
        for (int f : L.finite_part) {
            if (f > x) break;
            if (reach[x - f]) { reach[x] = 1; break; }
        }
    if (reach[n]) return true;
    if (L.tail && n >= *L.tail) {
        // One chunk of any length in [tail, n] absorbs the rest.
        for (long long rest = 0; rest <= n - *L.tail; ++rest)
            if (reach[rest]) return true;
    }
    return false;
}

namespace {

// Deterministic plan for total x using members of L that lie in
// [at_least, cap]; nullopt when impossible. Members are tried smallest
// first, which makes the sorted plan lexicographically smallest.
std::optional<std::vector<int>> plan_with_bounds(long long x, const LengthSet& L,
                                                 int at_least, int cap) {
    std::vector<int> members;
    for (int m : members_up_to(L, cap))
        if (m >= at_least) members.push_back(m);
    std::vector<char> reach(x + 1, 0);
    reach[0] = 1;
    for (long long v = 1; v <= x; ++v)
        for (int m : members) {
            if (m > v) break;
            if (reach[v - m]) { reach[v] = 1; break; }
        }
    if (!reach[x]) return std::nullopt;
    // Greedy: smallest feasible member first; later members must not go
    // below the one just chosen, keeping the multiset sorted.
    std::vector<int> plan;
    long long rem = x;
    int lo = 0;
    while (rem > 0) {
        bool advanced = false;
        for (int m : members) {
            if (m < lo || m > rem) continue;
            // Remainder must be fillable with members >= m.
            long long r = rem - m;
            std::vector<char> ok(r + 1, 0);
            ok[0] = 1;
            for (long long v = 1; v <= r; ++v)
                for (int mm : members) {
                    if (mm < m || mm > v) continue;
                    if (ok[v - mm]) { ok[v] = 1; break; }
                }
            if (ok[r]) {
                plan.push_back(m);
                rem = r;
                lo = m;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;  // defensive; reach said yes
    }
    return plan;
}

}  // namespace

LengthPlan length_plan(long long n, const LengthSet& L) {
    if (n < 0 || !is_admissible(n, L)) throw std::domain_error("inadmissible");
    LengthPlan plan;
    if (n == 0) return plan;
    // Smallest attainable maximum length first, then lexicographic.
    for (int cap : members_up_to(L, n)) {
        auto p = plan_with_bounds(n, L, 0, cap);
        if (p) {
            plan.lengths = std::move(*p);
            std::sort(plan.lengths.begin(), plan.lengths.end());
            return plan;
        }
    }
    throw std::domain_error("inadmissible");  // unreachable after the check
}

LengthSet finite_core(const LengthSet& L) {
    if (!L.tail) return L;
    const int t = *L.tail;
    std::vector<int> candidate = L.finite_part;
    for (int v = t; v <= 2 * t - 1; ++v) candidate.push_back(v);
    std::sort(candidate.begin(), candidate.end());
    const long long B =
        std::max<long long>(2LL * candidate.back(), 4LL * t);
    std::vector<char> target(B + 1);
    for (long long x = 0; x <= B; ++x) target[x] = is_admissible(x, L);
    auto agrees = [&](const std::vector<int>& members) {
        std::vector<char> reach(B + 1, 0);
        reach[0] = 1;
        for (long long x = 1; x <= B; ++x)
            for (int m : members) {
                if (m > x) break;
                if (reach[x - m]) { reach[x] = 1; break; }
            }
        for (long long x = 0; x <= B; ++x)
            if (reach[x] != target[x]) return false;
        return true;
    };
    // Prune largest-first while closure agreement up to B survives.
    for (int i = static_cast<int>(candidate.size()) - 1; i >= 0; --i) {
        std::vector<int> trial = candidate;
        trial.erase(trial.begin() + i);
        if (!trial.empty() && agrees(trial)) candidate = std::move(trial);
    }
    return make_length_set(candidate, std::nullopt, L.directed);
}

namespace {

struct HalfSumState {
    long long d = -1;
    std::vector<int> plan;
};

HalfSumState max_half_sum_impl(long long n, const LengthSet& L) {
    HalfSumState out;
    if (n < 0) return out;
    if (n == 0) { out.d = 0; return out; }
    // Minimize the number of odd lengths: D = (n - minOdd) / 2.
    auto dp = min_odd_finite(L, n);
    int best = dp[n];
    long long best_chunk = -1;  // tail chunk size, -1 for finite-only
    if (L.tail) {
        for (long long chunk = *L.tail; chunk <= n; ++chunk) {
            if (dp[n - chunk] >= kInf) continue;
            int cost = dp[n - chunk] + static_cast<int>(chunk & 1);
            if (cost < best) { best = cost; best_chunk = chunk; }
        }
    }
    if (best >= kInf) return out;
    out.d = (n - best) / 2;
    // Reconstruct a witness plan.
    long long rem = n;
    if (best_chunk >= 0) {
        out.plan.push_back(static_cast<int>(best_chunk));
        rem -= best_chunk;
        best -= static_cast<int>(best_chunk & 1);
    }
    while (rem > 0) {
        for (int f : L.finite_part) {
            if (f > rem) break;
            if (dp[rem - f] < kInf && dp[rem - f] + (f & 1) == dp[rem]) {
                out.plan.push_back(f);
                rem -= f;
                break;
            }
        }
    }
    std::sort(out.plan.begin(), out.plan.end());
    return out;
}

}  // namespace

long long max_half_sum(long long n, const LengthSet& L) {
    auto st = max_half_sum_impl(n, L);
    if (st.d < 0) throw std::domain_error("inadmissible");
    return st.d;
}

LengthPlan max_half_sum_plan(long long n, const LengthSet& L) {
    auto st = max_half_sum_impl(n, L);
    if (st.d < 0) throw std::domain_error("inadmissible");
    LengthPlan p;
    p.lengths = std::move(st.plan);
    return p;
}

}  // namespace cyclecover
