#pragma once

// Calculus of allowed cycle-length sets: membership, which vertex counts can
// be partitioned into allowed lengths, deterministic length plans, finite
// cores of infinite sets, and the maximum of sum(floor(len/2)) over plans.

#include <optional>
#include <string>
#include <vector>

namespace cyclecover {

// A set of allowed cycle lengths. Represents finite sets, "everything >= t"
// tails, and unions of both. Minimum representable length is 3 in undirected
// mode and 2 in directed mode.
struct LengthSet {
    std::vector<int> finite_part;  // sorted, distinct, all < tail when tail set
    std::optional<int> tail;       // all lengths >= *tail allowed
    bool directed = false;

    bool contains(int lambda) const;
    int min_length() const;
    // Largest allowed length, or nullopt when a tail makes the set unbounded.
    std::optional<int> max_length() const;
    bool is_all_lengths() const;  // every legal length allowed
};

// Validates bounds/normalization and returns the canonical form (finite part
// sorted, deduplicated, entries >= tail folded into it). Throws
// std::invalid_argument on empty sets or out-of-range entries.
LengthSet make_length_set(std::vector<int> finite_part, std::optional<int> tail,
                          bool directed);

// Parses the textual syntax "finite:3,5" | "tail:5" | "finite:4;tail:9".
LengthSet parse_length_set(const std::string& text, bool directed);
std::string format_length_set(const LengthSet& L);

// A multiset of allowed lengths summing to some n.
struct LengthPlan {
    std::vector<int> lengths;  // sorted ascending
    long long total() const;
};

bool contains(const LengthSet& L, int lambda);

// True iff some multiset of members of L sums to n.
bool is_admissible(long long n, const LengthSet& L);

// Deterministic plan for n: among all plans prefers the smallest maximum
// length, then the lexicographically smallest sorted multiset. Throws
// std::domain_error("inadmissible") when no plan exists.
LengthPlan length_plan(long long n, const LengthSet& L);

// A finite subset of L whose sums realize exactly the same vertex counts as
// L itself; certified by checking agreement up to a bound past which both
// closures are periodic.
LengthSet finite_core(const LengthSet& L);

// max over plans of sum(floor(lambda_i/2)); the companion *_plan variant also
// returns a plan attaining it. Throws std::domain_error("inadmissible").
long long max_half_sum(long long n, const LengthSet& L);
LengthPlan max_half_sum_plan(long long n, const LengthSet& L);

}  // namespace cyclecover
