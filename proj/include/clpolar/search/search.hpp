#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clpolar/clsets/clsets.hpp"
#include "clpolar/scheme/scheme.hpp"

namespace clpolar::search {

using clsets::CLContext;
using clsets::GeneratorSet;

// Preorder position inside the subset enumeration: the chosen prefix plus the
// next candidate to try on top of it. Replaying the prefix reproduces every
// running count, so resuming continues the walk exactly where it stopped.
struct Cursor {
    std::vector<std::uint32_t> chosen;
    std::uint32_t next = 0;
};

struct EnumerationOptions {
    bool pruned = true;
    // <0: unbounded. Otherwise the walk stops after this many visited nodes
    // and hands back a cursor.
    long node_budget = -1;
    std::optional<Cursor> resume;
};

struct EnumerationResult {
    std::vector<GeneratorSet> sets;  // in lexicographic order of index sets
    bool complete = true;
    Cursor cursor;  // continuation point when incomplete
    long nodes = 0;
};

// All degree-one sets of parameter x, by depth-first subset enumeration over
// generators in index order. Pruning uses the per-member intersection counts
// that every degree-one set must satisfy exactly (the meet-in-a-hyperplane
// count and the disjointness count), so no solution is ever cut; every
// surviving leaf is still verified by the full dual-route membership test.
// A capacity guard rejects hopeless instances. Unbudgeted fresh runs fan out
// over the first chosen generator across the worker pool; results are merged
// in branch order, so the outcome is identical for every thread count.
EnumerationResult exhaustive_degree_one(const CLContext& C, long x,
                                        const EnumerationOptions& opts = {});

struct DisjointWitness {
    std::size_t size = 0;
    GeneratorSet witness;
};

// Exact maximum pairwise-disjoint subfamily: branch and bound over the
// disjointness graph of the members. Needs only the space, not the scheme.
DisjointWitness max_disjoint(const GeneratorSet& L);

struct X1Report {
    bool complete = true;
    bool confirmed = false;  // every parameter-1 set found is a point-pencil
    std::size_t found = 0;
    std::vector<GeneratorSet> non_pencils;  // would witness an implementation bug
};

// Runs exhaustive_degree_one at x = 1 and matches every result against the
// point-pencils of the space.
X1Report classify_x1(const CLContext& C, const EnumerationOptions& opts = {});

struct OneClassX1 {
    std::vector<Bitset> sets;  // subsets of the class, restricted indexing
    bool complete = true;
};

// All parameter-1 Cameron-Liebler sets inside one class of a hyperbolic
// quadric, by exhaustive scan of class subsets of the restricted pencil size.
// Subject to the same capacity guard.
OneClassX1 exhaustive_one_class_x1(const scheme::OneClassScheme& O);

}  // namespace clpolar::search
