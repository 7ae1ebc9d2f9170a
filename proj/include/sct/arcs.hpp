#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace sct {

// An arc i⌢l with 1 <= left < right.
struct Arc {
    int left = 0;
    int right = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Weakly decreasing sequence of positive parts, compared lexicographically
// biggest-part-first; a proper prefix compares smaller.
using IntPartitionKey = std::vector<int>;

// A set partition of {1..n} encoded as its arc diagram: a set of arcs with
// pairwise distinct left endpoints and pairwise distinct right endpoints.
// n = 0 is legal and carries exactly one (empty) ArcSet.
class ArcSet {
public:
    ArcSet() = default;                        // empty partition of [0]
    explicit ArcSet(int n);                    // empty partition of [n]
    ArcSet(int n, std::vector<Arc> arcs);      // sorts, dedups, validates

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by (left, right)
    int size() const { return static_cast<int>(arcs_.size()); }
    bool contains(const Arc& a) const;

    // Canonical text form "n=<n>:<i-l,...>", e.g. "n=4:1-4,2-3", "n=4:".
    std::string str() const;
    static ArcSet parse(const std::string& text);

    friend bool operator==(const ArcSet&, const ArcSet&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

// True iff the (deduplicated) pairs have pairwise distinct left endpoints and
// pairwise distinct right endpoints.  Out-of-range pairs throw
// std::invalid_argument.
bool is_valid_arc_set(int n, const std::vector<Arc>& arcs);

// Every valid ArcSet on n nodes exactly once, ascending by total_order_cmp;
// the length is the n-th Bell number.
std::vector<ArcSet> enumerate_arc_sets(int n);

// Streaming enumeration (unspecified order); the callback receives each valid
// arc set as a raw arc list.  Avoids materializing Bell(n) objects at once.
void for_each_arc_set(int n, const std::function<void(const std::vector<Arc>&)>& fn);

// Connected components of the arc graph, i.e. the blocks of the set
// partition; blocks sorted by smallest element, elements ascending.
std::vector<std::vector<int>> parts(const ArcSet& lambda);

int arc_count(const ArcSet& lambda);
int dim_stat(const ArcSet& lambda);        // sum of arc spans l - i
IntPartitionKey dimv(const ArcSet& lambda);    // multiset of spans, descending
IntPartitionKey rnode(const ArcSet& lambda);   // right endpoints, descending

// #{(i⌢l, j⌢k) : i⌢l in outer, j⌢k in inner, i < j < k < l}.  The raw form
// accepts arbitrary arc collections (differences, singletons); the ArcSet
// form additionally rejects mismatched n.
int nst(const std::vector<Arc>& outer, const std::vector<Arc>& inner);
int nst(const ArcSet& outer, const ArcSet& inner);

// Arcs conflicting with lambda: {j⌢k : exists i⌢l in lambda with
// (i = j < k < l) or (i < j < k = l)}.  Generally not a valid ArcSet.
std::vector<Arc> cflt(const ArcSet& lambda);

// nst(outer, inner - cflt(outer)).
int snst(const ArcSet& outer, const ArcSet& inner);

bool is_subset(const ArcSet& nu, const ArcSet& mu);

// Total order: compare dimv lexicographically, then rnode, then (as a
// deterministic refinement, relevant only for n >= 7 where the two keys can
// coincide) the arc lists themselves.  Refines the superset order.
std::strong_ordering total_order_cmp(const ArcSet& a, const ArcSet& b);

}  // namespace sct
